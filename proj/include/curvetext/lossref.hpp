// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

#include "curvetext/anchors.hpp"
#include "curvetext/maskgrid.hpp"

namespace curvetext {

// Reference loss functions with analytic gradients. These exist for
// verification, not training: everything is scalar math over grids.

struct LossConfig {
    double lambda1 = 1.0;
    double lambda2 = 1.0;
    double alpha_t = 0.25;
    double gamma = 2.0;
};

inline constexpr double kProbClamp = 1e-7;

// -alpha_t * (1 - p_t)^gamma * ln(p_t), with p_t = p for y = 1 and 1 - p
// otherwise, clamped to [kProbClamp, 1]. Throws for p outside [0,1].
double focal_loss(double p, int y, const LossConfig& cfg);

// d focal_loss / dp. Zero inside the clamp region.
double focal_loss_grad(double p, int y, const LossConfig& cfg);

// Sum over the four feature levels of the per-level mean focal loss.
double cls_loss(const std::array<ScoreGrid, 4>& preds, const std::array<BitGrid, 4>& labels,
                const LossConfig& cfg);

// Per-cell d cls_loss / d pred for each level.
std::array<std::vector<double>, 4> cls_loss_grad(const std::array<ScoreGrid, 4>& preds,
                                                 const std::array<BitGrid, 4>& labels,
                                                 const LossConfig& cfg);

// 0.5 x^2 for |x| < 1, |x| - 0.5 otherwise.
double smooth_l1(double x);

// x for |x| <= 1 (quadratic branch at the join), sign(x) otherwise.
double smooth_l1_grad(double x);

// Mean over cells of smooth_l1(pred - label).
double segment_loss(const ScoreGrid& pred, const SegmentLabelGrid& label);

std::vector<double> segment_loss_grad(const ScoreGrid& pred, const SegmentLabelGrid& label);

// lambda1 * cls + lambda2 * seg.
double total_loss(double cls, double seg, const LossConfig& cfg);

}  // namespace curvetext
