// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "curvetext/geom.hpp"

namespace curvetext {

struct MatchResult {
    std::vector<std::pair<int, int>> pairs;  // (det index, gt index)
    int tp = 0;
    int n_det = 0;
    int n_gt = 0;
};

struct PerImageCounts {
    std::string image_id;
    int tp = 0;
    int n_det = 0;
    int n_gt = 0;
};

struct EvalReport {
    double precision = 0;
    double recall = 0;
    double f_measure = 0;
    long tp = 0;
    long n_det = 0;
    long n_gt = 0;
    std::vector<PerImageCounts> per_image;
};

// Greedy one-to-one matching: all (det, gt) pairs sorted by IoU descending
// (ties by lower det index, then lower gt index), accepted when IoU >=
// iou_thr and both sides are still unmatched.
MatchResult match_image(const std::vector<Polygon>& dets, const std::vector<Polygon>& gts,
                        double iou_thr = 0.5);

// Micro-averaged counts: P = tp/n_det, R = tp/n_gt, F = 2PR/(P+R).
// An empty side scores 0 unless both sides are empty, which scores 1.
EvalReport aggregate(const std::vector<PerImageCounts>& per_image);

}  // namespace curvetext
