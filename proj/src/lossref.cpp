// SPDX-License-Identifier: Apache-2.0
#include "curvetext/lossref.hpp"

#include <cmath>
#include <stdexcept>

namespace curvetext {

namespace {

double clamp_pt(double p_t) { return std::min(1.0, std::max(kProbClamp, p_t)); }

void check_prob(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("focal_loss: p outside [0,1]");
}

void check_label(int y) {
    if (y != 0 && y != 1) throw std::invalid_argument("focal_loss: label must be 0 or 1");
}

}  // namespace

double focal_loss(double p, int y, const LossConfig& cfg) {
    check_prob(p);
    check_label(y);
    double p_t = clamp_pt(y == 1 ? p : 1.0 - p);
    return -cfg.alpha_t * std::pow(1.0 - p_t, cfg.gamma) * std::log(p_t);
}

double focal_loss_grad(double p, int y, const LossConfig& cfg) {
    check_prob(p);
    check_label(y);
    double raw = y == 1 ? p : 1.0 - p;
    if (raw <= kProbClamp || raw > 1.0) return 0.0;  // flat inside the clamp
    double p_t = raw;
    double chain = y == 1 ? 1.0 : -1.0;
    double one_m = 1.0 - p_t;
    // d/dp_t of -a (1-p_t)^g ln(p_t)
    double term_log = cfg.gamma > 0.0 && one_m > 0.0
                          ? cfg.gamma * std::pow(one_m, cfg.gamma - 1.0) * std::log(p_t)
                          : 0.0;
    double term_inv = std::pow(one_m, cfg.gamma) / p_t;
    return chain * cfg.alpha_t * (term_log - term_inv);
}

double cls_loss(const std::array<ScoreGrid, 4>& preds, const std::array<BitGrid, 4>& labels,
                const LossConfig& cfg) {
    double total = 0.0;
    for (size_t lvl = 0; lvl < 4; ++lvl) {
        const ScoreGrid& p = preds[lvl];
        const BitGrid& g = labels[lvl];
        if (p.width != g.width || p.height != g.height)
            throw std::invalid_argument("cls_loss: shape mismatch at level " + std::to_string(lvl));
        double sum = 0.0;
        for (size_t i = 0; i < p.values.size(); ++i)
            sum += focal_loss(p.values[i], g.bits[i] ? 1 : 0, cfg);
        total += sum / static_cast<double>(p.values.size());
    }
    return total;
}

std::array<std::vector<double>, 4> cls_loss_grad(const std::array<ScoreGrid, 4>& preds,
                                                 const std::array<BitGrid, 4>& labels,
                                                 const LossConfig& cfg) {
    std::array<std::vector<double>, 4> out;
    for (size_t lvl = 0; lvl < 4; ++lvl) {
        const ScoreGrid& p = preds[lvl];
        const BitGrid& g = labels[lvl];
        if (p.width != g.width || p.height != g.height)
            throw std::invalid_argument("cls_loss_grad: shape mismatch at level " + std::to_string(lvl));
        double inv_n = 1.0 / static_cast<double>(p.values.size());
        out[lvl].resize(p.values.size());
        for (size_t i = 0; i < p.values.size(); ++i)
            out[lvl][i] = focal_loss_grad(p.values[i], g.bits[i] ? 1 : 0, cfg) * inv_n;
    }
    return out;
}

double smooth_l1(double x) {
    double ax = std::abs(x);
    return ax < 1.0 ? 0.5 * x * x : ax - 0.5;
}

double smooth_l1_grad(double x) {
    if (std::abs(x) <= 1.0) return x;  // both branches meet with slope sign(x)
    return x > 0.0 ? 1.0 : -1.0;
}

double segment_loss(const ScoreGrid& pred, const SegmentLabelGrid& label) {
    if (pred.width != label.resolution || pred.height != label.resolution)
        throw std::invalid_argument("segment_loss: shape mismatch");
    double sum = 0.0;
    for (size_t i = 0; i < pred.values.size(); ++i)
        sum += smooth_l1(static_cast<double>(pred.values[i]) - label.values[i]);
    return sum / static_cast<double>(pred.values.size());
}

std::vector<double> segment_loss_grad(const ScoreGrid& pred, const SegmentLabelGrid& label) {
    if (pred.width != label.resolution || pred.height != label.resolution)
        throw std::invalid_argument("segment_loss_grad: shape mismatch");
    double inv_n = 1.0 / static_cast<double>(pred.values.size());
    std::vector<double> out(pred.values.size());
    for (size_t i = 0; i < pred.values.size(); ++i)
        out[i] = smooth_l1_grad(static_cast<double>(pred.values[i]) - label.values[i]) * inv_n;
    return out;
}

double total_loss(double cls, double seg, const LossConfig& cfg) {
    if (cls < 0.0 || seg < 0.0) throw std::invalid_argument("total_loss: losses must be >= 0");
    return cfg.lambda1 * cls + cfg.lambda2 * seg;
}

}  // namespace curvetext
