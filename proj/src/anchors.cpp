// SPDX-License-Identifier: Apache-2.0
#include "curvetext/anchors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace curvetext {

std::array<std::array<double, 4>, 4> side_lengths() {
    std::array<std::array<double, 4>, 4> out{};
    for (size_t lvl = 0; lvl < kAnchorStrides.size(); ++lvl) {
        for (size_t k = 0; k < kAnchorScales.size(); ++k)
            out[lvl][k] = kAnchorStrides[lvl] * kAnchorScales[k];
    }
    return out;
}

double gt_height(const Polygon& gt) {
    const auto& v = gt.vertices;
    if (v.size() == 14) {
        double sum = 0.0;
        for (size_t k = 0; k < 7; ++k) sum += norm(v[k] - v[13 - k]);
        return sum / 7.0;
    }
    return bounding_box(gt).height();
}

std::vector<SquareAnchor> grid_anchors(int level, int w, int h) {
    if (level < 0 || level >= static_cast<int>(kAnchorStrides.size()))
        throw std::invalid_argument("grid_anchors: level out of range");
    if (w < 1 || h < 1) throw std::invalid_argument("grid_anchors: dimensions must be >= 1");
    const double stride = kAnchorStrides[static_cast<size_t>(level)];
    std::vector<SquareAnchor> out;
    out.reserve(static_cast<size_t>(w) * h * 4);
    for (int j = 0; j < h; ++j) {
        for (int i = 0; i < w; ++i) {
            for (int k = 0; k < 4; ++k) {
                out.push_back({i * stride, j * stride, stride * kAnchorScales[static_cast<size_t>(k)],
                               level, i, j, k});
            }
        }
    }
    return out;
}

AnchorLabel assign_label(const SquareAnchor& a, const std::vector<Polygon>& gts) {
    const double half = a.side / 2.0;
    const Point center{a.cx, a.cy};
    const Point top_left{a.cx - half, a.cy - half};
    const Point top_right{a.cx + half, a.cy - half};
    const Point bottom_left{a.cx - half, a.cy + half};
    const Point bottom_right{a.cx + half, a.cy + half};

    for (size_t g = 0; g < gts.size(); ++g) {
        const Polygon& gt = gts[g];
        if (!point_in_polygon(center, gt)) continue;
        if (a.side > kMaxAnchorToTextHeight * gt_height(gt)) continue;
        bool top_out = !point_in_polygon(top_left, gt) || !point_in_polygon(top_right, gt);
        bool bottom_out = !point_in_polygon(bottom_left, gt) || !point_in_polygon(bottom_right, gt);
        if (top_out && bottom_out) return {a, true, static_cast<int>(g)};
    }
    return {a, false, -1};
}

SegmentLabelGrid segment_label(const SquareAnchor& a, const Polygon& gt, int resolution) {
    if (resolution <= 0) throw std::invalid_argument("segment_label: resolution must be positive");
    SegmentLabelGrid out;
    out.origin = {a.cx - a.side / 2.0, a.cy - a.side / 2.0};
    out.side = a.side;
    out.resolution = resolution;
    out.values.assign(static_cast<size_t>(resolution) * resolution, 0.0f);

    const Polygon strong = scale_about(gt, polygon_centroid(gt), std::sqrt(0.5));
    const double cell = a.side / resolution;
    for (int iy = 0; iy < resolution; ++iy) {
        for (int ix = 0; ix < resolution; ++ix) {
            Point c{out.origin.x + (ix + 0.5) * cell, out.origin.y + (iy + 0.5) * cell};
            float v = 0.0f;
            if (point_in_polygon(c, strong))
                v = 1.0f;
            else if (point_in_polygon(c, gt))
                v = 0.1f;
            out.values[static_cast<size_t>(iy) * resolution + ix] = v;
        }
    }
    return out;
}

std::vector<size_t> top_indices_by_score(std::span<const double> scores, double s3, int cap) {
    if (cap < 1) throw std::invalid_argument("top_indices_by_score: cap must be >= 1");
    std::vector<size_t> idx;
    for (size_t i = 0; i < scores.size(); ++i) {
        if (scores[i] > s3) idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return a < b;
    });
    if (idx.size() > static_cast<size_t>(cap)) idx.resize(static_cast<size_t>(cap));
    return idx;
}

std::vector<SquareAnchor> filter_positive_squares(std::span<const SquareAnchor> anchors,
                                                  std::span<const double> scores, double s3,
                                                  int cap) {
    if (anchors.size() != scores.size())
        throw std::invalid_argument("filter_positive_squares: anchor/score count mismatch");
    if (s3 < 0.0 || s3 > 1.0)
        throw std::invalid_argument("filter_positive_squares: s3 must lie in [0,1]");
    std::vector<SquareAnchor> out;
    for (size_t i : top_indices_by_score(scores, s3, cap)) out.push_back(anchors[i]);
    return out;
}

}  // namespace curvetext
