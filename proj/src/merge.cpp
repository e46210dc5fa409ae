// SPDX-License-Identifier: Apache-2.0
#include "curvetext/merge.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace curvetext {

namespace {

// Canvas-space rasterization of one mask, cropped to its cell bounding box.
struct PastedRoi {
    int x0 = 0, y0 = 0, w = 0, h = 0;
    std::vector<uint8_t> bits;
    long area = 0;

    uint8_t at(int ix, int iy) const {
        return bits[static_cast<size_t>(iy - y0) * w + (ix - x0)];
    }
};

PastedRoi rasterize_roi(const SegmentMask& m, double stride, int canvas_w, int canvas_h) {
    PastedRoi roi;
    int ix0 = std::max(0, static_cast<int>(std::floor(m.origin.x / stride - 0.5)));
    int iy0 = std::max(0, static_cast<int>(std::floor(m.origin.y / stride - 0.5)));
    int ix1 = std::min(canvas_w - 1, static_cast<int>(std::ceil((m.origin.x + m.side) / stride)));
    int iy1 = std::min(canvas_h - 1, static_cast<int>(std::ceil((m.origin.y + m.side) / stride)));
    if (ix1 < ix0 || iy1 < iy0) return roi;
    roi.x0 = ix0;
    roi.y0 = iy0;
    roi.w = ix1 - ix0 + 1;
    roi.h = iy1 - iy0 + 1;
    roi.bits.assign(static_cast<size_t>(roi.w) * roi.h, 0);
    for (int iy = iy0; iy <= iy1; ++iy) {
        for (int ix = ix0; ix <= ix1; ++ix) {
            Point c{(ix + 0.5) * stride, (iy + 0.5) * stride};
            if (m.sample(c)) {
                roi.bits[static_cast<size_t>(iy - iy0) * roi.w + (ix - ix0)] = 1;
                ++roi.area;
            }
        }
    }
    return roi;
}

long roi_intersection(const PastedRoi& a, const PastedRoi& b) {
    int x0 = std::max(a.x0, b.x0);
    int y0 = std::max(a.y0, b.y0);
    int x1 = std::min(a.x0 + a.w, b.x0 + b.w) - 1;
    int y1 = std::min(a.y0 + a.h, b.y0 + b.h) - 1;
    long inter = 0;
    for (int iy = y0; iy <= y1; ++iy) {
        for (int ix = x0; ix <= x1; ++ix) inter += (a.at(ix, iy) && b.at(ix, iy)) ? 1 : 0;
    }
    return inter;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace

std::vector<SegmentScores> drop_empty(const std::vector<SegmentScores>& masks, double s1) {
    std::vector<SegmentScores> out;
    for (const auto& m : masks) {
        if (!binarizes_empty(m, s1)) out.push_back(m);
    }
    return out;
}

std::vector<MergedRegion> merge_masks(const std::vector<SegmentScores>& masks,
                                      const MergeConfig& cfg) {
    if (cfg.s1 < 0.0 || cfg.s1 > 1.0 || cfg.s2 < 0.0 || cfg.s2 > 1.0)
        throw std::invalid_argument("merge_masks: thresholds must lie in [0,1]");
    if (cfg.canvas_stride <= 0.0)
        throw std::invalid_argument("merge_masks: canvas_stride must be positive");
    if (masks.empty()) return {};

    double max_x = 0.0, max_y = 0.0;
    for (const auto& m : masks) {
        max_x = std::max(max_x, m.cx + m.side / 2.0);
        max_y = std::max(max_y, m.cy + m.side / 2.0);
    }
    int canvas_w = std::max(1, static_cast<int>(std::ceil(max_x / cfg.canvas_stride)));
    int canvas_h = std::max(1, static_cast<int>(std::ceil(max_y / cfg.canvas_stride)));

    std::vector<SegmentMask> bin;
    std::vector<PastedRoi> rois;
    bin.reserve(masks.size());
    rois.reserve(masks.size());
    for (const auto& m : masks) {
        bin.push_back(binarize(m, cfg.s1));
        rois.push_back(rasterize_roi(bin.back(), cfg.canvas_stride, canvas_w, canvas_h));
    }

    Dsu dsu(masks.size());
    for (size_t a = 0; a < masks.size(); ++a) {
        if (rois[a].area == 0) continue;
        for (size_t b = a + 1; b < masks.size(); ++b) {
            if (rois[b].area == 0) continue;
            if (rois[a].x0 >= rois[b].x0 + rois[b].w || rois[b].x0 >= rois[a].x0 + rois[a].w ||
                rois[a].y0 >= rois[b].y0 + rois[b].h || rois[b].y0 >= rois[a].y0 + rois[a].h)
                continue;
            long inter = roi_intersection(rois[a], rois[b]);
            double ratio = static_cast<double>(inter) /
                           static_cast<double>(std::min(rois[a].area, rois[b].area));
            if (ratio > cfg.s2) dsu.unite(static_cast<int>(a), static_cast<int>(b));
        }
    }

    std::vector<std::vector<int>> groups(masks.size());
    for (size_t i = 0; i < masks.size(); ++i)
        groups[static_cast<size_t>(dsu.find(static_cast<int>(i)))].push_back(static_cast<int>(i));

    std::vector<MergedRegion> out;
    for (size_t root = 0; root < groups.size(); ++root) {
        if (groups[root].empty()) continue;
        MergedRegion region;
        region.members = groups[root];  // ascending by construction
        BitGrid canvas(canvas_w, canvas_h, cfg.canvas_stride);
        for (int m : region.members) canvas = paste(std::move(canvas), bin[static_cast<size_t>(m)]);
        region.mask = std::move(canvas);
        out.push_back(std::move(region));
    }
    // group roots are the smallest member of each component, so `out` is
    // already ordered by smallest member index
    return out;
}

}  // namespace curvetext
