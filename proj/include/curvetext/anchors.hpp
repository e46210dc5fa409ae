// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <span>
#include <vector>

#include "curvetext/geom.hpp"

namespace curvetext {

// Square proposal centered on the feature-map lattice: cx = i * stride(level),
// cy = j * stride(level), with one of four side lengths per level.
struct SquareAnchor {
    double cx = 0, cy = 0, side = 0;
    int level = 0;
    int i = 0, j = 0;
    int k_index = 0;
};

struct AnchorLabel {
    SquareAnchor anchor;
    bool positive = false;
    int matched_gt = -1;
};

// Per-cell labels over an anchor's square region; values are exactly
// {0, 0.1, 1}: strong text, weak text, background.
struct SegmentLabelGrid {
    Point origin;
    double side = 0;
    int resolution = 0;
    std::vector<float> values;

    float at(int ix, int iy) const { return values[static_cast<size_t>(iy) * resolution + ix]; }
};

inline constexpr std::array<int, 4> kAnchorStrides = {8, 16, 32, 64};
inline constexpr std::array<double, 4> kAnchorScales = {2.0, 2.5, 3.0, 3.5};
inline constexpr double kMaxAnchorToTextHeight = 1.8;

// The 16 side lengths grouped by level: stride * k for k in kAnchorScales.
std::array<std::array<double, 4>, 4> side_lengths();

// Height of a ground-truth polygon. 14-vertex annotations (7 along the top
// edge, then 7 along the bottom in reverse) use the mean distance between
// corresponding top/bottom vertices; anything else falls back to the
// bounding-box height.
double gt_height(const Polygon& gt);

// All w*h*4 anchors of one level, row-major with the four sizes innermost.
std::vector<SquareAnchor> grid_anchors(int level, int w, int h);

// Positive iff, for some ground truth: the anchor center lies inside it and
// side <= 1.8 * gt height, and at least one top corner and at least one
// bottom corner of the anchor fall outside it. First matching polygon wins.
AnchorLabel assign_label(const SquareAnchor& a, const std::vector<Polygon>& gts);

// Cells inside the area-halved shrink of gt score 1, cells in the remaining
// gt interior 0.1, everything else 0.
SegmentLabelGrid segment_label(const SquareAnchor& a, const Polygon& gt, int resolution);

// Indices of entries with score strictly above s3, ordered by descending
// score (ties by ascending index), truncated to cap.
std::vector<size_t> top_indices_by_score(std::span<const double> scores, double s3, int cap);

std::vector<SquareAnchor> filter_positive_squares(std::span<const SquareAnchor> anchors,
                                                  std::span<const double> scores, double s3,
                                                  int cap);

}  // namespace curvetext
