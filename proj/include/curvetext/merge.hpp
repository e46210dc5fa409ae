// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "curvetext/maskgrid.hpp"

namespace curvetext {

struct MergeConfig {
    double s1 = 0.5;            // binarization threshold
    double s2 = 0.2;            // overlap-ratio threshold
    double canvas_stride = 4.0; // merging canvas resolution, pixels per cell
};

// One group of segment masks belonging to a single text instance.
struct MergedRegion {
    BitGrid mask;              // OR of the members pasted onto the canvas
    std::vector<int> members;  // indices into the merge_masks input, ascending
};

// Removes masks whose scores binarize to all-zero at s1.
std::vector<SegmentScores> drop_empty(const std::vector<SegmentScores>& masks, double s1);

// Groups masks into connected components of the pairwise overlap graph:
// after binarization at s1 and pasting to a canvas at canvas_stride, two
// masks are joined when overlap_ratio_min > s2. Regions are ordered by
// their smallest member index.
std::vector<MergedRegion> merge_masks(const std::vector<SegmentScores>& masks,
                                      const MergeConfig& cfg);

}  // namespace curvetext
