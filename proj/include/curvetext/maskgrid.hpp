// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "curvetext/geom.hpp"

namespace curvetext {

// Dense width*height grid of scores in [0,1]. Cell (ix,iy) covers the
// image-space square [ix*stride,(ix+1)*stride) x [iy*stride,(iy+1)*stride),
// so its center sits at ((ix+0.5)*stride, (iy+0.5)*stride).
struct ScoreGrid {
    int width = 0;
    int height = 0;
    double stride = 1.0;
    std::vector<float> values;  // row-major

    ScoreGrid() = default;
    ScoreGrid(int w, int h, double stride_pixels, std::vector<float> vals = {});

    float at(int ix, int iy) const { return values[static_cast<size_t>(iy) * width + ix]; }
    float& at(int ix, int iy) { return values[static_cast<size_t>(iy) * width + ix]; }
};

// Binary grid sharing the ScoreGrid cell convention.
struct BitGrid {
    int width = 0;
    int height = 0;
    double stride = 1.0;
    std::vector<uint8_t> bits;

    BitGrid() = default;
    BitGrid(int w, int h, double stride_pixels);

    uint8_t at(int ix, int iy) const { return bits[static_cast<size_t>(iy) * width + ix]; }
    uint8_t& at(int ix, int iy) { return bits[static_cast<size_t>(iy) * width + ix]; }
    Point cell_center(int ix, int iy) const {
        return {(ix + 0.5) * stride, (iy + 0.5) * stride};
    }
};

// Mask scores predicted over one square proposal region.
struct SegmentScores {
    double cx = 0, cy = 0, side = 0;
    int resolution = 0;
    std::vector<float> scores;  // resolution * resolution, row-major

    Point origin() const { return {cx - side / 2.0, cy - side / 2.0}; }
    double mean_score() const;
};

// Binarized mask anchored to one square proposal region.
struct SegmentMask {
    Point origin;
    double side = 0;
    int resolution = 0;
    std::vector<uint8_t> bits;

    // Nearest-neighbor lookup of the bit covering an image-space point;
    // 0 outside the square.
    bool sample(Point p) const;
};

// Cell is 1 iff its score is strictly above s1.
BitGrid binarize(const ScoreGrid& g, double s1);
SegmentMask binarize(const SegmentScores& m, double s1);
bool binarizes_empty(const SegmentScores& m, double s1);

// Logical OR of the mask, resampled nearest-neighbor, into the canvas.
// Out-of-bounds portions are clipped.
BitGrid paste(BitGrid canvas, const SegmentMask& m);

long mask_area(const BitGrid& g);

// area(a AND b) / min(area(a), area(b)); 0 when either grid is empty.
// Grids must share dimensions and stride.
double overlap_ratio_min(const BitGrid& a, const BitGrid& b);

// Text format: "SCOREGRID <width> <height> <stride>" then height rows of
// width space-separated floats. Binary format: magic "SGRD", u32le width,
// u32le height, f32le stride, then width*height f32le values row-major.
void write_score_grid_text(std::ostream& out, const ScoreGrid& g);
ScoreGrid read_score_grid_text(std::istream& in);
void write_score_grid_binary(std::ostream& out, const ScoreGrid& g);
ScoreGrid read_score_grid_binary(std::istream& in);

}  // namespace curvetext
