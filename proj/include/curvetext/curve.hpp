// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "curvetext/geom.hpp"
#include "curvetext/merge.hpp"

namespace curvetext {

// Open polyline parameterized by arc length.
struct Polyline {
    std::vector<Point> pts;

    double length() const;
    Point point_at(double s) const;    // s clamped to [0, length]
    Point tangent_at(double s) const;  // unit tangent by central differences

    struct Projection {
        double s = 0;     // arc-length parameter of the closest point
        double dist = 0;  // distance to it
    };
    Projection project(Point p) const;
};

// Center line of one region: points at equal arc-length spacing with unit
// tangents.
struct CenterLine {
    std::vector<Point> points;
    std::vector<Point> tangents;
};

// Centers of the region's set cells; all of them when there are at most n,
// otherwise a seeded uniform subsample of size n (row-major order).
std::vector<Point> sample_positive_pixels(const MergedRegion& region, int n, uint64_t seed);

// Principal curve through a point cloud by iterated projection and kernel
// smoothing. Collinear clouds yield the straight segment through the points;
// coincident clouds are an error.
Polyline fit_principal_curve(const std::vector<Point>& points);

// Extends the first/last segment so every point's projection falls within
// the curve; used so polygons reach word ends.
Polyline extend_to_cover(Polyline curve, const std::vector<Point>& points);

CenterLine sample_center_points(const Polyline& curve, int count = 7);

// 14-vertex text polygon: per center-line slab, the circumscribed rectangle
// of the region cells (cell rectangles, not centers) oriented along the
// slab axis supplies top/bottom half-widths; interior points average their
// two adjacent slabs, empty slabs borrow the nearest usable one.
Polygon build_polygon(const MergedRegion& region, const CenterLine& cl);

}  // namespace curvetext
