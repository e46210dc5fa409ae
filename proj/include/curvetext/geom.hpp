// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <vector>

namespace curvetext {

// All geometry lives in image coordinates: x grows right, y grows down.
// "Top" therefore means smaller y, and the left normal of a direction d
// (left as seen when travelling along d on screen) is (d.y, -d.x).

inline constexpr double kGeomEps = 1e-9;

struct GeomError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(Point p, double s) { return {p.x * s, p.y * s}; }
inline Point operator*(double s, Point p) { return p * s; }
inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline Point left_normal(Point d) { return {d.y, -d.x}; }

double norm(Point p);
Point normalized(Point p);  // throws GeomError on a zero vector
double point_segment_distance(Point p, Point a, Point b);

struct Polygon {
    std::vector<Point> vertices;
};

struct BoundingBox {
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    double width() const { return max_x - min_x; }
    double height() const { return max_y - min_y; }
};

BoundingBox bounding_box(const std::vector<Point>& pts);
BoundingBox bounding_box(const Polygon& p);

double polygon_signed_area(const Polygon& p);

// Absolute shoelace area. Throws GeomError when fewer than three distinct
// vertices remain after dropping repeats.
double polygon_area(const Polygon& p);

// Boundary points count as inside.
bool point_in_polygon(Point pt, const Polygon& p);

// Area of intersection of two simple polygons; concave inputs allowed.
double polygon_intersection_area(const Polygon& a, const Polygon& b);

// intersection / (area(a) + area(b) - intersection), in [0, 1].
double polygon_iou(const Polygon& a, const Polygon& b);

// Smallest rectangle with one side parallel to `axis` containing all points.
// The first two vertices lie on the side to the left of the axis direction,
// ordered along it. Throws GeomError for an empty point set or a zero-area
// (degenerate) rectangle.
Polygon oriented_rect(const std::vector<Point>& points, Point axis);

bool polygon_is_simple(const Polygon& p);

// Area-weighted centroid; falls back to the vertex mean for near-zero areas.
Point polygon_centroid(const Polygon& p);

Polygon scale_about(const Polygon& p, Point center, double factor);

}  // namespace curvetext
