// SPDX-License-Identifier: Apache-2.0
#include "curvetext/geom.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace curvetext {

double norm(Point p) { return std::hypot(p.x, p.y); }

Point normalized(Point p) {
    double n = norm(p);
    if (n <= kGeomEps) throw GeomError("cannot normalize zero-length vector");
    return {p.x / n, p.y / n};
}

double point_segment_distance(Point p, Point a, Point b) {
    Point ab = b - a;
    double len2 = dot(ab, ab);
    if (len2 <= 0.0) return norm(p - a);
    double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return norm(p - (a + ab * t));
}

BoundingBox bounding_box(const std::vector<Point>& pts) {
    BoundingBox bb;
    if (pts.empty()) return bb;
    bb.min_x = bb.max_x = pts[0].x;
    bb.min_y = bb.max_y = pts[0].y;
    for (const Point& p : pts) {
        bb.min_x = std::min(bb.min_x, p.x);
        bb.max_x = std::max(bb.max_x, p.x);
        bb.min_y = std::min(bb.min_y, p.y);
        bb.max_y = std::max(bb.max_y, p.y);
    }
    return bb;
}

BoundingBox bounding_box(const Polygon& p) { return bounding_box(p.vertices); }

double polygon_signed_area(const Polygon& p) {
    const auto& v = p.vertices;
    double s = 0.0;
    for (size_t i = 0, n = v.size(); i < n; ++i) s += cross(v[i], v[(i + 1) % n]);
    return 0.5 * s;
}

namespace {

size_t distinct_vertex_count(const std::vector<Point>& v) {
    size_t count = 0;
    for (size_t i = 0, n = v.size(); i < n; ++i) {
        bool dup = false;
        for (size_t j = 0; j < i && !dup; ++j) dup = norm(v[i] - v[j]) <= kGeomEps;
        if (!dup) ++count;
    }
    return count;
}

double tri_cross(Point a, Point b, Point c) { return cross(b - a, c - a); }

// Drops repeated and collinear vertices so ear clipping sees a clean ring.
std::vector<Point> strip_degenerate_vertices(const std::vector<Point>& in) {
    std::vector<Point> out;
    for (const Point& p : in) {
        if (out.empty() || norm(p - out.back()) > kGeomEps) out.push_back(p);
    }
    while (out.size() > 1 && norm(out.front() - out.back()) <= kGeomEps) out.pop_back();
    bool changed = true;
    while (changed && out.size() > 3) {
        changed = false;
        for (size_t i = 0; i < out.size(); ++i) {
            Point a = out[(i + out.size() - 1) % out.size()];
            Point b = out[i];
            Point c = out[(i + 1) % out.size()];
            if (std::abs(tri_cross(a, b, c)) <= kGeomEps * (norm(c - a) + 1.0)) {
                out.erase(out.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    return out;
}

std::vector<std::array<Point, 3>> triangulate(const Polygon& poly) {
    std::vector<Point> v = strip_degenerate_vertices(poly.vertices);
    std::vector<std::array<Point, 3>> tris;
    if (v.size() < 3) return tris;

    double s = 0.0;
    for (size_t i = 0, n = v.size(); i < n; ++i) s += cross(v[i], v[(i + 1) % n]);
    if (s < 0) std::reverse(v.begin(), v.end());

    while (v.size() > 3) {
        bool clipped = false;
        size_t flattest = 0;
        double flattest_abs = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < v.size(); ++i) {
            size_t ip = (i + v.size() - 1) % v.size();
            size_t in = (i + 1) % v.size();
            double cr = tri_cross(v[ip], v[i], v[in]);
            if (std::abs(cr) < flattest_abs) {
                flattest_abs = std::abs(cr);
                flattest = i;
            }
            if (cr <= kGeomEps) continue;  // reflex or flat corner
            bool ear = true;
            for (size_t j = 0; j < v.size() && ear; ++j) {
                if (j == i || j == ip || j == in) continue;
                // Boundary contact blocks the ear as well; the sliver
                // fallback below resolves genuine stalls.
                ear = !(tri_cross(v[ip], v[i], v[j]) >= -kGeomEps &&
                        tri_cross(v[i], v[in], v[j]) >= -kGeomEps &&
                        tri_cross(v[in], v[ip], v[j]) >= -kGeomEps);
            }
            if (!ear) continue;
            tris.push_back({v[ip], v[i], v[in]});
            v.erase(v.begin() + static_cast<long>(i));
            clipped = true;
            break;
        }
        if (!clipped) v.erase(v.begin() + static_cast<long>(flattest));
    }
    if (v.size() == 3 && std::abs(tri_cross(v[0], v[1], v[2])) > 0.0)
        tris.push_back({v[0], v[1], v[2]});
    return tris;
}

// Clips CCW triangle `s` against CCW triangle `c` (Sutherland-Hodgman) and
// returns the area of the result.
double triangle_clip_area(const std::array<Point, 3>& s, const std::array<Point, 3>& c) {
    std::vector<Point> out(s.begin(), s.end());
    std::vector<Point> in;
    for (int e = 0; e < 3 && !out.empty(); ++e) {
        Point a = c[static_cast<size_t>(e)];
        Point b = c[static_cast<size_t>((e + 1) % 3)];
        Point dir = b - a;
        in.clear();
        in.swap(out);
        for (size_t i = 0; i < in.size(); ++i) {
            Point p = in[i];
            Point q = in[(i + 1) % in.size()];
            double dp = cross(dir, p - a);
            double dq = cross(dir, q - a);
            bool p_in = dp >= -kGeomEps;
            bool q_in = dq >= -kGeomEps;
            if (p_in) out.push_back(p);
            if (p_in != q_in) out.push_back(p + (q - p) * (dp / (dp - dq)));
        }
    }
    double s2 = 0.0;
    for (size_t i = 0, n = out.size(); i < n; ++i) s2 += cross(out[i], out[(i + 1) % n]);
    return std::abs(s2) * 0.5;
}

std::array<Point, 3> ccw_triangle(std::array<Point, 3> t) {
    if (tri_cross(t[0], t[1], t[2]) < 0) std::swap(t[1], t[2]);
    return t;
}

bool segments_cross(Point p1, Point p2, Point p3, Point p4) {
    double scale = norm(p2 - p1) + norm(p4 - p3) + 1.0;
    double eps = kGeomEps * scale;
    double d1 = tri_cross(p3, p4, p1);
    double d2 = tri_cross(p3, p4, p2);
    double d3 = tri_cross(p1, p2, p3);
    double d4 = tri_cross(p1, p2, p4);
    if (((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) &&
        ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps)))
        return true;
    if (std::abs(d1) <= eps && point_segment_distance(p1, p3, p4) <= kGeomEps) return true;
    if (std::abs(d2) <= eps && point_segment_distance(p2, p3, p4) <= kGeomEps) return true;
    if (std::abs(d3) <= eps && point_segment_distance(p3, p1, p2) <= kGeomEps) return true;
    if (std::abs(d4) <= eps && point_segment_distance(p4, p1, p2) <= kGeomEps) return true;
    return false;
}

}  // namespace

double polygon_area(const Polygon& p) {
    if (distinct_vertex_count(p.vertices) < 3)
        throw GeomError("degenerate polygon: fewer than 3 distinct vertices");
    return std::abs(polygon_signed_area(p));
}

bool point_in_polygon(Point pt, const Polygon& p) {
    const auto& v = p.vertices;
    const size_t n = v.size();
    if (n < 3) throw GeomError("point_in_polygon: polygon needs at least 3 vertices");
    for (size_t i = 0; i < n; ++i) {
        if (point_segment_distance(pt, v[i], v[(i + 1) % n]) <= kGeomEps) return true;
    }
    bool inside = false;
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point& a = v[j];
        const Point& b = v[i];
        if ((a.y > pt.y) != (b.y > pt.y)) {
            double xi = a.x + (pt.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (pt.x < xi) inside = !inside;
        }
    }
    return inside;
}

double polygon_intersection_area(const Polygon& a, const Polygon& b) {
    double area_a = polygon_area(a);
    double area_b = polygon_area(b);

    BoundingBox ba = bounding_box(a);
    BoundingBox bb = bounding_box(b);
    if (ba.max_x < bb.min_x || bb.max_x < ba.min_x || ba.max_y < bb.min_y || bb.max_y < ba.min_y)
        return 0.0;

    auto tris_a = triangulate(a);
    auto tris_b = triangulate(b);
    double total = 0.0;
    for (const auto& ta : tris_a) {
        auto ca = ccw_triangle(ta);
        for (const auto& tb : tris_b) total += triangle_clip_area(ca, ccw_triangle(tb));
    }
    return std::clamp(total, 0.0, std::min(area_a, area_b));
}

double polygon_iou(const Polygon& a, const Polygon& b) {
    double inter = polygon_intersection_area(a, b);
    double uni = polygon_area(a) + polygon_area(b) - inter;
    if (uni <= 0.0) return 0.0;
    return std::clamp(inter / uni, 0.0, 1.0);
}

Polygon oriented_rect(const std::vector<Point>& points, Point axis) {
    if (points.empty()) throw GeomError("oriented_rect: empty point set");
    Point u = normalized(axis);
    Point n = left_normal(u);
    double umin = std::numeric_limits<double>::infinity(), umax = -umin;
    double vmin = umin, vmax = -umin;
    for (const Point& p : points) {
        double pu = dot(p, u);
        double pv = dot(p, n);
        umin = std::min(umin, pu);
        umax = std::max(umax, pu);
        vmin = std::min(vmin, pv);
        vmax = std::max(vmax, pv);
    }
    if (umax - umin <= kGeomEps || vmax - vmin <= kGeomEps)
        throw GeomError("oriented_rect: degenerate zero-area rectangle");
    return Polygon{{u * umin + n * vmax, u * umax + n * vmax, u * umax + n * vmin,
                    u * umin + n * vmin}};
}

bool polygon_is_simple(const Polygon& p) {
    const auto& v = p.vertices;
    const size_t n = v.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i) {
        if (norm(v[i] - v[(i + 1) % n]) <= kGeomEps) return false;  // repeated vertex
    }
    for (size_t i = 0; i < n; ++i) {
        Point a1 = v[i], a2 = v[(i + 1) % n];
        for (size_t j = i + 1; j < n; ++j) {
            Point b1 = v[j], b2 = v[(j + 1) % n];
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                // A fold-back onto the shared neighbour makes a spike.
                Point shared = (j == i + 1) ? a2 : a1;
                Point e1 = (j == i + 1) ? a1 - shared : a2 - shared;
                Point e2 = (j == i + 1) ? b2 - shared : b1 - shared;
                double scale = norm(e1) + norm(e2) + 1.0;
                if (std::abs(cross(e1, e2)) <= kGeomEps * scale && dot(e1, e2) > 0.0)
                    return false;
                continue;
            }
            if (segments_cross(a1, a2, b1, b2)) return false;
        }
    }
    return true;
}

Point polygon_centroid(const Polygon& p) {
    const auto& v = p.vertices;
    if (v.empty()) throw GeomError("polygon_centroid: empty polygon");
    double a2 = 0.0, cx = 0.0, cy = 0.0;
    for (size_t i = 0, n = v.size(); i < n; ++i) {
        const Point& q = v[i];
        const Point& r = v[(i + 1) % n];
        double f = cross(q, r);
        a2 += f;
        cx += (q.x + r.x) * f;
        cy += (q.y + r.y) * f;
    }
    if (std::abs(a2) <= kGeomEps) {
        Point mean{0, 0};
        for (const Point& q : v) mean = mean + q;
        return mean * (1.0 / static_cast<double>(v.size()));
    }
    return {cx / (3.0 * a2), cy / (3.0 * a2)};
}

Polygon scale_about(const Polygon& p, Point center, double factor) {
    Polygon out;
    out.vertices.reserve(p.vertices.size());
    for (const Point& q : p.vertices) out.vertices.push_back(center + (q - center) * factor);
    return out;
}

}  // namespace curvetext
