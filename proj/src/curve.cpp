// SPDX-License-Identifier: Apache-2.0
#include "curvetext/curve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "curvetext/rng.hpp"

namespace curvetext {

namespace {

constexpr int kCurveNodes = 50;
constexpr int kMaxIterations = 20;
constexpr double kBandwidthStartFrac = 0.3;
constexpr double kBandwidthFloorFrac = 0.06;
constexpr double kBandwidthDecay = 0.6;
constexpr double kConvergenceFrac = 1e-3;

std::vector<double> cumulative_lengths(const std::vector<Point>& pts) {
    std::vector<double> cum(pts.size(), 0.0);
    for (size_t i = 1; i < pts.size(); ++i) cum[i] = cum[i - 1] + norm(pts[i] - pts[i - 1]);
    return cum;
}

// Weighted local-linear estimate of f(target) from samples (param, value)
// under a Gaussian kernel; exact for affine data, which keeps straight
// clouds straight.
double local_linear(const std::vector<double>& param, const std::vector<double>& value,
                    double target, double bandwidth) {
    double s0 = 0, s1 = 0, s2 = 0, t0 = 0, t1 = 0;
    for (size_t i = 0; i < param.size(); ++i) {
        double d = param[i] - target;
        double z = d / bandwidth;
        double w = std::exp(-0.5 * z * z);
        s0 += w;
        s1 += w * d;
        s2 += w * d * d;
        t0 += w * value[i];
        t1 += w * value[i] * d;
    }
    double denom = s0 * s2 - s1 * s1;
    if (s0 <= 0.0) return 0.0;
    if (std::abs(denom) <= 1e-12 * (s0 * s2 + 1e-300)) return t0 / s0;
    return (s2 * t0 - s1 * t1) / denom;
}

struct Pca {
    Point mean;
    Point axis;          // major direction, unit
    double major = 0.0;  // eigenvalues
    double minor = 0.0;
};

Pca principal_axis(const std::vector<Point>& pts) {
    Pca r;
    double n = static_cast<double>(pts.size());
    for (const Point& p : pts) r.mean = r.mean + p;
    r.mean = r.mean * (1.0 / n);
    double sxx = 0, sxy = 0, syy = 0;
    for (const Point& p : pts) {
        Point d = p - r.mean;
        sxx += d.x * d.x;
        sxy += d.x * d.y;
        syy += d.y * d.y;
    }
    sxx /= n;
    sxy /= n;
    syy /= n;
    double tr = sxx + syy;
    double det = sxx * syy - sxy * sxy;
    double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
    r.major = tr / 2.0 + disc;
    r.minor = tr / 2.0 - disc;
    if (std::abs(sxy) > 1e-15) {
        r.axis = normalized({sxy, r.major - sxx});
    } else {
        r.axis = sxx >= syy ? Point{1, 0} : Point{0, 1};
    }
    return r;
}

std::vector<Point> dedupe_nodes(const std::vector<Point>& pts, double tol) {
    std::vector<Point> out;
    for (const Point& p : pts) {
        if (out.empty() || norm(p - out.back()) > tol) out.push_back(p);
    }
    return out;
}

// Lexicographically smaller endpoint first, for deterministic traversal.
void canonical_orientation(std::vector<Point>& pts) {
    const Point& a = pts.front();
    const Point& b = pts.back();
    if (b.x < a.x || (b.x == a.x && b.y < a.y)) std::reverse(pts.begin(), pts.end());
}

}  // namespace

double Polyline::length() const {
    double total = 0.0;
    for (size_t i = 1; i < pts.size(); ++i) total += norm(pts[i] - pts[i - 1]);
    return total;
}

Point Polyline::point_at(double s) const {
    if (pts.empty()) throw GeomError("point_at: empty polyline");
    if (pts.size() == 1) return pts[0];
    if (s <= 0.0) return pts.front();
    double walked = 0.0;
    for (size_t i = 1; i < pts.size(); ++i) {
        double seg = norm(pts[i] - pts[i - 1]);
        if (walked + seg >= s && seg > 0.0) {
            double t = (s - walked) / seg;
            return pts[i - 1] + (pts[i] - pts[i - 1]) * t;
        }
        walked += seg;
    }
    return pts.back();
}

Point Polyline::tangent_at(double s) const {
    double total = length();
    if (total <= kGeomEps) throw GeomError("tangent_at: zero-length polyline");
    double delta = total / 200.0;
    Point a = point_at(std::max(0.0, s - delta));
    Point b = point_at(std::min(total, s + delta));
    return normalized(b - a);
}

Polyline::Projection Polyline::project(Point p) const {
    if (pts.empty()) throw GeomError("project: empty polyline");
    Projection best{0.0, norm(p - pts[0])};
    double walked = 0.0;
    for (size_t i = 1; i < pts.size(); ++i) {
        Point a = pts[i - 1];
        Point ab = pts[i] - a;
        double len2 = dot(ab, ab);
        double seg = std::sqrt(len2);
        double t = len2 > 0.0 ? std::clamp(dot(p - a, ab) / len2, 0.0, 1.0) : 0.0;
        double d = norm(p - (a + ab * t));
        if (d < best.dist) best = {walked + t * seg, d};
        walked += seg;
    }
    return best;
}

std::vector<Point> sample_positive_pixels(const MergedRegion& region, int n, uint64_t seed) {
    if (n < 7) throw std::invalid_argument("sample_positive_pixels: n must be >= 7");
    const BitGrid& g = region.mask;
    std::vector<Point> centers;
    for (int iy = 0; iy < g.height; ++iy) {
        for (int ix = 0; ix < g.width; ++ix) {
            if (g.at(ix, iy)) centers.push_back(g.cell_center(ix, iy));
        }
    }
    if (centers.empty()) throw GeomError("sample_positive_pixels: empty region");
    if (centers.size() <= static_cast<size_t>(n)) return centers;

    std::vector<size_t> idx(centers.size());
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(seed);
    for (size_t i = 0; i < static_cast<size_t>(n); ++i) {
        size_t j = i + static_cast<size_t>(rng.below(idx.size() - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(static_cast<size_t>(n));
    std::sort(idx.begin(), idx.end());  // keep row-major order
    std::vector<Point> out;
    out.reserve(idx.size());
    for (size_t i : idx) out.push_back(centers[i]);
    return out;
}

Polyline fit_principal_curve(const std::vector<Point>& points) {
    if (points.size() < 7)
        throw std::invalid_argument("fit_principal_curve: need at least 7 points");

    BoundingBox bb = bounding_box(points);
    double diag = std::hypot(bb.width(), bb.height());
    if (diag <= kGeomEps) throw GeomError("fit_principal_curve: all points coincident");

    Pca pca = principal_axis(points);
    double tmin = std::numeric_limits<double>::infinity(), tmax = -tmin;
    for (const Point& p : points) {
        double t = dot(p - pca.mean, pca.axis);
        tmin = std::min(tmin, t);
        tmax = std::max(tmax, t);
    }

    if (pca.minor <= 1e-12 * std::max(pca.major, 1e-300)) {
        // rank-deficient cloud: the segment through the points
        Polyline line{{pca.mean + pca.axis * tmin, pca.mean + pca.axis * tmax}};
        canonical_orientation(line.pts);
        return line;
    }

    Polyline curve;
    curve.pts.resize(kCurveNodes);
    for (int k = 0; k < kCurveNodes; ++k) {
        double t = tmin + (tmax - tmin) * k / (kCurveNodes - 1);
        curve.pts[static_cast<size_t>(k)] = pca.mean + pca.axis * t;
    }

    std::vector<double> lambda(points.size());
    std::vector<double> xs(points.size()), ys(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        xs[i] = points[i].x;
        ys[i] = points[i].y;
    }

    for (int iter = 0; iter < kMaxIterations; ++iter) {
        double total = curve.length();
        if (total <= kGeomEps) break;
        double h_frac = std::max(kBandwidthFloorFrac,
                                 kBandwidthStartFrac * std::pow(kBandwidthDecay, iter));
        double h = h_frac * total;
        bool floor_reached = h_frac <= kBandwidthFloorFrac;

        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (size_t i = 0; i < points.size(); ++i) {
            lambda[i] = curve.project(points[i]).s;
            lo = std::min(lo, lambda[i]);
            hi = std::max(hi, lambda[i]);
        }
        if (hi - lo <= kGeomEps) throw GeomError("fit_principal_curve: degenerate projection span");

        std::vector<Point> next(kCurveNodes);
        for (int k = 0; k < kCurveNodes; ++k) {
            double target = lo + (hi - lo) * k / (kCurveNodes - 1);
            next[static_cast<size_t>(k)] = {local_linear(lambda, xs, target, h),
                                            local_linear(lambda, ys, target, h)};
        }

        double moved = 0.0;
        for (int k = 0; k < kCurveNodes; ++k)
            moved += norm(next[static_cast<size_t>(k)] - curve.pts[static_cast<size_t>(k)]);
        moved /= kCurveNodes;

        std::vector<Point> deduped = dedupe_nodes(next, 1e-12 * diag);
        if (deduped.size() < 2) break;  // oversmoothed to a point; keep previous curve
        if (deduped.size() == next.size()) {
            curve.pts = std::move(next);
        } else {
            // node count changed; resample back to the fixed node count
            Polyline tmp{std::move(deduped)};
            double len = tmp.length();
            curve.pts.assign(kCurveNodes, Point{});
            for (int k = 0; k < kCurveNodes; ++k)
                curve.pts[static_cast<size_t>(k)] = tmp.point_at(len * k / (kCurveNodes - 1));
        }

        if (floor_reached && moved < kConvergenceFrac * diag) break;
    }

    curve.pts = dedupe_nodes(curve.pts, 1e-12 * diag);
    if (curve.pts.size() < 2) throw GeomError("fit_principal_curve: curve collapsed");
    canonical_orientation(curve.pts);
    return curve;
}

Polyline extend_to_cover(Polyline curve, const std::vector<Point>& points) {
    if (curve.pts.size() < 2) return curve;
    Point u = normalized(curve.pts[1] - curve.pts[0]);
    Point v = normalized(curve.pts[curve.pts.size() - 1] - curve.pts[curve.pts.size() - 2]);
    double over_start = 0.0, over_end = 0.0;
    for (const Point& p : points) {
        over_start = std::max(over_start, dot(curve.pts.front() - p, u));
        over_end = std::max(over_end, dot(p - curve.pts.back(), v));
    }
    if (over_start > kGeomEps)
        curve.pts.insert(curve.pts.begin(), curve.pts.front() - u * over_start);
    if (over_end > kGeomEps) curve.pts.push_back(curve.pts.back() + v * over_end);
    return curve;
}

CenterLine sample_center_points(const Polyline& curve, int count) {
    if (count < 2) throw std::invalid_argument("sample_center_points: count must be >= 2");
    double total = curve.length();
    if (total <= kGeomEps) throw GeomError("sample_center_points: zero-length curve");
    CenterLine cl;
    cl.points.reserve(static_cast<size_t>(count));
    cl.tangents.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        double s = total * k / (count - 1);
        cl.points.push_back(curve.point_at(s));
        cl.tangents.push_back(curve.tangent_at(s));
    }
    for (size_t i = 1; i < cl.points.size(); ++i) {
        if (norm(cl.points[i] - cl.points[i - 1]) <= kGeomEps)
            throw GeomError("sample_center_points: coincident center-line points");
    }
    return cl;
}

Polygon build_polygon(const MergedRegion& region, const CenterLine& cl) {
    if (cl.points.size() != 7 || cl.tangents.size() != 7)
        throw std::invalid_argument("build_polygon: center line must have 7 points");
    const BitGrid& g = region.mask;
    const double half_cell = g.stride / 2.0;

    std::vector<Point> centers;
    for (int iy = 0; iy < g.height; ++iy) {
        for (int ix = 0; ix < g.width; ++ix) {
            if (g.at(ix, iy)) centers.push_back(g.cell_center(ix, iy));
        }
    }
    if (centers.empty()) throw GeomError("build_polygon: empty region");

    struct SlabWidth {
        double top = 0, bottom = 0;
        bool valid = false;
    };
    std::array<SlabWidth, 6> slabs{};

    for (size_t s = 0; s < 6; ++s) {
        Point a = cl.points[s];
        Point b = cl.points[s + 1];
        double seg_len = norm(b - a);
        if (seg_len <= kGeomEps) continue;
        Point u = (b - a) * (1.0 / seg_len);
        std::vector<Point> slab_pts;
        for (const Point& c : centers) {
            double t = dot(c - a, u);
            if (t < 0.0 || t > seg_len) continue;
            slab_pts.push_back({c.x - half_cell, c.y - half_cell});
            slab_pts.push_back({c.x + half_cell, c.y - half_cell});
            slab_pts.push_back({c.x + half_cell, c.y + half_cell});
            slab_pts.push_back({c.x - half_cell, c.y + half_cell});
        }
        if (slab_pts.empty()) continue;
        Polygon rect;
        try {
            rect = oriented_rect(slab_pts, u);
        } catch (const GeomError&) {
            continue;  // degenerate slab, treated as empty
        }
        Point n = left_normal(u);
        double v_center = dot(a, n);
        slabs[s].top = dot(rect.vertices[0], n) - v_center;     // left side of travel
        slabs[s].bottom = v_center - dot(rect.vertices[2], n);  // right side
        slabs[s].valid = true;
    }

    // Empty slabs borrow the nearest usable slab's widths.
    std::array<SlabWidth, 6> filled = slabs;
    for (size_t s = 0; s < 6; ++s) {
        if (filled[s].valid) continue;
        for (size_t d = 1; d < 6 && !filled[s].valid; ++d) {
            if (s >= d && slabs[s - d].valid)
                filled[s] = slabs[s - d];
            else if (s + d < 6 && slabs[s + d].valid)
                filled[s] = slabs[s + d];
        }
    }
    bool any_valid = false;
    for (const auto& s : filled) any_valid = any_valid || s.valid;
    if (!any_valid) throw GeomError("build_polygon: no usable slab");

    std::array<double, 7> top{}, bottom{};
    for (size_t k = 0; k < 7; ++k) {
        if (k == 0) {
            top[k] = filled[0].top;
            bottom[k] = filled[0].bottom;
        } else if (k == 6) {
            top[k] = filled[5].top;
            bottom[k] = filled[5].bottom;
        } else {
            top[k] = (filled[k - 1].top + filled[k].top) / 2.0;
            bottom[k] = (filled[k - 1].bottom + filled[k].bottom) / 2.0;
        }
        top[k] = std::max(top[k], half_cell);
        bottom[k] = std::max(bottom[k], half_cell);
    }

    Polygon poly;
    poly.vertices.reserve(14);
    for (size_t k = 0; k < 7; ++k) {
        Point n = left_normal(cl.tangents[k]);
        poly.vertices.push_back(cl.points[k] + n * top[k]);
    }
    for (size_t k = 7; k-- > 0;) {
        Point n = left_normal(cl.tangents[k]);
        poly.vertices.push_back(cl.points[k] - n * bottom[k]);
    }
    return poly;
}

}  // namespace curvetext
