// Independent reference computations for 2D fans, plus a generator of
// random complete Fano fans in the plane.
//
// The polygon route below never touches the library's vertex enumeration or
// triangulation: vertices come from solving the two tight equations of each
// maximal cone, ordered by angle, and area/centroid come from the shoelace
// formula.

#ifndef TORIC_TESTS_ORACLES_HPP
#define TORIC_TESTS_ORACLES_HPP

#include "toric/fan.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using toric::Fan;
using toric::Integer;
using toric::LatticeVector;
using toric::Rational;

using Point = std::array<Rational, 2>;

inline Integer cross(const LatticeVector& a, const LatticeVector& b) { return a[0] * b[1] - a[1] * b[0]; }

// Upper half-plane (including the positive x-axis) first, then by cross product.
inline bool angle_less(const LatticeVector& a, const LatticeVector& b) {
    auto upper = [](const LatticeVector& v) { return v[1] > 0 || (v[1] == 0 && v[0] > 0); };
    const bool ua = upper(a), ub = upper(b);
    if (ua != ub) return ua;
    return cross(a, b) > 0;
}

inline std::vector<LatticeVector> sort_by_angle(std::vector<LatticeVector> rays) {
    std::sort(rays.begin(), rays.end(), angle_less);
    return rays;
}

/// Consecutive rays (cyclically) span cones of angle < pi.
inline bool is_complete_cycle(const std::vector<LatticeVector>& cyclic) {
    if (cyclic.size() < 3) return false;
    for (std::size_t i = 0; i < cyclic.size(); ++i)
        if (cross(cyclic[i], cyclic[(i + 1) % cyclic.size()]) <= 0) return false;
    return true;
}

inline Fan fan_from_cycle(const std::vector<LatticeVector>& cyclic) {
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t i = 0; i < cyclic.size(); ++i) cones.push_back({i, (i + 1) % cyclic.size()});
    return Fan(2, cyclic, cones);
}

/// u with <u,a> = -1 and <u,b> = -1 (Cramer).
inline Point cone_vertex(const LatticeVector& a, const LatticeVector& b) {
    const Rational det(cross(a, b));
    return {Rational(Integer(b[1] - a[1])) / -det, Rational(Integer(a[0] - b[0])) / -det};
}

struct Polygon {
    std::vector<Point> vertices;  // counter-clockwise
    Rational normalized_area;     // 2 * area
    Point centroid;
};

inline Polygon shoelace(std::vector<Point> pts) {
    Polygon p;
    Rational twice_area(0), cx(0), cy(0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& a = pts[i];
        const auto& b = pts[(i + 1) % pts.size()];
        const Rational c = a[0] * b[1] - b[0] * a[1];
        twice_area += c;
        cx += (a[0] + b[0]) * c;
        cy += (a[1] + b[1]) * c;
    }
    p.normalized_area = twice_area;
    p.centroid = {cx / (twice_area * 3), cy / (twice_area * 3)};
    p.vertices = std::move(pts);
    return p;
}

/// P_{-K} for the fan on angularly sorted rays, assuming -K is ample.
inline Polygon anticanonical_polygon(const std::vector<LatticeVector>& cyclic) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < cyclic.size(); ++i) pts.push_back(cone_vertex(cyclic[i], cyclic[(i + 1) % cyclic.size()]));
    return shoelace(std::move(pts));
}

/// Strict convexity of the polygon through the cone vertices, i.e. -K ample.
inline bool anticanonical_ample(const std::vector<LatticeVector>& cyclic) {
    const std::size_t m = cyclic.size();
    for (std::size_t i = 0; i < m; ++i) {
        // vertex of cone (i, i+1) must satisfy <u, v_j> > -1 for every other ray
        const Point u = cone_vertex(cyclic[i], cyclic[(i + 1) % m]);
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i || j == (i + 1) % m) continue;
            if (u[0] * Rational(cyclic[j][0]) + u[1] * Rational(cyclic[j][1]) <= Rational(-1)) return false;
        }
    }
    return true;
}

inline LatticeVector act(const std::array<long, 4>& g, const LatticeVector& v) {
    return LatticeVector{g[0] * v[0] + g[1] * v[1], g[2] * v[0] + g[3] * v[1]};
}

/// Product of a few random elementary matrices; determinant +-1.
inline std::array<long, 4> random_gl2z(std::mt19937_64& rng) {
    std::array<long, 4> g{1, 0, 0, 1};
    std::uniform_int_distribution<int> op(0, 2), k(-2, 2);
    for (int step = 0; step < 3; ++step) {
        const long c = k(rng);
        switch (op(rng)) {
            case 0:  // row0 += c row1
                g = {g[0] + c * g[2], g[1] + c * g[3], g[2], g[3]};
                break;
            case 1:  // row1 += c row0
                g = {g[0], g[1], g[2] + c * g[0], g[3] + c * g[1]};
                break;
            default:  // swap rows
                g = {g[2], g[3], g[0], g[1]};
                break;
        }
    }
    return g;
}

/// Rays in a random index order; cones follow the relabelling.
inline Fan shuffled(const std::vector<LatticeVector>& cyclic, std::mt19937_64& rng) {
    const std::size_t m = cyclic.size();
    std::vector<std::size_t> label(m);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    std::vector<LatticeVector> rays(m);
    for (std::size_t i = 0; i < m; ++i) rays[label[i]] = cyclic[i];
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t i = 0; i < m; ++i) cones.push_back({label[i], label[(i + 1) % m]});
    return Fan(2, rays, cones);
}

struct RandomFan {
    std::vector<LatticeVector> cyclic;  // angularly sorted rays
    Fan fan;                            // same rays in shuffled index order
};

inline bool smooth_cycle(const std::vector<LatticeVector>& cyclic) {
    for (std::size_t i = 0; i < cyclic.size(); ++i)
        if (cross(cyclic[i], cyclic[(i + 1) % cyclic.size()]) != 1) return false;
    return true;
}

/// A random complete smooth Fano fan in the plane: a subset of the hexagon
/// rays, or random small primitive rays, moved by a random GL2(Z) element.
inline std::optional<RandomFan> random_smooth_fano_2d(std::mt19937_64& rng) {
    static const std::vector<LatticeVector> hexagon{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
    std::vector<LatticeVector> rays;
    if (std::bernoulli_distribution(0.75)(rng)) {
        for (const auto& h : hexagon)
            if (std::bernoulli_distribution(0.6)(rng)) rays.push_back(h);
    } else {
        std::uniform_int_distribution<int> c(-2, 2), count(3, 6);
        const int m = count(rng);
        for (int i = 0; i < m; ++i) {
            LatticeVector v{c(rng), c(rng)};
            if (v.is_zero() || !toric::is_primitive(v)) continue;
            if (std::find(rays.begin(), rays.end(), v) == rays.end()) rays.push_back(v);
        }
    }
    const auto g = random_gl2z(rng);
    for (auto& r : rays) r = act(g, r);
    auto cyclic = sort_by_angle(rays);
    if (!is_complete_cycle(cyclic) || !smooth_cycle(cyclic) || !anticanonical_ample(cyclic)) return std::nullopt;
    return RandomFan{cyclic, shuffled(cyclic, rng)};
}

/// A random complete simplicial Q-Fano fan in the plane (usually singular).
inline std::optional<RandomFan> random_q_fano_2d(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-4, 4), count(3, 7);
    std::vector<LatticeVector> rays;
    const int m = count(rng);
    for (int i = 0; i < m; ++i) {
        LatticeVector v{c(rng), c(rng)};
        if (v.is_zero() || !toric::is_primitive(v)) continue;
        if (std::find(rays.begin(), rays.end(), v) == rays.end()) rays.push_back(v);
    }
    auto cyclic = sort_by_angle(rays);
    if (!is_complete_cycle(cyclic) || !anticanonical_ample(cyclic)) return std::nullopt;
    return RandomFan{cyclic, shuffled(cyclic, rng)};
}

}  // namespace oracle

#endif  // TORIC_TESTS_ORACLES_HPP
