// Small fans shared by the unit tests.

#ifndef TORIC_TESTS_FIXTURES_HPP
#define TORIC_TESTS_FIXTURES_HPP

#include "toric/fan.hpp"

namespace fixtures {

using toric::Fan;

inline Fan p2() { return Fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}); }

/// Rays (+-1, +-1, +-1); one maximal cone per face of the cube. Not
/// simplicial; P_{-K} is the octahedron |x| + |y| + |z| <= 1.
inline Fan cube() {
    std::vector<toric::LatticeVector> rays;
    for (int x : {-1, 1})
        for (int y : {-1, 1})
            for (int z : {-1, 1}) rays.push_back({x, y, z});
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t axis = 0; axis < 3; ++axis)
        for (int s : {-1, 1}) {
            std::vector<std::size_t> face;
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (rays[i][axis] == s) face.push_back(i);
            cones.push_back(face);
        }
    return Fan(3, rays, cones);
}

/// Weighted projective plane P(1,1,2): rays (1,0), (0,1), (-1,-2); singular, Q-Fano.
inline Fan p112() { return Fan(2, {{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace fixtures

#endif  // TORIC_TESTS_FIXTURES_HPP
