// Proper intersection and general position for torus-invariant prime
// divisors D_i, decided from the cone structure of the fan.

#ifndef TORIC_POSITION_HPP
#define TORIC_POSITION_HPP

#include "toric/fan.hpp"

#include <optional>
#include <vector>

namespace toric {

/// A cone of the fan (any face of a maximal cone) and its dimension.
struct FanCone {
    std::vector<std::size_t> rays;
    std::size_t dim = 0;
};

/// Every nonzero cone of the fan, each listed once.
std::vector<FanCone> all_cones(const Fan& fan);

struct ProperIntersection {
    bool holds = true;
    std::optional<FanCone> witness;  // a cone holding more chosen rays than its dimension
};

/// True iff every cone sigma contains at most dim(sigma) of the chosen rays.
/// Throws std::invalid_argument on repeated indices.
ProperIntersection intersect_properly(const Fan& fan, const std::vector<std::size_t>& rays);

/// Intersection of supp(D_j), j in J: the union of orbit closures V(sigma)
/// over the cones sigma containing every ray of J.
struct SubsetWitness {
    std::vector<std::size_t> subset;
    std::vector<std::vector<std::size_t>> minimal_cones;  // smallest cones containing the subset
    std::optional<std::size_t> dimension;                 // nullopt: the intersection is empty
};

struct PositionReport {
    std::vector<std::size_t> rays;
    bool intersect_properly = false;
    bool general_position_strict = false;
    bool general_position_lenient = false;
    std::optional<FanCone> proper_intersection_witness;
    std::vector<SubsetWitness> witnesses;
};

/// Strict reading: dim = n - |J| (in particular nonempty) whenever
/// |J| <= n, and empty whenever |J| > n. Lenient reading: every nonempty
/// intersection has dim = n - |J|.
PositionReport general_position_report(const Fan& fan, const std::vector<std::size_t>& rays);

}  // namespace toric

#endif  // TORIC_POSITION_HPP
