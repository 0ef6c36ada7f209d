// Complete fans, torus-invariant divisors and the Q-Fano condition.

#ifndef TORIC_FAN_HPP
#define TORIC_FAN_HPP

#include "toric/core.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace toric {

/// Raised for fans that cannot be represented at all: non-primitive or
/// duplicate rays, bad indices, wrong lengths.
class FanStructureError : public Error {
public:
    FanStructureError(const std::string& what, std::vector<std::size_t> offending)
        : Error(what), offending_(std::move(offending)) {}
    const std::vector<std::size_t>& offending_indices() const { return offending_; }

private:
    std::vector<std::size_t> offending_;
};

/// Raised when an operation needs -K_X to be an ample Q-Cartier divisor.
class NotQFanoError : public Error {
public:
    explicit NotQFanoError(const std::string& detail) : Error("not Q-Fano: " + detail) {}
};

/// A cone of the fan, as a sorted list of indices into the fan's rays.
struct Cone {
    std::vector<std::size_t> rays;
    friend bool operator==(const Cone&, const Cone&) = default;
};

/// A complete-fan candidate: primitive, pairwise distinct rays plus the
/// maximal cones. Geometric conditions (completeness, smoothness) are not
/// enforced here; see validate_fan.
class Fan {
public:
    Fan(std::size_t dim, std::vector<LatticeVector> rays, std::vector<std::vector<std::size_t>> max_cones);

    std::size_t dim() const { return dim_; }
    std::size_t ray_count() const { return rays_.size(); }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const LatticeVector& ray(std::size_t i) const { return rays_.at(i); }
    const std::vector<Cone>& max_cones() const { return cones_; }
    std::vector<LatticeVector> cone_rays(std::size_t cone) const;

private:
    std::size_t dim_;
    std::vector<LatticeVector> rays_;
    std::vector<Cone> cones_;
};

/// Facet of a full-dimensional cone: the rays on it and the inward normal.
struct ConeFacet {
    std::vector<std::size_t> rays;
    LatticeVector inward_normal;
};

/// Facets of maximal cone `cone`. Empty if the cone is not full-dimensional.
std::vector<ConeFacet> cone_facets(const Fan& fan, std::size_t cone);

struct FanDiagnostics {
    bool complete = false;
    bool simplicial = false;
    bool smooth = false;
    std::vector<std::string> failures;
};

FanDiagnostics validate_fan(const Fan& fan);

/// D = sum a_i D_i, one coefficient per ray.
struct ToricDivisor {
    std::vector<Rational> coefficients;

    static ToricDivisor prime(std::size_t ray_count, std::size_t i);
    std::size_t size() const { return coefficients.size(); }
    bool is_effective() const;
    bool is_integral() const;
    friend ToricDivisor operator+(const ToricDivisor& a, const ToricDivisor& b);
    friend bool operator==(const ToricDivisor&, const ToricDivisor&) = default;
};

ToricDivisor anticanonical_divisor(const Fan& fan);

struct FanoData {
    std::vector<RationalVector> cartier_vertices;  // u_sigma, one per maximal cone
    bool ample = false;
};

/// Cartier data of -K_X: <u_sigma, v_i> = -1 on the rays of every maximal
/// cone. nullopt if some cone admits no such u_sigma. Requires a complete fan.
std::optional<FanoData> fano_vertex_data(const Fan& fan);

/// Throws NotQFanoError unless the fan is complete and -K_X is ample and
/// Q-Cartier. Returns the Cartier data.
FanoData require_q_fano(const Fan& fan);

/// u with <u, v_i> = D_i - E_i for every ray, or nullopt if D and E are not
/// (Q-)linearly equivalent. The witness is integral iff D - E is principal.
std::optional<RationalVector> linear_equivalence(const Fan& fan, const ToricDivisor& d, const ToricDivisor& e);

/// Index of a maximal cone containing v (in its closure).
std::optional<std::size_t> find_containing_cone(const Fan& fan, const LatticeVector& v);

}  // namespace toric

#endif  // TORIC_FAN_HPP
