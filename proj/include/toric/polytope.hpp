// Exact H-polytopes: vertices, pulling triangulation, volume, barycenter,
// lattice points and integrals of affine functions.

#ifndef TORIC_POLYTOPE_HPP
#define TORIC_POLYTOPE_HPP

#include "toric/core.hpp"
#include "toric/fan.hpp"

#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace toric {

class UnboundedError : public Error {
public:
    UnboundedError() : Error("unbounded") {}
};

class DegeneratePolytopeError : public Error {
public:
    DegeneratePolytopeError() : Error("degenerate polytope") {}
};

/// The half-space <u, normal> >= offset.
struct Halfspace {
    LatticeVector normal;
    Rational offset;
};

/// Intersection of half-spaces in M_R. Immutable; the vertex list is
/// computed on first use and shared between copies.
class Polytope {
public:
    Polytope(std::size_t dim, std::vector<Halfspace> facets);

    std::size_t dim() const { return dim_; }
    const std::vector<Halfspace>& facets() const { return facets_; }

    /// Lexicographically sorted vertex list. Throws UnboundedError.
    const std::vector<RationalVector>& vertices() const;

    bool contains(const RationalVector& u) const;
    bool is_empty() const { return vertices().empty(); }

    /// k * P for k > 0 (offsets scaled).
    Polytope dilated(const Rational& k) const;
    /// P intersected with one more half-space.
    Polytope intersected(Halfspace h) const;

private:
    struct VertexCache;
    std::size_t dim_;
    std::vector<Halfspace> facets_;
    std::shared_ptr<VertexCache> cache_;
};

/// P_D = { u : <u, v_i> >= -a_i for every ray }.
Polytope divisor_polytope(const Fan& fan, const ToricDivisor& d);

std::vector<RationalVector> enumerate_vertices(const Polytope& p);

struct Simplex {
    std::vector<RationalVector> vertices;  // dim + 1 points
    Rational volume;
};

/// Pulling triangulation: the apex of every face is its first vertex in
/// lexicographic order. Empty for lower-dimensional polytopes.
std::vector<Simplex> triangulate(const Polytope& p);

/// Same scheme with apexes chosen by `priority`, a permutation of indices
/// into p.vertices(): the apex of a face is its vertex that comes first in
/// `priority`.
std::vector<Simplex> triangulate(const Polytope& p, std::span<const std::size_t> priority);

Rational volume(const Polytope& p);

/// n! * volume, the lattice-normalized volume (equals the top
/// self-intersection when p is the polytope of an ample divisor).
Rational normalized_volume(const Polytope& p);

/// Throws DegeneratePolytopeError when the volume is zero.
RationalVector barycenter(const Polytope& p);

/// Lexicographically ordered integer points of p.
std::vector<LatticeVector> lattice_points(const Polytope& p);

/// Visits the integer points of p in lexicographic order.
void for_each_lattice_point(const Polytope& p, const std::function<void(const LatticeVector&)>& visit);

/// u -> <linear, u> + constant.
struct AffineFunction {
    RationalVector linear;
    Rational constant;
    Rational operator()(const RationalVector& u) const { return dot(linear, u) + constant; }
};

Rational integrate_affine(const Polytope& p, const AffineFunction& f);

}  // namespace toric

#endif  // TORIC_POLYTOPE_HPP
