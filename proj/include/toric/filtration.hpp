// Volumes of the filtrations of R(-K_X) induced by effective torus-invariant
// divisors: an exact route (integration over the anticanonical polytope) and
// a lattice-count route at finite dilation N.

#ifndef TORIC_FILTRATION_HPP
#define TORIC_FILTRATION_HPP

#include "toric/fan.hpp"
#include "toric/polytope.hpp"

#include <vector>

namespace toric {

struct BetaEstimate {
    unsigned long dilation = 0;
    Rational estimate;
    Integer section_count;  // h^0(-N K_X) = #(N P ∩ M)
};

/// sum_{m >= 1} h^0(-N K_X - m D) / (N h^0(-N K_X)), counted as lattice
/// points: each u in N P contributes min_{c_i > 0} floor((<u, v_i> + N) / c_i).
/// D must have nonnegative integer coefficients, not all zero.
BetaEstimate beta_estimate_lattice(const Fan& fan, const ToricDivisor& d, unsigned long dilation);

/// beta(-K_X, D) = (1/vol P) * integral over P of min_{c_i > 0} (<u, v_i> + 1) / c_i,
/// integrated cell by cell over the regions where each term attains the min.
Rational beta_exact_general(const Fan& fan, const ToricDivisor& d);

/// n! * vol(P ∩ {<u, v_i> >= -1 + t}).
Rational filtration_slice_volume(const Fan& fan, std::size_t ray, const Rational& t);

/// (1 / (n! vol P)) * integral_0^inf filtration_slice_volume(ray, t) dt,
/// integrated exactly piece by piece between consecutive vertex values.
Rational beta_from_slice_volumes(const Fan& fan, std::size_t ray);

/// Weights w_k with integral_0^1 f = sum_k w_k f(k/m) for polynomials of
/// degree <= m (closed Newton-Cotes on m + 1 nodes).
std::vector<Rational> newton_cotes_weights(std::size_t m);

struct SweepRow {
    unsigned long dilation = 0;
    Integer section_count;
    Rational estimate;
    Rational exact_target;
    Rational abs_error;
};

/// Lattice estimates for D = D_ray at N = 1..max_dilation against the exact value.
std::vector<SweepRow> beta_sweep(const Fan& fan, std::size_t ray, unsigned long max_dilation);

}  // namespace toric

#endif  // TORIC_FILTRATION_HPP
