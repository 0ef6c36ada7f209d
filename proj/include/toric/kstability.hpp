// K-stability invariants of toric Q-Fano varieties from the barycenter of
// the anticanonical polytope, and certificates for the divisor
// configurations that the Vojta-type statements apply to.

#ifndef TORIC_KSTABILITY_HPP
#define TORIC_KSTABILITY_HPP

#include "toric/fan.hpp"
#include "toric/polytope.hpp"
#include "toric/position.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

enum class Verdict { KSemistable, KUnstable };

std::string_view to_string(Verdict v);  // "K_SEMISTABLE" / "K_UNSTABLE"
std::optional<Verdict> parse_verdict(std::string_view s);

/// A fan certified Q-Fano, with the anticanonical polytope, its volume and
/// barycenter computed once. Construction throws NotQFanoError.
class ToricFano {
public:
    explicit ToricFano(Fan fan);

    const Fan& fan() const { return fan_; }
    const FanoData& fano_data() const { return data_; }
    const FanDiagnostics& diagnostics() const { return diag_; }
    const Polytope& polytope() const { return polytope_; }
    const Rational& volume() const { return volume_; }
    const RationalVector& barycenter() const { return barycenter_; }

    /// beta(-K_X, D_i) = <barycenter, v_i> + 1.
    Rational beta_ray(std::size_t i) const;
    /// beta of the toric valuation ord_v: <barycenter, v> - min_{w in P} <w, v>.
    Rational beta_toric_valuation(const LatticeVector& v) const;
    /// A_X(ord_v) = -<u_sigma, v> for a maximal cone sigma containing v.
    Rational log_discrepancy(const LatticeVector& v) const;

private:
    Fan fan_;
    FanDiagnostics diag_;
    FanoData data_;
    Polytope polytope_;
    Rational volume_;
    RationalVector barycenter_;
    std::vector<std::vector<ConeFacet>> cone_facets_;
};

Rational beta_ray(const Fan& fan, std::size_t i);
Rational beta_toric_valuation(const Fan& fan, const LatticeVector& v);
Rational log_discrepancy(const Fan& fan, const LatticeVector& v);

struct DeltaResult {
    Rational delta;
    std::vector<std::size_t> minimizing_rays;  // every ray attaining the min
};

DeltaResult delta_toric(const ToricFano& x);
DeltaResult delta_toric(const Fan& fan);
Verdict kstability_verdict(const ToricFano& x);
Verdict kstability_verdict(const Fan& fan);

/// Rays with beta(-K_X, D_i) >= 1.
std::vector<std::size_t> vojta_eligible_rays(const ToricFano& x);
std::vector<std::size_t> vojta_eligible_rays(const Fan& fan);

struct KStabilityReport {
    RationalVector barycenter;
    std::vector<Rational> betas;
    Rational delta;
    Verdict verdict = Verdict::KUnstable;
    std::vector<std::size_t> minimizing_rays;
    std::vector<std::size_t> eligible_rays;
    Rational anticanonical_volume;  // n! vol(P_{-K})
    bool smooth = false;
    bool simplicial = false;
};

KStabilityReport analyze(const ToricFano& x);
KStabilityReport analyze(const Fan& fan);

enum class Route { TheoremB, TheoremC };

std::string_view to_string(Route r);  // "THEOREM_B" / "THEOREM_C"
std::optional<Route> parse_route(std::string_view s);

struct EquivalenceWitness {
    std::size_t ray = 0;
    std::optional<RationalVector> u;  // <u, v_j> = (D_ray - E)_j
    bool integral = false;
};

struct HypothesisCheck {
    std::string id;    // "b1".."b4", "c1".."c4", or "sum_divisor_beta"
    std::string name;
    bool passed = false;
    bool gating = true;  // non-gating checks are reported but do not affect validity
    std::string witness;
    std::vector<Rational> values;
    std::vector<EquivalenceWitness> equivalences;
    std::optional<PositionReport> position;
};

struct VojtaCertificate {
    Route route = Route::TheoremC;
    std::vector<std::size_t> chosen_rays;
    std::optional<std::size_t> reference_ray;
    std::vector<HypothesisCheck> checks;
    std::vector<Rational> component_betas;
    Rational sum_divisor_beta;
    std::string general_position_reading = "lenient";
    bool smooth = false;
    std::vector<std::string> unchecked_assumptions;

    bool valid() const;
    /// Id of the first failed gating check.
    std::optional<std::string> first_failure() const;
};

/// Route B: reference ray E eligible, each chosen D_i linearly equivalent to
/// E, the D_i intersect properly, beta(-K, D_i) >= 1 for each component.
/// Route C: K-semistable, distinct rays, general position, beta(-K, D_i) >= 1.
/// beta(-K, sum D_i) is always computed and reported as a non-gating check.
/// Throws std::out_of_range for unknown ray indices and
/// std::invalid_argument for route B without a reference ray.
VojtaCertificate vojta_certificate(const ToricFano& x, Route route, const std::vector<std::size_t>& chosen_rays,
                                   std::optional<std::size_t> reference_ray = std::nullopt);
VojtaCertificate vojta_certificate(const Fan& fan, Route route, const std::vector<std::size_t>& chosen_rays,
                                   std::optional<std::size_t> reference_ray = std::nullopt);

}  // namespace toric

#endif  // TORIC_KSTABILITY_HPP
