#include "toric/kstability.hpp"

#include "toric/filtration.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toric {

std::string_view to_string(Verdict v) {
    return v == Verdict::KSemistable ? "K_SEMISTABLE" : "K_UNSTABLE";
}

std::optional<Verdict> parse_verdict(std::string_view s) {
    if (s == "K_SEMISTABLE") return Verdict::KSemistable;
    if (s == "K_UNSTABLE") return Verdict::KUnstable;
    return std::nullopt;
}

std::string_view to_string(Route r) { return r == Route::TheoremB ? "THEOREM_B" : "THEOREM_C"; }

std::optional<Route> parse_route(std::string_view s) {
    if (s == "B" || s == "THEOREM_B") return Route::TheoremB;
    if (s == "C" || s == "THEOREM_C") return Route::TheoremC;
    return std::nullopt;
}

namespace {

FanDiagnostics checked_diagnostics(const Fan& fan) {
    auto diag = validate_fan(fan);
    if (!diag.complete) throw NotQFanoError("fan is not complete (" + diag.failures.front() + ")");
    return diag;
}

}  // namespace

ToricFano::ToricFano(Fan fan)
    : fan_(std::move(fan)),
      diag_(checked_diagnostics(fan_)),
      data_(require_q_fano(fan_)),
      polytope_(divisor_polytope(fan_, anticanonical_divisor(fan_))),
      volume_(toric::volume(polytope_)),
      barycenter_(toric::barycenter(polytope_)) {
    for (std::size_t k = 0; k < fan_.max_cones().size(); ++k) cone_facets_.push_back(cone_facets(fan_, k));
}

Rational ToricFano::beta_ray(std::size_t i) const {
    return dot(barycenter_, fan_.ray(i)) + Rational(1);
}

Rational ToricFano::beta_toric_valuation(const LatticeVector& v) const {
    if (v.size() != fan_.dim()) throw std::invalid_argument("valuation vector has wrong dimension");
    if (v.is_zero()) throw Error("not a direction");
    const auto& verts = polytope_.vertices();
    Rational lowest = dot(verts.front(), v);
    for (const auto& w : verts) lowest = std::min(lowest, dot(w, v));
    return dot(barycenter_, v) - lowest;
}

Rational ToricFano::log_discrepancy(const LatticeVector& v) const {
    if (v.size() != fan_.dim()) throw std::invalid_argument("valuation vector has wrong dimension");
    if (v.is_zero()) throw Error("not a direction");
    for (std::size_t k = 0; k < cone_facets_.size(); ++k) {
        const auto& fs = cone_facets_[k];
        if (std::all_of(fs.begin(), fs.end(), [&](const ConeFacet& f) { return dot(f.inward_normal, v) >= 0; }))
            return -dot(data_.cartier_vertices[k], v);
    }
    throw std::logic_error("internal error: complete fan has no cone containing the vector");
}

Rational beta_ray(const Fan& fan, std::size_t i) {
    if (i >= fan.ray_count()) throw std::out_of_range("ray index " + std::to_string(i) + " out of range");
    return ToricFano(fan).beta_ray(i);
}

Rational beta_toric_valuation(const Fan& fan, const LatticeVector& v) { return ToricFano(fan).beta_toric_valuation(v); }

Rational log_discrepancy(const Fan& fan, const LatticeVector& v) { return ToricFano(fan).log_discrepancy(v); }

DeltaResult delta_toric(const ToricFano& x) {
    std::vector<Rational> betas;
    for (std::size_t i = 0; i < x.fan().ray_count(); ++i) betas.push_back(x.beta_ray(i));
    const Rational top = *std::max_element(betas.begin(), betas.end());
    DeltaResult r{Rational(1) / top, {}};
    for (std::size_t i = 0; i < betas.size(); ++i)
        if (betas[i] == top) r.minimizing_rays.push_back(i);
    return r;
}

DeltaResult delta_toric(const Fan& fan) { return delta_toric(ToricFano(fan)); }

Verdict kstability_verdict(const ToricFano& x) {
    const Rational delta = delta_toric(x).delta;
    if (delta > Rational(1)) throw std::logic_error("internal error: delta > 1 for a toric Q-Fano variety");
    const bool centered = x.barycenter().is_zero();
    if ((delta == Rational(1)) != centered)
        throw std::logic_error("internal error: delta = 1 disagrees with the barycenter test");
    return centered ? Verdict::KSemistable : Verdict::KUnstable;
}

Verdict kstability_verdict(const Fan& fan) { return kstability_verdict(ToricFano(fan)); }

std::vector<std::size_t> vojta_eligible_rays(const ToricFano& x) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < x.fan().ray_count(); ++i)
        if (x.beta_ray(i) >= Rational(1)) out.push_back(i);
    if (out.empty()) throw std::logic_error("internal error: no ray with beta >= 1 on a complete fan");
    return out;
}

std::vector<std::size_t> vojta_eligible_rays(const Fan& fan) { return vojta_eligible_rays(ToricFano(fan)); }

KStabilityReport analyze(const ToricFano& x) {
    KStabilityReport r;
    r.barycenter = x.barycenter();
    for (std::size_t i = 0; i < x.fan().ray_count(); ++i) r.betas.push_back(x.beta_ray(i));
    auto delta = delta_toric(x);
    r.delta = delta.delta;
    r.minimizing_rays = std::move(delta.minimizing_rays);
    r.verdict = kstability_verdict(x);
    r.eligible_rays = vojta_eligible_rays(x);
    r.anticanonical_volume = x.volume() * Rational(factorial(x.fan().dim()));
    r.smooth = x.diagnostics().smooth;
    r.simplicial = x.diagnostics().simplicial;
    return r;
}

KStabilityReport analyze(const Fan& fan) { return analyze(ToricFano(fan)); }

bool VojtaCertificate::valid() const {
    return std::all_of(checks.begin(), checks.end(), [](const HypothesisCheck& c) { return !c.gating || c.passed; });
}

std::optional<std::string> VojtaCertificate::first_failure() const {
    for (const auto& c : checks)
        if (c.gating && !c.passed) return c.id;
    return std::nullopt;
}

namespace {

HypothesisCheck make_check(std::string id, std::string name) {
    HypothesisCheck c;
    c.id = std::move(id);
    c.name = std::move(name);
    return c;
}

std::string list(const std::vector<std::size_t>& v) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << '}';
    return os.str();
}

HypothesisCheck component_beta_check(const std::string& id, const std::vector<std::size_t>& rays,
                                     const std::vector<Rational>& betas) {
    auto c = make_check(id, "component_betas_at_least_one");
    c.values = betas;
    c.passed = true;
    std::ostringstream os;
    for (std::size_t k = 0; k < rays.size(); ++k) {
        os << (k ? "; " : "") << "beta(-K, D_" << rays[k] << ") = " << betas[k];
        if (betas[k] < Rational(1)) c.passed = false;
    }
    c.witness = os.str() + (c.passed ? " (all >= 1)" : " (some < 1)");
    return c;
}

}  // namespace

VojtaCertificate vojta_certificate(const ToricFano& x, Route route, const std::vector<std::size_t>& chosen_rays,
                                   std::optional<std::size_t> reference_ray) {
    const Fan& fan = x.fan();
    const std::size_t d = fan.ray_count();
    if (chosen_rays.empty()) throw std::invalid_argument("no rays chosen");
    for (auto i : chosen_rays)
        if (i >= d) throw std::out_of_range("unknown ray index " + std::to_string(i));
    if (reference_ray && *reference_ray >= d)
        throw std::out_of_range("unknown ray index " + std::to_string(*reference_ray));
    if (route == Route::TheoremB && !reference_ray) throw std::invalid_argument("route B requires a reference ray");

    VojtaCertificate cert;
    cert.route = route;
    cert.chosen_rays = chosen_rays;
    cert.reference_ray = route == Route::TheoremB ? reference_ray : std::nullopt;
    cert.smooth = x.diagnostics().smooth;
    cert.unchecked_assumptions = {
        "D is a simple normal crossings divisor on some model (no model is constructed)",
        "the height inequality itself is not computed; only its hypotheses are checked",
    };

    ToricDivisor sum{std::vector<Rational>(d)};
    for (auto i : chosen_rays) {
        cert.component_betas.push_back(beta_exact_general(fan, ToricDivisor::prime(d, i)));
        sum.coefficients[i] += 1;
    }
    cert.sum_divisor_beta = beta_exact_general(fan, sum);

    const std::set<std::size_t> distinct(chosen_rays.begin(), chosen_rays.end());
    const bool all_distinct = distinct.size() == chosen_rays.size();
    std::vector<std::size_t> distinct_rays(distinct.begin(), distinct.end());

    if (route == Route::TheoremB) {
        const std::size_t e = *reference_ray;

        auto b1 = make_check("b1", "reference_ray_eligible");
        const Rational beta_e = x.beta_ray(e);
        b1.values = {beta_e};
        b1.passed = beta_e >= Rational(1);
        b1.witness = "beta(-K, D_" + std::to_string(e) + ") = " + beta_e.str() + (b1.passed ? " >= 1" : " < 1");
        cert.checks.push_back(std::move(b1));

        auto b2 = make_check("b2", "linearly_equivalent_to_reference");
        b2.passed = true;
        std::ostringstream os;
        for (auto i : chosen_rays) {
            EquivalenceWitness w{i, linear_equivalence(fan, ToricDivisor::prime(d, i), ToricDivisor::prime(d, e))};
            w.integral = w.u && std::all_of(w.u->begin(), w.u->end(), [](const Rational& c) { return c.is_integer(); });
            if (!w.integral) b2.passed = false;
            os << (b2.equivalences.empty() ? "" : "; ") << "D_" << i << " - D_" << e;
            if (!w.u)
                os << " is not principal";
            else if (!w.integral)
                os << " = div(u) only for non-integral u = " << *w.u;
            else
                os << " = div(chi^u), u = " << *w.u;
            b2.equivalences.push_back(std::move(w));
        }
        b2.witness = os.str();
        cert.checks.push_back(std::move(b2));

        auto b3 = make_check("b3", "intersect_properly");
        if (!all_distinct) {
            b3.passed = false;
            b3.witness = "repeated component among " + list(chosen_rays) +
                         ": a local equation repeated is not a regular sequence";
        } else {
            auto report = general_position_report(fan, chosen_rays);
            b3.passed = report.intersect_properly;
            b3.witness = report.intersect_properly
                             ? "every cone contains at most dim(cone) of the chosen rays"
                             : "cone " + list(report.proper_intersection_witness->rays) + " of dimension " +
                                   std::to_string(report.proper_intersection_witness->dim) +
                                   " contains too many chosen rays";
            b3.position = std::move(report);
        }
        cert.checks.push_back(std::move(b3));

        cert.checks.push_back(component_beta_check("b4", chosen_rays, cert.component_betas));
    } else {
        auto c1 = make_check("c1", "k_semistable");
        const auto delta = delta_toric(x);
        const Verdict verdict = kstability_verdict(x);
        c1.values = {delta.delta};
        c1.passed = verdict == Verdict::KSemistable;
        c1.witness = "delta = " + delta.delta.str() + ", verdict " + std::string(to_string(verdict));
        cert.checks.push_back(std::move(c1));

        auto c2 = make_check("c2", "distinct_rays");
        c2.passed = all_distinct;
        c2.witness = all_distinct ? "chosen rays " + list(chosen_rays) + " are distinct"
                                  : "chosen rays " + list(chosen_rays) + " repeat an index";
        cert.checks.push_back(std::move(c2));

        auto c3 = make_check("c3", "general_position");
        auto report = general_position_report(fan, distinct_rays);
        c3.passed = all_distinct && report.general_position_lenient;
        std::string reading = std::string("lenient reading ") + (report.general_position_lenient ? "holds" : "fails") +
                              ", strict reading " + (report.general_position_strict ? "holds" : "fails");
        c3.witness = all_distinct ? reading : "requires distinct rays; on the distinct set the " + reading;
        c3.position = std::move(report);
        cert.checks.push_back(std::move(c3));

        cert.checks.push_back(component_beta_check("c4", chosen_rays, cert.component_betas));
    }

    auto s = make_check("sum_divisor_beta", "sum_divisor_beta_at_least_one");
    s.gating = false;
    s.values = {cert.sum_divisor_beta};
    s.passed = cert.sum_divisor_beta >= Rational(1);
    s.witness = "beta(-K, sum of chosen D_i) = " + cert.sum_divisor_beta.str();
    cert.checks.push_back(std::move(s));
    return cert;
}

VojtaCertificate vojta_certificate(const Fan& fan, Route route, const std::vector<std::size_t>& chosen_rays,
                                   std::optional<std::size_t> reference_ray) {
    return vojta_certificate(ToricFano(fan), route, chosen_rays, reference_ray);
}

}  // namespace toric
