#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace toric {

namespace {

std::string join(const std::vector<std::size_t>& v) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << '}';
    return os.str();
}

}  // namespace

Fan::Fan(std::size_t dim, std::vector<LatticeVector> rays, std::vector<std::vector<std::size_t>> max_cones)
    : dim_(dim), rays_(std::move(rays)) {
    if (dim_ == 0) throw FanStructureError("fan dimension must be positive", {});
    if (rays_.empty()) throw FanStructureError("fan has no rays", {});
    if (max_cones.empty()) throw FanStructureError("fan has no maximal cones", {});

    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < rays_.size(); ++i)
        if (rays_[i].size() != dim_) bad.push_back(i);
    if (!bad.empty()) throw FanStructureError("rays of wrong length " + join(bad), bad);

    for (std::size_t i = 0; i < rays_.size(); ++i)
        if (!is_primitive(rays_[i])) bad.push_back(i);
    if (!bad.empty()) throw FanStructureError("rays are not primitive " + join(bad), bad);

    for (std::size_t i = 0; i < rays_.size(); ++i)
        for (std::size_t j = i + 1; j < rays_.size(); ++j)
            if (rays_[i] == rays_[j]) {
                bad.push_back(i);
                bad.push_back(j);
            }
    if (!bad.empty()) throw FanStructureError("duplicate rays " + join(bad), bad);

    for (std::size_t k = 0; k < max_cones.size(); ++k) {
        auto idx = max_cones[k];
        if (idx.empty()) throw FanStructureError("maximal cone " + std::to_string(k) + " is empty", {k});
        for (auto i : idx)
            if (i >= rays_.size())
                throw FanStructureError("maximal cone " + std::to_string(k) + " references unknown ray " +
                                            std::to_string(i),
                                        {i});
        std::sort(idx.begin(), idx.end());
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
            throw FanStructureError("maximal cone " + std::to_string(k) + " repeats a ray", {k});
        cones_.push_back(Cone{std::move(idx)});
    }
}

std::vector<LatticeVector> Fan::cone_rays(std::size_t cone) const {
    std::vector<LatticeVector> out;
    for (auto i : cones_.at(cone).rays) out.push_back(rays_[i]);
    return out;
}

std::vector<ConeFacet> cone_facets(const Fan& fan, std::size_t cone) {
    const auto& idx = fan.max_cones().at(cone).rays;
    const auto gens = fan.cone_rays(cone);
    const std::size_t n = fan.dim();
    std::vector<ConeFacet> facets;
    if (rank(gens, n) < n) return facets;

    for_each_subset(gens.size(), n - 1, [&](const std::vector<std::size_t>& sub) {
        std::vector<LatticeVector> span;
        for (auto s : sub) span.push_back(gens[s]);
        LatticeVector normal = hyperplane_normal(span, n);
        if (normal.is_zero()) return;
        bool pos = false, neg = false;
        std::vector<std::size_t> on;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            int s = sgn(dot(normal, gens[j]));
            if (s > 0) pos = true;
            if (s < 0) neg = true;
            if (s == 0) on.push_back(idx[j]);
        }
        if (pos && neg) return;
        if (neg) normal = -normal;
        normal = primitive_vector(normal);
        for (const auto& f : facets)
            if (f.rays == on) return;
        facets.push_back(ConeFacet{std::move(on), std::move(normal)});
    });
    return facets;
}

FanDiagnostics validate_fan(const Fan& fan) {
    FanDiagnostics diag;
    diag.simplicial = true;
    diag.smooth = true;
    const std::size_t n = fan.dim();
    const auto& cones = fan.max_cones();
    bool structural_ok = true;

    std::vector<std::vector<ConeFacet>> facets(cones.size());
    for (std::size_t k = 0; k < cones.size(); ++k) {
        const auto gens = fan.cone_rays(k);
        const std::size_t r = rank(gens, n);
        if (r < n) {
            diag.failures.push_back("maximal cone " + std::to_string(k) + " " + join(cones[k].rays) +
                                    " is not full-dimensional (rank " + std::to_string(r) + ")");
            diag.simplicial = diag.smooth = false;
            structural_ok = false;
            continue;
        }
        if (gens.size() != n) {
            diag.simplicial = diag.smooth = false;
        } else if (determinant(Matrix::from_rows(gens, n)).abs() != Rational(1)) {
            diag.smooth = false;
        }
        facets[k] = cone_facets(fan, k);
        std::vector<LatticeVector> normals;
        for (const auto& f : facets[k]) normals.push_back(f.inward_normal);
        if (normals.empty() || rank(normals, n) < n) {
            diag.failures.push_back("maximal cone " + std::to_string(k) + " " + join(cones[k].rays) +
                                    " is not strongly convex");
            structural_ok = false;
            continue;
        }
        for (auto i : cones[k].rays) {
            std::vector<LatticeVector> through;
            for (const auto& f : facets[k])
                if (std::binary_search(f.rays.begin(), f.rays.end(), i)) through.push_back(f.inward_normal);
            if (n > 1 && (through.empty() || rank(through, n) < n - 1)) {
                diag.failures.push_back("ray " + std::to_string(i) + " is not an extremal ray of maximal cone " +
                                        std::to_string(k));
                structural_ok = false;
            }
        }
    }

    std::vector<bool> used(fan.ray_count(), false);
    for (const auto& c : cones)
        for (auto i : c.rays) used[i] = true;
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i]) diag.failures.push_back("ray " + std::to_string(i) + " lies in no maximal cone");

    if (structural_ok) {
        std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, LatticeVector>>> owners;
        for (std::size_t k = 0; k < cones.size(); ++k)
            for (const auto& f : facets[k]) owners[f.rays].emplace_back(k, f.inward_normal);
        for (const auto& [face, who] : owners) {
            if (who.size() == 1) {
                diag.failures.push_back("face " + join(face) + " of maximal cone " + std::to_string(who[0].first) +
                                        " is not shared with another maximal cone");
            } else if (who.size() > 2) {
                diag.failures.push_back("face " + join(face) + " is shared by " + std::to_string(who.size()) +
                                        " maximal cones");
            } else if (sgn(dot(who[0].second, who[1].second)) >= 0) {
                diag.failures.push_back("maximal cones " + std::to_string(who[0].first) + " and " +
                                        std::to_string(who[1].first) + " lie on the same side of face " +
                                        join(face));
            }
        }
    }

    if (!positively_spans(fan.rays(), n)) diag.failures.push_back("rays do not positively span the ambient space");

    if (diag.failures.empty()) {
        // Facet pairing makes the covering multiplicity locally constant;
        // it must be exactly one at a generic point.
        std::vector<LatticeVector> walls;
        for (const auto& fs : facets)
            for (const auto& f : fs) walls.push_back(f.inward_normal);
        LatticeVector p(n);
        for (long k = 1;; ++k) {
            Integer power = 1;
            for (std::size_t i = 0; i < n; ++i) {
                p[i] = power;
                power *= k;
            }
            bool generic = std::none_of(walls.begin(), walls.end(),
                                        [&](const LatticeVector& w) { return dot(w, p) == 0; });
            if (generic) break;
        }
        std::size_t covering = 0;
        for (const auto& fs : facets)
            if (std::all_of(fs.begin(), fs.end(), [&](const ConeFacet& f) { return dot(f.inward_normal, p) > 0; }))
                ++covering;
        if (covering != 1)
            diag.failures.push_back("maximal cones overlap: a generic point is covered " + std::to_string(covering) +
                                    " times");
    }

    diag.complete = diag.failures.empty();
    return diag;
}

ToricDivisor ToricDivisor::prime(std::size_t ray_count, std::size_t i) {
    if (i >= ray_count) throw std::out_of_range("ray index " + std::to_string(i) + " out of range");
    ToricDivisor d{std::vector<Rational>(ray_count)};
    d.coefficients[i] = 1;
    return d;
}

bool ToricDivisor::is_effective() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& c) { return c.sign() >= 0; });
}

bool ToricDivisor::is_integral() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& c) { return c.is_integer(); });
}

ToricDivisor operator+(const ToricDivisor& a, const ToricDivisor& b) {
    if (a.size() != b.size()) throw std::invalid_argument("divisor length mismatch");
    ToricDivisor s = a;
    for (std::size_t i = 0; i < s.size(); ++i) s.coefficients[i] += b.coefficients[i];
    return s;
}

ToricDivisor anticanonical_divisor(const Fan& fan) {
    return ToricDivisor{std::vector<Rational>(fan.ray_count(), Rational(1))};
}

std::optional<FanoData> fano_vertex_data(const Fan& fan) {
    const std::size_t n = fan.dim();
    FanoData data;
    for (std::size_t k = 0; k < fan.max_cones().size(); ++k) {
        const auto gens = fan.cone_rays(k);
        std::vector<LatticeVector> basis;
        for (const auto& g : gens) {
            basis.push_back(g);
            if (rank(basis, n) < basis.size()) basis.pop_back();
            if (basis.size() == n) break;
        }
        if (basis.size() < n) return std::nullopt;
        RationalVector rhs(n);
        for (auto& c : rhs) c = -1;
        auto u = solve_exact(Matrix::from_rows(basis, n), rhs);
        if (!u) return std::nullopt;
        for (const auto& g : gens)
            if (dot(*u, g) != Rational(-1)) return std::nullopt;
        data.cartier_vertices.push_back(std::move(*u));
    }
    data.ample = true;
    for (std::size_t k = 0; k < fan.max_cones().size() && data.ample; ++k) {
        const auto& in = fan.max_cones()[k].rays;
        for (std::size_t j = 0; j < fan.ray_count(); ++j) {
            if (std::binary_search(in.begin(), in.end(), j)) continue;
            if (dot(data.cartier_vertices[k], fan.ray(j)) <= Rational(-1)) {
                data.ample = false;
                break;
            }
        }
    }
    return data;
}

FanoData require_q_fano(const Fan& fan) {
    auto diag = validate_fan(fan);
    if (!diag.complete) throw NotQFanoError("fan is not complete (" + diag.failures.front() + ")");
    auto data = fano_vertex_data(fan);
    if (!data) throw NotQFanoError("-K_X is not Q-Cartier");
    if (!data->ample) throw NotQFanoError("-K_X is not ample");
    return *data;
}

std::optional<RationalVector> linear_equivalence(const Fan& fan, const ToricDivisor& d, const ToricDivisor& e) {
    if (d.size() != fan.ray_count() || e.size() != fan.ray_count())
        throw std::invalid_argument("divisor length does not match the ray count");
    RationalVector rhs(fan.ray_count());
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = d.coefficients[i] - e.coefficients[i];
    auto u = solve_consistent(Matrix::from_rows(fan.rays(), fan.dim()), rhs);
    if (!u) return std::nullopt;
    if (rank(fan.rays(), fan.dim()) < fan.dim())
        throw Error("linear_equivalence: rays do not span; the witness is not unique");
    return u;
}

std::optional<std::size_t> find_containing_cone(const Fan& fan, const LatticeVector& v) {
    for (std::size_t k = 0; k < fan.max_cones().size(); ++k) {
        auto facets = cone_facets(fan, k);
        if (facets.empty()) continue;
        if (std::all_of(facets.begin(), facets.end(),
                        [&](const ConeFacet& f) { return dot(f.inward_normal, v) >= 0; }))
            return k;
    }
    return std::nullopt;
}

}  // namespace toric
