#include "toric/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace toric {

Fan projective_space_fan(std::size_t n) {
    std::vector<LatticeVector> rays;
    for (std::size_t i = 0; i < n; ++i) {
        LatticeVector e(n);
        e[i] = 1;
        rays.push_back(e);
    }
    LatticeVector last(n);
    for (auto& c : last) c = -1;
    rays.push_back(last);
    std::vector<std::vector<std::size_t>> cones;
    for_each_subset(n + 1, n, [&](const std::vector<std::size_t>& s) { cones.push_back(s); });
    return Fan(n, std::move(rays), std::move(cones));
}

Fan product_fan(const Fan& a, const Fan& b) {
    const std::size_t n = a.dim() + b.dim();
    std::vector<LatticeVector> rays;
    for (const auto& r : a.rays()) {
        LatticeVector v(n);
        for (std::size_t i = 0; i < a.dim(); ++i) v[i] = r[i];
        rays.push_back(v);
    }
    for (const auto& r : b.rays()) {
        LatticeVector v(n);
        for (std::size_t i = 0; i < b.dim(); ++i) v[a.dim() + i] = r[i];
        rays.push_back(v);
    }
    std::vector<std::vector<std::size_t>> cones;
    for (const auto& ca : a.max_cones())
        for (const auto& cb : b.max_cones()) {
            std::vector<std::size_t> c = ca.rays;
            for (auto j : cb.rays) c.push_back(a.ray_count() + j);
            cones.push_back(c);
        }
    return Fan(n, std::move(rays), std::move(cones));
}

Fan star_subdivision(const Fan& fan, const std::vector<std::size_t>& face) {
    LatticeVector sum(fan.dim());
    for (auto i : face) sum += fan.ray(i);
    auto rays = fan.rays();
    rays.push_back(primitive_vector(sum));
    const std::size_t added = rays.size() - 1;

    std::vector<std::size_t> f = face;
    std::sort(f.begin(), f.end());
    std::vector<std::vector<std::size_t>> cones;
    for (const auto& c : fan.max_cones()) {
        if (!std::includes(c.rays.begin(), c.rays.end(), f.begin(), f.end())) {
            cones.push_back(c.rays);
            continue;
        }
        for (auto drop : f) {
            std::vector<std::size_t> split;
            for (auto i : c.rays)
                if (i != drop) split.push_back(i);
            split.push_back(added);
            cones.push_back(split);
        }
    }
    return Fan(fan.dim(), std::move(rays), std::move(cones));
}

namespace {

Fan polygon_fan(std::vector<LatticeVector> rays) {
    // Rays listed in cyclic order; maximal cones are consecutive pairs.
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t i = 0; i < rays.size(); ++i) cones.push_back({i, (i + 1) % rays.size()});
    return Fan(2, std::move(rays), std::move(cones));
}

Fan p1_fan() { return Fan(1, {LatticeVector{1}, LatticeVector{-1}}, {{0}, {1}}); }

Fan p1xp1_fan() { return product_fan(p1_fan(), p1_fan()); }

Fan f1_fan() {
    return Fan(2, {LatticeVector{1, 0}, LatticeVector{0, 1}, LatticeVector{-1, 1}, LatticeVector{0, -1}},
               {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

Fan dp7_fan() {
    // Blow up the torus-fixed points V(cone(e1, e2)) and V(cone(-e1-e2, e1)).
    Fan once = star_subdivision(projective_space_fan(2), {0, 1});
    return star_subdivision(once, {2, 0});
}

Fan dp6_fan() {
    return polygon_fan({LatticeVector{1, 0}, LatticeVector{1, 1}, LatticeVector{0, 1}, LatticeVector{-1, 0},
                        LatticeVector{-1, -1}, LatticeVector{0, -1}});
}

Fan p3_blowup_two_lines_fan() {
    // Lines V(cone(e1, e2)) and V(cone(e3, e4)) with e4 = -(e1 + e2 + e3) are disjoint.
    Fan once = star_subdivision(projective_space_fan(3), {0, 1});
    return star_subdivision(once, {2, 3});
}

struct Recipe {
    std::function<Fan()> build;
    std::optional<Verdict> expected;
    std::string provenance;
};

const std::map<std::string, Recipe>& recipes() {
    static const std::map<std::string, Recipe> table = {
        {"P2", {[] { return projective_space_fan(2); }, Verdict::KSemistable,
                "projective plane; K-semistable toric del Pezzo surface of degree 9"}},
        {"P1xP1", {p1xp1_fan, Verdict::KSemistable, "quadric surface; K-semistable toric del Pezzo surface of degree 8"}},
        {"F1", {f1_fan, Verdict::KUnstable, "Hirzebruch surface F1 (P2 blown up at one point); K-unstable"}},
        {"dP7", {dp7_fan, Verdict::KUnstable, "P2 blown up at two torus-fixed points; K-unstable"}},
        {"dP6", {dp6_fan, Verdict::KSemistable, "P2 blown up at three torus-fixed points; K-semistable"}},
        {"P3", {[] { return projective_space_fan(3); }, Verdict::KSemistable, "projective 3-space; K-semistable"}},
        {"P1xP2", {[] { return product_fan(p1_fan(), projective_space_fan(2)); }, Verdict::KSemistable,
                   "P1 x P2; K-semistable toric Fano threefold"}},
        {"P3_blowup_two_lines", {p3_blowup_two_lines_fan, Verdict::KSemistable,
                                 "P3 blown up along two disjoint torus-invariant lines; K-semistable"}},
        {"P1cubed", {[] { return product_fan(p1_fan(), p1xp1_fan()); }, Verdict::KSemistable,
                     "P1 x P1 x P1; K-semistable toric Fano threefold"}},
        {"P1xdP6", {[] { return product_fan(p1_fan(), dp6_fan()); }, Verdict::KSemistable,
                    "P1 x S with S the toric del Pezzo surface of degree 6; K-semistable"}},
    };
    return table;
}

}  // namespace

std::vector<std::string> catalog_list() {
    std::vector<std::string> names;
    for (const auto& [name, recipe] : recipes()) names.push_back(name);
    return names;
}

CatalogEntry catalog_get(const std::string& name) {
    auto it = recipes().find(name);
    if (it == recipes().end()) {
        std::string known;
        for (const auto& n : catalog_list()) known += (known.empty() ? "" : ", ") + n;
        throw Error("unknown catalog entry '" + name + "'; available: " + known);
    }
    return CatalogEntry{name, it->second.build(), it->second.expected, it->second.provenance};
}

}  // namespace toric
