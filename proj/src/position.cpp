#include "toric/position.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace toric {

namespace {

void require_distinct(const Fan& fan, std::vector<std::size_t> rays) {
    for (auto i : rays)
        if (i >= fan.ray_count()) throw std::out_of_range("ray index " + std::to_string(i) + " out of range");
    std::sort(rays.begin(), rays.end());
    if (std::adjacent_find(rays.begin(), rays.end()) != rays.end())
        throw std::invalid_argument("divisor components must be distinct for this check");
}

bool includes(const std::vector<std::size_t>& super, const std::vector<std::size_t>& sub) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace

std::vector<FanCone> all_cones(const Fan& fan) {
    std::map<std::vector<std::size_t>, std::size_t> found;
    for (std::size_t k = 0; k < fan.max_cones().size(); ++k) {
        const auto facets = cone_facets(fan, k);
        std::vector<std::vector<std::size_t>> faces{fan.max_cones()[k].rays};
        for (std::size_t f = 0; f < faces.size(); ++f) {
            for (const auto& facet : facets) {
                std::vector<std::size_t> meet;
                std::set_intersection(faces[f].begin(), faces[f].end(), facet.rays.begin(), facet.rays.end(),
                                      std::back_inserter(meet));
                if (meet.empty()) continue;
                if (std::find(faces.begin(), faces.end(), meet) == faces.end()) faces.push_back(std::move(meet));
            }
        }
        for (const auto& face : faces) {
            if (found.count(face)) continue;
            std::vector<LatticeVector> gens;
            for (auto i : face) gens.push_back(fan.ray(i));
            found.emplace(face, rank(gens, fan.dim()));
        }
    }
    std::vector<FanCone> out;
    for (const auto& [rays, dim] : found) out.push_back(FanCone{rays, dim});
    return out;
}

namespace {

ProperIntersection proper_scan(const Fan& fan, const std::vector<FanCone>& cones, std::vector<std::size_t> chosen) {
    std::sort(chosen.begin(), chosen.end());
    ProperIntersection result;
    for (const auto& c : cones) {
        std::vector<std::size_t> hit;
        std::set_intersection(c.rays.begin(), c.rays.end(), chosen.begin(), chosen.end(), std::back_inserter(hit));
        if (hit.size() > c.dim) {
            if (!result.witness || c.dim < result.witness->dim) result.witness = c;
            result.holds = false;
        }
    }
    bool simplicial = std::all_of(fan.max_cones().begin(), fan.max_cones().end(),
                                  [&](const Cone& c) { return c.rays.size() == fan.dim(); });
    if (simplicial && !result.holds)
        throw std::logic_error("internal error: distinct rays fail proper intersection on a simplicial fan");
    return result;
}

}  // namespace

ProperIntersection intersect_properly(const Fan& fan, const std::vector<std::size_t>& rays) {
    require_distinct(fan, rays);
    return proper_scan(fan, all_cones(fan), rays);
}

PositionReport general_position_report(const Fan& fan, const std::vector<std::size_t>& rays) {
    require_distinct(fan, rays);
    const std::size_t n = fan.dim();
    const auto cones = all_cones(fan);

    PositionReport report;
    report.rays = rays;
    auto proper = proper_scan(fan, cones, rays);
    report.intersect_properly = proper.holds;
    report.proper_intersection_witness = proper.witness;
    report.general_position_strict = true;
    report.general_position_lenient = true;

    std::vector<std::size_t> sorted = rays;
    std::sort(sorted.begin(), sorted.end());

    // Subsets are grown only from nonempty intersections: emptiness is
    // inherited by supersets.
    std::vector<std::vector<std::size_t>> frontier;
    for (auto i : sorted) frontier.push_back({i});
    while (!frontier.empty()) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& subset : frontier) {
            SubsetWitness w;
            w.subset = subset;
            std::size_t min_dim = n + 1;
            for (const auto& c : cones) {
                if (!includes(c.rays, subset)) continue;
                if (c.dim < min_dim) {
                    min_dim = c.dim;
                    w.minimal_cones.clear();
                }
                if (c.dim == min_dim) w.minimal_cones.push_back(c.rays);
            }
            const std::size_t size = subset.size();
            if (min_dim <= n) {
                w.dimension = n - min_dim;
                const bool exact = size <= n && *w.dimension == n - size;
                if (!exact) report.general_position_lenient = report.general_position_strict = false;
                auto pos = std::upper_bound(sorted.begin(), sorted.end(), subset.back());
                for (; pos != sorted.end(); ++pos) {
                    auto grown = subset;
                    grown.push_back(*pos);
                    next.push_back(std::move(grown));
                }
            } else if (size <= n) {
                report.general_position_strict = false;
            }
            report.witnesses.push_back(std::move(w));
        }
        frontier = std::move(next);
    }
    return report;
}

}  // namespace toric
