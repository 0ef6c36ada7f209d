#include "toric/json_io.hpp"

namespace toric {

namespace {

Integer integer_from_json(const Json& v, const std::string& where) {
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return Integer(v.get<unsigned long>());
        return Integer(v.get<long>());
    }
    throw SchemaError(where + " must be an integer");
}

std::size_t index_from_json(const Json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<long long>() < 0) throw SchemaError(where + " must be a nonnegative integer");
    return v.get<std::size_t>();
}

Json indices(const std::vector<std::size_t>& v) {
    Json a = Json::array();
    for (auto i : v) a.push_back(i);
    return a;
}

}  // namespace

Fan fan_from_json(const Json& j) {
    if (!j.is_object()) throw SchemaError("fan document must be a JSON object");
    for (const char* key : {"dim", "rays", "max_cones"})
        if (!j.contains(key)) throw SchemaError(std::string("fan document is missing \"") + key + "\"");
    const std::size_t dim = index_from_json(j["dim"], "\"dim\"");
    if (!j["rays"].is_array()) throw SchemaError("\"rays\" must be an array");
    if (!j["max_cones"].is_array()) throw SchemaError("\"max_cones\" must be an array");

    std::vector<LatticeVector> rays;
    for (std::size_t r = 0; r < j["rays"].size(); ++r) {
        const auto& row = j["rays"][r];
        const std::string where = "ray " + std::to_string(r);
        if (!row.is_array()) throw SchemaError(where + " must be an array of integers");
        LatticeVector v(row.size());
        for (std::size_t c = 0; c < row.size(); ++c) v[c] = integer_from_json(row[c], where + " coordinate");
        rays.push_back(std::move(v));
    }
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t k = 0; k < j["max_cones"].size(); ++k) {
        const auto& row = j["max_cones"][k];
        const std::string where = "maximal cone " + std::to_string(k);
        if (!row.is_array()) throw SchemaError(where + " must be an array of ray indices");
        std::vector<std::size_t> cone;
        for (const auto& i : row) cone.push_back(index_from_json(i, where + " entry"));
        cones.push_back(std::move(cone));
    }
    return Fan(dim, std::move(rays), std::move(cones));
}

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const RationalVector& v) {
    Json a = Json::array();
    for (const auto& c : v) a.push_back(c.str());
    return a;
}

Json to_json(const LatticeVector& v) {
    Json a = Json::array();
    for (const auto& c : v) {
        if (c.fits_slong_p())
            a.push_back(c.get_si());
        else
            a.push_back(c.get_str());
    }
    return a;
}

Json fan_to_json(const Fan& fan) {
    Json j;
    j["dim"] = fan.dim();
    j["rays"] = Json::array();
    for (const auto& r : fan.rays()) j["rays"].push_back(to_json(r));
    j["max_cones"] = Json::array();
    for (const auto& c : fan.max_cones()) j["max_cones"].push_back(indices(c.rays));
    return j;
}

Json polytope_to_json(const Polytope& p) {
    Json j;
    j["facets"] = Json::array();
    for (const auto& h : p.facets()) j["facets"].push_back({{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}});
    j["vertices"] = Json::array();
    for (const auto& v : p.vertices()) j["vertices"].push_back(to_json(v));
    return j;
}

Json report_to_json(const KStabilityReport& r, const ToricFano& x) {
    Json j;
    j["dim"] = x.fan().dim();
    j["rays"] = Json::array();
    for (const auto& ray : x.fan().rays()) j["rays"].push_back(to_json(ray));
    j["smooth"] = r.smooth;
    j["simplicial"] = r.simplicial;
    j["barycenter"] = to_json(r.barycenter);
    j["betas"] = Json::array();
    for (const auto& b : r.betas) j["betas"].push_back(b.str());
    j["delta"] = r.delta.str();
    j["verdict"] = std::string(to_string(r.verdict));
    j["minimizing_rays"] = indices(r.minimizing_rays);
    j["eligible_rays"] = indices(r.eligible_rays);
    j["anticanonical_volume"] = r.anticanonical_volume.str();
    j["anticanonical_polytope"] = polytope_to_json(x.polytope());
    return j;
}

Json position_to_json(const PositionReport& r) {
    Json j;
    j["rays"] = indices(r.rays);
    j["intersect_properly"] = r.intersect_properly;
    j["general_position_strict"] = r.general_position_strict;
    j["general_position_lenient"] = r.general_position_lenient;
    if (r.proper_intersection_witness)
        j["proper_intersection_witness"] = {{"cone", indices(r.proper_intersection_witness->rays)},
                                            {"dim", r.proper_intersection_witness->dim}};
    else
        j["proper_intersection_witness"] = nullptr;
    j["witnesses"] = Json::array();
    for (const auto& w : r.witnesses) {
        Json e;
        e["subset"] = indices(w.subset);
        e["minimal_cones"] = Json::array();
        for (const auto& c : w.minimal_cones) e["minimal_cones"].push_back(indices(c));
        if (w.dimension)
            e["dimension"] = *w.dimension;
        else
            e["dimension"] = "EMPTY";
        j["witnesses"].push_back(std::move(e));
    }
    return j;
}

Json certificate_to_json(const VojtaCertificate& cert) {
    Json j;
    j["route"] = std::string(to_string(cert.route));
    j["valid"] = cert.valid();
    if (auto f = cert.first_failure())
        j["first_failed_check"] = *f;
    else
        j["first_failed_check"] = nullptr;
    j["chosen_rays"] = indices(cert.chosen_rays);
    if (cert.reference_ray)
        j["reference_ray"] = *cert.reference_ray;
    else
        j["reference_ray"] = nullptr;
    j["component_betas"] = Json::array();
    for (const auto& b : cert.component_betas) j["component_betas"].push_back(b.str());
    j["sum_divisor_beta"] = cert.sum_divisor_beta.str();
    j["general_position_reading"] = cert.general_position_reading;
    j["smooth"] = cert.smooth;
    j["position"] = nullptr;
    for (const auto& c : cert.checks)
        if (c.position) j["position"] = position_to_json(*c.position);
    j["checks"] = Json::array();
    for (const auto& c : cert.checks) {
        Json e;
        e["id"] = c.id;
        e["name"] = c.name;
        e["passed"] = c.passed;
        e["gating"] = c.gating;
        e["witness"] = c.witness;
        if (!c.values.empty()) {
            e["values"] = Json::array();
            for (const auto& v : c.values) e["values"].push_back(v.str());
        }
        if (!c.equivalences.empty()) {
            e["equivalences"] = Json::array();
            for (const auto& w : c.equivalences) {
                Json q;
                q["ray"] = w.ray;
                if (w.u)
                    q["u"] = to_json(*w.u);
                else
                    q["u"] = nullptr;
                q["integral"] = w.integral;
                e["equivalences"].push_back(std::move(q));
            }
        }
        if (c.position) e["position"] = position_to_json(*c.position);
        j["checks"].push_back(std::move(e));
    }
    j["unchecked_assumptions"] = cert.unchecked_assumptions;
    return j;
}

Json catalog_entry_to_json(const CatalogEntry& entry) {
    Json j;
    j["name"] = entry.name;
    if (entry.expected_verdict)
        j["expected_verdict"] = std::string(to_string(*entry.expected_verdict));
    else
        j["expected_verdict"] = nullptr;
    j["provenance"] = entry.provenance;
    j["fan"] = fan_to_json(entry.fan);
    return j;
}

}  // namespace toric
