// JSON encodings of fans, reports and certificates. Rationals are always
// written as strings "p/q" (or "p"), never as JSON numbers.

#ifndef TORIC_JSON_IO_HPP
#define TORIC_JSON_IO_HPP

#include "toric/catalog.hpp"
#include "toric/kstability.hpp"
#include "toric/polytope.hpp"
#include "toric/position.hpp"

#include <json.hpp>

namespace toric {

using Json = nlohmann::ordered_json;

/// Schema errors in input documents.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// {"dim": n, "rays": [[int, ...], ...], "max_cones": [[int, ...], ...]}, 0-based indices.
Fan fan_from_json(const Json& j);
Json fan_to_json(const Fan& fan);

Json to_json(const Rational& r);
Json to_json(const RationalVector& v);
Json to_json(const LatticeVector& v);
Json polytope_to_json(const Polytope& p);
Json report_to_json(const KStabilityReport& report, const ToricFano& x);
Json position_to_json(const PositionReport& report);
Json certificate_to_json(const VojtaCertificate& cert);
Json catalog_entry_to_json(const CatalogEntry& entry);

}  // namespace toric

#endif  // TORIC_JSON_IO_HPP
