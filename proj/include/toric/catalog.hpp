// Built-in fans of smooth toric Fano surfaces and threefolds.

#ifndef TORIC_CATALOG_HPP
#define TORIC_CATALOG_HPP

#include "toric/fan.hpp"
#include "toric/kstability.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

struct CatalogEntry {
    std::string name;
    Fan fan;
    std::optional<Verdict> expected_verdict;
    std::string provenance;
};

/// Sorted, duplicate-free.
std::vector<std::string> catalog_list();

/// Throws Error listing the available names for an unknown name.
CatalogEntry catalog_get(const std::string& name);

/// Fan of the product variety; rays of `a` first, then of `b`.
Fan product_fan(const Fan& a, const Fan& b);

/// Star subdivision along the cone spanned by `face`: adds the primitive
/// sum of its rays as a new last ray and splits every simplicial maximal
/// cone containing the face.
Fan star_subdivision(const Fan& fan, const std::vector<std::size_t>& face);

/// Fan of P^n: rays e_1..e_n and -(e_1 + ... + e_n).
Fan projective_space_fan(std::size_t n);

}  // namespace toric

#endif  // TORIC_CATALOG_HPP
