#ifndef LIEPCD_IO_HPP
#define LIEPCD_IO_HPP

#include <json.hpp>

#include "liepcd/analysis.hpp"
#include "liepcd/catalog.hpp"

namespace liepcd {

using nlohmann::json;

// Field elements serialize as integer arrays of length k (ascending degree);
// bare integers are accepted on input as prime-field shorthand.

json field_to_json(const Field& F);
Field field_from_json(const json& j);

json fel_to_json(const Field& F, const Fel& a);
Fel fel_from_json(const Field& F, const json& j);

json vec_to_json(const Field& F, const Vec& v);
Vec vec_from_json(const Field& F, const json& j, int expect_len);

/// {name, p, k, modulus, dim, basis, brackets: [{i, j, value}], pmap}
/// with 0-based indices, i < j, unlisted brackets zero.
json algebra_to_json(const LiePAlgebra& L);
LiePAlgebra algebra_from_json(const json& j, bool validate = true);

/// {algebra: <inline object or {catalog, p, k, d}>, dim, action}
json module_to_json(const RestrictedModule& M, const std::string& name = "");
RestrictedModule module_from_json(const json& j);
RestrictedModule module_from_json(const json& j, const LiePAlgebra& L);

json almost_periodic_to_json(const LiePAlgebra& L, const AlmostPeriodicReport& r);
json nilpotent_search_to_json(const LiePAlgebra& L, const NilpotentSearchResult& r);
json subalgebra_pair_to_json(const LiePAlgebra& L, const SubalgebraPairResult& r);
json cd_classification_to_json(const LiePAlgebra& L, const CdStarClassification& c);
json axiom_report_to_json(const AxiomReport& r);

}  // namespace liepcd

#endif
