#ifndef LIEPCD_CATALOG_HPP
#define LIEPCD_CATALOG_HPP

#include "liepcd/rep.hpp"

namespace liepcd {

struct CatalogEntry {
  std::string name;
  std::string params;       // accepted parameters
  std::string constraints;  // e.g. "p > 2"
  std::string description;
  bool supported = true;
};

std::vector<CatalogEntry> catalog_list();

struct CatalogResult {
  LiePAlgebra algebra;
  // distinguished modules shipped with the entry (beyond trivial/adjoint)
  std::vector<std::pair<std::string, RestrictedModule>> modules;
};

/// Pre-validated example algebras.  Supported names: abelian, nil, torus
/// (take d), nonabelian2, heisenberg, heisenberg-ztorus, sl2 (p > 2),
/// witt (p >= 5, dimension p).  k lifts the tables to GF(p^k).
CatalogResult catalog_get(const std::string& name, int64_t p, int k = 1, int d = 0);

/// A machine-checkable expectation about one catalog algebra; the suite
/// runner consumes these rows, so no expected value lives in test code.
struct ExpectedResult {
  std::string id;
  std::string claim;       // human-readable statement of the expectation
  std::string kind;        // ce_dims_trivial | ce_dim_kv | cd_verdict |
                           // ext_zero_through | nilradical_zero | witness_deg
  std::string provenance;  // known (literature) | derived (hand/oracle) | direct
  std::vector<int> expected_dims;
  std::string expected_verdict;
  int degree = 0;
};

std::vector<ExpectedResult> catalog_expected(const std::string& name, int64_t p,
                                             int d = 0);

}  // namespace liepcd

#endif
