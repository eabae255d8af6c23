#ifndef LIEPCD_SUITE_HPP
#define LIEPCD_SUITE_HPP

#include "liepcd/io.hpp"

namespace liepcd {

struct SuiteRow {
  std::string id;
  std::string claim;
  std::string provenance;  // known | derived | direct
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct SuiteCriterion {
  std::string id;
  std::string title;
  std::vector<SuiteRow> rows;
  double ms = 0.0;
  bool pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
};

struct SuiteReport {
  uint64_t seed = 0;
  std::vector<SuiteCriterion> criteria;
  bool pass() const {
    for (const auto& c : criteria)
      if (!c.pass()) return false;
    return true;
  }
  /// Deterministic given inputs and seed: timings are text-only.
  json to_json() const;
  std::string to_text(bool with_timings = true) const;
};

SuiteReport run_suite(uint64_t seed = 0);

}  // namespace liepcd

#endif
