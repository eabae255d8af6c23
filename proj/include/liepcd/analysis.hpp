#ifndef LIEPCD_ANALYSIS_HPP
#define LIEPCD_ANALYSIS_HPP

#include <optional>

#include "liepcd/uenv.hpp"

namespace liepcd {

/// True iff L is abelian and the p-map is bijective as a p-semilinear
/// endomorphism (equivalent to semisimplicity of u(L) over finite fields).
/// Within the guard the answer is cross-checked against nilradical(u(L)).
bool is_torus(const LiePAlgebra& L, uint64_t cross_guard = 64);

struct AlmostPeriodicReport {
  bool holds = false;
  int n_used = 0;
  // element label -> lambda with x^{[p]^n} = lambda x
  std::vector<std::pair<std::string, Fel>> lambda_table;
  std::optional<std::pair<Vec, Vec>> failure_witness;  // (x, its iterate)
  int n_max = 0;
  uint64_t seed = 0;
};

/// Least n <= n_max with p_power_iter(x, n) in span{x} for every basis
/// element and `samples` seeded random elements.
AlmostPeriodicReport almost_periodicity(const LiePAlgebra& L, int n_max = -1,
                                        uint64_t seed = 0, int samples = 100);

struct PhiResult {
  bool ok = false;
  Poly phi;                        // over the base field of L
  Field eval_field;                // GF(p^{k(n+1)}) used for interpolation
  std::optional<Fel> failure_t0;   // in eval_field, when not proportional
};

/// phi(t) with (x+ty)^{[p]^n} = phi(t)(x+ty), built by evaluating at
/// p^n + 1 scalars and interpolating; fails with a witness t0 when the
/// iterate is not proportional to x + ty identically.
PhiResult phi_polynomial(const LiePAlgebra& L, const Vec& x, const Vec& y, int n);

struct NilpotentSearchOptions {
  bool basis_scan = true;
  int n_override = -1;  // force the almost-periodicity exponent
  uint64_t seed = 0;
  int random_pairs = 25;
  std::optional<std::pair<Vec, Vec>> forced_pair;
};

struct NilpotentSearchResult {
  bool found = false;
  Vec element;             // over ext_field
  Field ext_field;
  int extension_degree = 1;
  int nilpotency_steps = 0;
  std::optional<Poly> phi;
  std::optional<std::pair<Vec, Vec>> pair;
  std::vector<std::string> attempts;  // what was tried, in order
  std::optional<AlmostPeriodicReport> periodicity;
  uint64_t seed = 0;
};

/// Searches for a nonzero p-nilpotent element: basis scan, then phi roots
/// over basis and seeded random pairs, extending the field as far as the
/// factor degrees require.  Absence is a valid result over a finite field.
NilpotentSearchResult find_p_nilpotent(const LiePAlgebra& L,
                                       const NilpotentSearchOptions& opts = {});

enum class SearchMode { Auto, Exhaustive, Randomized };

struct SubalgebraPairResult {
  bool found = false;
  Vec a, b;             // independent, [a,b] in span{a,b}
  bool exhaustive = false;  // an empty exhaustive scan is conclusive
  uint64_t tried = 0;
  uint64_t seed = 0;
};

SubalgebraPairResult find_2dim_subalgebra(const LiePAlgebra& L,
                                          SearchMode mode = SearchMode::Auto,
                                          uint64_t samples = 20000,
                                          uint64_t seed = 0);

struct DescentStep {
  int k;  // (ad x)^k y under inspection
  bool in_span_x = false;
  Fel lambda;        // valid when in_span_x and x != 0
  bool lambda_zero = false;
};

struct DependenceReport {
  int ad_nilpotency_index = 0;  // least m with (ad x)^m y = 0
  std::vector<DescentStep> steps;
  bool bracket_zero = false;  // [y,x] = 0
  bool dependent = false;     // rank{x,y} < 2
};

/// Replays the descent (ad x)^m y = 0 -> ... -> [y,x] = 0, recording at each
/// stage whether the iterate lies in span{x} and whether its coefficient
/// vanishes.  Requires (ad x)^m y = 0 for some m <= dim L.
DependenceReport ad_descent_witness(const LiePAlgebra& L, const Vec& x, const Vec& y);

enum class CdVerdict { Zero, InfiniteEvidence };

struct CdOptions {
  int degree_bound = 6;
  bool cross_ext = true;           // Ext cross-checks where guards allow
  uint64_t ext_guard_dim = 32;     // dim u(L) bound for the ambient cross
  uint64_t seed = 0;
  int random_candidates = 100;
};

struct CdStarClassification {
  CdVerdict verdict = CdVerdict::Zero;
  std::optional<Vec> witness_x;   // minimal p-polynomial has no t term
  std::optional<Poly> witness_f;  // f' = 0
  std::vector<int> holm_dims;           // HH^n(K[t]/(f)) for n = 0..D
  std::vector<int> witness_sub_ext_dims;  // Ext over u((x)_p), when computed
  std::vector<int> ext_dims_checked;      // ambient Ext, when within guard
  int degree_bound = 6;
  uint64_t seed = 0;
};

/// The zero-or-infinity dichotomy: tori classify Zero; otherwise a witness x
/// with a t-free minimal p-polynomial is produced, its periodic Hochschild
/// dimensions certify nonvanishing in every degree, and Ext cross-checks run
/// where the guards allow.  WitnessNotFound flags an engine bug.
CdStarClassification cd_star_classify(const LiePAlgebra& L, const CdOptions& opts = {});

struct SubConsistencyRow {
  std::string gens;
  int sub_dim = 0;
  bool sub_is_torus = false;
  CdVerdict sub_verdict = CdVerdict::Zero;
};

struct SubConsistencyReport {
  bool ambient_is_torus = false;
  std::optional<CdVerdict> ambient_verdict;
  std::vector<SubConsistencyRow> rows;
  bool consistent = false;
  uint64_t seed = 0;
};

/// Random p-subalgebra closures: inside a torus everything must be a torus;
/// any non-torus subalgebra forces InfiniteEvidence for the ambient algebra.
SubConsistencyReport subalgebra_cdstar_consistency(const LiePAlgebra& L,
                                                   int samples = 50,
                                                   uint64_t seed = 0);

/// Nonzero p-nilpotent parts inside (x)_p, via the semilinear kernel of the
/// iterated p-map on the closure.
std::vector<Vec> nilpotent_part_candidates(const LiePAlgebra& L, const Vec& x);

std::string element_label(const LiePAlgebra& L, const Vec& x);

}  // namespace liepcd

#endif
