#include "liepcd/analysis.hpp"

#include <random>
#include <sstream>

namespace liepcd {

namespace {

Vec random_element(const LiePAlgebra& L, std::mt19937_64& rng) {
  const Field& F = L.field();
  Vec v = vec_zero(F, L.dim());
  for (auto& c : v) c = F.element(rng() % F.size());
  return v;
}

Vec random_nonzero_element(const LiePAlgebra& L, std::mt19937_64& rng) {
  for (;;) {
    Vec v = random_element(L, rng);
    if (!vec_is_zero(L.field(), v)) return v;
  }
}

/// lambda with v = lambda * x, when it exists and x != 0.
std::optional<Fel> proportionality(const Field& F, const Vec& x, const Vec& v) {
  int lead = -1;
  for (size_t i = 0; i < x.size(); ++i)
    if (!F.is_zero(x[i])) {
      lead = static_cast<int>(i);
      break;
    }
  if (lead < 0) return std::nullopt;
  Fel lam = F.div(v[static_cast<size_t>(lead)], x[static_cast<size_t>(lead)]);
  if (vec_sub(F, v, vec_scale(F, lam, x)) != vec_zero(F, static_cast<int>(x.size())))
    return std::nullopt;
  return lam;
}

bool independent_pair(const Field& F, const Vec& x, const Vec& y) {
  RowSpan span(F, static_cast<int>(x.size()));
  span.add(x);
  return span.add(y);
}

}  // namespace

std::string element_label(const LiePAlgebra& L, const Vec& x) {
  const Field& F = L.field();
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < L.dim(); ++i) {
    const Fel& c = x[static_cast<size_t>(i)];
    if (F.is_zero(c)) continue;
    if (any) os << " + ";
    any = true;
    if (!F.is_one(c)) os << F.to_string(c) << "*";
    os << L.basis_names()[static_cast<size_t>(i)];
  }
  return any ? os.str() : "0";
}

bool is_torus(const LiePAlgebra& L, uint64_t cross_guard) {
  bool primary = L.is_abelian() && rank_of(L.pmap_matrix()) == L.dim();
  uint64_t du = 1;
  bool within = true;
  for (int i = 0; i < L.dim() && within; ++i) {
    du *= static_cast<uint64_t>(L.field().p());
    if (du > cross_guard) within = false;
  }
  if (within && L.is_abelian()) {
    bool rad_zero = nilradical(AssocAlgebra::uenv(L, cross_guard)).empty();
    if (rad_zero != primary)
      throw Error("InternalError", "torus test disagrees with nilradical(u(L))");
  }
  return primary;
}

AlmostPeriodicReport almost_periodicity(const LiePAlgebra& L, int n_max,
                                        uint64_t seed, int samples) {
  const Field& F = L.field();
  AlmostPeriodicReport rep;
  rep.seed = seed;
  if (n_max <= 0) n_max = L.dim() + 2;
  rep.n_max = n_max;
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::string, Vec>> probes;
  for (int i = 0; i < L.dim(); ++i)
    probes.push_back({L.basis_names()[static_cast<size_t>(i)], basis_vec(F, L.dim(), i)});
  for (int s = 0; s < samples; ++s) {
    Vec v = random_nonzero_element(L, rng);
    probes.push_back({element_label(L, v), v});
  }
  for (int n = 1; n <= n_max; ++n) {
    bool all = true;
    std::vector<std::pair<std::string, Fel>> lambdas;
    std::optional<std::pair<Vec, Vec>> witness;
    for (const auto& [label, x] : probes) {
      Vec it = p_power_iter(L, x, n);
      auto lam = proportionality(F, x, it);
      if (!lam.has_value()) {
        all = false;
        witness = {x, it};
        break;
      }
      lambdas.push_back({label, *lam});
    }
    if (all) {
      rep.holds = true;
      rep.n_used = n;
      rep.lambda_table = std::move(lambdas);
      return rep;
    }
    rep.failure_witness = witness;
  }
  rep.holds = false;
  return rep;
}

PhiResult phi_polynomial(const LiePAlgebra& L, const Vec& x, const Vec& y, int n) {
  const Field& F = L.field();
  if (n < 1) throw InvalidParams("exponent must be >= 1");
  if (!independent_pair(F, x, y)) throw DependentPair("phi needs an independent pair");
  const int d = L.dim();
  Field E = Field::make(F.p(), F.k() * (n + 1));
  Embedding emb(F, E);
  LiePAlgebra LE = L.base_change(E);
  auto map_vec = [&](const Vec& v) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = emb.map(v[i]);
    return out;
  };
  Vec xE = map_vec(x), yE = map_vec(y);

  uint64_t npoints = 1;
  for (int i = 0; i < n; ++i) npoints *= static_cast<uint64_t>(F.p());
  npoints += 1;  // degree <= p^n

  // evaluate and interpolate coordinatewise
  std::vector<Fel> ts;
  std::vector<Vec> values;
  for (uint64_t j = 0; j < npoints; ++j) {
    Fel t = E.element(j);
    Vec pt = vec_add(E, xE, vec_scale(E, t, yE));
    ts.push_back(t);
    values.push_back(p_power_iter(LE, pt, n));
  }
  std::vector<Poly> g(static_cast<size_t>(d));
  for (int c = 0; c < d; ++c) {
    std::vector<std::pair<Fel, Fel>> pts;
    for (uint64_t j = 0; j < npoints; ++j)
      pts.push_back({ts[static_cast<size_t>(j)], values[static_cast<size_t>(j)][static_cast<size_t>(c)]});
    g[static_cast<size_t>(c)] = interpolate(E, pts);
  }

  // complete (x, y) to a basis over the base field, then read coordinates
  RowSpan span(F, d);
  span.add(x);
  span.add(y);
  std::vector<Vec> columns = {xE, yE};
  for (int i = 0; i < d && static_cast<int>(columns.size()) < d; ++i)
    if (span.add(basis_vec(F, d, i))) columns.push_back(basis_vec(E, d, i));
  Matrix B(E, d, d);
  for (int j = 0; j < d; ++j)
    for (int r = 0; r < d; ++r) B.set(r, j, columns[static_cast<size_t>(j)][static_cast<size_t>(r)]);

  int max_deg = -1;
  for (const auto& gc : g) max_deg = std::max(max_deg, gc.deg());
  std::vector<Fel> phi_coeffs;
  for (int c = 0; c <= max_deg; ++c) {
    Vec coeff_vec = vec_zero(E, d);
    for (int r = 0; r < d; ++r)
      if (g[static_cast<size_t>(r)].deg() >= c) coeff_vec[static_cast<size_t>(r)] = g[static_cast<size_t>(r)].c[static_cast<size_t>(c)];
    auto w = solve(B, coeff_vec);
    if (!w.has_value()) throw Error("InternalError", "completed basis is singular");
    phi_coeffs.push_back((*w)[0]);
  }
  Poly phiE = poly_make(E, std::move(phi_coeffs));

  // residual (x+ty)^{[p]^n} - phi(t)(x+ty) must vanish identically
  Poly tpoly = poly_x(E);
  bool proportional = true;
  std::vector<Poly> residual(static_cast<size_t>(d));
  for (int c = 0; c < d; ++c) {
    Poly rhs = poly_add(E, poly_scale(E, xE[static_cast<size_t>(c)], phiE),
                        poly_scale(E, yE[static_cast<size_t>(c)], poly_mul(E, phiE, tpoly)));
    residual[static_cast<size_t>(c)] = poly_sub(E, g[static_cast<size_t>(c)], rhs);
    if (!residual[static_cast<size_t>(c)].is_zero()) proportional = false;
  }
  PhiResult out;
  out.eval_field = E;
  if (!proportional) {
    for (uint64_t idx = 0; idx < E.size(); ++idx) {
      Fel t0 = E.element(idx);
      for (int c = 0; c < d; ++c)
        if (!E.is_zero(poly_eval(E, residual[static_cast<size_t>(c)], t0))) {
          out.failure_t0 = t0;
          return out;
        }
    }
    throw Error("InternalError", "nonzero residual with no witness point");
  }
  // phi has base-field coefficients
  std::vector<Fel> base_coeffs;
  for (const auto& cE : phiE.c) {
    auto pre = emb.preimage(cE);
    if (!pre.has_value())
      throw Error("InternalError", "phi coefficient escapes the base field");
    base_coeffs.push_back(*pre);
  }
  out.ok = true;
  out.phi = poly_make(F, std::move(base_coeffs));
  return out;
}

namespace {

/// Steps to reach zero under the p-map, up to dim L; -1 if it never dies.
int nilpotency_steps(const LiePAlgebra& L, const Vec& x) {
  const Field& F = L.field();
  if (vec_is_zero(F, x)) return 0;
  Vec w = x;
  for (int s = 1; s <= L.dim(); ++s) {
    w = p_power(L, w);
    if (vec_is_zero(F, w)) return s;
  }
  return -1;
}

}  // namespace

NilpotentSearchResult find_p_nilpotent(const LiePAlgebra& L,
                                       const NilpotentSearchOptions& opts) {
  const Field& F = L.field();
  NilpotentSearchResult res;
  res.seed = opts.seed;
  res.ext_field = F;
  if (L.dim() < 1) throw InvalidParams("empty algebra");

  if (opts.basis_scan) {
    for (int i = 0; i < L.dim(); ++i) {
      Vec e = basis_vec(F, L.dim(), i);
      int s = nilpotency_steps(L, e);
      if (s > 0) {
        res.found = true;
        res.element = e;
        res.nilpotency_steps = s;
        res.attempts.push_back("basis " + L.basis_names()[static_cast<size_t>(i)] +
                               ": p-nilpotent in " + std::to_string(s) + " steps");
        return res;
      }
    }
    res.attempts.push_back("basis scan: no p-nilpotent basis element");
  }

  int n = opts.n_override;
  if (n < 1) {
    AlmostPeriodicReport ap = almost_periodicity(L, -1, opts.seed);
    res.periodicity = ap;
    if (!ap.holds) {
      res.attempts.push_back("not almost periodic up to n = " + std::to_string(ap.n_max) +
                             "; phi search skipped");
      return res;
    }
    n = ap.n_used;
  }

  std::vector<std::pair<Vec, Vec>> pairs;
  if (opts.forced_pair.has_value()) {
    pairs.push_back(*opts.forced_pair);
  } else {
    for (int i = 0; i < L.dim(); ++i)
      for (int j = i + 1; j < L.dim(); ++j)
        pairs.push_back({basis_vec(F, L.dim(), i), basis_vec(F, L.dim(), j)});
    std::mt19937_64 rng(opts.seed);
    for (int t = 0; t < opts.random_pairs; ++t) {
      Vec x = random_nonzero_element(L, rng), y = random_nonzero_element(L, rng);
      if (independent_pair(F, x, y)) pairs.push_back({x, y});
    }
  }

  int max_ext_total = 12 / F.k();
  for (const auto& [x, y] : pairs) {
    std::string pair_label = "(" + element_label(L, x) + "; " + element_label(L, y) + ")";
    if (!independent_pair(F, x, y)) {
      res.attempts.push_back(pair_label + ": dependent, skipped");
      continue;
    }
    PhiResult phi = phi_polynomial(L, x, y, n);
    if (!phi.ok) {
      res.attempts.push_back(pair_label + ": iterate not proportional at t0 = " +
                             phi.eval_field.to_string(*phi.failure_t0));
      continue;
    }
    if (phi.phi.is_zero()) {
      int s = nilpotency_steps(L, x);
      if (s > 0) {
        res.found = true;
        res.element = x;
        res.nilpotency_steps = s;
        res.phi = phi.phi;
        res.pair = {x, y};
        res.attempts.push_back(pair_label + ": phi = 0, x itself is p-nilpotent");
        return res;
      }
      continue;
    }
    if (phi.phi.deg() == 0) {
      res.attempts.push_back(pair_label + ": phi is the nonzero constant " +
                             F.to_string(phi.phi.c[0]));
      continue;
    }
    // nonconstant phi: pick the smallest-degree irreducible factor
    auto factors = poly_factorize(F, phi.phi, opts.seed);
    bool handled = false;
    for (const auto& [fac, mult] : factors) {
      (void)mult;
      if (fac.deg() > max_ext_total) {
        res.attempts.push_back(pair_label + ": factor of degree " +
                               std::to_string(fac.deg()) + " beyond the extension guard");
        continue;
      }
      auto roots = poly_roots_in_extension(F, fac, fac.deg(), opts.seed);
      if (roots.empty()) continue;
      const auto& root = roots.front();
      Field E = root.ext;
      LiePAlgebra LE = (E == F) ? L : L.base_change(E);
      Embedding emb(F, E);
      Vec xE(x.size()), yE(y.size());
      for (size_t i = 0; i < x.size(); ++i) xE[i] = emb.map(x[i]);
      for (size_t i = 0; i < y.size(); ++i) yE[i] = emb.map(y[i]);
      Vec z = vec_add(E, xE, vec_scale(E, root.root, yE));
      int s = nilpotency_steps(LE, z);
      if (s > 0) {
        res.found = true;
        res.element = z;
        res.ext_field = E;
        res.extension_degree = root.ext_degree;
        res.nilpotency_steps = s;
        res.phi = phi.phi;
        res.pair = {x, y};
        res.attempts.push_back(pair_label + ": root of phi in extension of degree " +
                               std::to_string(root.ext_degree));
        return res;
      }
      res.attempts.push_back(pair_label + ": root found but element not p-nilpotent");
      handled = true;
      break;
    }
    if (!handled && !res.found)
      res.attempts.push_back(pair_label + ": phi = " + poly_to_string(F, phi.phi) +
                             ", no usable root");
  }
  return res;
}

SubalgebraPairResult find_2dim_subalgebra(const LiePAlgebra& L, SearchMode mode,
                                          uint64_t samples, uint64_t seed) {
  const Field& F = L.field();
  const int d = L.dim();
  SubalgebraPairResult res;
  res.seed = seed;
  if (d < 2) {
    res.exhaustive = true;
    return res;
  }
  auto closes = [&](const Vec& a, const Vec& b) {
    RowSpan span(F, d);
    span.add(a);
    if (!span.add(b)) return false;  // dependent
    return span.contains(bracket(L, a, b));
  };
  uint64_t qd = 1;
  bool fits = true;
  for (int i = 0; i < 2 * d; ++i) {
    qd *= F.size();
    if (qd > 10000000ULL) {
      fits = false;
      break;
    }
  }
  bool exhaustive = (mode == SearchMode::Exhaustive) || (mode == SearchMode::Auto && fits);
  if (mode == SearchMode::Exhaustive && !fits)
    throw DimensionGuard("exhaustive subalgebra scan beyond q^{2d} <= 10^7");
  if (exhaustive) {
    res.exhaustive = true;
    // projective representatives: first nonzero coordinate normalized to 1
    std::vector<Vec> reps;
    uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= F.size();
    for (uint64_t idx = 1; idx < total; ++idx) {
      Vec v = vec_zero(F, d);
      uint64_t t = idx;
      for (int i = d - 1; i >= 0; --i) {
        v[static_cast<size_t>(i)] = F.element(t % F.size());
        t /= F.size();
      }
      int lead = -1;
      for (int i = 0; i < d; ++i)
        if (!F.is_zero(v[static_cast<size_t>(i)])) {
          lead = i;
          break;
        }
      if (lead >= 0 && F.is_one(v[static_cast<size_t>(lead)])) reps.push_back(std::move(v));
    }
    for (size_t a = 0; a < reps.size(); ++a)
      for (size_t b = a + 1; b < reps.size(); ++b) {
        ++res.tried;
        if (closes(reps[a], reps[b])) {
          res.found = true;
          res.a = reps[a];
          res.b = reps[b];
          return res;
        }
      }
    return res;  // conclusive: none exists
  }
  std::mt19937_64 rng(seed);
  for (uint64_t t = 0; t < samples; ++t) {
    Vec a = random_nonzero_element(L, rng), b = random_nonzero_element(L, rng);
    ++res.tried;
    if (independent_pair(F, a, b) && closes(a, b)) {
      res.found = true;
      res.a = a;
      res.b = b;
      return res;
    }
  }
  return res;  // not found, inconclusive
}

DependenceReport ad_descent_witness(const LiePAlgebra& L, const Vec& x, const Vec& y) {
  const Field& F = L.field();
  DependenceReport rep;
  // least m <= dim L with (ad x)^m y = 0
  int m = -1;
  {
    Vec w = y;
    for (int k = 0; k <= L.dim(); ++k) {
      if (vec_is_zero(F, w)) {
        m = k;
        break;
      }
      w = bracket(L, x, w);
    }
  }
  if (m < 0) throw NotAdNilpotent("(ad x)^m y != 0 for all m <= dim L");
  rep.ad_nilpotency_index = m;
  for (int k = m - 1; k >= 1; --k) {
    Vec w = y;
    for (int i = 0; i < k; ++i) w = bracket(L, x, w);
    DescentStep step;
    step.k = k;
    auto lam = proportionality(F, x, w);
    step.in_span_x = lam.has_value();
    if (lam.has_value()) {
      step.lambda = *lam;
      step.lambda_zero = F.is_zero(*lam);
    }
    rep.steps.push_back(std::move(step));
  }
  rep.bracket_zero = vec_is_zero(F, bracket(L, y, x));
  rep.dependent = !independent_pair(F, x, y);
  return rep;
}

std::vector<Vec> nilpotent_part_candidates(const LiePAlgebra& L, const Vec& x) {
  const Field& F = L.field();
  if (vec_is_zero(F, x)) return {};
  std::vector<Vec> basis = subalgebra_closure(L, {x}, true);
  int m = static_cast<int>(basis.size());
  RowSpan span(F, L.dim());
  for (const auto& b : basis) span.add(b);
  // the p-map restricted to (x)_p in its reduced basis
  Matrix S(F, m, m);
  for (int j = 0; j < m; ++j) {
    auto coords = span.coordinates(p_power(L, basis[static_cast<size_t>(j)]));
    if (!coords.has_value())
      throw Error("InternalError", "closure not closed under the p-map");
    for (int i = 0; i < m; ++i) S.set(i, j, (*coords)[static_cast<size_t>(i)]);
  }
  Matrix T = S;
  for (int step = 1; step < m; ++step) {
    Matrix Sf(F, m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) Sf.set(i, j, F.frobenius(S.get(i, j), step));
    T = T.mul(Sf);
  }
  std::vector<Vec> out;
  for (const Vec& w : semilinear_kernel(T, m)) {
    Vec lifted = vec_zero(F, L.dim());
    for (int i = 0; i < m; ++i)
      lifted = vec_add(F, lifted, vec_scale(F, w[static_cast<size_t>(i)], basis[static_cast<size_t>(i)]));
    if (!vec_is_zero(F, lifted)) out.push_back(std::move(lifted));
  }
  return out;
}

CdStarClassification cd_star_classify(const LiePAlgebra& L, const CdOptions& opts) {
  const Field& F = L.field();
  const int D = opts.degree_bound;
  if (D < 1) throw InvalidParams("degree bound must be >= 1");
  CdStarClassification out;
  out.degree_bound = D;
  out.seed = opts.seed;

  uint64_t du = 1;
  bool ambient_within_guard = true;
  for (int i = 0; i < L.dim(); ++i) {
    du *= static_cast<uint64_t>(F.p());
    if (du > opts.ext_guard_dim) {
      ambient_within_guard = false;
      break;
    }
  }

  if (is_torus(L)) {
    out.verdict = CdVerdict::Zero;
    if (opts.cross_ext && ambient_within_guard) {
      out.ext_dims_checked = ext_dims(L, trivial_module(L), D, opts.ext_guard_dim);
      for (int n = 1; n <= D; ++n)
        if (out.ext_dims_checked[static_cast<size_t>(n)] != 0)
          throw Error("InternalError", "torus with nonvanishing restricted cohomology");
    }
    return out;
  }

  // witness candidates: basis elements, their p-nilpotent parts, the global
  // nilpotent kernel for abelian algebras, then seeded random elements
  std::vector<Vec> candidates;
  for (int i = 0; i < L.dim(); ++i) candidates.push_back(basis_vec(F, L.dim(), i));
  for (int i = 0; i < L.dim(); ++i)
    for (auto& v : nilpotent_part_candidates(L, basis_vec(F, L.dim(), i)))
      candidates.push_back(std::move(v));
  if (L.is_abelian()) {
    // kernel of the iterated p-map on all of L
    Matrix S = L.pmap_matrix();
    Matrix T = S;
    for (int step = 1; step < L.dim(); ++step) {
      Matrix Sf(F, L.dim(), L.dim());
      for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < L.dim(); ++j) Sf.set(i, j, F.frobenius(S.get(i, j), step));
      T = T.mul(Sf);
    }
    for (auto& v : semilinear_kernel(T, L.dim()))
      if (!vec_is_zero(F, v)) candidates.push_back(std::move(v));
  }
  std::mt19937_64 rng(opts.seed);
  for (int t = 0; t < opts.random_candidates; ++t) {
    Vec v = random_nonzero_element(L, rng);
    candidates.push_back(v);
    for (auto& w : nilpotent_part_candidates(L, v)) candidates.push_back(std::move(w));
  }

  for (const Vec& x : candidates) {
    if (vec_is_zero(F, x)) continue;
    Poly f = minimal_p_polynomial(L, x);
    if (!F.is_zero(f.c[1])) continue;  // t coefficient must vanish
    out.verdict = CdVerdict::InfiniteEvidence;
    out.witness_x = x;
    out.witness_f = f;
    if (!poly_derivative(F, f).is_zero())
      throw Error("InternalError", "t-free p-polynomial with nonzero derivative");
    for (int n = 0; n <= D; ++n) {
      int hh = holm_periodic_hochschild(F, f, n);
      out.holm_dims.push_back(hh);
      if (n >= 1 && hh <= 0)
        throw Error("InternalError", "periodic complex vanished for a p-nilpotent witness");
    }
    if (opts.cross_ext) {
      // Ext over u((x)_p) = K[t]/(f) is nonzero in every degree
      std::vector<Vec> sub_basis = subalgebra_closure(L, {x}, true);
      uint64_t dsub = 1;
      for (size_t i = 0; i < sub_basis.size(); ++i) dsub *= static_cast<uint64_t>(F.p());
      if (static_cast<int>(dsub) != f.deg())
        throw Error("InternalError", "dim u((x)_p) differs from deg f");
      if (dsub <= opts.ext_guard_dim) {
        LiePAlgebra S = subalgebra_as_algebra(L, sub_basis, "(x)_p");
        out.witness_sub_ext_dims = ext_dims(S, trivial_module(S), D, opts.ext_guard_dim);
        for (int n = 1; n <= D; ++n)
          if (out.witness_sub_ext_dims[static_cast<size_t>(n)] <= 0)
            throw Error("InternalError", "Ext over u((x)_p) vanished");
      }
      if (ambient_within_guard)
        out.ext_dims_checked = ext_dims(L, trivial_module(L), D, opts.ext_guard_dim);
    }
    return out;
  }
  throw WitnessNotFound("non-torus with no t-free minimal p-polynomial found");
}

SubConsistencyReport subalgebra_cdstar_consistency(const LiePAlgebra& L, int samples,
                                                   uint64_t seed) {
  SubConsistencyReport rep;
  rep.seed = seed;
  rep.ambient_is_torus = is_torus(L);
  std::mt19937_64 rng(seed);
  CdOptions sub_opts;
  sub_opts.cross_ext = false;
  sub_opts.seed = seed;
  bool any_nontorus_sub = false;
  rep.consistent = true;
  for (int s = 0; s < samples; ++s) {
    std::vector<Vec> gens;
    int ngens = 1 + static_cast<int>(rng() % 2);
    for (int g = 0; g < ngens; ++g) gens.push_back(random_nonzero_element(L, rng));
    std::vector<Vec> basis = subalgebra_closure(L, gens, true);
    LiePAlgebra sub = subalgebra_as_algebra(L, basis, "closure");
    SubConsistencyRow row;
    std::ostringstream gd;
    for (size_t g = 0; g < gens.size(); ++g)
      gd << (g ? "; " : "") << element_label(L, gens[g]);
    row.gens = gd.str();
    row.sub_dim = sub.dim();
    row.sub_is_torus = is_torus(sub);
    row.sub_verdict = cd_star_classify(sub, sub_opts).verdict;
    if (rep.ambient_is_torus && !row.sub_is_torus) rep.consistent = false;
    if ((row.sub_verdict == CdVerdict::Zero) != row.sub_is_torus) rep.consistent = false;
    if (!row.sub_is_torus) any_nontorus_sub = true;
    rep.rows.push_back(std::move(row));
  }
  if (any_nontorus_sub) {
    CdOptions amb_opts;
    amb_opts.cross_ext = false;
    amb_opts.seed = seed;
    rep.ambient_verdict = cd_star_classify(L, amb_opts).verdict;
    if (*rep.ambient_verdict != CdVerdict::InfiniteEvidence) rep.consistent = false;
  }
  return rep;
}

}  // namespace liepcd
