#include "liepcd/gf.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace liepcd {

namespace {

int64_t mod_pos(int64_t a, int64_t p) {
  int64_t r = a % p;
  return r < 0 ? r + p : r;
}

int64_t inv_mod_p(int64_t a, int64_t p) {
  // extended euclid on integers
  int64_t t = 0, newt = 1, r = p, newr = mod_pos(a, p);
  while (newr != 0) {
    int64_t q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  return mod_pos(t, p);
}

// Polynomials over the prime field as bare coefficient vectors (ascending,
// trimmed).  Used for modulus validation and element inversion.
using PP = std::vector<int64_t>;

void pp_trim(PP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PP pp_mul(const PP& a, const PP& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  PP c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = mod_pos(c[i + j] + a[i] * b[j], p);
  pp_trim(c);
  return c;
}

void pp_divmod(const PP& a, const PP& b, int64_t p, PP* q, PP* r) {
  PP rem = a, quo;
  pp_trim(rem);
  int db = static_cast<int>(b.size()) - 1;
  int64_t lead_inv = inv_mod_p(b[db], p);
  if (static_cast<int>(rem.size()) - 1 >= db)
    quo.assign(rem.size() - db, 0);
  while (static_cast<int>(rem.size()) - 1 >= db) {
    int d = static_cast<int>(rem.size()) - 1 - db;
    int64_t c = mod_pos(rem.back() * lead_inv, p);
    quo[d] = c;
    for (int i = 0; i <= db; ++i)
      rem[d + i] = mod_pos(rem[d + i] - c * b[i], p);
    pp_trim(rem);
  }
  pp_trim(quo);
  if (q) *q = quo;
  if (r) *r = rem;
}

}  // namespace

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// --- Field ------------------------------------------------------------------

void Field::reduce_(std::vector<int64_t>& c) const {
  for (auto& x : c) x = mod_pos(x, p_);
  for (int i = static_cast<int>(c.size()) - 1; i >= k_; --i) {
    int64_t t = c[i];
    if (t == 0) continue;
    c[i] = 0;
    for (int j = 0; j < k_; ++j)
      c[i - k_ + j] = mod_pos(c[i - k_ + j] - t * modulus_[j], p_);
  }
  c.resize(k_);
}

Field Field::make(int64_t p, int k) {
  if (!is_prime(p)) throw CompositeP("p = " + std::to_string(p) + " is not prime");
  if (k < 1 || k > 12) throw DegreeTooLarge("extension degree " + std::to_string(k));
  Field F;
  F.p_ = p;
  F.k_ = k;
  F.size_ = 1;
  for (int i = 0; i < k; ++i) {
    if (F.size_ > (uint64_t{1} << 62) / static_cast<uint64_t>(p))
      throw DegreeTooLarge("field size overflow");
    F.size_ *= static_cast<uint64_t>(p);
  }
  if (k == 1) {
    F.modulus_ = {0, 1};
    return F;
  }
  Field Fp = Field::make(p, 1);
  // Smallest monic irreducible: counting order on the non-leading
  // coefficient vector, constant term least significant.
  for (uint64_t v = 0;; ++v) {
    std::vector<int64_t> mod(k + 1, 0);
    uint64_t t = v;
    for (int i = 0; i < k; ++i) {
      mod[i] = static_cast<int64_t>(t % static_cast<uint64_t>(p));
      t /= static_cast<uint64_t>(p);
    }
    mod[k] = 1;
    std::vector<Fel> pc;
    pc.reserve(mod.size());
    for (int64_t ci : mod) pc.push_back(Fel{ci});
    if (poly_is_irreducible(Fp, poly_make(Fp, pc))) {
      F.modulus_ = std::move(mod);
      return F;
    }
  }
}

Field Field::with_modulus(int64_t p, std::vector<int64_t> modulus) {
  if (!is_prime(p)) throw CompositeP("p = " + std::to_string(p) + " is not prime");
  pp_trim(modulus);
  int k = static_cast<int>(modulus.size()) - 1;
  if (k < 1 || k > 12) throw DegreeTooLarge("modulus degree " + std::to_string(k));
  for (auto& c : modulus) c = mod_pos(c, p);
  if (modulus[k] != 1) throw MalformedInput("modulus must be monic");
  if (k > 1) {
    Field Fp = Field::make(p, 1);
    std::vector<Fel> pc;
    for (int64_t ci : modulus) pc.push_back(Fel{ci});
    if (!poly_is_irreducible(Fp, poly_make(Fp, pc)))
      throw MalformedInput("modulus is reducible");
  } else if (modulus != std::vector<int64_t>{0, 1}) {
    // degree-1 modulus is normalized to the placeholder t
    modulus = {0, 1};
  }
  Field F;
  F.p_ = p;
  F.k_ = k;
  F.modulus_ = std::move(modulus);
  F.size_ = 1;
  for (int i = 0; i < k; ++i) F.size_ *= static_cast<uint64_t>(p);
  return F;
}

Fel Field::one() const {
  Fel a(k_, 0);
  a[0] = 1;
  return a;
}

Fel Field::from_int(int64_t v) const {
  Fel a(k_, 0);
  a[0] = mod_pos(v, p_);
  return a;
}

Fel Field::element(uint64_t index) const {
  Fel a(k_, 0);
  for (int i = 0; i < k_; ++i) {
    a[i] = static_cast<int64_t>(index % static_cast<uint64_t>(p_));
    index /= static_cast<uint64_t>(p_);
  }
  return a;
}

uint64_t Field::index_of(const Fel& a) const {
  uint64_t v = 0;
  for (int i = k_ - 1; i >= 0; --i)
    v = v * static_cast<uint64_t>(p_) + static_cast<uint64_t>(a[i]);
  return v;
}

bool Field::is_zero(const Fel& a) const {
  for (auto c : a)
    if (c != 0) return false;
  return true;
}

bool Field::is_one(const Fel& a) const {
  if (a[0] != 1) return false;
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

Fel Field::add(const Fel& a, const Fel& b) const {
  Fel c(k_);
  for (int i = 0; i < k_; ++i) c[i] = mod_pos(a[i] + b[i], p_);
  return c;
}

Fel Field::sub(const Fel& a, const Fel& b) const {
  Fel c(k_);
  for (int i = 0; i < k_; ++i) c[i] = mod_pos(a[i] - b[i], p_);
  return c;
}

Fel Field::neg(const Fel& a) const {
  Fel c(k_);
  for (int i = 0; i < k_; ++i) c[i] = mod_pos(-a[i], p_);
  return c;
}

Fel Field::mul(const Fel& a, const Fel& b) const {
  if (k_ == 1) return Fel{mod_pos(a[0] * b[0], p_)};
  std::vector<int64_t> c(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < k_; ++j) c[i + j] += a[i] * b[j] % p_;
  }
  reduce_(c);
  return c;
}

Fel Field::inv(const Fel& a) const {
  if (is_zero(a)) throw Error("DivisionByZero", "inverse of zero");
  if (k_ == 1) return Fel{inv_mod_p(a[0], p_)};
  // extended euclid in GF(p)[t] against the modulus
  PP r0 = modulus_, r1(a.begin(), a.end());
  pp_trim(r1);
  PP s0 = {}, s1 = {1};
  while (!r1.empty()) {
    PP q, r;
    pp_divmod(r0, r1, p_, &q, &r);
    PP s2 = s0;  // s2 = s0 - q*s1
    PP qs = pp_mul(q, s1, p_);
    if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
    for (size_t i = 0; i < qs.size(); ++i) s2[i] = mod_pos(s2[i] - qs[i], p_);
    pp_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a unit constant
  int64_t c = inv_mod_p(r0[0], p_);
  Fel out(k_, 0);
  for (size_t i = 0; i < s0.size(); ++i) out[i] = mod_pos(s0[i] * c, p_);
  return out;
}

Fel Field::div(const Fel& a, const Fel& b) const { return mul(a, inv(b)); }

Fel Field::pow(const Fel& a, uint64_t e) const {
  Fel r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

Fel Field::frobenius(const Fel& a, int m) const {
  Fel r = a;
  for (int i = 0; i < m; ++i) r = pow(r, static_cast<uint64_t>(p_));
  return r;
}

void Field::mul_span(int64_t* out, const int64_t* a, const int64_t* b) const {
  if (k_ == 1) {
    out[0] = mod_pos(a[0] * b[0], p_);
    return;
  }
  Fel r = mul(Fel(a, a + k_), Fel(b, b + k_));
  std::copy(r.begin(), r.end(), out);
}

void Field::acc_mul(int64_t* out, const int64_t* a, const int64_t* b) const {
  if (k_ == 1) {
    out[0] = mod_pos(out[0] + a[0] * b[0], p_);
    return;
  }
  Fel r = mul(Fel(a, a + k_), Fel(b, b + k_));
  for (int i = 0; i < k_; ++i) out[i] = mod_pos(out[i] + r[i], p_);
}

std::string Field::to_string(const Fel& a) const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < k_; ++i) os << (i ? "," : "") << a[i];
  os << "]";
  return os.str();
}

// --- polynomials ------------------------------------------------------------

Poly poly_make(const Field& F, std::vector<Fel> coeffs) {
  while (!coeffs.empty() && F.is_zero(coeffs.back())) coeffs.pop_back();
  return Poly{std::move(coeffs)};
}

Poly poly_from_ints(const Field& F, const std::vector<int64_t>& coeffs) {
  std::vector<Fel> c;
  c.reserve(coeffs.size());
  for (int64_t v : coeffs) c.push_back(F.from_int(v));
  return poly_make(F, std::move(c));
}

Poly poly_x(const Field& F) { return poly_make(F, {F.zero(), F.one()}); }

Poly poly_const(const Field& F, const Fel& a) { return poly_make(F, {a}); }

bool poly_eq(const Poly& a, const Poly& b) { return a.c == b.c; }

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
  std::vector<Fel> c(std::max(a.c.size(), b.c.size()), F.zero());
  for (size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] = F.add(c[i], b.c[i]);
  return poly_make(F, std::move(c));
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
  std::vector<Fel> c(std::max(a.c.size(), b.c.size()), F.zero());
  for (size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] = F.sub(c[i], b.c[i]);
  return poly_make(F, std::move(c));
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  std::vector<Fel> c(a.c.size() + b.c.size() - 1, F.zero());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (F.is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a.c[i], b.c[j]));
  }
  return poly_make(F, std::move(c));
}

Poly poly_scale(const Field& F, const Fel& s, const Poly& a) {
  std::vector<Fel> c;
  c.reserve(a.c.size());
  for (const auto& ci : a.c) c.push_back(F.mul(s, ci));
  return poly_make(F, std::move(c));
}

void poly_divmod(const Field& F, const Poly& a, const Poly& b, Poly* q, Poly* r) {
  if (b.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  std::vector<Fel> rem = a.c;
  int db = b.deg();
  Fel lead_inv = F.inv(b.c[db]);
  std::vector<Fel> quo;
  if (a.deg() >= db) quo.assign(a.deg() - db + 1, F.zero());
  int dr = a.deg();
  while (dr >= db) {
    Fel c = F.mul(rem[dr], lead_inv);
    if (!F.is_zero(c)) {
      quo[dr - db] = c;
      for (int i = 0; i <= db; ++i)
        rem[dr - db + i] = F.sub(rem[dr - db + i], F.mul(c, b.c[i]));
    }
    --dr;
  }
  if (q) *q = poly_make(F, std::move(quo));
  if (r) *r = poly_make(F, std::move(rem));
}

Poly poly_mod(const Field& F, const Poly& a, const Poly& b) {
  Poly r;
  poly_divmod(F, a, b, nullptr, &r);
  return r;
}

Poly poly_monic(const Field& F, const Poly& a) {
  if (a.is_zero()) return a;
  if (F.is_one(a.c.back())) return a;
  return poly_scale(F, F.inv(a.c.back()), a);
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, a);
}

Poly poly_derivative(const Field& F, const Poly& a) {
  std::vector<Fel> c;
  for (size_t i = 1; i < a.c.size(); ++i)
    c.push_back(F.mul(F.from_int(static_cast<int64_t>(i)), a.c[i]));
  return poly_make(F, std::move(c));
}

Fel poly_eval(const Field& F, const Poly& a, const Fel& x) {
  Fel r = F.zero();
  for (int i = a.deg(); i >= 0; --i) r = F.add(F.mul(r, x), a.c[i]);
  return r;
}

Poly poly_powmod(const Field& F, const Poly& base, uint64_t e, const Poly& mod) {
  Poly r = poly_const(F, F.one());
  Poly b = poly_mod(F, base, mod);
  while (e) {
    if (e & 1) r = poly_mod(F, poly_mul(F, r, b), mod);
    e >>= 1;
    if (e) b = poly_mod(F, poly_mul(F, b, b), mod);
  }
  return r;
}

std::string poly_to_string(const Field& F, const Poly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= a.deg(); ++i) {
    if (F.is_zero(a.c[i])) continue;
    if (!first) os << " + ";
    first = false;
    os << F.to_string(a.c[i]);
    if (i == 1) os << "*t";
    if (i > 1) os << "*t^" << i;
  }
  return os.str();
}

bool poly_is_irreducible(const Field& F, const Poly& f) {
  int n = f.deg();
  if (n <= 0) return false;
  if (n == 1) return true;
  uint64_t q = F.size();
  // frobenius chain h_i = t^{q^i} mod f
  Poly x = poly_x(F);
  Poly h = x;
  std::vector<int> prime_divs;
  for (int d = 2, m = n; d <= m; ++d)
    if (m % d == 0) {
      prime_divs.push_back(d);
      while (m % d == 0) m /= d;
    }
  for (int i = 1; i <= n; ++i) {
    h = poly_powmod(F, h, q, f);
    for (int r : prime_divs)
      if (i == n / r) {
        Poly g = poly_gcd(F, poly_sub(F, h, x), f);
        if (g.deg() != 0) return false;
      }
  }
  return poly_eq(h, x);
}

namespace {

Poly pth_root(const Field& F, const Poly& f) {
  // f = g(t^p): recover g; coefficient p-th roots via the inverse Frobenius.
  int64_t p = F.p();
  uint64_t inv_frob_exp = F.size() / static_cast<uint64_t>(p);
  std::vector<Fel> c;
  for (int i = 0; i <= f.deg(); i += static_cast<int>(p)) {
    Fel a = f.c[i];
    if (F.k() > 1) a = F.pow(a, inv_frob_exp);
    c.push_back(a);
  }
  return poly_make(F, std::move(c));
}

void squarefree_parts(const Field& F, const Poly& f,
                      std::vector<std::pair<Poly, int>>& out, int mult) {
  Poly fd = poly_derivative(F, f);
  if (fd.is_zero()) {
    squarefree_parts(F, poly_monic(F, pth_root(F, f)), out,
                     mult * static_cast<int>(F.p()));
    return;
  }
  Poly c = poly_gcd(F, f, fd);
  Poly w;
  poly_divmod(F, f, c, &w, nullptr);
  int i = 1;
  while (w.deg() > 0) {
    Poly y = poly_gcd(F, w, c);
    Poly z;
    poly_divmod(F, w, y, &z, nullptr);
    if (z.deg() > 0) out.emplace_back(poly_monic(F, z), mult * i);
    Poly c2;
    poly_divmod(F, c, y, &c2, nullptr);
    c = std::move(c2);
    w = std::move(y);
    ++i;
  }
  if (c.deg() > 0) squarefree_parts(F, poly_monic(F, pth_root(F, c)), out,
                                    mult * static_cast<int>(F.p()));
}

Poly random_poly_below(const Field& F, int max_deg, std::mt19937_64& rng) {
  std::vector<Fel> c;
  c.reserve(max_deg);
  for (int i = 0; i < max_deg; ++i)
    c.push_back(F.element(rng() % F.size()));
  return poly_make(F, std::move(c));
}

void equal_degree_split(const Field& F, const Poly& f, int d,
                        std::vector<Poly>& out, std::mt19937_64& rng) {
  if (f.deg() == d) {
    out.push_back(poly_monic(F, f));
    return;
  }
  if (f.deg() <= 0) return;
  uint64_t q = F.size();
  for (;;) {
    Poly r = random_poly_below(F, f.deg(), rng);
    if (r.is_zero()) continue;
    Poly g;
    if (F.p() == 2) {
      // trace map to GF(2)
      int steps = F.k() * d;
      Poly s = poly_mod(F, r, f);
      Poly acc = s;
      for (int i = 1; i < steps; ++i) {
        s = poly_mod(F, poly_mul(F, s, s), f);
        acc = poly_add(F, acc, s);
      }
      g = poly_gcd(F, acc, f);
    } else {
      // norm to GF(q), then the (q-1)/2 power splits quadratic residues
      Poly s = poly_mod(F, r, f);
      Poly acc = s;
      for (int i = 1; i < d; ++i) {
        s = poly_powmod(F, s, q, f);
        acc = poly_mod(F, poly_mul(F, acc, s), f);
      }
      Poly e = poly_powmod(F, acc, (q - 1) / 2, f);
      g = poly_gcd(F, poly_sub(F, e, poly_const(F, F.one())), f);
    }
    if (g.deg() > 0 && g.deg() < f.deg()) {
      Poly h;
      poly_divmod(F, f, g, &h, nullptr);
      equal_degree_split(F, g, d, out, rng);
      equal_degree_split(F, poly_monic(F, h), d, out, rng);
      return;
    }
  }
}

bool poly_coeff_less(const Field& F, const Poly& a, const Poly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = 0; i <= a.deg(); ++i) {
    uint64_t ia = F.index_of(a.c[i]), ib = F.index_of(b.c[i]);
    if (ia != ib) return ia < ib;
  }
  return false;
}

}  // namespace

std::vector<std::pair<Poly, int>> poly_factorize(const Field& F, const Poly& f,
                                                 uint64_t seed) {
  if (f.is_zero()) throw ZeroPolynomial("factorize(0)");
  std::vector<std::pair<Poly, int>> result;
  if (f.deg() == 0) return result;
  std::vector<std::pair<Poly, int>> sqf;
  squarefree_parts(F, poly_monic(F, f), sqf, 1);
  std::mt19937_64 rng(seed);
  uint64_t q = F.size();
  for (const auto& [part, mult] : sqf) {
    // distinct degree
    Poly x = poly_x(F);
    Poly h = x;
    Poly fstar = part;
    std::vector<std::pair<Poly, int>> by_degree;
    for (int d = 1; 2 * d <= fstar.deg(); ++d) {
      h = poly_powmod(F, h, q, fstar);
      Poly g = poly_gcd(F, poly_sub(F, h, x), fstar);
      if (g.deg() > 0) {
        by_degree.emplace_back(g, d);
        Poly f2;
        poly_divmod(F, fstar, g, &f2, nullptr);
        fstar = poly_monic(F, f2);
        h = poly_mod(F, h, fstar);
      }
    }
    if (fstar.deg() > 0) by_degree.emplace_back(fstar, fstar.deg());
    for (const auto& [g, d] : by_degree) {
      std::vector<Poly> irr;
      equal_degree_split(F, g, d, irr, rng);
      for (auto& gi : irr) result.emplace_back(std::move(gi), mult);
    }
  }
  std::sort(result.begin(), result.end(),
            [&F](const auto& a, const auto& b) {
              if (poly_coeff_less(F, a.first, b.first)) return true;
              if (poly_coeff_less(F, b.first, a.first)) return false;
              return a.second < b.second;
            });
  return result;
}

std::vector<RootInExtension> poly_roots_in_extension(const Field& F,
                                                     const Poly& f,
                                                     int max_ext,
                                                     uint64_t seed) {
  if (f.is_zero()) throw ZeroPolynomial("roots of the zero polynomial");
  if (max_ext < 1) throw InvalidParams("max_ext must be >= 1");
  if (F.k() * max_ext > 12)
    throw DegreeTooLarge("extension degree " + std::to_string(F.k() * max_ext));
  std::vector<RootInExtension> roots;
  auto factors = poly_factorize(F, f, seed);
  for (const auto& [g, mult] : factors) {
    (void)mult;
    int d = g.deg();
    if (d == 1) {
      roots.push_back(RootInExtension{F.neg(g.c[0]), 1, F});
    } else if (d <= max_ext) {
      Field E = Field::make(F.p(), F.k() * d);
      Embedding emb(F, E);
      Poly gE = emb.map_poly(g);
      auto linear = poly_factorize(E, gE, seed);
      std::vector<Fel> rs;
      for (const auto& [lin, m2] : linear) {
        (void)m2;
        if (lin.deg() != 1)
          throw Error("InternalError", "irreducible factor failed to split");
        rs.push_back(E.neg(lin.c[0]));
      }
      std::sort(rs.begin(), rs.end(), [&E](const Fel& a, const Fel& b) {
        return E.index_of(a) < E.index_of(b);
      });
      for (auto& r : rs) roots.push_back(RootInExtension{std::move(r), d, E});
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const RootInExtension& a, const RootInExtension& b) {
              if (a.ext_degree != b.ext_degree) return a.ext_degree < b.ext_degree;
              return a.ext.index_of(a.root) < b.ext.index_of(b.root);
            });
  return roots;
}

Poly interpolate(const Field& F,
                 const std::vector<std::pair<Fel, Fel>>& points) {
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw DuplicateAbscissa("repeated abscissa at positions " +
                                std::to_string(i) + "," + std::to_string(j));
  // N(t) = prod (t - x_j); L_i = N/(t - x_i) scaled to hit y_i at x_i
  Poly N = poly_const(F, F.one());
  for (const auto& [x, y] : points) {
    (void)y;
    N = poly_mul(F, N, poly_make(F, {F.neg(x), F.one()}));
  }
  Poly acc;  // zero
  for (const auto& [x, y] : points) {
    if (F.is_zero(y)) continue;
    Poly Li;
    poly_divmod(F, N, poly_make(F, {F.neg(x), F.one()}), &Li, nullptr);
    Fel denom = poly_eval(F, Li, x);
    acc = poly_add(F, acc, poly_scale(F, F.mul(y, F.inv(denom)), Li));
  }
  return acc;
}

// --- Embedding ---------------------------------------------------------------

Embedding::Embedding(const Field& from, const Field& to)
    : from_(from), to_(to) {
  if (from.p() != to.p() || to.k() % from.k() != 0)
    throw FieldMismatch("no canonical inclusion GF(" + std::to_string(from.p()) +
                        "^" + std::to_string(from.k()) + ") -> GF(" +
                        std::to_string(to.p()) + "^" + std::to_string(to.k()) + ")");
  gen_powers_.assign(static_cast<size_t>(from.k()), to.zero());
  gen_powers_[0] = to.one();
  if (from.k() > 1) {
    // image of the subfield generator: smallest root of its modulus here
    std::vector<Fel> mc;
    for (int64_t c : from.modulus()) mc.push_back(to.from_int(c));
    Poly m = poly_make(to, std::move(mc));
    auto linear = poly_factorize(to, m, 0);
    std::optional<Fel> best;
    for (const auto& [lin, mult] : linear) {
      (void)mult;
      if (lin.deg() != 1)
        throw Error("InternalError", "subfield modulus failed to split");
      Fel r = to.neg(lin.c[0]);
      if (!best || to.index_of(r) < to.index_of(*best)) best = r;
    }
    for (int i = 1; i < from.k(); ++i)
      gen_powers_[static_cast<size_t>(i)] =
          to.mul(gen_powers_[static_cast<size_t>(i - 1)], *best);
  }
  prime_matrix_.assign(static_cast<size_t>(from.k()),
                       std::vector<int64_t>(static_cast<size_t>(to.k()), 0));
  for (int i = 0; i < from.k(); ++i)
    for (int j = 0; j < to.k(); ++j)
      prime_matrix_[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          gen_powers_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

Fel Embedding::map(const Fel& a) const {
  Fel out = to_.zero();
  for (int i = 0; i < from_.k(); ++i) {
    if (a[static_cast<size_t>(i)] == 0) continue;
    Fel term = to_.mul(to_.from_int(a[static_cast<size_t>(i)]),
                       gen_powers_[static_cast<size_t>(i)]);
    out = to_.add(out, term);
  }
  return out;
}

std::optional<Fel> Embedding::preimage(const Fel& a) const {
  // solve the K x k prime-field system gen_powers * x = a
  int64_t p = to_.p();
  int K = to_.k(), k = from_.k();
  std::vector<std::vector<int64_t>> m(static_cast<size_t>(K),
                                      std::vector<int64_t>(static_cast<size_t>(k) + 1, 0));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < K; ++i)
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          prime_matrix_[static_cast<size_t>(j)][static_cast<size_t>(i)];
  for (int i = 0; i < K; ++i)
    m[static_cast<size_t>(i)][static_cast<size_t>(k)] = a[static_cast<size_t>(i)];
  int row = 0;
  std::vector<int> pivot_col(static_cast<size_t>(K), -1);
  for (int col = 0; col < k && row < K; ++col) {
    int pr = -1;
    for (int r = row; r < K; ++r)
      if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[static_cast<size_t>(pr)], m[static_cast<size_t>(row)]);
    int64_t piv_inv = inv_mod_p(m[static_cast<size_t>(row)][static_cast<size_t>(col)], p);
    for (int c = col; c <= k; ++c)
      m[static_cast<size_t>(row)][static_cast<size_t>(c)] =
          mod_pos(m[static_cast<size_t>(row)][static_cast<size_t>(c)] * piv_inv, p);
    for (int r = 0; r < K; ++r) {
      if (r == row) continue;
      int64_t f = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (int c = col; c <= k; ++c)
        m[static_cast<size_t>(r)][static_cast<size_t>(c)] = mod_pos(
            m[static_cast<size_t>(r)][static_cast<size_t>(c)] -
                f * m[static_cast<size_t>(row)][static_cast<size_t>(c)],
            p);
    }
    pivot_col[static_cast<size_t>(row)] = col;
    ++row;
  }
  for (int r = row; r < K; ++r)
    if (m[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) return std::nullopt;
  Fel out = from_.zero();
  for (int r = 0; r < row; ++r)
    if (pivot_col[static_cast<size_t>(r)] >= 0)
      out[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] =
          m[static_cast<size_t>(r)][static_cast<size_t>(k)];
  return out;
}

Poly Embedding::map_poly(const Poly& f) const {
  std::vector<Fel> c;
  c.reserve(f.c.size());
  for (const auto& ci : f.c) c.push_back(map(ci));
  return poly_make(to_, std::move(c));
}

}  // namespace liepcd
