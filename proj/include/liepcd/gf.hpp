#ifndef LIEPCD_GF_HPP
#define LIEPCD_GF_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liepcd/errors.hpp"

namespace liepcd {

/// A field element of GF(p^k): k coefficients in [0,p), ascending degree.
/// Plain data; the owning Field is passed to every operation.
using Fel = std::vector<int64_t>;

/// GF(p^k) as GF(p)[t]/(modulus), modulus monic irreducible of degree k
/// over the prime field.  For k = 1 the modulus is the placeholder t.
/// Immutable value type; all operations are pure.
class Field {
 public:
  Field() = default;

  /// Deterministic field with the smallest monic irreducible modulus of
  /// degree k (coefficient vectors compared as base-p integers, constant
  /// term least significant).  Guards: p prime, 1 <= k <= 12.
  static Field make(int64_t p, int k);

  /// Field with a caller-supplied modulus (validated: monic, irreducible).
  static Field with_modulus(int64_t p, std::vector<int64_t> modulus);

  int64_t p() const { return p_; }
  int k() const { return k_; }
  const std::vector<int64_t>& modulus() const { return modulus_; }
  uint64_t size() const { return size_; }  // p^k

  bool operator==(const Field& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

  Fel zero() const { return Fel(k_, 0); }
  Fel one() const;
  Fel from_int(int64_t a) const;  // image of an integer in the prime field

  /// Deterministic enumeration: element(i) has coefficient vector equal to
  /// the base-p digits of i, constant term first.  element(0) = 0.
  Fel element(uint64_t index) const;
  uint64_t index_of(const Fel& a) const;

  bool is_zero(const Fel& a) const;
  bool is_one(const Fel& a) const;

  Fel add(const Fel& a, const Fel& b) const;
  Fel sub(const Fel& a, const Fel& b) const;
  Fel neg(const Fel& a) const;
  Fel mul(const Fel& a, const Fel& b) const;
  Fel inv(const Fel& a) const;  // a != 0
  Fel div(const Fel& a, const Fel& b) const;
  Fel pow(const Fel& a, uint64_t e) const;
  Fel frobenius(const Fel& a, int m = 1) const;  // a^(p^m)

  /// In-place fused helpers on raw coefficient spans (length k); used by
  /// the dense linear algebra inner loops.
  void acc_mul(int64_t* out, const int64_t* a, const int64_t* b) const;
  void mul_span(int64_t* out, const int64_t* a, const int64_t* b) const;

  std::string to_string(const Fel& a) const;

 private:
  int64_t p_ = 0;
  int k_ = 0;
  std::vector<int64_t> modulus_;  // length k+1, ascending, monic
  uint64_t size_ = 0;

  void reduce_(std::vector<int64_t>& c) const;  // mod p and mod modulus
};

bool is_prime(int64_t n);

// ---------------------------------------------------------------------------
// Univariate polynomials over a Field.  Coefficient list normalized so the
// highest index is nonzero; the zero polynomial is the empty list.

struct Poly {
  std::vector<Fel> c;
  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
};

Poly poly_make(const Field& F, std::vector<Fel> coeffs);
Poly poly_from_ints(const Field& F, const std::vector<int64_t>& coeffs);
Poly poly_x(const Field& F);
Poly poly_const(const Field& F, const Fel& a);

bool poly_eq(const Poly& a, const Poly& b);
Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
Poly poly_scale(const Field& F, const Fel& s, const Poly& a);
void poly_divmod(const Field& F, const Poly& a, const Poly& b, Poly* q, Poly* r);
Poly poly_mod(const Field& F, const Poly& a, const Poly& b);
Poly poly_gcd(const Field& F, Poly a, Poly b);  // monic gcd
Poly poly_derivative(const Field& F, const Poly& a);
Poly poly_monic(const Field& F, const Poly& a);
Fel poly_eval(const Field& F, const Poly& a, const Fel& x);
Poly poly_powmod(const Field& F, const Poly& base, uint64_t e, const Poly& mod);
std::string poly_to_string(const Field& F, const Poly& a);

bool poly_is_irreducible(const Field& F, const Poly& f);

/// Irreducible factors with multiplicities, sorted by (degree, coefficient
/// index sequence); the seeded equal-degree splitting makes the whole
/// decomposition deterministic.  Factors multiply back to monic(f).
std::vector<std::pair<Poly, int>> poly_factorize(const Field& F, const Poly& f,
                                                 uint64_t seed = 0);

struct RootInExtension {
  Fel root;        // element of `ext`
  int ext_degree;  // degree over F (1 = base field)
  Field ext;       // the field the root lives in (= F when ext_degree = 1)
};

/// All roots of f in GF(q^m) for m <= max_ext, q = |F|: distinct roots of
/// each irreducible factor of degree d <= max_ext, found in the flattened
/// extension GF(p^{k*d}).  Requires k * max_ext within the degree guard.
std::vector<RootInExtension> poly_roots_in_extension(const Field& F,
                                                     const Poly& f,
                                                     int max_ext,
                                                     uint64_t seed = 0);

/// Unique interpolating polynomial of degree <= n through n+1 points.
Poly interpolate(const Field& F,
                 const std::vector<std::pair<Fel, Fel>>& points);

// ---------------------------------------------------------------------------
// Canonical inclusion GF(p^k) -> GF(p^K) for k | K.  The generator of the
// subfield is sent to the smallest root (enumeration order) of its modulus
// in the big field; for a prime subfield this is the constant inclusion.

class Embedding {
 public:
  Embedding(const Field& from, const Field& to);

  const Field& from() const { return from_; }
  const Field& to() const { return to_; }

  Fel map(const Fel& a) const;
  /// Preimage when a lies in the embedded subfield.
  std::optional<Fel> preimage(const Fel& a) const;
  Poly map_poly(const Poly& f) const;

 private:
  Field from_, to_;
  std::vector<Fel> gen_powers_;              // images of t^0 .. t^{k-1}
  std::vector<std::vector<int64_t>> prime_matrix_;  // K*k over GF(p), column major
};

}  // namespace liepcd

#endif
