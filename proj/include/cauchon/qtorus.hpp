#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

namespace cauchon {

// Position (row, col) of the generator t_{row,col}, 1-based, ordered
// lexicographically.
struct GenIndex {
  int row = 0;
  int col = 0;
  auto operator<=>(const GenIndex&) const = default;
};

// Exponent lambda(a,b) in t_a t_b = q^{lambda(a,b)} t_b t_a:
//   +1 if a,b share a row and a is left of b, or share a column and a is
//      above b; -1 for the mirrored cases; 0 otherwise (including a == b).
// Antisymmetric.
int commutation_exponent(GenIndex a, GenIndex b);

// Laurent polynomial in q over arbitrary-precision integers, zero-pruned.
class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(long value);  // NOLINT: integer constants convert freely
  explicit QLaurent(mpz_class value);
  static QLaurent q_power(std::int64_t exp, mpz_class coeff = 1);
  // (-q)^len, the sign carried by a permutation with len inversions
  static QLaurent signed_q_power(std::int64_t len);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_unit_q_power() const;  // exactly q^k for some k

  const std::map<std::int64_t, mpz_class>& terms() const { return terms_; }

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o);
  QLaurent& shift(std::int64_t qexp);  // multiply by q^qexp
  QLaurent operator-() const;

  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);

  bool operator==(const QLaurent&) const = default;

  std::string str() const;  // terms in descending q-power, e.g. "q^2 - 3 + q^-1"
  nlohmann::json to_json() const;  // [[qexp, coeff], ...] ascending by qexp
  static QLaurent from_json(const nlohmann::json& j);

 private:
  void prune(std::int64_t key);
  std::map<std::int64_t, mpz_class> terms_;  // q-exponent -> nonzero coefficient
};

struct MonoProduct;

// Normally ordered monomial: product of t_g^{e_g} over g in lexicographic
// order, zero exponents pruned. The empty monomial is 1. Ordered by its
// sorted exponent list, so Element term order is reproducible.
class Monomial {
 public:
  Monomial() = default;
  static Monomial generator(GenIndex g, int exp = 1);

  bool is_one() const { return exps_.empty(); }
  int exponent(GenIndex g) const;
  const std::map<GenIndex, int>& exponents() const { return exps_; }

  auto operator<=>(const Monomial&) const = default;

  std::string str() const;  // "t[1,1] t[1,2]^-1", "1" when empty

  friend MonoProduct mono_mul(const Monomial& a, const Monomial& b);
  friend MonoProduct mono_inv(const Monomial& a);

 private:
  std::map<GenIndex, int> exps_;
};

// Result of normal-ordering a product: q^{qpow} * mono.
struct MonoProduct {
  std::int64_t qpow = 0;
  Monomial mono;
  bool operator==(const MonoProduct&) const = default;
};

// N(a) N(b) = q^{qpow} N(a+b), where qpow sums e_a(alpha) e_b(beta)
// lambda(alpha,beta) over pairs alpha > beta moved past each other.
MonoProduct mono_mul(const Monomial& a, const Monomial& b);
// q^{qpow} N(-a) is the two-sided inverse of N(a).
MonoProduct mono_inv(const Monomial& a);

// Element of the quantum torus: finite Z[q,q^-1]-combination of normally
// ordered monomials. Canonical (sorted, zero-pruned) after every operation;
// equality is structural. Operations are pure; values never share mutable
// state, so concurrent reads are safe.
class Element {
 public:
  Element() = default;  // zero
  static Element one();
  static Element generator(GenIndex g, int exp = 1);
  static Element term(QLaurent coeff, const Monomial& mono);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  // single monomial with coefficient exactly q^k
  bool is_unit_monomial() const;
  const std::map<Monomial, QLaurent>& terms() const { return terms_; }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Element& o) { return *this = *this * o; }
  Element& scale(const QLaurent& c);  // coefficients are central

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);

  bool operator==(const Element&) const = default;

  std::string str() const;
  // Canonical form: array of terms sorted by monomial; each term is
  // {"coeff": [[qexp, int], ...] sorted by qexp,
  //  "mono":  [[row, col, exp], ...] sorted lexicographically}.
  // Bit-exact across runs. Coefficients too wide for int64 serialize as
  // decimal strings.
  nlohmann::json to_json() const;
  static Element from_json(const nlohmann::json& j);

 private:
  std::map<Monomial, QLaurent> terms_;  // monomial -> nonzero coefficient
};

inline Element elem_add(const Element& x, const Element& y) { return x + y; }
inline Element elem_mul(const Element& x, const Element& y) { return x * y; }
inline bool is_zero(const Element& x) { return x.is_zero(); }

}  // namespace cauchon
