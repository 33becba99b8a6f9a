#include "cauchon/qtorus.hpp"

#include <sstream>
#include <utility>

#include "cauchon/errors.hpp"

namespace cauchon {

using nlohmann::json;

int commutation_exponent(GenIndex a, GenIndex b) {
  if (a.row == b.row && a.col == b.col) return 0;
  if (a.row == b.row) return a.col < b.col ? 1 : -1;
  if (a.col == b.col) return a.row < b.row ? 1 : -1;
  return 0;
}

namespace {

json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

mpz_class mpz_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>(), 10);
  throw FormatError("coefficient must be an integer or a decimal string");
}

// "q", "q^3", "q^-1"; never called with exp == 0
std::string q_str(std::int64_t exp) {
  if (exp == 1) return "q";
  return "q^" + std::to_string(exp);
}

}  // namespace

QLaurent::QLaurent(long value) {
  if (value != 0) terms_[0] = value;
}

QLaurent::QLaurent(mpz_class value) {
  if (value != 0) terms_[0] = std::move(value);
}

QLaurent QLaurent::q_power(std::int64_t exp, mpz_class coeff) {
  QLaurent r;
  if (coeff != 0) r.terms_[exp] = std::move(coeff);
  return r;
}

QLaurent QLaurent::signed_q_power(std::int64_t len) {
  return q_power(len, (len % 2 != 0) ? -1 : 1);
}

bool QLaurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool QLaurent::is_unit_q_power() const {
  return terms_.size() == 1 && terms_.begin()->second == 1;
}

void QLaurent::prune(std::int64_t key) {
  auto it = terms_.find(key);
  if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) {
    terms_[e] += c;
    prune(e);
  }
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) {
    terms_[e] -= c;
    prune(e);
  }
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      r.terms_[ea + eb] += ca * cb;
      r.prune(ea + eb);
    }
  return r;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) { return *this = *this * o; }

QLaurent& QLaurent::shift(std::int64_t qexp) {
  if (qexp == 0 || terms_.empty()) return *this;
  std::map<std::int64_t, mpz_class> shifted;
  for (auto& [e, c] : terms_) shifted.emplace(e + qexp, std::move(c));
  terms_ = std::move(shifted);
  return *this;
}

QLaurent QLaurent::operator-() const {
  QLaurent r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

std::string QLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // descending powers read most naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class a = c < 0 ? mpz_class(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      out << a.get_str();
    } else if (a == 1) {
      out << q_str(e);
    } else {
      out << a.get_str() << " " << q_str(e);
    }
  }
  return out.str();
}

json QLaurent::to_json() const {
  json arr = json::array();
  for (const auto& [e, c] : terms_) arr.push_back(json::array({e, mpz_to_json(c)}));
  return arr;
}

QLaurent QLaurent::from_json(const json& j) {
  if (!j.is_array()) throw FormatError("coefficient must be an array of [qexp, int] pairs");
  QLaurent r;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer())
      throw FormatError("coefficient term must be a [qexp, int] pair");
    mpz_class c = mpz_from_json(pair[1]);
    if (c == 0) throw FormatError("coefficient term must be nonzero");
    if (!r.terms_.emplace(pair[0].get<std::int64_t>(), std::move(c)).second)
      throw FormatError("duplicate q-exponent in coefficient");
  }
  return r;
}

Monomial Monomial::generator(GenIndex g, int exp) {
  Monomial m;
  if (exp != 0) m.exps_[g] = exp;
  return m;
}

int Monomial::exponent(GenIndex g) const {
  auto it = exps_.find(g);
  return it == exps_.end() ? 0 : it->second;
}

std::string Monomial::str() const {
  if (exps_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, e] : exps_) {
    if (!first) out << " ";
    first = false;
    out << "t[" << g.row << "," << g.col << "]";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

MonoProduct mono_mul(const Monomial& a, const Monomial& b) {
  // Moving each factor of b leftward past the factors of a that exceed it
  // contributes q^{e_a e_b lambda}; lambda vanishes unless row or column match.
  std::int64_t qpow = 0;
  for (const auto& [ga, ea] : a.exps_)
    for (const auto& [gb, eb] : b.exps_)
      if (gb < ga)
        qpow += static_cast<std::int64_t>(ea) * eb * commutation_exponent(ga, gb);
  MonoProduct r;
  r.qpow = qpow;
  r.mono = a;
  for (const auto& [g, e] : b.exps_) {
    int& slot = r.mono.exps_[g];
    slot += e;
    if (slot == 0) r.mono.exps_.erase(g);
  }
  return r;
}

MonoProduct mono_inv(const Monomial& a) {
  // N(a) N(-a) = q^{-s} with s = sum over pairs alpha > beta in supp(a) of
  // e_alpha e_beta lambda(alpha,beta), so the inverse is q^{s} N(-a).
  std::int64_t qpow = 0;
  for (auto ia = a.exps_.begin(); ia != a.exps_.end(); ++ia)
    for (auto ib = a.exps_.begin(); ib != ia; ++ib)
      qpow += static_cast<std::int64_t>(ia->second) * ib->second *
              commutation_exponent(ia->first, ib->first);
  MonoProduct r;
  r.qpow = qpow;
  for (const auto& [g, e] : a.exps_) r.mono.exps_[g] = -e;
  return r;
}

Element Element::one() { return term(QLaurent(1), Monomial()); }

Element Element::generator(GenIndex g, int exp) {
  return term(QLaurent(1), Monomial::generator(g, exp));
}

Element Element::term(QLaurent coeff, const Monomial& mono) {
  Element e;
  if (!coeff.is_zero()) e.terms_.emplace(mono, std::move(coeff));
  return e;
}

bool Element::is_unit_monomial() const {
  return terms_.size() == 1 && terms_.begin()->second.is_unit_q_power();
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [m, c] : o.terms_) {
    QLaurent& slot = terms_[m];
    slot += c;
    if (slot.is_zero()) terms_.erase(m);
  }
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [m, c] : o.terms_) {
    QLaurent& slot = terms_[m];
    slot -= c;
    if (slot.is_zero()) terms_.erase(m);
  }
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  Element r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      MonoProduct mp = mono_mul(ma, mb);
      QLaurent c = ca * cb;
      c.shift(mp.qpow);
      QLaurent& slot = r.terms_[mp.mono];
      slot += c;
      if (slot.is_zero()) r.terms_.erase(mp.mono);
    }
  return r;
}

Element& Element::scale(const QLaurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string piece;
    if (m.is_one()) {
      piece = c.str();
    } else if (c.is_one()) {
      piece = m.str();
    } else if (c.terms().size() == 1) {
      const auto& [e, coef] = *c.terms().begin();
      mpz_class a = coef < 0 ? mpz_class(-coef) : coef;
      std::string head = coef < 0 ? "-" : "";
      if (e == 0) {
        // unit magnitude is carried by the sign alone
        if (a != 1) head += a.get_str() + " ";
      } else {
        if (a != 1) head += a.get_str() + " ";
        head += q_str(e) + " ";
      }
      piece = head + m.str();
    } else {
      piece = "(" + c.str() + ") " + m.str();
    }
    if (first) {
      out << piece;
      first = false;
    } else if (!piece.empty() && piece[0] == '-') {
      out << " - " << piece.substr(1);
    } else {
      out << " + " << piece;
    }
  }
  return out.str();
}

json Element::to_json() const {
  json arr = json::array();
  for (const auto& [m, c] : terms_) {
    json mono = json::array();
    for (const auto& [g, e] : m.exponents()) mono.push_back(json::array({g.row, g.col, e}));
    arr.push_back(json{{"coeff", c.to_json()}, {"mono", mono}});
  }
  return arr;
}

Element Element::from_json(const json& j) {
  if (!j.is_array()) throw FormatError("element must be an array of terms");
  Element r;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("mono"))
      throw FormatError("element term must have coeff and mono");
    QLaurent c = QLaurent::from_json(term["coeff"]);
    if (c.is_zero()) throw FormatError("element term must have a nonzero coefficient");
    if (!term["mono"].is_array()) throw FormatError("mono must be an array of [row, col, exp]");
    Monomial m;
    std::map<GenIndex, int> exps;
    for (const auto& f : term["mono"]) {
      if (!f.is_array() || f.size() != 3) throw FormatError("mono factor must be [row, col, exp]");
      GenIndex g{f[0].get<int>(), f[1].get<int>()};
      int e = f[2].get<int>();
      if (e == 0) throw FormatError("mono factor must have a nonzero exponent");
      if (!exps.emplace(g, e).second) throw FormatError("duplicate generator in mono");
    }
    for (const auto& [g, e] : exps) m = mono_mul(m, Monomial::generator(g, e)).mono;
    if (!r.terms_.emplace(m, std::move(c)).second)
      throw FormatError("duplicate monomial in element");
  }
  return r;
}

}  // namespace cauchon
