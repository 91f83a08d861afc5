#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "braidinv/bigint.hpp"
#include "braidinv/jet.hpp"

namespace braidinv {

// Sparse integer Laurent polynomial in t.  Exponents may be negative.
// Canonical form: zero coefficients are never stored, so map equality is
// polynomial equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c) { add_term(0, Int(c)); }
  explicit LaurentPoly(const Int &c) { add_term(0, c); }

  static LaurentPoly monomial(const Int &coeff, std::int64_t exp) {
    LaurentPoly p;
    p.add_term(exp, coeff);
    return p;
  }
  static LaurentPoly t(std::int64_t exp = 1) { return monomial(1, exp); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<std::int64_t, Int> &terms() const { return terms_; }
  Int coeff(std::int64_t exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
  }
  std::int64_t min_exp() const;  // both require a nonzero polynomial
  std::int64_t max_exp() const;

  LaurentPoly operator-() const;
  LaurentPoly &operator+=(const LaurentPoly &o);
  LaurentPoly &operator-=(const LaurentPoly &o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
  LaurentPoly &operator*=(const LaurentPoly &o) { return *this = *this * o; }
  bool operator==(const LaurentPoly &) const = default;

  // *this += a * b without building the product as a temporary.
  void add_mul(const LaurentPoly &a, const LaurentPoly &b);

  Int eval_at_one() const;        // p(1), the h^0 part of p(e^h)
  Int derivative_at_one() const;  // p'(1), the h^1 part of p(e^h)
  Jet1 to_jet() const { return {eval_at_one(), derivative_at_one()}; }

  LaurentPoly exact_div_int(long long m, const char *where) const;

  // Ascending exponents: "t^-1 - 1", "1 - t^3", "0".
  std::string to_string() const;

  void add_term(std::int64_t exp, const Int &c);  // += c * t^exp

 private:
  std::map<std::int64_t, Int> terms_;
};

inline bool ring_is_zero(const LaurentPoly &v) { return v.is_zero(); }
inline std::size_t ring_terms(const LaurentPoly &v) { return v.term_count(); }
inline std::string ring_str(const LaurentPoly &v) { return v.to_string(); }
inline bool ring_leading_negative(const LaurentPoly &v) {
  return !v.is_zero() && v.terms().begin()->second < 0;
}
inline LaurentPoly ring_exact_div_int(const LaurentPoly &v, long long m,
                                      const char *where) {
  return v.exact_div_int(m, where);
}
inline void fma(LaurentPoly &acc, const LaurentPoly &a, const LaurentPoly &b) {
  acc.add_mul(a, b);
}
template <class R>
inline void fma(R &acc, const R &a, const R &b) {
  acc += a * b;
}

}  // namespace braidinv
