#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "braidinv/bigint.hpp"
#include "braidinv/jet.hpp"
#include "braidinv/laurent.hpp"
#include "braidinv/xpoly.hpp"

namespace braidinv {

// Sparse 2-variable Laurent polynomial in x and t with exact integer
// coefficients.  Canonical: no zero coefficients stored.
class BivariatePoly {
 public:
  using Key = std::pair<std::int64_t, std::int64_t>;  // (x exponent, t exponent)

  BivariatePoly() = default;
  explicit BivariatePoly(int c) { add_term(0, 0, Int(c)); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Int> &terms() const { return terms_; }
  void add_term(std::int64_t xe, std::int64_t te, const Int &c);

  BivariatePoly operator-() const;
  BivariatePoly &operator+=(const BivariatePoly &o);
  BivariatePoly &operator-=(const BivariatePoly &o);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly &b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly &b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly &a, const BivariatePoly &b);
  bool operator==(const BivariatePoly &) const = default;

  // sign * x^a * t^b * this
  BivariatePoly scaled_by_unit(std::int64_t a, std::int64_t b, int sign) const;

  BivariatePoly with_swapped_vars() const;

  // Group by x-exponent after substituting t = e^h to first order:
  // c * t^e contributes Jet1(c, c*e).  Zero jets are dropped.
  std::map<std::int64_t, Jet1> jets_by_x() const;

  // Terms sorted by (x exponent, t exponent): "1 + t^3*x", "-t^-1*x^2".
  std::string to_string() const;

 private:
  std::map<Key, Int> terms_;
};

BivariatePoly from_xpoly(const XPoly<LaurentPoly> &p);

// "1 - x", used by the forward and recovery pipelines.
BivariatePoly one_minus_x_bivariate();

// Text format: terms joined by " + " / " - ", each term a '*'-separated
// product of an optional integer coefficient and variable powers "x^a",
// "t^b" (exponent parts omitted when 0, "^1" omitted).  The parser accepts
// arbitrary whitespace, factor order and implicit multiplication.
BivariatePoly parse_bivariate(const std::string &text);

// A pure-t polynomial parsed with the same grammar.
LaurentPoly parse_laurent(const std::string &text);

}  // namespace braidinv
