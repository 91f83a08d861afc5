#pragma once

#include <string>
#include <vector>

#include "braidinv/bigint.hpp"
#include "braidinv/errors.hpp"
#include "braidinv/jet.hpp"
#include "braidinv/laurent.hpp"

namespace braidinv {

// Dense polynomial in x over an exact coefficient ring R (Int, Jet1 or
// LaurentPoly).  The x-degree stays small (bounded by the strand count),
// which is why this side is dense while the t side is sparse.
template <class R>
class XPoly {
 public:
  XPoly() = default;
  XPoly(int v) {
    if (v != 0) c_.push_back(R(v));
  }
  explicit XPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static XPoly monomial(R coeff, int exp) {
    XPoly p;
    p.set_coeff(exp, std::move(coeff));
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 when zero
  bool is_zero() const { return c_.empty(); }
  R coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)]
                                                       : R(0);
  }
  const std::vector<R> &coeffs() const { return c_; }
  void set_coeff(int i, R v) {
    if (i < 0) throw internal_error("negative x-exponent in XPoly");
    if (i >= static_cast<int>(c_.size())) {
      if (ring_is_zero(v)) return;
      c_.resize(static_cast<std::size_t>(i) + 1, R(0));
    }
    c_[static_cast<std::size_t>(i)] = std::move(v);
    trim();
  }

  XPoly operator-() const {
    XPoly out = *this;
    for (auto &v : out.c_) v = -v;
    return out;
  }
  XPoly &operator+=(const XPoly &o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  XPoly &operator-=(const XPoly &o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend XPoly operator+(XPoly a, const XPoly &b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly &b) { return a -= b; }
  friend XPoly operator*(const XPoly &a, const XPoly &b) {
    XPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) fma(out.c_[i + j], a.c_[i], b.c_[j]);
    out.trim();
    return out;
  }
  XPoly &operator*=(const XPoly &o) { return *this = *this * o; }
  XPoly scaled(const R &s) const {
    XPoly out = *this;
    for (auto &v : out.c_) v = v * s;
    out.trim();
    return out;
  }
  bool operator==(const XPoly &) const = default;

  XPoly exact_div_int(long long m, const char *where) const {
    XPoly out;
    out.c_.reserve(c_.size());
    for (const auto &v : c_) out.c_.push_back(ring_exact_div_int(v, m, where));
    return out;
  }

  // Exact quotient by (1 - x); a nonzero remainder is an internal error
  // because every call site divides a polynomial known to be divisible.
  XPoly divide_by_one_minus_x() const {
    if (is_zero()) return {};
    const int d = degree();
    XPoly q;
    q.c_.assign(static_cast<std::size_t>(d), R(0));
    R carry = R(0);  // running q_{i-1}; p_i = q_i - q_{i-1}
    for (int i = 0; i < d; ++i) {
      carry += c_[static_cast<std::size_t>(i)];
      q.c_[static_cast<std::size_t>(i)] = carry;
    }
    R rem = c_[static_cast<std::size_t>(d)] + carry;
    if (!ring_is_zero(rem))
      throw internal_error("division by (1 - x) left remainder " + ring_str(rem));
    q.trim();
    return q;
  }

  // Rendering.  Multi-term coefficients are parenthesized; a multi-term
  // coefficient whose lowest term is negative is rendered with the sign
  // pulled out, e.g. "1 - (1 - t)*x - t*x^2".
  std::string to_string(const std::string &var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
      const R &v = c_[static_cast<std::size_t>(i)];
      if (ring_is_zero(v)) continue;
      bool neg = ring_leading_negative(v);
      R body_v = neg ? -v : v;
      std::string s = ring_str(body_v);
      std::string xpart =
          (i == 0) ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      std::string body;
      if (ring_terms(body_v) > 1) {
        body = "(" + s + ")" + (xpart.empty() ? "" : "*" + xpart);
      } else if (s == "1" && !xpart.empty()) {
        body = xpart;
      } else {
        body = s + (xpart.empty() ? "" : "*" + xpart);
      }
      if (first) {
        out = neg ? "-" + body : body;
        first = false;
      } else {
        out += (neg ? " - " : " + ") + body;
      }
    }
    return out;
  }

 private:
  std::vector<R> c_;
  void trim() {
    while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
  }
};

template <class R>
inline bool ring_is_zero(const XPoly<R> &v) {
  return v.is_zero();
}

// 1 - x^n
template <class R>
XPoly<R> one_minus_x_pow(int n) {
  XPoly<R> p;
  if (n == 0) return p;
  p.set_coeff(0, R(1));
  p.set_coeff(n, R(-1));
  return p;
}

// 1 + x + ... + x^(n-1)
template <class R>
XPoly<R> geometric_sum(int n) {
  XPoly<R> p;
  for (int i = 0; i < n; ++i) p.set_coeff(i, R(1));
  return p;
}

// Polynomial remainder a mod b where the leading coefficient of b is a unit
// (+1 or -1), so the division is exact over the integers.
template <class R>
XPoly<R> xpoly_rem_by_unit_leading(XPoly<R> a, const XPoly<R> &b) {
  if (b.is_zero()) throw internal_error("remainder modulo the zero polynomial");
  const R lead = b.coeff(b.degree());
  const bool lead_one = lead == R(1);
  if (!lead_one && !(lead == R(-1)))
    throw internal_error("remainder requires a unit leading coefficient");
  while (!a.is_zero() && a.degree() >= b.degree()) {
    R q = lead_one ? a.coeff(a.degree()) : -a.coeff(a.degree());
    a -= XPoly<R>::monomial(std::move(q), a.degree() - b.degree()) * b;
  }
  return a;
}

}  // namespace braidinv
