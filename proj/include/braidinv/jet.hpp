#pragma once

#include <string>
#include <utility>

#include "braidinv/bigint.hpp"

namespace braidinv {

// Degree-1 jet c0 + c1*h with h^2 = 0.  This is the value ring of the
// substitution t = e^h kept only to first order: t maps to 1 + h and
// t^e maps to 1 + e*h.  Second-order terms are never needed here.
struct Jet1 {
  Int c0;
  Int c1;

  Jet1() = default;
  Jet1(int c) : c0(c) {}  // rings are constructible from small integers
  Jet1(Int a, Int b) : c0(std::move(a)), c1(std::move(b)) {}

  bool is_zero() const { return c0 == 0 && c1 == 0; }

  friend Jet1 operator+(const Jet1 &a, const Jet1 &b) {
    return {a.c0 + b.c0, a.c1 + b.c1};
  }
  friend Jet1 operator-(const Jet1 &a, const Jet1 &b) {
    return {a.c0 - b.c0, a.c1 - b.c1};
  }
  // (a + bh)(c + dh) = ac + (ad + bc)h
  friend Jet1 operator*(const Jet1 &a, const Jet1 &b) {
    return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0};
  }
  Jet1 operator-() const { return {-c0, -c1}; }
  Jet1 &operator+=(const Jet1 &o) {
    c0 += o.c0;
    c1 += o.c1;
    return *this;
  }
  Jet1 &operator-=(const Jet1 &o) {
    c0 -= o.c0;
    c1 -= o.c1;
    return *this;
  }
  Jet1 &operator*=(const Jet1 &o) {
    *this = *this * o;
    return *this;
  }
  bool operator==(const Jet1 &) const = default;

  // "1 - 3*h", "-h", "0"
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (c0 != 0) out = c0.str();
    if (c1 != 0) {
      std::string h = (c1 == 1) ? "h" : (c1 == -1) ? "-h" : c1.str() + "*h";
      if (out.empty()) {
        out = h;
      } else if (!h.empty() && h[0] == '-') {
        out += " - " + h.substr(1);
      } else {
        out += " + " + h;
      }
    }
    return out;
  }
};

inline bool ring_is_zero(const Jet1 &v) { return v.is_zero(); }
inline std::size_t ring_terms(const Jet1 &v) {
  return (v.c0 != 0 ? 1u : 0u) + (v.c1 != 0 ? 1u : 0u);
}
inline std::string ring_str(const Jet1 &v) { return v.to_string(); }
inline bool ring_leading_negative(const Jet1 &v) {
  return v.c0 != 0 ? v.c0 < 0 : v.c1 < 0;
}
inline Jet1 ring_exact_div_int(const Jet1 &v, long long m, const char *where) {
  return {exact_div(v.c0, m, where), exact_div(v.c1, m, where)};
}

}  // namespace braidinv
