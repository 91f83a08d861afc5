#include "braidinv/laurent.hpp"

#include <vector>

namespace braidinv {

std::int64_t LaurentPoly::min_exp() const {
  if (terms_.empty()) throw internal_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_exp() const {
  if (terms_.empty()) throw internal_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(std::int64_t exp, const Int &c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto &[e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o) {
  for (const auto &[e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o) {
  for (const auto &[e, c] : o.terms_) add_term(e, -c);
  return *this;
}

void LaurentPoly::add_mul(const LaurentPoly &a, const LaurentPoly &b) {
  if (a.is_zero() || b.is_zero()) return;
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_) add_term(ea + eb, ca * cb);
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  // Dense accumulation over the exponent span when it is small enough;
  // user-supplied polynomials can have arbitrary exponents, so fall back to
  // map accumulation on wide spans.
  const std::int64_t lo = a.min_exp() + b.min_exp();
  const std::int64_t hi = a.max_exp() + b.max_exp();
  const std::int64_t span = hi - lo + 1;
  if (span > 0 && span <= (1 << 20)) {
    std::vector<Int> buf(static_cast<std::size_t>(span));
    for (const auto &[ea, ca] : a.terms())
      for (const auto &[eb, cb] : b.terms())
        buf[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
    for (std::int64_t i = 0; i < span; ++i)
      if (buf[static_cast<std::size_t>(i)] != 0)
        out.terms_.emplace(lo + i, std::move(buf[static_cast<std::size_t>(i)]));
  } else {
    out.add_mul(a, b);
  }
  return out;
}

Int LaurentPoly::eval_at_one() const {
  Int s = 0;
  for (const auto &[e, c] : terms_) s += c;
  return s;
}

Int LaurentPoly::derivative_at_one() const {
  Int s = 0;
  for (const auto &[e, c] : terms_) s += Int(e) * c;
  return s;
}

LaurentPoly LaurentPoly::exact_div_int(long long m, const char *where) const {
  LaurentPoly out;
  for (const auto &[e, c] : terms_) out.terms_.emplace(e, exact_div(c, m, where));
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    const bool neg = c < 0;
    Int abs_c = neg ? Int(-c) : c;
    std::string body;
    if (e == 0) {
      body = abs_c.str();
    } else {
      std::string tpart = (e == 1) ? "t" : "t^" + std::to_string(e);
      body = (abs_c == 1) ? tpart : abs_c.str() + "*" + tpart;
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

}  // namespace braidinv
