#include "braidinv/bivariate.hpp"

#include <cctype>
#include <limits>

namespace braidinv {

void BivariatePoly::add_term(std::int64_t xe, std::int64_t te, const Int &c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Key{xe, te}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly out;
  for (const auto &[k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

BivariatePoly &BivariatePoly::operator+=(const BivariatePoly &o) {
  for (const auto &[k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BivariatePoly &BivariatePoly::operator-=(const BivariatePoly &o) {
  for (const auto &[k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BivariatePoly operator*(const BivariatePoly &a, const BivariatePoly &b) {
  BivariatePoly out;
  for (const auto &[ka, ca] : a.terms_)
    for (const auto &[kb, cb] : b.terms_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

BivariatePoly BivariatePoly::scaled_by_unit(std::int64_t a, std::int64_t b, int sign) const {
  if (sign != 1 && sign != -1) throw domain_error("unit sign must be +1 or -1");
  BivariatePoly out;
  for (const auto &[k, c] : terms_)
    out.terms_.emplace(Key{k.first + a, k.second + b}, sign > 0 ? c : Int(-c));
  return out;
}

BivariatePoly BivariatePoly::with_swapped_vars() const {
  BivariatePoly out;
  for (const auto &[k, c] : terms_) out.add_term(k.second, k.first, c);
  return out;
}

std::map<std::int64_t, Jet1> BivariatePoly::jets_by_x() const {
  std::map<std::int64_t, Jet1> out;
  for (const auto &[k, c] : terms_) {
    Jet1 &j = out[k.first];
    j.c0 += c;
    j.c1 += c * Int(k.second);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto &[k, c] : terms_) {
    const bool neg = c < 0;
    Int abs_c = neg ? Int(-c) : c;
    std::string mono;
    if (k.second != 0)
      mono = (k.second == 1) ? "t" : "t^" + std::to_string(k.second);
    if (k.first != 0) {
      if (!mono.empty()) mono += "*";
      mono += (k.first == 1) ? "x" : "x^" + std::to_string(k.first);
    }
    std::string body;
    if (mono.empty())
      body = abs_c.str();
    else
      body = (abs_c == 1) ? mono : abs_c.str() + "*" + mono;
    if (first) {
      out = neg ? "-" + body : body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

BivariatePoly from_xpoly(const XPoly<LaurentPoly> &p) {
  BivariatePoly out;
  for (int i = 0; i <= p.degree(); ++i) {
    const LaurentPoly c = p.coeff(i);
    for (const auto &[e, v] : c.terms()) out.add_term(i, e, v);
  }
  return out;
}

BivariatePoly one_minus_x_bivariate() {
  BivariatePoly p(1);
  p.add_term(1, 0, Int(-1));
  return p;
}

namespace {

struct Lexer {
  const std::string &s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    skip_ws();
    return s[pos++];
  }

  Int read_integer() {
    skip_ws();
    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      digits += s[pos++];
    if (digits.empty())
      throw parse_error("expected an integer at position " + std::to_string(pos) +
                        " in polynomial text");
    return Int(digits);
  }

  std::int64_t read_exponent() {
    skip_ws();
    long long sign = 1;
    if (peek() == '+' || peek() == '-') sign = (take() == '-') ? -1 : 1;
    Int v = read_integer();
    if (v > std::numeric_limits<std::int64_t>::max() / 2)
      throw parse_error("exponent out of range in polynomial text");
    return sign * v.convert_to<std::int64_t>();
  }
};

}  // namespace

BivariatePoly parse_bivariate(const std::string &text) {
  Lexer lex{text};
  BivariatePoly out;
  if (lex.eof()) throw parse_error("empty polynomial text");
  bool first_term = true;
  while (!lex.eof()) {
    int sign = 1;
    char c = lex.peek();
    if (c == '+' || c == '-') {
      sign = (lex.take() == '-') ? -1 : 1;
    } else if (!first_term) {
      throw parse_error(std::string("expected '+' or '-' before term, got '") + c + "'");
    }
    first_term = false;

    Int coeff = sign;
    std::int64_t xe = 0, te = 0;
    bool saw_factor = false;
    bool explicit_star = true;  // the first factor never needs a '*'
    bool last_was_int = false;
    for (;;) {
      char f = lex.peek();
      if (f == '*') {
        lex.take();
        explicit_star = true;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(f))) {
        // "2x" and "t^3x" are fine, but "1 2" needs an explicit '*'.
        if (last_was_int && !explicit_star)
          throw parse_error("missing '*' between numeric factors in polynomial text");
        coeff *= lex.read_integer();
        last_was_int = true;
      } else if (f == 'x' || f == 't') {
        lex.take();
        std::int64_t e = 1;
        if (lex.peek() == '^') {
          lex.take();
          e = lex.read_exponent();
        }
        (f == 'x' ? xe : te) += e;
        last_was_int = false;
      } else {
        break;
      }
      saw_factor = true;
      explicit_star = false;
    }
    if (!saw_factor) {
      throw parse_error(std::string("expected a term, got '") + lex.peek() +
                        "' in polynomial text");
    }
    out.add_term(xe, te, coeff);
  }
  return out;
}

LaurentPoly parse_laurent(const std::string &text) {
  const BivariatePoly p = parse_bivariate(text);
  LaurentPoly out;
  for (const auto &[k, c] : p.terms()) {
    if (k.first != 0)
      throw parse_error("unexpected variable x in a polynomial in t only");
    out.add_term(k.second, c);
  }
  return out;
}

}  // namespace braidinv
