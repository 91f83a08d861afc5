#include "braidinv/fiedler.hpp"

#include "braidinv/burau.hpp"

namespace braidinv {

std::string FiedlerPoly::to_string() const {
  if (coeffs.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto &[m, c] : coeffs) {  // ascending m means ascending 2m - n
    const int exp = 2 * m - n;
    const bool neg = c < 0;
    Int abs_c = neg ? Int(-c) : c;
    std::string body;
    if (exp == 0) {
      body = abs_c.str();
    } else {
      std::string xpart = (exp == 1) ? "X" : "X^" + std::to_string(exp);
      body = (abs_c == 1) ? xpart : abs_c.str() + "*" + xpart;
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

int ascending_start(const BraidWord &beta, int r) {
  const BraidLetter &l = beta.letter(r);  // validates r
  return l.sign > 0 ? l.index : l.index + 1;
}

int m_of_crossing(const BraidWord &beta, int r) {
  require_knot_closure(beta);
  const Permutation tau = smoothed_pass_permutation(beta, r);
  return tau.cycle_length_of(ascending_start(beta, r));
}

FiedlerPoly fiedler_statesum(const BraidWord &beta) {
  require_knot_closure(beta);
  FiedlerPoly f;
  f.n = beta.strand_count();
  for (int r = 1; r <= beta.length(); ++r) {
    const int m = m_of_crossing(beta, r);
    auto it = f.coeffs.emplace(m, 0).first;
    it->second += beta.letter(r).sign;
    if (it->second == 0) f.coeffs.erase(it);
  }
  return f;
}

FiedlerPoly fiedler_from_burau(const BraidWord &beta) {
  FiedlerPoly f;
  f.n = beta.strand_count();
  const auto fm = f_from_traces(beta);  // checks the knot precondition
  for (int m = 1; m <= static_cast<int>(fm.size()); ++m)
    if (fm[static_cast<std::size_t>(m - 1)] != 0)
      f.coeffs.emplace(m, fm[static_cast<std::size_t>(m - 1)]);
  return f;
}

RouteComparison compare_routes(const BraidWord &beta) {
  RouteComparison rep;
  rep.statesum = fiedler_statesum(beta);
  rep.burau = fiedler_from_burau(beta);
  rep.match = rep.statesum == rep.burau;
  return rep;
}

std::string render_fiedler(const FiedlerPoly &f) { return f.to_string(); }

}  // namespace braidinv
