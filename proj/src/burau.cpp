#include "braidinv/burau.hpp"

namespace braidinv {

namespace {

void check_generator_index(int i, int n) {
  if (n < 2 || i < 1 || i > n - 1)
    throw domain_error("generator index " + std::to_string(i) + " out of range for n=" +
                       std::to_string(n));
}

}  // namespace

Matrix<LaurentPoly> burau_generator(int i, int sign, int n) {
  check_generator_index(i, n);
  auto m = Matrix<LaurentPoly>::identity(n);
  const int a = i - 1;  // 0-based row/col of the block
  if (sign > 0) {
    m.at(a, a) = LaurentPoly(1) - LaurentPoly::t();
    m.at(a, a + 1) = LaurentPoly::t();
    m.at(a + 1, a) = LaurentPoly(1);
    m.at(a + 1, a + 1) = LaurentPoly(0);
  } else {
    m.at(a, a) = LaurentPoly(0);
    m.at(a, a + 1) = LaurentPoly(1);
    m.at(a + 1, a) = LaurentPoly::t(-1);
    m.at(a + 1, a + 1) = LaurentPoly(1) - LaurentPoly::t(-1);
  }
  return m;
}

Matrix<LaurentPoly> burau_matrix(const BraidWord &beta) {
  auto m = Matrix<LaurentPoly>::identity(beta.strand_count());
  for (const auto &l : beta.letters())
    m = m * burau_generator(l.index, l.sign, beta.strand_count());
  return m;
}

Matrix<Jet1> burau_jet_generator(int i, int sign, int n) {
  check_generator_index(i, n);
  auto m = Matrix<Jet1>::identity(n);
  const int a = i - 1;
  // h^0 part: the transposition matrix for (i, i+1).
  m.at(a, a) = Jet1(0);
  m.at(a, a + 1) = Jet1(1);
  m.at(a + 1, a) = Jet1(1);
  m.at(a + 1, a + 1) = Jet1(0);
  if (sign > 0) {
    m.at(a, a) += Jet1(Int(0), Int(-1));
    m.at(a, a + 1) += Jet1(Int(0), Int(1));
  } else {
    m.at(a + 1, a) += Jet1(Int(0), Int(-1));
    m.at(a + 1, a + 1) += Jet1(Int(0), Int(1));
  }
  return m;
}

Matrix<Jet1> burau_jet_matrix(const BraidWord &beta) {
  auto m = Matrix<Jet1>::identity(beta.strand_count());
  for (const auto &l : beta.letters())
    m = m * burau_jet_generator(l.index, l.sign, beta.strand_count());
  return m;
}

XPoly<Jet1> to_jet(const XPoly<LaurentPoly> &p) {
  XPoly<Jet1> out;
  for (int i = 0; i <= p.degree(); ++i) out.set_coeff(i, p.coeff(i).to_jet());
  return out;
}

JetParts jet_parts(const XPoly<Jet1> &p) {
  JetParts parts;
  for (int i = 0; i <= p.degree(); ++i) {
    const Jet1 c = p.coeff(i);
    if (c.c0 != 0) parts.a0.set_coeff(i, c.c0);
    if (c.c1 != 0) parts.a1.set_coeff(i, c.c1);
  }
  return parts;
}

std::vector<Int> f_from_traces(const BraidWord &beta) {
  require_knot_closure(beta);
  const int n = beta.strand_count();
  std::vector<Int> f;
  if (n <= 1) return f;
  const auto traces = power_sum_traces(burau_jet_matrix(beta), n - 1);
  f.reserve(static_cast<std::size_t>(n - 1));
  for (int m = 1; m <= n - 1; ++m) {
    const Jet1 &p = traces[static_cast<std::size_t>(m - 1)];
    // The m-th power of an n-cycle fixes nothing for m < n, so the h^0 part
    // of the trace must vanish.
    if (p.c0 != 0)
      throw internal_error("h^0 trace of power " + std::to_string(m) +
                           " is nonzero for a knot closure: " + p.c0.str());
    f.push_back(exact_div(-p.c1, m, "f_from_traces"));
  }
  return f;
}

bool verify_determinant(const BraidWord &beta) {
  const int n = beta.strand_count();
  const int w = writhe(beta);
  const auto cp = charpoly_newton(burau_matrix(beta));
  const bool odd = ((n + w) % 2 + 2) % 2 == 1;
  const LaurentPoly expected = LaurentPoly::monomial(odd ? -1 : 1, w);
  return cp.coeff(n) == expected;
}

}  // namespace braidinv
