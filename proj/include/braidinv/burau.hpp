#pragma once

#include <vector>

#include "braidinv/braid.hpp"
#include "braidinv/jet.hpp"
#include "braidinv/laurent.hpp"
#include "braidinv/matrix.hpp"
#include "braidinv/xpoly.hpp"

namespace braidinv {

// The Burau representation B_n -> GL(n, Z[t^{+-1}]), with the positive
// generator acting on rows/columns {i, i+1} by the block
//
//     [ 1-t  t ]                [ 0      1       ]
//     [ 1    0 ]   and inverse  [ t^-1   1-t^-1  ].
//
Matrix<LaurentPoly> burau_generator(int i, int sign, int n);
Matrix<LaurentPoly> burau_matrix(const BraidWord &beta);

// First-order expansion at t = e^h: a generator becomes the transposition
// matrix plus h times a two-entry nilpotent block.
Matrix<Jet1> burau_jet_generator(int i, int sign, int n);
Matrix<Jet1> burau_jet_matrix(const BraidWord &beta);

// p_m = trace(M^m) for m = 1..max_m (index m-1), by iterated multiplication.
template <class R>
std::vector<R> power_sum_traces(const Matrix<R> &m, int max_m) {
  if (max_m < 1) throw domain_error("power_sum_traces requires max_m >= 1");
  std::vector<R> out;
  out.reserve(static_cast<std::size_t>(max_m));
  Matrix<R> pw = m;
  out.push_back(pw.trace());
  for (int j = 2; j <= max_m; ++j) {
    pw = pw * m;
    out.push_back(pw.trace());
  }
  return out;
}

// det(I - xM) = 1 + b_1 x + ... + b_n x^n via Newton's identities:
//   m e_m = sum_{i=1..m} (-1)^{i-1} e_{m-i} p_i,    b_m = (-1)^m e_m,
// with every division by m exact in the coefficient ring.
template <class R>
XPoly<R> charpoly_newton(const Matrix<R> &m) {
  const int n = m.size();
  const auto p = power_sum_traces(m, n);
  std::vector<R> e(static_cast<std::size_t>(n) + 1, R(0));
  e[0] = R(1);
  XPoly<R> out;
  out.set_coeff(0, R(1));
  for (int k = 1; k <= n; ++k) {
    R acc = R(0);
    for (int i = 1; i <= k; ++i) {
      R term = e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i - 1)];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    e[static_cast<std::size_t>(k)] = ring_exact_div_int(acc, k, "charpoly_newton");
    out.set_coeff(k, (k % 2 == 1) ? -e[static_cast<std::size_t>(k)]
                                  : e[static_cast<std::size_t>(k)]);
  }
  return out;
}

namespace detail {

template <class T>
T det_cofactor(const std::vector<T> &a, int n) {
  if (n == 1) return a[0];
  T det = T(0);
  std::vector<T> minor(static_cast<std::size_t>(n - 1) * (n - 1), T(0));
  for (int col = 0; col < n; ++col) {
    if (ring_is_zero(a[static_cast<std::size_t>(col)])) continue;
    for (int i = 1; i < n; ++i) {
      int out_j = 0;
      for (int j = 0; j < n; ++j) {
        if (j == col) continue;
        minor[static_cast<std::size_t>(i - 1) * (n - 1) + out_j] =
            a[static_cast<std::size_t>(i) * n + j];
        ++out_j;
      }
    }
    T term = a[static_cast<std::size_t>(col)] * det_cofactor(minor, n - 1);
    if (col % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

}  // namespace detail

// Independent oracle for charpoly_newton: det(I - xM) by recursive cofactor
// expansion.  Exponential in n, so capped at n <= 5.
template <class R>
XPoly<R> charpoly_cofactor(const Matrix<R> &m) {
  const int n = m.size();
  if (n > 5) throw domain_error("charpoly_cofactor is limited to n <= 5");
  std::vector<XPoly<R>> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      XPoly<R> entry;
      if (i == j) entry.set_coeff(0, R(1));
      entry.set_coeff(1, entry.coeff(1) - m.at(i, j));
      a[static_cast<std::size_t>(i) * n + j] = std::move(entry);
    }
  return detail::det_cofactor(a, n);
}

XPoly<Jet1> to_jet(const XPoly<LaurentPoly> &p);

// h^0 and h^1 parts of a polynomial in x over Jet1.
struct JetParts {
  XPoly<Int> a0;
  XPoly<Int> a1;
};
JetParts jet_parts(const XPoly<Jet1> &p);

// f_m for 1 <= m <= n-1 from trace(B(e^h)^m) = -m f_m h + O(h^2); requires a
// knot closure (otherwise the h^0 traces need not vanish).
std::vector<Int> f_from_traces(const BraidWord &beta);

// b_n(t) == (-1)^n (-t)^{w}, i.e. det B(t) == (-t)^{w(beta)}.
bool verify_determinant(const BraidWord &beta);

}  // namespace braidinv
