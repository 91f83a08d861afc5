#include "braidinv/alexander.hpp"

#include <algorithm>

#include "braidinv/burau.hpp"

namespace braidinv {

BivariatePoly alexander_closed_braid_with_axis(const BraidWord &beta) {
  const XPoly<LaurentPoly> cp = charpoly_newton(burau_matrix(beta));
  return from_xpoly(cp.divide_by_one_minus_x());
}

BivariatePoly scramble_units(const BivariatePoly &delta, std::int64_t a,
                             std::int64_t b, int sign) {
  return delta.scaled_by_unit(a, b, sign);
}

RecoveryResult recover_fiedler_from_alexander(const BivariatePoly &delta, int n) {
  if (n < 1) throw domain_error("strand count must be at least 1");
  const BivariatePoly p = delta * one_minus_x_bivariate();
  const auto jets = p.jets_by_x();

  // Locate the h^0 support; for valid input it is {a, a+n} for the unknown
  // x-shift a, with values +-1 of opposite signs.
  std::int64_t lo = 0, hi = 0;
  bool have_h0 = false;
  for (const auto &[xe, j] : jets) {
    if (j.c0 == 0) continue;
    if (!have_h0) {
      lo = hi = xe;
      have_h0 = true;
    } else {
      lo = std::min(lo, xe);
      hi = std::max(hi, xe);
    }
  }
  const std::string reject =
      "cannot normalize the h^0 part to 1 - x^" + std::to_string(n) +
      ": not a knot-closure axis-link polynomial for n=" + std::to_string(n);
  if (!have_h0 || hi - lo != n) throw domain_error(reject);

  int sign;
  {
    const Int c_lo = jets.at(lo).c0;
    if (c_lo == 1)
      sign = 1;
    else if (c_lo == -1)
      sign = -1;
    else
      throw domain_error(reject);
  }
  // Verify the normalized h^0 part equals 1 - x^n exactly, and collect the
  // h^1 coefficients f_0..f_n along the way.
  std::vector<Int> f(static_cast<std::size_t>(n) + 1, Int(0));
  for (const auto &[xe, j] : jets) {
    const std::int64_t shifted = xe - lo;
    if (shifted < 0 || shifted > n)
      throw domain_error(reject);  // stray term outside x^0..x^n
    Int c0 = sign > 0 ? j.c0 : Int(-j.c0);
    const Int expected = (shifted == 0) ? Int(1) : (shifted == n ? Int(-1) : Int(0));
    if (c0 != expected) throw domain_error(reject);
    f[static_cast<std::size_t>(shifted)] = sign > 0 ? j.c1 : Int(-j.c1);
  }

  RecoveryResult res;
  res.n = n;
  res.f0 = f[0];
  res.fn = f[static_cast<std::size_t>(n)];
  res.fiedler.n = n;
  for (int m = 1; m <= n - 1; ++m)
    if (f[static_cast<std::size_t>(m)] != 0)
      res.fiedler.coeffs.emplace(m, f[static_cast<std::size_t>(m)]);
  return res;
}

GeneralLinkInvariant general_link_invariant(const BivariatePoly &delta, AxisVar axis) {
  const BivariatePoly d = (axis == AxisVar::x) ? delta : delta.with_swapped_vars();
  const auto jets = d.jets_by_x();
  bool a0_nonzero = false;
  for (const auto &[xe, j] : jets)
    if (j.c0 != 0) a0_nonzero = true;
  if (!a0_nonzero)
    throw domain_error("a0 is identically zero after the t = e^h substitution");

  // Normalize the x-power ambiguity: shift so the lowest exponent is zero.
  const std::int64_t base = jets.begin()->first;
  if (jets.rbegin()->first - base > 1000000)
    throw domain_error("x-degree span too large for the general link invariant");
  GeneralLinkInvariant inv;
  for (const auto &[xe, j] : jets) {
    const int e = static_cast<int>(xe - base);
    if (j.c0 != 0) inv.a0.set_coeff(e, j.c0);
    if (j.c1 != 0) inv.a1.set_coeff(e, j.c1);
  }

  const Int lead = inv.a0.coeff(inv.a0.degree());
  if (lead == 1 || lead == -1)
    inv.a1_reduced = xpoly_rem_by_unit_leading(inv.a1, inv.a0);
  return inv;
}

}  // namespace braidinv
