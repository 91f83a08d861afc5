#pragma once

#include <optional>

#include "braidinv/bivariate.hpp"
#include "braidinv/braid.hpp"
#include "braidinv/fiedler.hpp"
#include "braidinv/xpoly.hpp"

namespace braidinv {

// 2-variable Alexander polynomial of the closed braid together with its
// axis: det(I - xB(t)) divided exactly by (1 - x).  Defined for any braid
// closure, not just knots.
BivariatePoly alexander_closed_braid_with_axis(const BraidWord &beta);

// sign * x^a * t^b * delta: the unit ambiguity an Alexander polynomial is
// defined up to.
BivariatePoly scramble_units(const BivariatePoly &delta, std::int64_t a,
                             std::int64_t b, int sign);

struct RecoveryResult {
  FiedlerPoly fiedler;
  Int f0;
  Int fn;
  int n = 1;
};

// Recover the state-sum invariant from an axis-link Alexander polynomial
// given only up to units: multiply by (1 - x), expand t = e^h to first
// order, normalize the h^0 part to exactly 1 - x^n by a unique power of x
// and sign, then read f_0..f_n off the h^1 part.  f_1..f_{n-1} are
// independent of the unit scramble; a leftover t^b shifts f_0 by +b and
// f_n by -b, so f_0 + f_n is preserved.
RecoveryResult recover_fiedler_from_alexander(const BivariatePoly &delta, int n);

enum class AxisVar { x, t };

struct GeneralLinkInvariant {
  XPoly<Int> a0;
  XPoly<Int> a1;
  // Present only when a0 has leading coefficient +-1; the remainder of a1
  // modulo a0 is then integral.  Otherwise no canonical representative of
  // the quotient exists and the unreduced pair is all that is returned.
  std::optional<XPoly<Int>> a1_reduced;
};

// For a general 2-component link polynomial: substitute t = e^h, keep
// a0(x) + a1(x) h, and reduce a1 modulo the ideal generated by a0.  Powers
// of x are normalized so the lowest exponent is zero (unit ambiguity).
GeneralLinkInvariant general_link_invariant(const BivariatePoly &delta,
                                            AxisVar axis = AxisVar::x);

}  // namespace braidinv
