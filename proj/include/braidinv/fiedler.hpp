#pragma once

#include <map>
#include <string>

#include "braidinv/bigint.hpp"
#include "braidinv/braid.hpp"

namespace braidinv {

// The state-sum invariant of a knot-closure braid, stored by bucket index m
// (1 <= m <= n-1) rather than by rendered exponent 2m - n, so half-integer
// exponents never appear.  Zero coefficients are dropped, so map equality is
// polynomial equality.
struct FiedlerPoly {
  int n = 1;
  std::map<int, Int> coeffs;

  bool operator==(const FiedlerPoly &) const = default;

  // Ascending exponents 2m - n: "X^-1 + X", "3", "0".
  std::string to_string() const;
};

// The strand that starts from the end of the overcrossing at crossing r:
// i_r for a positive crossing, i_r + 1 for a negative one.
int ascending_start(const BraidWord &beta, int r);

// Turns around the axis before the ascending strand of smoothed crossing r
// closes up: the cycle length of ascending_start under the smoothed one-pass
// permutation.  Always in [1, n-1] for knot closures.
int m_of_crossing(const BraidWord &beta, int r);

// Direct definition: each crossing contributes its sign to bucket m(r).
FiedlerPoly fiedler_statesum(const BraidWord &beta);

// Trace route: coefficients f_1..f_{n-1} read off the first-order expansion
// of the Burau matrix powers.
FiedlerPoly fiedler_from_burau(const BraidWord &beta);

struct RouteComparison {
  FiedlerPoly statesum;
  FiedlerPoly burau;
  bool match = false;
};

// Compute both routes and compare exactly.
RouteComparison compare_routes(const BraidWord &beta);

std::string render_fiedler(const FiedlerPoly &f);

}  // namespace braidinv
