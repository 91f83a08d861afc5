#pragma once

#include <random>

#include "braidinv/bivariate.hpp"
#include "braidinv/braid.hpp"
#include "braidinv/jet.hpp"
#include "braidinv/laurent.hpp"
#include "braidinv/rng.hpp"
#include "braidinv/xpoly.hpp"

namespace braidinv::testutil {

inline LaurentPoly random_laurent(std::mt19937_64 &gen, int max_terms = 6) {
  LaurentPoly p;
  const auto terms = draw_below(gen, static_cast<std::uint64_t>(max_terms) + 1);
  for (std::uint64_t i = 0; i < terms; ++i)
    p.add_term(draw_range(gen, -6, 6), Int(draw_range(gen, -9, 9)));
  return p;
}

inline Jet1 random_jet(std::mt19937_64 &gen) {
  return {Int(draw_range(gen, -9, 9)), Int(draw_range(gen, -9, 9))};
}

inline XPoly<Int> random_xpoly_int(std::mt19937_64 &gen, int max_deg = 4) {
  XPoly<Int> p;
  for (int i = 0; i <= max_deg; ++i)
    p.set_coeff(i, Int(draw_range(gen, -9, 9)));
  return p;
}

inline BivariatePoly random_bivariate(std::mt19937_64 &gen, int max_terms = 8) {
  BivariatePoly p;
  const auto terms = draw_below(gen, static_cast<std::uint64_t>(max_terms) + 1);
  for (std::uint64_t i = 0; i < terms; ++i)
    p.add_term(draw_range(gen, -5, 5), draw_range(gen, -5, 5),
               Int(draw_range(gen, -9, 9)));
  return p;
}

// A random knot-closure braid, redrawing (n, k) on every attempt.
inline BraidWord random_knot(std::mt19937_64 &gen, int n_min, int n_max, int len_min,
                             int len_max) {
  for (;;) {
    const int n = static_cast<int>(draw_range(gen, n_min, n_max));
    const int k = static_cast<int>(draw_range(gen, len_min, len_max));
    std::vector<BraidLetter> letters;
    for (int j = 0; j < k; ++j) {
      const auto r = draw_below(gen, 2ull * static_cast<unsigned>(n - 1));
      letters.push_back({static_cast<int>(r / 2) + 1, (r % 2 == 0) ? 1 : -1});
    }
    BraidWord w(n, std::move(letters));
    if (is_knot_closure(w)) return w;
  }
}

}  // namespace braidinv::testutil
