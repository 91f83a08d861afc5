#include <doctest.h>

#include "braidinv/fiedler.hpp"
#include "braidinv/verify.hpp"
#include "helpers.hpp"

using namespace braidinv;
using testutil::random_knot;

namespace {

FiedlerPoly make_fiedler(int n, std::map<int, Int> coeffs) {
  FiedlerPoly f;
  f.n = n;
  f.coeffs = std::move(coeffs);
  return f;
}

}  // namespace

TEST_CASE("ascending string starts at the end of the overcrossing") {
  CHECK(ascending_start(parse_braid_word("1", 2), 1) == 1);
  CHECK(ascending_start(parse_braid_word("-2", 3), 1) == 3);
  CHECK(ascending_start(parse_braid_word("-1", 2), 1) == 2);
  CHECK_THROWS_AS(ascending_start(parse_braid_word("1", 2), 2), domain_error);
}

TEST_CASE("m counts turns until the ascending string closes up") {
  const BraidWord b = parse_braid_word("1 2", 3);
  CHECK(m_of_crossing(b, 1) == 1);
  CHECK(m_of_crossing(b, 2) == 2);
  CHECK(m_of_crossing(parse_braid_word("1", 2), 1) == 1);
  CHECK_THROWS_AS(m_of_crossing(parse_braid_word("1", 3), 1), domain_error);
}

TEST_CASE("state sum on worked examples") {
  CHECK(fiedler_statesum(parse_braid_word("1 1 1")) == make_fiedler(2, {{1, 3}}));
  CHECK(fiedler_statesum(parse_braid_word("1 2")) == make_fiedler(3, {{1, 1}, {2, 1}}));
  CHECK(fiedler_statesum(parse_braid_word("", 1)) == make_fiedler(1, {}));
  CHECK_THROWS_AS(fiedler_statesum(parse_braid_word("1", 3)), domain_error);
}

TEST_CASE("trace route on worked examples") {
  CHECK(fiedler_from_burau(parse_braid_word("1", 2)) == make_fiedler(2, {{1, 1}}));
  CHECK(fiedler_from_burau(parse_braid_word("1 1 1")) == make_fiedler(2, {{1, 3}}));
  CHECK(fiedler_from_burau(parse_braid_word("1 2")) == make_fiedler(3, {{1, 1}, {2, 1}}));
  // The one-strand unknot is degenerate but accepted everywhere.
  CHECK(fiedler_from_burau(parse_braid_word("", 1)) == make_fiedler(1, {}));
  CHECK(compare_routes(parse_braid_word("", 1)).match);
}

TEST_CASE("rendering uses exponents 2m - n") {
  CHECK(make_fiedler(3, {{1, 1}, {2, 1}}).to_string() == "X^-1 + X");
  CHECK(make_fiedler(2, {{1, 3}}).to_string() == "3");
  CHECK(make_fiedler(4, {}).to_string() == "0");
  CHECK(make_fiedler(3, {{1, -1}, {2, -2}}).to_string() == "-X^-1 - 2*X");
  CHECK(make_fiedler(4, {{1, 2}, {3, 2}}).to_string() == "2*X^-2 + 2*X^2");
}

TEST_CASE("both routes agree on the worked examples and small random braids") {
  for (const char *word : {"1 1 1", "1 2", "1 1 1 2", "-1 -1 -1", "1 -2 1 -2"}) {
    const BraidWord b = parse_braid_word(word);
    if (!is_knot_closure(b)) continue;
    const auto rep = compare_routes(b);
    CHECK(rep.match);
    CHECK(rep.statesum == rep.burau);
  }
  std::mt19937_64 gen(67);
  for (int trial = 0; trial < 60; ++trial) {
    const BraidWord b = random_knot(gen, 2, 7, 1, 18);
    CHECK(compare_routes(b).match);
  }
}

TEST_CASE("both routes agree on every short two- and three-strand word") {
  // Exhaustive over words of length <= 5 here; the acceptance suite pushes
  // this to length 6.
  for (int n : {2, 3}) {
    VerifyOptions o;
    o.exhaustive = true;
    o.exhaustive_n = n;
    o.exhaustive_max_len = 5;
    o.seed = 9;
    const auto rep = run_verify(o);
    CHECK(rep.all_passed());
    CHECK(rep.cases > 0);
  }
}

TEST_CASE("exactly the odd-length two-strand words close to knots") {
  // In B_2 the closure is a knot iff the word length is odd, so lengths
  // 1, 3, 5 contribute 2 + 8 + 32 words.
  VerifyOptions o;
  o.exhaustive = true;
  o.exhaustive_n = 2;
  o.exhaustive_max_len = 6;
  o.seed = 9;
  const auto rep = run_verify(o);
  CHECK(rep.enumerated == 127);
  CHECK(rep.cases == 42);
  CHECK(rep.all_passed());
}

TEST_CASE("conjugation preserves the invariant") {
  std::mt19937_64 gen(71);
  for (int trial = 0; trial < 50; ++trial) {
    const BraidWord b = random_knot(gen, 2, 6, 1, 14);
    const BraidWord g =
        random_braid(b.strand_count(), static_cast<int>(draw_below(gen, 10)), gen(), false);
    CHECK(fiedler_statesum(conjugate(b, g)) == fiedler_statesum(b));
  }
}

TEST_CASE("bucket indices stay within 1..n-1 and buckets sum to the writhe") {
  std::mt19937_64 gen(73);
  for (int trial = 0; trial < 50; ++trial) {
    const BraidWord b = random_knot(gen, 2, 7, 1, 16);
    const int n = b.strand_count();
    for (int r = 1; r <= b.length(); ++r) {
      const int m = m_of_crossing(b, r);
      CHECK(m >= 1);
      CHECK(m <= n - 1);
    }
    const FiedlerPoly f = fiedler_statesum(b);
    Int sum = 0;
    for (const auto &[m, c] : f.coeffs) {
      sum += c;
      Int mirror = 0;
      if (auto it = f.coeffs.find(n - m); it != f.coeffs.end()) mirror = it->second;
      CHECK(c == mirror);  // symmetry c_m == c_{n-m}
    }
    CHECK(sum == writhe(b));
  }
}

TEST_CASE("the smoothed pass never exchanges the two crossing strands") {
  std::mt19937_64 gen(79);
  for (int trial = 0; trial < 40; ++trial) {
    const BraidWord b = random_knot(gen, 2, 6, 1, 14);
    const int n = b.strand_count();
    for (int r = 1; r <= b.length(); ++r) {
      const Permutation tau = smoothed_pass_permutation(b, r);
      int pa = b.letter(r).index;
      int pb = pa + 1;
      const int a0 = pa, b0 = pb;
      for (int m = 1; m <= n - 1; ++m) {
        pa = tau.apply(pa);
        pb = tau.apply(pb);
        CHECK(pa != b0);
        CHECK(pb != a0);
      }
    }
  }
}

TEST_CASE("the invariant is unchanged by braid moves") {
  std::mt19937_64 gen(83);
  int checked_cancel = 0, checked_relation = 0;
  for (int trial = 0; trial < 600 && (checked_cancel < 40 || checked_relation < 40);
       ++trial) {
    const int n = static_cast<int>(draw_range(gen, 2, 5));
    const BraidWord b = random_braid(n, static_cast<int>(draw_range(gen, 1, 12)), gen(), false);

    // Insert a canceling pair sigma_i sigma_i^-1 at a random position.
    if (is_knot_closure(b) && checked_cancel < 40) {
      const int i = static_cast<int>(draw_range(gen, 1, n - 1));
      const int s = draw_below(gen, 2) == 0 ? 1 : -1;
      const auto pos = draw_below(gen, static_cast<std::uint64_t>(b.length()) + 1);
      std::vector<BraidLetter> letters = b.letters();
      letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(pos), {{i, s}, {i, -s}});
      CHECK(fiedler_statesum(BraidWord(n, std::move(letters))) == fiedler_statesum(b));
      ++checked_cancel;
    }

    // Replace sigma_i sigma_{i+1} sigma_i by sigma_{i+1} sigma_i sigma_{i+1}.
    if (n >= 3 && checked_relation < 40) {
      const int i = static_cast<int>(draw_range(gen, 1, n - 2));
      const auto pos = draw_below(gen, static_cast<std::uint64_t>(b.length()) + 1);
      std::vector<BraidLetter> w1 = b.letters(), w2 = b.letters();
      const auto at = w1.begin() + static_cast<std::ptrdiff_t>(pos);
      w1.insert(at, {{i, 1}, {i + 1, 1}, {i, 1}});
      const auto at2 = w2.begin() + static_cast<std::ptrdiff_t>(pos);
      w2.insert(at2, {{i + 1, 1}, {i, 1}, {i + 1, 1}});
      const BraidWord b1(n, std::move(w1)), b2(n, std::move(w2));
      if (!is_knot_closure(b1)) continue;
      CHECK(fiedler_statesum(b1) == fiedler_statesum(b2));
      ++checked_relation;
    }
  }
  CHECK(checked_cancel >= 40);
  CHECK(checked_relation >= 40);
}
