#include "braidinv/verify.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "braidinv/alexander.hpp"
#include "braidinv/burau.hpp"
#include "braidinv/fiedler.hpp"
#include "braidinv/rng.hpp"

namespace braidinv {

namespace {

constexpr int kConjugatorMaxLen = 10;
constexpr int kScrambleRange = 5;

std::string xpoly_str(const XPoly<Int> &p) { return p.to_string(); }

BraidWord random_knot_case(std::mt19937_64 &gen, const VerifyOptions &o) {
  constexpr int kMaxAttempts = 10000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const int n = static_cast<int>(draw_range(gen, o.n_min, o.n_max));
    const int k = static_cast<int>(draw_range(gen, o.len_min, o.len_max));
    std::vector<BraidLetter> letters;
    letters.reserve(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      const auto r = draw_below(gen, 2ull * static_cast<unsigned>(n - 1));
      letters.push_back({static_cast<int>(r / 2) + 1, (r % 2 == 0) ? 1 : -1});
    }
    BraidWord w(n, std::move(letters));
    if (is_knot_closure(w)) return w;
  }
  throw domain_error(
      "no knot-closure braid found in 10000 samples for n=" + std::to_string(o.n_min) +
      ".." + std::to_string(o.n_max) + ", len=" + std::to_string(o.len_min) + ".." +
      std::to_string(o.len_max));
}

BraidWord random_conjugator(std::mt19937_64 &gen, int n) {
  const int len = static_cast<int>(draw_below(gen, kConjugatorMaxLen + 1));
  std::vector<BraidLetter> letters;
  if (n >= 2) {
    letters.reserve(static_cast<std::size_t>(len));
    for (int j = 0; j < len; ++j) {
      const auto r = draw_below(gen, 2ull * static_cast<unsigned>(n - 1));
      letters.push_back({static_cast<int>(r / 2) + 1, (r % 2 == 0) ? 1 : -1});
    }
  }
  return BraidWord(n, std::move(letters));
}

// Words of length 0..max_len over the 2(n-1)-letter alphabet, decoded from a
// flat index.
std::uint64_t exhaustive_total(int n, int max_len) {
  const std::uint64_t a = 2ull * static_cast<unsigned>(n - 1);
  std::uint64_t total = 0, pw = 1;
  for (int l = 0; l <= max_len; ++l) {
    total += pw;
    pw *= a;
  }
  return total;
}

BraidWord exhaustive_word(int n, int max_len, std::uint64_t index) {
  const std::uint64_t a = 2ull * static_cast<unsigned>(n - 1);
  std::uint64_t pw = 1;
  int len = 0;
  while (index >= pw && len <= max_len) {
    index -= pw;
    pw *= a;
    ++len;
  }
  std::vector<BraidLetter> letters(static_cast<std::size_t>(len));
  for (int j = 0; j < len; ++j) {
    const auto digit = index % a;
    index /= a;
    letters[static_cast<std::size_t>(j)] = {static_cast<int>(digit / 2) + 1,
                                            (digit % 2 == 0) ? 1 : -1};
  }
  return BraidWord(n, std::move(letters));
}

}  // namespace

std::vector<CheckFailure> run_case_checks(const BraidWord &beta, std::mt19937_64 &aux,
                                          std::vector<std::string> *checks_run) {
  std::vector<CheckFailure> fails;
  auto check = [&](const char *name, bool ok, std::string expected, std::string got) {
    if (checks_run) checks_run->push_back(name);
    if (!ok) fails.push_back({name, std::move(expected), std::move(got)});
  };

  const int n = beta.strand_count();
  const int w = writhe(beta);
  const int k = beta.length();

  // Both routes to the invariant.
  const FiedlerPoly fs = fiedler_statesum(beta);
  const FiedlerPoly fb = fiedler_from_burau(beta);
  check("routes_agree", fs == fb, fs.to_string(), fb.to_string());

  // Exact characteristic polynomial, computed once and reused below.
  const auto cp = charpoly_newton(burau_matrix(beta));

  {
    const bool odd = ((n + w) % 2 + 2) % 2 == 1;
    const LaurentPoly expected = LaurentPoly::monomial(odd ? -1 : 1, w);
    check("determinant", cp.coeff(n) == expected, expected.to_string(),
          cp.coeff(n).to_string());
  }

  const auto cp_jet = to_jet(cp);
  const auto parts = jet_parts(cp_jet);
  {
    const auto expected = one_minus_x_pow<Int>(n);
    check("a0_identity", parts.a0 == expected, xpoly_str(expected), xpoly_str(parts.a0));
    check("fn_writhe", parts.a1.coeff(n) == -w && parts.a1.coeff(0) == 0,
          "f0=0, fn=" + Int(-w).str(),
          "f0=" + parts.a1.coeff(0).str() + ", fn=" + parts.a1.coeff(n).str());
  }
  {
    const auto cp_jet_direct = charpoly_newton(burau_jet_matrix(beta));
    check("jet_consistency", cp_jet_direct == cp_jet, cp_jet.to_string(),
          cp_jet_direct.to_string());
  }
  {
    const auto fm = f_from_traces(beta);
    bool ok = true;
    for (int m = 1; m <= n - 1; ++m)
      ok = ok && fm[static_cast<std::size_t>(m - 1)] == parts.a1.coeff(m);
    check("f_two_routes", ok, "trace route == jet charpoly coefficients", "mismatch");
  }

  {
    bool sym = true;
    Int sum = 0;
    for (const auto &[m, c] : fs.coeffs) {
      sum += c;
      Int other = 0;
      if (auto it = fs.coeffs.find(n - m); it != fs.coeffs.end()) other = it->second;
      sym = sym && c == other;
    }
    check("symmetry", sym, "c_m == c_{n-m}", fs.to_string());
    check("crossing_sum", sum == w, Int(w).str(), sum.str());
  }

  {
    bool m_ok = true, excl_ok = true;
    for (int r = 1; r <= k; ++r) {
      const Permutation tau = smoothed_pass_permutation(beta, r);
      const int a = beta.letter(r).index;
      const int b = a + 1;
      int pa = a, pb = b;
      for (int m = 1; m <= n - 1; ++m) {
        pa = tau.apply(pa);
        pb = tau.apply(pb);
        if (pa == b || pb == a) excl_ok = false;
      }
      const int mr = tau.cycle_length_of(ascending_start(beta, r));
      if (mr < 1 || mr > n - 1) m_ok = false;
    }
    check("m_range", m_ok, "1 <= m(r) <= n-1", "out of range");
    check("exclusion", excl_ok, "smoothed pass never swaps i_r and i_r+1", "swapped");
  }

  check("writhe_parity", ((w - (n - 1)) % 2 + 2) % 2 == 0,
        "w == n-1 (mod 2)", "w=" + std::to_string(w) + ", n=" + std::to_string(n));

  {
    const BraidWord gamma = random_conjugator(aux, n);
    const FiedlerPoly fc = fiedler_statesum(conjugate(beta, gamma));
    check("conjugacy", fc == fs, fs.to_string(), fc.to_string());
  }

  {
    const BivariatePoly delta = from_xpoly(cp.divide_by_one_minus_x());
    const std::int64_t sa = draw_range(aux, -kScrambleRange, kScrambleRange);
    const std::int64_t sb = draw_range(aux, -kScrambleRange, kScrambleRange);
    const int ss = draw_below(aux, 2) == 0 ? 1 : -1;
    const RecoveryResult rec =
        recover_fiedler_from_alexander(scramble_units(delta, sa, sb, ss), n);
    check("recovery", rec.fiedler == fs, fs.to_string(), rec.fiedler.to_string());
    bool f_ok = rec.f0 + rec.fn == -w;
    if (sb == 0) f_ok = f_ok && rec.f0 == 0 && rec.fn == -w;
    check("recovery_f0_fn", f_ok, "f0 + fn = " + Int(-w).str(),
          "f0=" + rec.f0.str() + ", fn=" + rec.fn.str());

    const GeneralLinkInvariant inv = general_link_invariant(delta);
    const auto geo = geometric_sum<Int>(n);
    check("axis_a0", inv.a0 == geo, xpoly_str(geo), xpoly_str(inv.a0));
    if (inv.a0 == geo && inv.a1_reduced) {
      // The f-coefficient polynomial a1 of det(I - xB(e^h)) is (1 - x) times
      // the a1 of the axis-link polynomial, so the two reductions mod a0
      // agree only after multiplying the reduced form back by (1 - x).
      XPoly<Int> one_minus_x;
      one_minus_x.set_coeff(0, Int(1));
      one_minus_x.set_coeff(1, Int(-1));
      const auto lhs = xpoly_rem_by_unit_leading(one_minus_x * *inv.a1_reduced, geo);
      const auto rhs = xpoly_rem_by_unit_leading(parts.a1, geo);
      check("general_link_mod", lhs == rhs, xpoly_str(rhs), xpoly_str(lhs));
    }
  }

  if (n <= 5) {
    const auto oracle = charpoly_cofactor(burau_matrix(beta));
    check("charpoly_oracle", oracle == cp, "cofactor route == newton route", "mismatch");
  }

  return fails;
}

namespace {

void evaluate_case(CaseResult &out, const VerifyOptions &o) {
  std::mt19937_64 gen(out.seed);
  try {
    BraidWord beta(1, {});
    if (o.exhaustive) {
      beta = exhaustive_word(o.exhaustive_n, o.exhaustive_max_len, out.index);
      out.n = beta.strand_count();
      out.word = beta.to_string();
      if (!is_knot_closure(beta)) {
        out.skipped = true;
        return;
      }
    } else {
      beta = random_knot_case(gen, o);
      out.n = beta.strand_count();
      out.word = beta.to_string();
    }
    out.failures = run_case_checks(beta, gen, &out.checks_run);
  } catch (const std::exception &e) {
    out.error = e.what();
  }
}

}  // namespace

VerifyReport run_verify(const VerifyOptions &options) {
  VerifyReport report;
  report.options = options;

  std::uint64_t total = options.count;
  if (options.exhaustive) {
    if (options.exhaustive_n < 2) throw domain_error("exhaustive mode requires n >= 2");
    total = exhaustive_total(options.exhaustive_n, options.exhaustive_max_len);
    if (total > 50000000ull)
      throw domain_error("exhaustive enumeration too large (" + std::to_string(total) +
                         " words)");
    report.enumerated = total;
  }

  std::vector<CaseResult> results(static_cast<std::size_t>(total));
  for (std::uint64_t i = 0; i < total; ++i) {
    results[static_cast<std::size_t>(i)].index = i;
    results[static_cast<std::size_t>(i)].seed = derive_seed(options.seed, i);
  }

  const int jobs = options.jobs > 1 ? options.jobs : 1;
  if (jobs == 1 || total < 2) {
    for (auto &r : results) evaluate_case(r, options);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> workers;
    const int nthreads = static_cast<int>(std::min<std::uint64_t>(total, jobs));
    workers.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t)
      workers.emplace_back([&]() {
        for (;;) {
          const std::uint64_t i = next.fetch_add(1);
          if (i >= total) return;
          evaluate_case(results[static_cast<std::size_t>(i)], options);
        }
      });
    for (auto &t : workers) t.join();
  }

  // Aggregate in case order so the report is independent of scheduling.
  static const char *kCheckOrder[] = {
      "routes_agree", "determinant",   "a0_identity", "fn_writhe",
      "jet_consistency", "f_two_routes", "symmetry",  "crossing_sum",
      "m_range",      "exclusion",     "writhe_parity", "conjugacy",
      "recovery",     "recovery_f0_fn", "axis_a0",    "general_link_mod",
      "charpoly_oracle"};
  for (const char *name : kCheckOrder) report.checks.push_back({name, 0, 0});
  auto counter = [&](const std::string &name) -> CheckCount & {
    for (auto &c : report.checks)
      if (c.name == name) return c;
    report.checks.push_back({name, 0, 0});
    return report.checks.back();
  };
  for (auto &r : results) {
    if (r.skipped) continue;
    ++report.cases;
    for (const auto &name : r.checks_run) ++counter(name).ran;
    if (!r.failures.empty() || !r.error.empty()) {
      ++report.failed_cases;
      for (const auto &f : r.failures) ++counter(f.check).failed;
      CaseResult keep = r;
      keep.checks_run.clear();
      report.failures.push_back(std::move(keep));
    }
  }
  return report;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  if (options.exhaustive) {
    out << "verify exhaustive n=" << options.exhaustive_n
        << " max-len=" << options.exhaustive_max_len << " seed=" << options.seed << "\n";
    out << "enumerated " << enumerated << " words, " << cases
        << " knot closures checked\n";
  } else {
    out << "verify count=" << options.count << " n=" << options.n_min << ".."
        << options.n_max << " len=" << options.len_min << ".." << options.len_max
        << " seed=" << options.seed << "\n";
  }
  out << "checks:\n";
  for (const auto &c : checks)
    out << "  " << c.name << std::string(c.name.size() < 18 ? 18 - c.name.size() : 1, ' ')
        << (c.ran - c.failed) << "/" << c.ran << "\n";
  for (const auto &f : failures) {
    if (!f.error.empty())
      out << "ERROR case=" << f.index << " seed=" << f.seed << " n=" << f.n << " word='"
          << f.word << "': " << f.error << "\n";
    for (const auto &cf : f.failures)
      out << "FAIL case=" << f.index << " seed=" << f.seed << " n=" << f.n << " word='"
          << f.word << "' check=" << cf.check << " expected=" << cf.expected
          << " got=" << cf.got << "\n";
  }
  out << "result: " << (all_passed() ? "PASS" : "FAIL") << " (" << cases << " cases, "
      << failed_cases << " failures)\n";
  return out.str();
}

}  // namespace braidinv
