// braidinv: exact invariants of closed braids on the command line.
//
// Subcommands: fiedler, burau, charpoly, alexander, recover, verify, info.
// Exit codes: 0 success, 1 invariant mismatch or internal failure (worth a
// bug report), 2 usage or domain error.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidinv/alexander.hpp"
#include "braidinv/burau.hpp"
#include "braidinv/fiedler.hpp"
#include "braidinv/verify.hpp"

using json = nlohmann::ordered_json;
using namespace braidinv;

namespace {

constexpr const char *kVersion = "1.0.0";

bool color_enabled() {
  if (std::getenv("NO_COLOR") != nullptr) return false;
  return isatty(fileno(stdout)) != 0;
}

std::string paint(const std::string &s, const char *code) {
  if (!color_enabled()) return s;
  return std::string("\033[") + code + "m" + s + "\033[0m";
}

// Values small enough for a JSON number stay numeric; anything bigger is
// emitted as a decimal string.
json int_to_json(const Int &v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

json fiedler_to_json(const FiedlerPoly &f) {
  json coeffs = json::object();
  for (const auto &[m, c] : f.coeffs) coeffs[std::to_string(m)] = int_to_json(c);
  return json{{"n", f.n}, {"coeffs", coeffs}};
}

json fiedler_exponents_json(const FiedlerPoly &f) {
  json out = json::object();
  for (const auto &[m, c] : f.coeffs) out[std::to_string(2 * m - f.n)] = int_to_json(c);
  return out;
}

json word_to_json(const BraidWord &w) {
  json out = json::array();
  for (const auto &l : w.letters()) out.push_back(l.sign * l.index);
  return out;
}

void warn_soft_limits(const BraidWord &beta) {
  // Exact Laurent arithmetic grows quickly; these are advisory bounds, not
  // errors.
  if (beta.strand_count() > 16 || beta.length() > 64)
    std::cerr << "warning: n=" << beta.strand_count() << ", length=" << beta.length()
              << " exceeds the tested range (n <= 16, length <= 64); "
                 "this may be slow\n";
}

struct CommonArgs {
  std::string word;
  int n = 0;  // 0 means "infer from the word"
  std::string format = "text";

  std::optional<int> n_opt() const {
    return n > 0 ? std::optional<int>(n) : std::nullopt;
  }
};

void add_common(CLI::App *cmd, CommonArgs &args) {
  cmd->add_option("--braid,-b,braid", args.word,
                  "braid word: whitespace-separated nonzero integers, "
                  "j meaning sigma_|j| with the sign of j")
      ->required();
  cmd->add_option("--n,-n", args.n, "strand count (default: max index + 1)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format,-f", args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

int run_fiedler(const CommonArgs &args, const std::string &method) {
  const BraidWord beta = parse_braid_word(args.word, args.n_opt());
  FiedlerPoly result;
  std::optional<bool> match;
  if (method == "statesum") {
    result = fiedler_statesum(beta);
  } else if (method == "burau") {
    result = fiedler_from_burau(beta);
  } else {
    const RouteComparison rep = compare_routes(beta);
    result = rep.statesum;
    match = rep.match;
  }
  if (args.format == "json") {
    json out{{"n", beta.strand_count()},
             {"word", word_to_json(beta)},
             {"writhe", writhe(beta)},
             {"fiedler", fiedler_to_json(result)},
             {"fiedler_exponents", fiedler_exponents_json(result)},
             {"method", method},
             {"match", match ? json(*match) : json(nullptr)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "F = " << result.to_string() << "\n";
    if (match)
      std::cout << "match = " << paint(*match ? "true" : "false", *match ? "32" : "31")
                << "\n";
  }
  if (match && !*match) {
    std::cerr << "error: the state-sum and Burau-trace routes disagree\n";
    return 1;
  }
  return 0;
}

template <class R>
void print_matrix_text(const Matrix<R> &m) {
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(m.size()));
  std::vector<std::size_t> width(static_cast<std::size_t>(m.size()), 0);
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) {
      std::string s = ring_str(m.at(i, j));
      width[static_cast<std::size_t>(j)] =
          std::max(width[static_cast<std::size_t>(j)], s.size());
      cells[static_cast<std::size_t>(i)].push_back(std::move(s));
    }
  for (int i = 0; i < m.size(); ++i) {
    std::cout << "[ ";
    for (int j = 0; j < m.size(); ++j) {
      const std::string &s = cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      std::cout << s << std::string(width[static_cast<std::size_t>(j)] - s.size(), ' ')
                << (j + 1 < m.size() ? "  " : " ");
    }
    std::cout << "]\n";
  }
}

template <class R>
json matrix_to_json(const Matrix<R> &m) {
  json rows = json::array();
  for (int i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(ring_str(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

int run_burau(const CommonArgs &args, bool jet) {
  const BraidWord beta = parse_braid_word(args.word, args.n_opt());
  warn_soft_limits(beta);
  if (args.format == "json") {
    json out{{"n", beta.strand_count()},
             {"word", word_to_json(beta)},
             {"jet", jet},
             {"matrix", jet ? matrix_to_json(burau_jet_matrix(beta))
                            : matrix_to_json(burau_matrix(beta))}};
    std::cout << out.dump(2) << "\n";
  } else if (jet) {
    print_matrix_text(burau_jet_matrix(beta));
  } else {
    print_matrix_text(burau_matrix(beta));
  }
  return 0;
}

int run_charpoly(const CommonArgs &args) {
  const BraidWord beta = parse_braid_word(args.word, args.n_opt());
  warn_soft_limits(beta);
  const auto cp = charpoly_newton(burau_matrix(beta));
  if (args.format == "json") {
    json coeffs = json::array();
    for (int i = 0; i <= cp.degree(); ++i) coeffs.push_back(cp.coeff(i).to_string());
    json out{{"n", beta.strand_count()},
             {"word", word_to_json(beta)},
             {"charpoly", cp.to_string()},
             {"coeffs_by_x_degree", coeffs}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "det(I - x B(t)) = " << cp.to_string() << "\n";
  }
  return 0;
}

int run_alexander(const CommonArgs &args) {
  const BraidWord beta = parse_braid_word(args.word, args.n_opt());
  warn_soft_limits(beta);
  const BivariatePoly delta = alexander_closed_braid_with_axis(beta);
  if (args.format == "json") {
    json out{{"n", beta.strand_count()},
             {"word", word_to_json(beta)},
             {"alexander", delta.to_string()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << delta.to_string() << "\n";
  }
  return 0;
}

struct RecoverArgs {
  std::string poly;
  std::string file;
  int n = 0;
  std::string format = "text";
  bool general = false;
  std::string axis = "x";
};

int run_recover(const RecoverArgs &args) {
  std::string text = args.poly;
  if (!args.file.empty()) {
    std::ifstream in(args.file);
    if (!in) throw parse_error("cannot open polynomial file '" + args.file + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  if (text.empty())
    throw parse_error("recover needs a polynomial (--poly or --file)");
  const BivariatePoly delta = parse_bivariate(text);

  if (args.general) {
    const auto inv =
        general_link_invariant(delta, args.axis == "t" ? AxisVar::t : AxisVar::x);
    if (args.format == "json") {
      json out{{"a0", inv.a0.to_string()},
               {"a1", inv.a1.to_string()},
               {"a1_mod_a0",
                inv.a1_reduced ? json(inv.a1_reduced->to_string()) : json(nullptr)}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "a0 = " << inv.a0.to_string() << "\n";
      std::cout << "a1 = " << inv.a1.to_string() << "\n";
      if (inv.a1_reduced)
        std::cout << "a1 mod a0 = " << inv.a1_reduced->to_string() << "\n";
      else
        std::cout << "a1 mod a0 = (no canonical representative: a0 is not "
                     "monic up to sign)\n";
    }
    return 0;
  }

  if (args.n < 1)
    throw parse_error("recover requires --n (the strand count of the braid)");
  const RecoveryResult rec = recover_fiedler_from_alexander(delta, args.n);
  if (args.format == "json") {
    json out{{"n", rec.n},
             {"fiedler", fiedler_to_json(rec.fiedler)},
             {"fiedler_rendered", rec.fiedler.to_string()},
             {"f0", int_to_json(rec.f0)},
             {"fn", int_to_json(rec.fn)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "F = " << rec.fiedler.to_string() << "\n";
    std::cout << "f0 = " << rec.f0.str() << "\n";
    std::cout << "f" << rec.n << " = " << rec.fn.str() << "\n";
  }
  return 0;
}

std::pair<int, int> parse_int_range(const std::string &text, const char *what) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception &) {
    throw parse_error(std::string("bad ") + what + " range '" + text +
                      "' (expected A..B or a single value)");
  }
}

struct VerifyArgs {
  std::string n_range = "2..8";
  std::string len_range = "1..30";
  std::uint64_t count = 100;
  std::uint64_t seed = 1;
  int jobs = 1;
  bool exhaustive = false;
  int ex_n = 3;
  int ex_max_len = 6;
  std::string format = "text";
};

json report_to_json(const VerifyReport &rep) {
  json checks = json::object();
  for (const auto &c : rep.checks)
    checks[c.name] = json{{"ran", c.ran}, {"failed", c.failed}};
  json failures = json::array();
  for (const auto &f : rep.failures) {
    json entry{{"case", f.index}, {"seed", f.seed}, {"n", f.n}, {"word", f.word}};
    if (!f.error.empty()) entry["error"] = f.error;
    json fl = json::array();
    for (const auto &cf : f.failures)
      fl.push_back(json{{"check", cf.check}, {"expected", cf.expected}, {"got", cf.got}});
    entry["checks"] = fl;
    failures.push_back(entry);
  }
  json out{{"command", "verify"}, {"seed", rep.options.seed}};
  if (rep.options.exhaustive) {
    out["exhaustive"] =
        json{{"n", rep.options.exhaustive_n}, {"max_len", rep.options.exhaustive_max_len}};
    out["enumerated"] = rep.enumerated;
  } else {
    out["count"] = rep.options.count;
    out["n_range"] =
        std::to_string(rep.options.n_min) + ".." + std::to_string(rep.options.n_max);
    out["len_range"] =
        std::to_string(rep.options.len_min) + ".." + std::to_string(rep.options.len_max);
  }
  out["cases"] = rep.cases;
  out["failed_cases"] = rep.failed_cases;
  out["checks"] = checks;
  out["failures"] = failures;
  out["result"] = rep.all_passed() ? "PASS" : "FAIL";
  return out;
}

int run_verify_cmd(const VerifyArgs &args) {
  VerifyOptions o;
  o.count = args.count;
  o.seed = args.seed;
  o.jobs = args.jobs;
  o.exhaustive = args.exhaustive;
  o.exhaustive_n = args.ex_n;
  o.exhaustive_max_len = args.ex_max_len;
  std::tie(o.n_min, o.n_max) = parse_int_range(args.n_range, "n");
  std::tie(o.len_min, o.len_max) = parse_int_range(args.len_range, "len");
  if (o.n_min < 2) throw parse_error("verify requires n >= 2");
  if (o.len_min < 0 || o.len_max < o.len_min || o.n_max < o.n_min)
    throw parse_error("empty n or len range");

  const VerifyReport rep = run_verify(o);
  if (args.format == "json") {
    std::cout << report_to_json(rep).dump(2) << "\n";
  } else if (color_enabled()) {
    // Colorize the verdict tokens; bytes are unchanged when piped.
    std::string text = rep.to_text();
    auto tint = [&text](const std::string &from, const std::string &to) {
      std::size_t pos = 0;
      while ((pos = text.find(from, pos)) != std::string::npos) {
        text.replace(pos, from.size(), to);
        pos += to.size();
      }
    };
    tint("result: PASS", "result: \033[32mPASS\033[0m");
    tint("result: FAIL", "result: \033[31mFAIL\033[0m");
    std::cout << text;
  } else {
    std::cout << rep.to_text();
  }
  return rep.all_passed() ? 0 : 1;
}

int run_info() {
  std::cout << "braidinv " << kVersion << "\n"
            << "exact state-sum and Burau-trace invariants of closed braids\n"
            << "\n"
            << "conventions:\n"
            << "  braid words read top to bottom; strands oriented downward;\n"
            << "  closure joins bottom position j to top position j\n"
            << "  braid word text: whitespace-separated signed integers, e.g. \"1 -2 1\"\n"
            << "  positive Burau block [[1-t, t], [1, 0]] on rows i, i+1\n"
            << "  2-variable polynomials: terms like \"1 + t^3*x\"; x is the axis variable\n"
            << "\n"
            << "limits: exact arithmetic is tested for n <= 16, length <= 64\n"
            << "exit codes: 0 ok, 1 invariant mismatch, 2 usage/domain error\n";
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact invariants of closed braids via Burau matrices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  CommonArgs fiedler_args;
  std::string method = "statesum";
  auto *cmd_fiedler =
      app.add_subcommand("fiedler", "state-sum invariant of a knot-closure braid");
  add_common(cmd_fiedler, fiedler_args);
  cmd_fiedler->add_option("--method,-m", method, "computation route")
      ->check(CLI::IsMember({"statesum", "burau", "both"}))
      ->capture_default_str();

  CommonArgs burau_args;
  bool jet = false;
  auto *cmd_burau = app.add_subcommand("burau", "Burau matrix of a braid word");
  add_common(cmd_burau, burau_args);
  cmd_burau->add_flag("--jet", jet, "first-order expansion at t = e^h");

  CommonArgs charpoly_args;
  auto *cmd_charpoly =
      app.add_subcommand("charpoly", "characteristic polynomial det(I - x B(t))");
  add_common(cmd_charpoly, charpoly_args);

  CommonArgs alexander_args;
  auto *cmd_alexander = app.add_subcommand(
      "alexander", "Alexander polynomial of the closed braid plus its axis");
  add_common(cmd_alexander, alexander_args);

  RecoverArgs recover_args;
  auto *cmd_recover = app.add_subcommand(
      "recover", "recover the invariant from an Alexander polynomial given up to units");
  cmd_recover->add_option("--poly,-p,poly", recover_args.poly,
                          "polynomial text, e.g. \"1 + t^3*x\"");
  cmd_recover->add_option("--file", recover_args.file, "read the polynomial from a file");
  cmd_recover->add_option("--n,-n", recover_args.n, "strand count of the braid")
      ->check(CLI::PositiveNumber);
  cmd_recover->add_option("--format,-f", recover_args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd_recover->add_flag("--general", recover_args.general,
                        "treat the input as a general 2-component link polynomial "
                        "and report a0, a1 and a1 mod a0");
  cmd_recover->add_option("--axis", recover_args.axis,
                          "which variable plays the axis role with --general")
      ->check(CLI::IsMember({"x", "t"}))
      ->capture_default_str();

  VerifyArgs verify_args;
  auto *cmd_verify = app.add_subcommand(
      "verify", "batch cross-check of all invariant identities on random or "
                "exhaustively enumerated braids");
  cmd_verify->add_option("--count,-c", verify_args.count, "number of random cases")
      ->capture_default_str();
  cmd_verify->add_option("--n-range", verify_args.n_range, "strand counts A..B")
      ->capture_default_str();
  cmd_verify->add_option("--len-range", verify_args.len_range, "word lengths A..B")
      ->capture_default_str();
  cmd_verify->add_option("--seed,-s", verify_args.seed, "master seed")
      ->capture_default_str();
  cmd_verify->add_option("--jobs,-j", verify_args.jobs, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_verify->add_flag("--exhaustive", verify_args.exhaustive,
                       "enumerate all words up to --max-len instead of sampling");
  cmd_verify->add_option("--n", verify_args.ex_n, "strand count for --exhaustive")
      ->capture_default_str();
  cmd_verify
      ->add_option("--max-len", verify_args.ex_max_len,
                   "maximum word length for --exhaustive")
      ->capture_default_str();
  cmd_verify->add_option("--format,-f", verify_args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto *cmd_info = app.add_subcommand("info", "conventions, formats and limits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_fiedler->parsed()) return run_fiedler(fiedler_args, method);
    if (cmd_burau->parsed()) return run_burau(burau_args, jet);
    if (cmd_charpoly->parsed()) return run_charpoly(charpoly_args);
    if (cmd_alexander->parsed()) return run_alexander(alexander_args);
    if (cmd_recover->parsed()) return run_recover(recover_args);
    if (cmd_verify->parsed()) return run_verify_cmd(verify_args);
    if (cmd_info->parsed()) return run_info();
  } catch (const parse_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error &e) {
    std::cerr << "internal error (please report): " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
