#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "braidinv/braid.hpp"

namespace braidinv {

struct VerifyOptions {
  int n_min = 2;
  int n_max = 8;
  int len_min = 1;
  int len_max = 30;
  std::uint64_t count = 100;
  std::uint64_t seed = 1;
  int jobs = 1;
  bool exhaustive = false;  // enumerate all words instead of sampling
  int exhaustive_n = 3;
  int exhaustive_max_len = 6;
};

struct CheckFailure {
  std::string check;
  std::string expected;
  std::string got;
};

struct CaseResult {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  int n = 1;
  std::string word;
  bool skipped = false;  // exhaustive mode: closure is not a knot
  std::vector<CheckFailure> failures;
  std::vector<std::string> checks_run;
  std::string error;  // unexpected exception text, if any
};

struct CheckCount {
  std::string name;
  std::uint64_t ran = 0;
  std::uint64_t failed = 0;
};

struct VerifyReport {
  VerifyOptions options;
  std::uint64_t enumerated = 0;  // exhaustive mode: total words enumerated
  std::uint64_t cases = 0;       // knot-closure cases checked
  std::uint64_t failed_cases = 0;
  std::vector<CheckCount> checks;    // fixed order, deterministic
  std::vector<CaseResult> failures;  // failing cases only, by case index

  bool all_passed() const { return failed_cases == 0; }

  // Deterministic plain-text report: identical bytes for identical options
  // and seed, independent of the jobs setting.
  std::string to_text() const;
};

// The per-case check battery.  aux supplies the conjugator and unit-scramble
// draws; the sequence of draws is fixed, so a case is reproducible from its
// seed alone.
std::vector<CheckFailure> run_case_checks(const BraidWord &beta, std::mt19937_64 &aux,
                                          std::vector<std::string> *checks_run = nullptr);

// Generate (for random mode) or enumerate (for exhaustive mode) braids and
// run the check battery over them, optionally across several worker threads.
// Results are aggregated in case order, so the report does not depend on the
// number of jobs.
VerifyReport run_verify(const VerifyOptions &options);

}  // namespace braidinv
