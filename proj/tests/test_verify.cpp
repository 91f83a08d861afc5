#include <doctest.h>

#include "braidinv/verify.hpp"
#include "helpers.hpp"

using namespace braidinv;

TEST_CASE("the check battery is clean on a known-good braid") {
  std::mt19937_64 aux(5);
  CHECK(run_case_checks(parse_braid_word("1 1 1"), aux).empty());
  std::mt19937_64 aux2(6);
  CHECK(run_case_checks(parse_braid_word("1 -2 1 -2", 3), aux2).empty());
}

TEST_CASE("reports are byte-identical for a fixed seed, regardless of jobs") {
  VerifyOptions o;
  o.count = 40;
  o.seed = 12345;
  o.n_min = 2;
  o.n_max = 6;
  o.len_min = 1;
  o.len_max = 12;

  const std::string first = run_verify(o).to_text();
  const std::string second = run_verify(o).to_text();
  CHECK(first == second);

  o.jobs = 4;
  const std::string parallel = run_verify(o).to_text();
  CHECK(first == parallel);
}

TEST_CASE("different seeds give different case streams") {
  VerifyOptions a, b;
  a.count = b.count = 5;
  a.seed = 1;
  b.seed = 2;
  CHECK(run_verify(a).to_text() != run_verify(b).to_text());
}

TEST_CASE("an empty run passes trivially") {
  VerifyOptions o;
  o.count = 0;
  const auto rep = run_verify(o);
  CHECK(rep.all_passed());
  CHECK(rep.cases == 0);
  CHECK(rep.to_text().find("result: PASS (0 cases, 0 failures)") != std::string::npos);
}

TEST_CASE("exhaustive mode enumerates and filters") {
  VerifyOptions o;
  o.exhaustive = true;
  o.exhaustive_n = 2;
  o.exhaustive_max_len = 4;
  const auto rep = run_verify(o);
  CHECK(rep.enumerated == 31);  // 1 + 2 + 4 + 8 + 16
  CHECK(rep.cases == 10);       // the odd-length words: 2 + 8
  CHECK(rep.all_passed());
}

TEST_CASE("failure records render with enough detail to reproduce") {
  VerifyReport rep;
  rep.options.count = 1;
  rep.cases = 1;
  rep.failed_cases = 1;
  CaseResult fail;
  fail.index = 17;
  fail.seed = 42;
  fail.n = 4;
  fail.word = "1 -2 3";
  fail.failures.push_back({"routes_agree", "X", "0"});
  rep.failures.push_back(fail);
  const std::string text = rep.to_text();
  CHECK(text.find("FAIL case=17 seed=42 n=4 word='1 -2 3' check=routes_agree "
                  "expected=X got=0") != std::string::npos);
  CHECK(text.find("result: FAIL") != std::string::npos);
  CHECK_FALSE(rep.all_passed());
}

TEST_CASE("check counters track what actually ran") {
  VerifyOptions o;
  o.count = 10;
  o.seed = 7;
  o.n_min = 6;  // above the cofactor-oracle cap
  o.n_max = 6;
  o.len_min = 5;
  o.len_max = 12;
  const auto rep = run_verify(o);
  CHECK(rep.all_passed());
  for (const auto &c : rep.checks) {
    if (c.name == "charpoly_oracle")
      CHECK(c.ran == 0);
    else if (c.name == "general_link_mod")
      CHECK(c.ran == 10);  // runs whenever axis_a0 holds
    else
      CHECK(c.ran == 10);
  }
}
