#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coinweigh/decode.hpp"
#include "coinweigh/oracle.hpp"

using namespace coinweigh;

namespace {

const WeighingPlan& plan_12() {
  static const WeighingPlan p = build_plan(12);
  return p;
}

const WeighingPlan& plan_39() {
  static const WeighingPlan p = build_plan(39);
  return p;
}

}  // namespace

TEST_CASE("syndrome parsing accepts letters and digits, case-insensitively") {
  CHECK(parse_syndrome("RRB", 3) == TritVector::of({2, 2, 0}));
  CHECK(parse_syndrome("220", 3) == TritVector::of({2, 2, 0}));
  CHECK(parse_syndrome("rrb", 3) == TritVector::of({2, 2, 0}));
  CHECK(parse_syndrome("L0r", 3) == TritVector::of({1, 0, 2}));
  CHECK(syndrome_letters(TritVector::of({2, 2, 0})) == "RRB");
  CHECK_THROWS_AS(parse_syndrome("RR", 3), SyndromeParseError);
  CHECK_THROWS_AS(parse_syndrome("RRX", 3), SyndromeParseError);
}

TEST_CASE("balanced decode reproduces the 12-coin worked examples") {
  const TestMatrix& m = plan_12().matrix;
  CHECK(decode_balanced(m, TritVector::of({2, 2, 2})) ==
        Verdict::counterfeit(9, CoinWeight::Heavier));
  CHECK(decode_balanced(m, TritVector::of({0, 0, 2})) ==
        Verdict::counterfeit(1, CoinWeight::Lighter));
  CHECK(decode_balanced(m, TritVector::of({1, 1, 0})) ==
        Verdict::counterfeit(8, CoinWeight::Heavier));
  CHECK(decode_balanced(m, TritVector::of({0, 0, 0})) == Verdict::all_genuine());
}

TEST_CASE("balanced decode reproduces the 39-coin worked examples") {
  const TestMatrix& m = plan_39().matrix;
  CHECK(decode_balanced(m, TritVector::of({1, 0, 0, 0})) ==
        Verdict::counterfeit(14, CoinWeight::Heavier));
  CHECK(decode_balanced(m, TritVector::of({1, 1, 0, 2})) ==
        Verdict::counterfeit(25, CoinWeight::Heavier));
  CHECK(decode_balanced(m, TritVector::of({2, 2, 0, 1})) ==
        Verdict::counterfeit(25, CoinWeight::Lighter));
  CHECK(decode_balanced(m, TritVector::of({0, 0, 0, 0})) == Verdict::all_genuine());
}

TEST_CASE("divisor decode reproduces the 12-coin worked examples") {
  const TestMatrix& m = plan_12().matrix;
  CHECK(decode_canonical(m, TritVector::of({2, 2, 2})) ==
        Verdict::counterfeit(9, CoinWeight::Heavier));
  CHECK(decode_canonical(m, TritVector::of({0, 0, 2})) ==
        Verdict::counterfeit(1, CoinWeight::Lighter));
  CHECK(decode_canonical(m, TritVector::of({1, 1, 0})) ==
        Verdict::counterfeit(8, CoinWeight::Heavier));
  CHECK(decode_canonical(m, TritVector::of({0, 0, 0})) == Verdict::all_genuine());
}

TEST_CASE("divisor decode reproduces the 39-coin worked examples") {
  const TestMatrix& m = plan_39().matrix;
  CHECK(decode_canonical(m, TritVector::of({1, 2, 2, 1})) ==
        Verdict::counterfeit(39, CoinWeight::Lighter));
  CHECK(decode_canonical(m, TritVector::of({2, 2, 1, 1})) ==
        Verdict::counterfeit(31, CoinWeight::Heavier));
  CHECK(decode_canonical(m, TritVector::of({1, 0, 0, 1})) ==
        Verdict::counterfeit(15, CoinWeight::Heavier));
}

TEST_CASE("the two spare syndromes at full capacity are invalid") {
  // The dropped 13th column is (1,2,2); it and its double are unreachable.
  const TestMatrix& m = plan_12().matrix;
  CHECK_THROWS_AS(decode_balanced(m, TritVector::of({1, 2, 2})), InvalidSyndromeError);
  CHECK_THROWS_AS(decode_balanced(m, TritVector::of({2, 1, 1})), InvalidSyndromeError);
  CHECK_THROWS_AS(decode_canonical(m, TritVector::of({1, 2, 2})), InvalidSyndromeError);
  CHECK_THROWS_AS(decode_canonical(m, TritVector::of({2, 1, 1})), InvalidSyndromeError);

  int invalid = 0;
  for (int code = 0; code < 27; ++code) {
    const Syndrome s = TritVector::of({(code / 9) % 3, (code / 3) % 3, code % 3});
    try {
      decode_balanced(m, s);
    } catch (const InvalidSyndromeError&) {
      ++invalid;
    }
  }
  CHECK(invalid == 27 - (2 * 12 + 1));
}

TEST_CASE("length mismatches are rejected") {
  CHECK_THROWS_AS(decode_balanced(plan_12().matrix, TritVector::of({1, 1})), SyndromeParseError);
  CHECK_THROWS_AS(decode_canonical(plan_12().matrix, TritVector::of({1, 1})), SyndromeParseError);
}

TEST_CASE("both decoders agree on every scenario syndrome") {
  for (int coins : {3, 12, 39}) {
    const WeighingPlan p = build_plan(coins);
    for (std::size_t k = 0; k < scenario_count(coins); ++k) {
      const Syndrome s = simulate_plan(p, scenario_by_index(k));
      CHECK(decode_balanced(p.matrix, s) == decode_canonical(p.matrix, s));
    }
  }
}

TEST_CASE("doubling a scenario syndrome swaps heavier and lighter") {
  const WeighingPlan& p = plan_12();
  for (std::size_t k = 1; k < scenario_count(12); ++k) {
    const Syndrome s = simulate_plan(p, scenario_by_index(k));
    const Verdict v = decode_balanced(p.matrix, s);
    const Verdict doubled = decode_balanced(p.matrix, vec_scale(s, Trit::checked(2)));
    CHECK(doubled.coin == v.coin);
    CHECK(doubled.weight == opposite(v.weight));
  }
}

TEST_CASE("verdict rendering") {
  CHECK(to_string(Verdict::all_genuine()) == "all coins genuine");
  CHECK(to_string(Verdict::counterfeit(9, CoinWeight::Heavier)) == "coin 9, heavier");
  CHECK(to_string(Verdict::counterfeit(1, CoinWeight::Lighter)) == "coin 1, lighter");
}
