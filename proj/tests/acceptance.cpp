// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Criteria that specify a budget are timed against it.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "coinweigh/bounds.hpp"
#include "coinweigh/hamming.hpp"
#include "coinweigh/oracle.hpp"
#include "coinweigh/plan.hpp"
#include "golden.hpp"
#include "proc.hpp"

using namespace coinweigh;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& message) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += message;
  }

  void expect(bool condition, const std::string& message) {
    if (!condition) fail(message);
  }
};

int failures = 0;

void criterion(const std::string& name, double budget_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.fail(std::string("exception: ") + e.what());
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && elapsed > budget_seconds) {
    std::ostringstream over;
    over << "took " << std::fixed << std::setprecision(2) << elapsed << " s, budget "
         << budget_seconds << " s";
    outcome.fail(over.str());
  }
  std::cout << (outcome.ok ? "[PASS] " : "[FAIL] ") << name << " (" << std::fixed
            << std::setprecision(2) << elapsed << " s)";
  if (!outcome.detail.empty()) std::cout << " -- " << outcome.detail;
  std::cout << "\n";
  if (!outcome.ok) ++failures;
}

bool close(double a, double b, double rel = 1e-12) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

// Independent encoder for the Hamming check: data bits at non-power
// positions, parity bits chosen to zero every parity sum.
BitVector encode7(int data) {
  BitVector word;
  word.bits.assign(7, 0);
  for (int pos = 1; pos <= 7; ++pos) {
    if ((pos & (pos - 1)) == 0) continue;
    word.bits[static_cast<std::size_t>(pos - 1)] = static_cast<std::uint8_t>(data & 1);
    data >>= 1;
  }
  for (int j = 0; j < 3; ++j) {
    int parity = 0;
    for (int pos = 1; pos <= 7; ++pos) {
      if ((pos & (pos - 1)) == 0) continue;
      if ((pos >> j) & 1) parity ^= word.bit(pos);
    }
    word.bits[static_cast<std::size_t>(1 << j) - 1] = static_cast<std::uint8_t>(parity);
  }
  return word;
}

WeighingPlan with_duplicated_column(const WeighingPlan& base, int source, int target) {
  WeighingPlan p;
  p.matrix = base.matrix;
  p.matrix.columns[static_cast<std::size_t>(target - 1)] = base.matrix.column(source);
  p.matrix.flips[static_cast<std::size_t>(target - 1)] = base.matrix.flip(source);
  for (int row = 1; row <= p.matrix.rows; ++row) {
    Weighing w;
    for (int c = 1; c <= p.matrix.cols; ++c) {
      if (p.matrix.digit(row, c).value() == 1) w.left.push_back(c);
      if (p.matrix.digit(row, c).value() == 2) w.right.push_back(c);
    }
    p.weighings.push_back(std::move(w));
  }
  return p;
}

void golden_plan_criterion(Outcome& out, int coins,
                           const std::vector<Weighing>& expected_weighings,
                           const std::array<std::string, 3>* expected_matrix) {
  const auto result = proc::run(proc::cli_path() + " plan -n " + std::to_string(coins) +
                                " --format json");
  out.expect(result.exit_code == 0, "plan command failed");
  if (result.exit_code != 0) return;
  const WeighingPlan plan = parse_plan(result.output);
  out.expect(plan.weighings == expected_weighings, "weighings differ from the worked ones");
  if (expected_matrix) {
    for (int r = 1; r <= 3; ++r) {
      out.expect(golden::matrix_row_string(plan.matrix, r) ==
                     (*expected_matrix)[static_cast<std::size_t>(r - 1)],
                 "matrix row " + std::to_string(r) + " differs");
    }
  }
}

}  // namespace

int main() {
  criterion("1. golden 12-coin plan", 1.0, [](Outcome& out) {
    golden_plan_criterion(out, 12, golden::weighings_12(), &golden::matrix_rows_12());
  });

  criterion("2. golden 39-coin plan", 1.0, [](Outcome& out) {
    golden_plan_criterion(out, 39, golden::weighings_39(), nullptr);
  });

  criterion("3. eleven decode goldens", 0, [](Outcome& out) {
    const TestMatrix m12 = build_plan(12).matrix;
    const TestMatrix m39 = build_plan(39).matrix;
    struct Case {
      const TestMatrix* matrix;
      bool divisor_route;
      Syndrome syndrome;
      Verdict expected;
    };
    const std::vector<Case> cases = {
        {&m12, true, TritVector::of({2, 2, 2}), Verdict::counterfeit(9, CoinWeight::Heavier)},
        {&m12, true, TritVector::of({0, 0, 2}), Verdict::counterfeit(1, CoinWeight::Lighter)},
        {&m12, true, TritVector::of({1, 1, 0}), Verdict::counterfeit(8, CoinWeight::Heavier)},
        {&m12, false, TritVector::of({2, 2, 2}), Verdict::counterfeit(9, CoinWeight::Heavier)},
        {&m12, false, TritVector::of({0, 0, 2}), Verdict::counterfeit(1, CoinWeight::Lighter)},
        {&m39, true, TritVector::of({1, 2, 2, 1}), Verdict::counterfeit(39, CoinWeight::Lighter)},
        {&m39, true, TritVector::of({2, 2, 1, 1}), Verdict::counterfeit(31, CoinWeight::Heavier)},
        {&m39, true, TritVector::of({1, 0, 0, 1}), Verdict::counterfeit(15, CoinWeight::Heavier)},
        {&m39, false, TritVector::of({1, 0, 0, 0}), Verdict::counterfeit(14, CoinWeight::Heavier)},
        {&m39, false, TritVector::of({1, 1, 0, 2}), Verdict::counterfeit(25, CoinWeight::Heavier)},
        {&m39, false, TritVector::of({2, 2, 0, 1}), Verdict::counterfeit(25, CoinWeight::Lighter)},
    };
    int index = 0;
    for (const Case& c : cases) {
      ++index;
      const Verdict got = c.divisor_route ? decode_canonical(*c.matrix, c.syndrome)
                                          : decode_balanced(*c.matrix, c.syndrome);
      out.expect(got == c.expected,
                 "example " + std::to_string(index) + " decoded to " + to_string(got));
    }
  });

  criterion("4. exhaustive round-trip, 2 to 5 weighings", 5.0, [](Outcome& out) {
    for (int rows = 2; rows <= 5; ++rows) {
      const int coins = static_cast<int>(balanced_capacity(rows));
      const VerificationReport r = verify_plan(derive_plan(balance_rows(canonical_matrix(rows, coins))));
      out.expect(r.pass, std::to_string(coins) + " coins: verification failed");
      out.expect(r.distinct_syndromes == scenario_count(coins),
                 std::to_string(coins) + " coins: syndromes not all distinct");
    }
  });

  criterion("5. decoder equivalence", 0, [](Outcome& out) {
    for (int coins : {3, 12, 39}) {
      const WeighingPlan p = build_plan(coins);
      for (std::size_t k = 0; k < scenario_count(coins); ++k) {
        const Syndrome s = simulate_plan(p, scenario_by_index(k));
        if (decode_balanced(p.matrix, s) != decode_canonical(p.matrix, s)) {
          out.fail("decoders disagree at " + std::to_string(coins) + " coins, scenario " +
                   std::to_string(k));
          return;
        }
      }
    }
  });

  criterion("6. subset search determinism and validity", 30.0, [](Outcome& out) {
    for (int coins : {3, 6, 9, 12}) {
      const int rows = min_weighings(coins, Variant::Practical);
      const TestMatrix first = select_balanced_subset(rows, coins);
      const TestMatrix second = select_balanced_subset(rows, coins);
      out.expect(first == second, std::to_string(coins) + " coins: results differ across runs");
      const VerificationReport r = verify_plan(derive_plan(first));
      out.expect(r.pass, std::to_string(coins) + " coins: verification failed");
    }
  });

  criterion("7. bounds table", 0, [](Outcome& out) {
    out.expect(min_weighings(12, Variant::GeneralBound) == 3, "min(12, general)");
    out.expect(min_weighings(13, Variant::GeneralBound) == 3, "min(13, general)");
    out.expect(min_weighings(13, Variant::Practical) == 4, "min(13, practical)");
    out.expect(min_weighings(39, Variant::Practical) == 4, "min(39, practical)");
    out.expect(min_weighings(27, Variant::KnownWeight) == 3, "min(27, known-weight)");
    out.expect(max_coins(3, Variant::GeneralBound) == 13, "max(3, general)");
    out.expect(max_coins(3, Variant::Practical) == 12, "max(3, practical)");
    out.expect(max_coins(4, Variant::Practical) == 39, "max(4, practical)");
    out.expect(max_coins(4, Variant::GeneralBound) == 40, "max(4, general)");
  });

  criterion("8. single-error location demo", 1.0, [](Outcome& out) {
    out.expect(hamming_syndrome(BitVector::from_string("0111000")) == 5, "0111000");
    out.expect(hamming_syndrome(BitVector::from_string("0111100")) == 0, "0111100");
    for (int data = 0; data < 16; ++data) {
      BitVector word = encode7(data);
      out.expect(hamming_syndrome(word) == 0, "codeword " + std::to_string(data));
      for (int pos = 1; pos <= 7; ++pos) {
        word.bits[static_cast<std::size_t>(pos - 1)] ^= 1;
        out.expect(hamming_syndrome(word) == pos,
                   "flip at " + std::to_string(pos) + " of codeword " + std::to_string(data));
        word.bits[static_cast<std::size_t>(pos - 1)] ^= 1;
      }
    }
  });

  criterion("9. information quantities", 0, [](Outcome& out) {
    out.expect(close(self_information(0.5, Unit::Bits).value, 1.0), "1/2 in bits");
    out.expect(close(self_information(0.1, Unit::Hartleys).value, 1.0), "1/10 in hartleys");
    const std::vector<double> uniform27(27, 1.0 / 27.0);
    out.expect(close(entropy(uniform27, Unit::Trits).value, 3.0), "uniform 27 in trits");
  });

  criterion("10. mutation detection", 0, [](Outcome& out) {
    const WeighingPlan base = build_plan(12);
    for (int source = 1; source <= 12; ++source) {
      const int target = source % 12 + 1;
      const VerificationReport r = verify_plan(with_duplicated_column(base, source, target));
      out.expect(!r.pass, "duplication of coin " + std::to_string(source) + " not caught");
      bool named = false;
      for (const auto& c : r.collisions) {
        const bool hits_source = c.first.coin == source || c.second.coin == source;
        const bool hits_target = c.first.coin == target || c.second.coin == target;
        if (hits_source && hits_target) named = true;
      }
      out.expect(named, "no collision names coins " + std::to_string(source) + " and " +
                            std::to_string(target));
    }
  });

  if (failures == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << failures << " criteria failed\n";
  return 1;
}
