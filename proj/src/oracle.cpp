#include "coinweigh/oracle.hpp"

#include <algorithm>
#include <cstdint>

namespace coinweigh {

std::string to_string(const Scenario& sc) {
  if (sc.all_genuine()) return "all genuine";
  return "coin " + std::to_string(sc.coin) +
         (sc.weight == CoinWeight::Heavier ? " heavier" : " lighter");
}

Verdict expected_verdict(const Scenario& sc) {
  return sc.all_genuine() ? Verdict::all_genuine() : Verdict::counterfeit(sc.coin, sc.weight);
}

std::size_t scenario_count(int coins) {
  return 2 * static_cast<std::size_t>(coins) + 1;
}

Scenario scenario_by_index(std::size_t index) {
  if (index == 0) return Scenario::genuine();
  const int coin = static_cast<int>((index + 1) / 2);
  return Scenario::fake(coin, index % 2 == 1 ? CoinWeight::Heavier : CoinWeight::Lighter);
}

Trit simulate_weighing(const Weighing& w, const Scenario& sc) {
  if (sc.all_genuine()) return Trit::checked(0);
  const bool on_left = std::binary_search(w.left.begin(), w.left.end(), sc.coin);
  const bool on_right = std::binary_search(w.right.begin(), w.right.end(), sc.coin);
  if (!on_left && !on_right) return Trit::checked(0);
  const bool heavier = sc.weight == CoinWeight::Heavier;
  // A heavy fake tips its own pan down, a light one tips the other pan down.
  if (on_left) return Trit::checked(heavier ? 1 : 2);
  return Trit::checked(heavier ? 2 : 1);
}

Syndrome simulate_plan(const WeighingPlan& p, const Scenario& sc) {
  std::vector<Trit> digits;
  digits.reserve(p.weighings.size());
  for (const Weighing& w : p.weighings) digits.push_back(simulate_weighing(w, sc));
  return Syndrome{std::move(digits)};
}

namespace {

struct ScenarioOutcome {
  Syndrome syndrome;
  bool ok = false;
  std::optional<Verdict> actual;
  std::string error;
};

ScenarioOutcome check_scenario(const WeighingPlan& p, const Scenario& sc) {
  ScenarioOutcome out;
  out.syndrome = simulate_plan(p, sc);
  try {
    const Verdict v = decode_balanced(p.matrix, out.syndrome);
    out.actual = v;
    out.ok = (v == expected_verdict(sc));
  } catch (const InvalidSyndromeError& e) {
    out.error = e.what();
  }
  return out;
}

VerificationReport run_verify(const WeighingPlan& p, bool parallel) {
  VerificationReport report;
  report.coins = p.coin_count();
  report.weighings = p.weighing_count();
  report.scenario_count = scenario_count(p.coin_count());

  const std::int64_t total = static_cast<std::int64_t>(report.scenario_count);
  std::vector<ScenarioOutcome> outcomes(static_cast<std::size_t>(total));

  if (parallel) {
    // Decode cost grows with the coin index, so interleave chunks rather
    // than splitting the range in halves.
#ifdef _OPENMP
#pragma omp parallel for schedule(static, 64)
#endif
    for (std::int64_t k = 0; k < total; ++k) {
      outcomes[static_cast<std::size_t>(k)] =
          check_scenario(p, scenario_by_index(static_cast<std::size_t>(k)));
    }
  } else {
    for (std::int64_t k = 0; k < total; ++k) {
      outcomes[static_cast<std::size_t>(k)] =
          check_scenario(p, scenario_by_index(static_cast<std::size_t>(k)));
    }
  }

  for (std::int64_t k = 0; k < total; ++k) {
    const auto& out = outcomes[static_cast<std::size_t>(k)];
    if (!out.ok) {
      const Scenario sc = scenario_by_index(static_cast<std::size_t>(k));
      report.failures.push_back(
          VerificationReport::Failure{sc, expected_verdict(sc), out.actual, out.error});
    }
  }

  // Scenarios sharing a syndrome are indistinguishable; group by code and
  // report adjacent pairs.
  std::vector<std::pair<std::uint64_t, std::int64_t>> keys;
  keys.reserve(static_cast<std::size_t>(total));
  for (std::int64_t k = 0; k < total; ++k) {
    keys.emplace_back(outcomes[static_cast<std::size_t>(k)].syndrome.code(), k);
  }
  std::sort(keys.begin(), keys.end());
  report.distinct_syndromes = 0;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i == 0 || keys[i].first != keys[i - 1].first) {
      ++report.distinct_syndromes;
    } else {
      report.collisions.push_back(VerificationReport::Collision{
          scenario_by_index(static_cast<std::size_t>(keys[i - 1].second)),
          scenario_by_index(static_cast<std::size_t>(keys[i].second)),
          outcomes[static_cast<std::size_t>(keys[i].second)].syndrome});
    }
  }

  report.pass = report.failures.empty() && report.collisions.empty();
  return report;
}

}  // namespace

VerificationReport verify_plan(const WeighingPlan& p) { return run_verify(p, true); }

VerificationReport verify_plan_serial(const WeighingPlan& p) { return run_verify(p, false); }

}  // namespace coinweigh
