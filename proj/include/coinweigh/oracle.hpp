#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coinweigh/decode.hpp"
#include "coinweigh/plan.hpp"

namespace coinweigh {

/// Ground-truth world state: all coins genuine, or one named coin off-weight.
/// There are 2n+1 of these for n coins.
struct Scenario {
  int coin = 0;  // 0 means all genuine
  CoinWeight weight = CoinWeight::Heavier;

  static Scenario genuine() { return Scenario{}; }
  static Scenario fake(int coin, CoinWeight weight) { return Scenario{coin, weight}; }

  bool all_genuine() const { return coin == 0; }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

std::string to_string(const Scenario& sc);

/// The verdict a correct decoder must reach for this world.
Verdict expected_verdict(const Scenario& sc);

std::size_t scenario_count(int coins);

/// Enumeration order used throughout: index 0 is all-genuine, then coin 1
/// heavier, coin 1 lighter, coin 2 heavier, ...
Scenario scenario_by_index(std::size_t index);

/// What the scale shows for one weighing in one world. Decided purely by pan
/// membership: a genuine world or an unweighed fake balances; a heavy fake
/// tips toward its own pan, a light one toward the other.
Trit simulate_weighing(const Weighing& w, const Scenario& sc);

/// One trit per weighing, in order.
Syndrome simulate_plan(const WeighingPlan& p, const Scenario& sc);

struct VerificationReport {
  int coins = 0;
  int weighings = 0;
  std::size_t scenario_count = 0;
  bool pass = false;

  struct Failure {
    Scenario scenario;
    Verdict expected;
    std::optional<Verdict> actual;  // empty when the decoder raised instead
    std::string error;

    friend bool operator==(const Failure&, const Failure&) = default;
  };
  std::vector<Failure> failures;  // in scenario order

  struct Collision {
    Scenario first;
    Scenario second;
    Syndrome syndrome;

    friend bool operator==(const Collision&, const Collision&) = default;
  };
  std::vector<Collision> collisions;  // ordered by syndrome, then scenario

  std::size_t distinct_syndromes = 0;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Simulates every scenario through the real balance model and checks that
/// decode_balanced reconstructs each one exactly and that no two scenarios
/// share a syndrome. The scenario sweep runs in parallel when OpenMP is
/// enabled; results are assembled in scenario order either way, so the
/// report is deterministic.
VerificationReport verify_plan(const WeighingPlan& p);

/// Single-threaded reference for verify_plan. Kept as the comparison baseline
/// for tests and the benchmark; always produces the identical report.
VerificationReport verify_plan_serial(const WeighingPlan& p);

}  // namespace coinweigh
