#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coinweigh/matrix.hpp"

namespace coinweigh {

class PlanError : public Error {
 public:
  using Error::Error;
};

/// A weighing row whose 1s and 2s do not pair up into equal pans.
class UnbalancedRowError : public PlanError {
 public:
  UnbalancedRowError(std::string message, int row) : PlanError(std::move(message)), row(row) {}
  int row;
};

/// Malformed or invariant-violating plan file.
class PlanParseError : public PlanError {
 public:
  using PlanError::PlanError;
};

/// One weighing: which coins go on which pan. Ids are ascending.
struct Weighing {
  std::vector<int> left;
  std::vector<int> right;

  friend bool operator==(const Weighing&, const Weighing&) = default;
};

/// Executable weighing schedule plus the matrix that generated it.
/// Coin c sits on the left pan of weighing r iff matrix digit (r, c) is 1,
/// on the right iff 2. Pans are equal-sized, disjoint and never empty.
struct WeighingPlan {
  TestMatrix matrix;
  std::vector<Weighing> weighings;

  int coin_count() const { return matrix.cols; }
  int weighing_count() const { return matrix.rows; }

  friend bool operator==(const WeighingPlan&, const WeighingPlan&) = default;
};

enum class PlanFormat { Text, Json };

/// Reads pan assignments off the matrix rows. Every row must have equal,
/// nonzero counts of 1s and 2s.
WeighingPlan derive_plan(const TestMatrix& m);

/// Builds the plan for a coin count: the row-balanced canonical construction
/// when the count fills the design exactly, the subset search otherwise.
/// weighing_count defaults to the fewest weighings that can fit the coins.
WeighingPlan build_plan(int coins, std::optional<int> weighing_count = std::nullopt);

/// Text format is one human-readable line per weighing; JSON is the
/// machine-readable schema parse_plan reads back. Both are byte-stable.
std::string serialize_plan(const WeighingPlan& p, PlanFormat format);

/// Parses a JSON plan and re-validates every matrix and plan invariant.
WeighingPlan parse_plan(std::string_view text);

}  // namespace coinweigh
