#pragma once

#include <cstdint>
#include <vector>

#include "coinweigh/ternary.hpp"

namespace coinweigh {

/// Largest supported row count. 3^rows columns are enumerated when building
/// a matrix, so this bound keeps construction in memory comfortably.
inline constexpr int kMaxRows = 13;

/// Asked for more coins than a design with this many weighings can tell apart.
class CapacityExceededError : public Error {
 public:
  CapacityExceededError(std::string message, std::int64_t max_coins)
      : Error(std::move(message)), max_coins(max_coins) {}
  std::int64_t max_coins;
};

/// The row-balancing pass could not reach equal thirds. Not expected for any
/// supported size; raised instead of returning a wrong design.
class BalanceInfeasibleError : public Error {
 public:
  using Error::Error;
};

/// The exhaustive subset search ran out of candidates. Because the search is
/// exhaustive this proves no balanced design exists for that size.
class NoBalancedDesignError : public Error {
 public:
  using Error::Error;
};

/// Coin count outside what balanced designs support (a multiple of 3, at
/// least 3). Carries the nearest counts that would work.
class UnsupportedCoinCountError : public Error {
 public:
  UnsupportedCoinCountError(std::string message, std::vector<int> nearest)
      : Error(std::move(message)), nearest(std::move(nearest)) {}
  std::vector<int> nearest;
};

/// A matrix violated a structural invariant (zero column, proportional pair,
/// inconsistent flip record).
class MatrixInvariantError : public Error {
 public:
  using Error::Error;
};

/// Test matrix: one row per weighing, one column per coin. Row digits mean
/// 1 = left pan, 2 = right pan, 0 = not weighed. Each column is some flip
/// (factor 1 or 2) of a canonical column, and `flips` records which, so the
/// first nonzero digit of column c always equals flips[c-1].
///
/// Invariants (checked by validate_matrix and the factories below):
///   - no column is the zero vector
///   - no two columns are proportional
///   - vec_scale(canonical_form(column c), flip(c)) == column c
struct TestMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<TritVector> columns;  // columns[c-1] is coin c, length == rows
  std::vector<Trit> flips;          // flips[c-1] in {1, 2}

  const TritVector& column(int coin) const { return columns[static_cast<std::size_t>(coin - 1)]; }
  Trit digit(int row, int coin) const { return column(coin).digit(row); }
  Trit flip(int coin) const { return flips[static_cast<std::size_t>(coin - 1)]; }

  friend bool operator==(const TestMatrix&, const TestMatrix&) = default;
};

/// (3^rows - 1) / 2, the number of canonical columns.
std::int64_t column_capacity(int rows);

/// (3^rows - 3) / 2, the largest coin count whose rows can be balanced into
/// equal thirds.
std::int64_t balanced_capacity(int rows);

/// All nonzero trit vectors of the given length whose first nonzero digit is
/// 1, one representative per proportionality class, sorted ascending by
/// base-3 code. There are exactly (3^rows - 1)/2 of them.
std::vector<TritVector> canonical_columns(int rows);

/// Matrix whose columns are the first `cols` canonical columns, all flips 1.
TestMatrix canonical_matrix(int rows, int cols);

/// Rebalances a full-size canonical matrix (cols == balanced_capacity(rows))
/// so every row has equal counts of 0s, 1s and 2s, by flipping columns.
///
/// Rows are processed top-down. For row r with c1 ones and c2 twos, the
/// d = (c1 - c2)/2 candidate columns of highest enumeration order whose
/// row-r digit is 1 and whose digits above row r are all 0 get multiplied
/// by 2. Candidates have their first nonzero digit in row r, so rows already
/// balanced stay balanced.
TestMatrix balance_rows(const TestMatrix& m);

/// Exhaustive depth-first search for a design with `cols` coins and `rows`
/// weighings in which every row has equal, nonzero counts of 1s and 2s.
/// Columns are visited in ascending enumeration order, flip 1 before flip 2,
/// include before skip, so the result is the lexicographically first
/// solution and identical across runs. cols must be a multiple of 3 within
/// [3, balanced_capacity(rows)].
TestMatrix select_balanced_subset(int rows, int cols);

/// Checks all TestMatrix invariants, throwing MatrixInvariantError with the
/// violated invariant named.
void validate_matrix(const TestMatrix& m);

}  // namespace coinweigh
