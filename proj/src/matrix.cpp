#include "coinweigh/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_set>

namespace coinweigh {

namespace {

void check_rows(int rows) {
  if (rows < 1) throw Error("row count must be at least 1, got " + std::to_string(rows));
  if (rows > kMaxRows) {
    throw Error("row count " + std::to_string(rows) + " exceeds the supported maximum " +
                std::to_string(kMaxRows));
  }
}

std::int64_t pow3(int e) {
  std::int64_t p = 1;
  for (int i = 0; i < e; ++i) p *= 3;
  return p;
}

}  // namespace

std::int64_t column_capacity(int rows) {
  check_rows(rows);
  return (pow3(rows) - 1) / 2;
}

std::int64_t balanced_capacity(int rows) {
  check_rows(rows);
  return (pow3(rows) - 3) / 2;
}

std::vector<TritVector> canonical_columns(int rows) {
  check_rows(rows);
  std::vector<TritVector> out;
  out.reserve(static_cast<std::size_t>(column_capacity(rows)));
  const std::int64_t total = pow3(rows);
  for (std::int64_t value = 1; value < total; ++value) {
    std::vector<Trit> digits(static_cast<std::size_t>(rows));
    std::int64_t rest = value;
    for (int row = rows; row >= 1; --row) {
      digits[static_cast<std::size_t>(row - 1)] = Trit::reduced(rest % 3);
      rest /= 3;
    }
    TritVector v{std::move(digits)};
    if (first_nonzero(v)->value == Trit::checked(1)) out.push_back(std::move(v));
  }
  return out;
}

TestMatrix canonical_matrix(int rows, int cols) {
  const std::int64_t capacity = column_capacity(rows);
  if (cols < 1 || cols > capacity) {
    throw CapacityExceededError("coin count " + std::to_string(cols) + " out of range 1.." +
                                    std::to_string(capacity) + " for " + std::to_string(rows) +
                                    " weighings",
                                capacity);
  }
  std::vector<TritVector> all = canonical_columns(rows);
  all.resize(static_cast<std::size_t>(cols));
  TestMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.columns = std::move(all);
  m.flips.assign(static_cast<std::size_t>(cols), Trit::checked(1));
  return m;
}

TestMatrix balance_rows(const TestMatrix& m) {
  const std::int64_t want = balanced_capacity(m.rows);
  if (m.cols != want) {
    throw BalanceInfeasibleError("row balancing needs exactly " + std::to_string(want) +
                                 " coins for " + std::to_string(m.rows) + " weighings, got " +
                                 std::to_string(m.cols));
  }
  const std::vector<TritVector> canon = canonical_columns(m.rows);
  for (int c = 1; c <= m.cols; ++c) {
    if (m.flip(c) != Trit::checked(1) || m.column(c) != canon[static_cast<std::size_t>(c - 1)]) {
      throw BalanceInfeasibleError("row balancing expects an unflipped canonical matrix prefix");
    }
  }

  TestMatrix out = m;
  const Trit two = Trit::checked(2);
  for (int row = 1; row <= out.rows; ++row) {
    int ones = 0;
    int twos = 0;
    for (int c = 1; c <= out.cols; ++c) {
      int d = out.digit(row, c).value();
      if (d == 1) ++ones;
      if (d == 2) ++twos;
    }
    if (ones < twos || (ones - twos) % 2 != 0) {
      throw BalanceInfeasibleError("row " + std::to_string(row) + " cannot be balanced: " +
                                   std::to_string(ones) + " ones vs " + std::to_string(twos) +
                                   " twos");
    }
    int flips_needed = (ones - twos) / 2;

    // Candidates have their first nonzero digit here, value 1.
    std::vector<int> candidates;
    for (int c = 1; c <= out.cols; ++c) {
      bool zero_above = true;
      for (int r = 1; r < row; ++r) {
        if (!out.digit(r, c).is_zero()) {
          zero_above = false;
          break;
        }
      }
      if (zero_above && out.digit(row, c).value() == 1) candidates.push_back(c);
    }
    if (static_cast<int>(candidates.size()) < flips_needed) {
      throw BalanceInfeasibleError("row " + std::to_string(row) + " has only " +
                                   std::to_string(candidates.size()) + " flip candidates, needs " +
                                   std::to_string(flips_needed));
    }
    for (int i = 0; i < flips_needed; ++i) {
      int c = candidates[candidates.size() - 1 - static_cast<std::size_t>(i)];
      out.columns[static_cast<std::size_t>(c - 1)] = vec_scale(out.column(c), two);
      out.flips[static_cast<std::size_t>(c - 1)] = trit_mul(out.flip(c), two);
    }
  }

  // Equal pan sizes need only equal 1s and 2s; full-size designs come out
  // with equal thirds, and anything less means the construction broke.
  const int third = out.cols / 3;
  for (int row = 1; row <= out.rows; ++row) {
    int count[3] = {0, 0, 0};
    for (int c = 1; c <= out.cols; ++c) ++count[out.digit(row, c).value()];
    if (count[0] != third || count[1] != third || count[2] != third) {
      throw BalanceInfeasibleError("row " + std::to_string(row) +
                                   " did not balance to equal thirds");
    }
  }
  return out;
}

namespace {

// Depth-first search over (column, flip) in enumeration order: include with
// flip 1, include with flip 2, skip. The first solution found is therefore
// the lexicographically first one. Two sound accelerations keep near-capacity
// sizes tractable without changing that answer: a per-row counting prune and
// a cache of states proven to have no solution.
struct SubsetSearch {
  const std::vector<TritVector>& pool;
  int rows;
  int want;
  std::vector<int> ones;          // per-row count of 1s among chosen columns
  std::vector<int> twos;          // per-row count of 2s
  std::vector<std::vector<int>> nonzero_suffix;  // [pool index][row]: nonzero digits from here on
  std::vector<int> chosen;        // pool indices
  std::vector<Trit> chosen_flips;
  std::unordered_set<std::uint64_t> dead_states;

  static constexpr std::size_t kMaxDeadStates = 1 << 25;

  SubsetSearch(const std::vector<TritVector>& pool, int rows, int want)
      : pool(pool),
        rows(rows),
        want(want),
        ones(static_cast<std::size_t>(rows), 0),
        twos(static_cast<std::size_t>(rows), 0) {
    nonzero_suffix.assign(pool.size() + 1, std::vector<int>(static_cast<std::size_t>(rows), 0));
    for (std::size_t i = pool.size(); i-- > 0;) {
      for (int r = 1; r <= rows; ++r) {
        nonzero_suffix[i][static_cast<std::size_t>(r - 1)] =
            nonzero_suffix[i + 1][static_cast<std::size_t>(r - 1)] +
            (pool[i].digit(r).is_zero() ? 0 : 1);
      }
    }
  }

  // Every future column adds +1, -1 or 0 to a row's (ones - twos). With m
  // columns still to be included, row r will gain q more nonzero entries,
  // where q is limited by how many future columns have a nonzero digit there
  // and by how many all-zero-in-r columns can absorb the rest of the budget.
  // Reaching balance needs q >= |diff|, q of the same parity as diff, and
  // q >= 2 for a row that is still empty. Prune when no such q exists.
  bool feasible(std::size_t next) const {
    const int m = want - static_cast<int>(chosen.size());
    const int available = static_cast<int>(pool.size() - next);
    if (available < m) return false;
    for (int r = 0; r < rows; ++r) {
      const std::size_t ri = static_cast<std::size_t>(r);
      const int diff = std::abs(ones[ri] - twos[ri]);
      const int nonzero_avail = nonzero_suffix[next][ri];
      const int zero_avail = available - nonzero_avail;
      const bool empty = ones[ri] + twos[ri] == 0;
      int lo = std::max({diff, empty ? 2 : 0, m - zero_avail});
      if ((lo ^ diff) & 1) ++lo;
      const int hi = std::min(m, nonzero_avail);
      if (lo > hi) return false;
    }
    return true;
  }

  bool balanced() const {
    for (int r = 0; r < rows; ++r) {
      const std::size_t ri = static_cast<std::size_t>(r);
      if (ones[ri] != twos[ri] || ones[ri] == 0) return false;
    }
    return true;
  }

  void apply(const TritVector& column, int delta) {
    for (int r = 1; r <= rows; ++r) {
      int d = column.digit(r).value();
      if (d == 1) ones[static_cast<std::size_t>(r - 1)] += delta;
      if (d == 2) twos[static_cast<std::size_t>(r - 1)] += delta;
    }
  }

  // The subtree below a node depends only on the position, the number of
  // columns still wanted, each row's imbalance and which rows are still
  // empty. That packs into 64 bits for pools up to 127 columns and at most
  // 5 rows; larger searches simply run without the cache.
  bool can_cache() const { return pool.size() <= 127 && want <= 127 && rows <= 5; }

  std::uint64_t state_key(std::size_t next) const {
    std::uint64_t key = next;
    key = (key << 7) | static_cast<std::uint64_t>(want - static_cast<int>(chosen.size()));
    for (int r = 0; r < rows; ++r) {
      const std::size_t ri = static_cast<std::size_t>(r);
      key = (key << 8) | static_cast<std::uint64_t>(ones[ri] - twos[ri] + 128);
      key = (key << 1) | static_cast<std::uint64_t>(ones[ri] + twos[ri] == 0 ? 1 : 0);
    }
    return key;
  }

  // Walks: try both flips of the current column, then advance to the next
  // column with the same partial state (a skip). Skipping iteratively keeps
  // the recursion depth at the include count. If the whole run fails, every
  // state it passed through has a dead subtree.
  bool search(std::size_t next) {
    if (static_cast<int>(chosen.size()) == want) return balanced();

    const bool cache = can_cache();
    std::vector<std::uint64_t> run_states;
    for (; feasible(next) && next < pool.size(); ++next) {
      if (cache) {
        const std::uint64_t key = state_key(next);
        if (dead_states.contains(key)) break;
        run_states.push_back(key);
      }
      for (int flip = 1; flip <= 2; ++flip) {
        const Trit factor = Trit::checked(flip);
        TritVector column = flip == 1 ? pool[next] : vec_scale(pool[next], factor);
        apply(column, +1);
        chosen.push_back(static_cast<int>(next));
        chosen_flips.push_back(factor);
        if (search(next + 1)) return true;
        chosen.pop_back();
        chosen_flips.pop_back();
        apply(column, -1);
      }
    }

    for (std::uint64_t key : run_states) {
      if (dead_states.size() >= kMaxDeadStates) break;
      dead_states.insert(key);
    }
    return false;
  }
};

}  // namespace

TestMatrix select_balanced_subset(int rows, int cols) {
  const std::int64_t capacity = balanced_capacity(rows);
  if (cols % 3 != 0 || cols < 3) {
    std::vector<int> nearest;
    int lower = (cols / 3) * 3;
    if (lower >= 3 && lower != cols && lower <= capacity) nearest.push_back(lower);
    int upper = lower + 3;
    if (upper < 3) upper = 3;
    if (upper <= capacity) nearest.push_back(upper);
    std::string msg = "coin count " + std::to_string(cols) +
                      " is not supported: balanced designs need a multiple of 3";
    if (!nearest.empty()) {
      msg += "; nearest supported counts: " + std::to_string(nearest.front());
      if (nearest.size() > 1) msg += " and " + std::to_string(nearest.back());
    }
    throw UnsupportedCoinCountError(std::move(msg), std::move(nearest));
  }
  if (cols > capacity) {
    throw CapacityExceededError("coin count " + std::to_string(cols) + " exceeds capacity " +
                                    std::to_string(capacity) + " for " + std::to_string(rows) +
                                    " weighings",
                                capacity);
  }

  const std::vector<TritVector> pool = canonical_columns(rows);
  SubsetSearch search{pool, rows, cols};
  if (!search.search(0)) {
    throw NoBalancedDesignError("no balanced design exists for " + std::to_string(cols) +
                                " coins in " + std::to_string(rows) + " weighings");
  }

  TestMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.columns.reserve(static_cast<std::size_t>(cols));
  m.flips = search.chosen_flips;
  for (std::size_t i = 0; i < search.chosen.size(); ++i) {
    const TritVector& base = pool[static_cast<std::size_t>(search.chosen[i])];
    m.columns.push_back(search.chosen_flips[i] == Trit::checked(1)
                            ? base
                            : vec_scale(base, search.chosen_flips[i]));
  }
  return m;
}

void validate_matrix(const TestMatrix& m) {
  if (m.rows < 1 || m.cols < 1) throw MatrixInvariantError("matrix must have at least one row and one column");
  if (static_cast<int>(m.columns.size()) != m.cols) {
    throw MatrixInvariantError("matrix records " + std::to_string(m.cols) + " coins but has " +
                               std::to_string(m.columns.size()) + " columns");
  }
  if (static_cast<int>(m.flips.size()) != m.cols) {
    throw MatrixInvariantError("matrix has " + std::to_string(m.flips.size()) + " flips for " +
                               std::to_string(m.cols) + " columns");
  }
  for (int c = 1; c <= m.cols; ++c) {
    const TritVector& col = m.column(c);
    if (col.length() != m.rows) {
      throw MatrixInvariantError("column " + std::to_string(c) + " has length " +
                                 std::to_string(col.length()) + ", expected " +
                                 std::to_string(m.rows));
    }
    if (col.is_zero()) {
      throw MatrixInvariantError("column " + std::to_string(c) +
                                 " is the zero vector: that coin would never be weighed");
    }
    Trit flip = m.flip(c);
    if (flip.is_zero()) throw MatrixInvariantError("flip for coin " + std::to_string(c) + " must be 1 or 2");
    if (vec_scale(canonical_form(col), flip) != col) {
      throw MatrixInvariantError("flip record for coin " + std::to_string(c) +
                                 " does not match its column");
    }
  }
  // Two columns are proportional exactly when their canonical forms match,
  // so duplicate canonical codes find every offending pair.
  std::vector<std::pair<std::uint64_t, int>> keys;
  keys.reserve(static_cast<std::size_t>(m.cols));
  for (int c = 1; c <= m.cols; ++c) keys.emplace_back(canonical_form(m.column(c)).code(), c);
  std::sort(keys.begin(), keys.end());
  for (std::size_t i = 1; i < keys.size(); ++i) {
    if (keys[i].first == keys[i - 1].first) {
      throw MatrixInvariantError("columns " + std::to_string(keys[i - 1].second) + " and " +
                                 std::to_string(keys[i].second) +
                                 " are proportional: those coins would be indistinguishable");
    }
  }
}

}  // namespace coinweigh
