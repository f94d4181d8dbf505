#include "coinweigh/plan.hpp"

#include <algorithm>

#include "json.hpp"

#include "coinweigh/bounds.hpp"

namespace coinweigh {

WeighingPlan derive_plan(const TestMatrix& m) {
  std::vector<Weighing> weighings;
  weighings.reserve(static_cast<std::size_t>(m.rows));
  for (int row = 1; row <= m.rows; ++row) {
    Weighing w;
    for (int c = 1; c <= m.cols; ++c) {
      switch (m.digit(row, c).value()) {
        case 1: w.left.push_back(c); break;
        case 2: w.right.push_back(c); break;
        default: break;
      }
    }
    if (w.left.size() != w.right.size()) {
      throw UnbalancedRowError("weighing " + std::to_string(row) + " would put " +
                                   std::to_string(w.left.size()) + " coins against " +
                                   std::to_string(w.right.size()),
                               row);
    }
    if (w.left.empty()) {
      throw PlanError("weighing " + std::to_string(row) + " would have empty pans");
    }
    weighings.push_back(std::move(w));
  }
  return WeighingPlan{m, std::move(weighings)};
}

WeighingPlan build_plan(int coins, std::optional<int> weighing_count) {
  if (coins < 1) throw Error("coin count must be at least 1, got " + std::to_string(coins));
  const int rows = weighing_count ? *weighing_count : min_weighings(coins, Variant::Practical);
  const TestMatrix m = coins == balanced_capacity(rows) ? balance_rows(canonical_matrix(rows, coins))
                                                        : select_balanced_subset(rows, coins);
  return derive_plan(m);
}

namespace {

void append_ids(std::string& out, const std::vector<int>& ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(ids[i]);
  }
}

std::string plan_to_text(const WeighingPlan& p) {
  std::string out;
  for (int row = 1; row <= p.weighing_count(); ++row) {
    const Weighing& w = p.weighings[static_cast<std::size_t>(row - 1)];
    out += 'W';
    out += std::to_string(row);
    out += ": ";
    append_ids(out, w.left);
    out += "  <>  ";
    append_ids(out, w.right);
    out += '\n';
  }
  return out;
}

std::string plan_to_json(const WeighingPlan& p) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["coins"] = p.coin_count();
  j["weighings"] = nlohmann::ordered_json::array();
  for (const Weighing& w : p.weighings) {
    nlohmann::ordered_json jw;
    jw["left"] = w.left;
    jw["right"] = w.right;
    j["weighings"].push_back(std::move(jw));
  }
  j["matrix"] = nlohmann::ordered_json::array();
  for (int row = 1; row <= p.weighing_count(); ++row) {
    std::string digits;
    digits.reserve(static_cast<std::size_t>(p.coin_count()));
    for (int c = 1; c <= p.coin_count(); ++c) {
      digits.push_back(static_cast<char>('0' + p.matrix.digit(row, c).value()));
    }
    j["matrix"].push_back(std::move(digits));
  }
  j["flips"] = nlohmann::ordered_json::array();
  for (int c = 1; c <= p.coin_count(); ++c) j["flips"].push_back(p.matrix.flip(c).value());
  return j.dump(2) + "\n";
}

const nlohmann::json& require_field(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw PlanParseError(std::string("plan is missing required field \"") + key + "\"");
  return *it;
}

}  // namespace

std::string serialize_plan(const WeighingPlan& p, PlanFormat format) {
  return format == PlanFormat::Text ? plan_to_text(p) : plan_to_json(p);
}

WeighingPlan parse_plan(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw PlanParseError(std::string("plan is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw PlanParseError("plan must be a JSON object");

  const auto& version = require_field(j, "version");
  if (!version.is_number_integer() || version.get<int>() != 1) {
    throw PlanParseError("unsupported plan version");
  }
  const auto& coins_field = require_field(j, "coins");
  if (!coins_field.is_number_integer() || coins_field.get<int>() < 1) {
    throw PlanParseError("\"coins\" must be a positive integer");
  }
  const int coins = coins_field.get<int>();

  const auto& matrix_field = require_field(j, "matrix");
  const auto& weighings_field = require_field(j, "weighings");
  const auto& flips_field = require_field(j, "flips");
  if (!matrix_field.is_array() || matrix_field.empty()) {
    throw PlanParseError("\"matrix\" must be a non-empty array of digit strings");
  }
  if (!weighings_field.is_array() || weighings_field.size() != matrix_field.size()) {
    throw PlanParseError("\"weighings\" must list exactly one entry per matrix row");
  }
  if (!flips_field.is_array() || static_cast<int>(flips_field.size()) != coins) {
    throw PlanParseError("\"flips\" must list exactly one factor per coin");
  }
  const int rows = static_cast<int>(matrix_field.size());

  TestMatrix m;
  m.rows = rows;
  m.cols = coins;
  m.columns.assign(static_cast<std::size_t>(coins), TritVector::zeros(rows));
  for (int row = 1; row <= rows; ++row) {
    const auto& row_field = matrix_field[static_cast<std::size_t>(row - 1)];
    if (!row_field.is_string()) throw PlanParseError("matrix rows must be digit strings");
    const std::string digits = row_field.get<std::string>();
    if (static_cast<int>(digits.size()) != coins) {
      throw PlanParseError("matrix row " + std::to_string(row) + " has " +
                           std::to_string(digits.size()) + " digits, expected " +
                           std::to_string(coins));
    }
    TritVector parsed;
    try {
      parsed = TritVector::from_digit_string(digits);
    } catch (const Error& e) {
      throw PlanParseError("matrix row " + std::to_string(row) + ": " + e.what());
    }
    for (int c = 1; c <= coins; ++c) {
      m.columns[static_cast<std::size_t>(c - 1)].set_digit(row, parsed.digit(c));
    }
  }
  m.flips.reserve(static_cast<std::size_t>(coins));
  for (const auto& f : flips_field) {
    if (!f.is_number_integer() || (f.get<int>() != 1 && f.get<int>() != 2)) {
      throw PlanParseError("flips must be 1 or 2");
    }
    m.flips.push_back(Trit::checked(f.get<int>()));
  }

  validate_matrix(m);

  std::vector<Weighing> weighings;
  weighings.reserve(static_cast<std::size_t>(rows));
  for (int row = 1; row <= rows; ++row) {
    const auto& jw = weighings_field[static_cast<std::size_t>(row - 1)];
    if (!jw.is_object()) throw PlanParseError("weighings must be objects with \"left\" and \"right\"");
    const auto& left_field = require_field(jw, "left");
    const auto& right_field = require_field(jw, "right");
    if (!left_field.is_array() || !right_field.is_array()) {
      throw PlanParseError("pan lists must be arrays of coin ids");
    }
    Weighing w;
    w.left = left_field.get<std::vector<int>>();
    w.right = right_field.get<std::vector<int>>();
    if (w.left.size() != w.right.size()) {
      throw UnbalancedRowError("weighing " + std::to_string(row) + " puts " +
                                   std::to_string(w.left.size()) + " coins against " +
                                   std::to_string(w.right.size()),
                               row);
    }
    if (w.left.empty()) throw PlanParseError("weighing " + std::to_string(row) + " has empty pans");
    for (const std::vector<int>* pan : {&w.left, &w.right}) {
      for (std::size_t i = 0; i < pan->size(); ++i) {
        int id = (*pan)[i];
        if (id < 1 || id > coins) {
          throw PlanParseError("weighing " + std::to_string(row) + " names coin " +
                               std::to_string(id) + ", valid ids are 1.." + std::to_string(coins));
        }
        if (i > 0 && (*pan)[i - 1] >= id) {
          throw PlanParseError("weighing " + std::to_string(row) +
                               " pan ids must be strictly ascending");
        }
      }
    }
    std::vector<int> overlap;
    std::set_intersection(w.left.begin(), w.left.end(), w.right.begin(), w.right.end(),
                          std::back_inserter(overlap));
    if (!overlap.empty()) {
      throw PlanParseError("weighing " + std::to_string(row) + " puts coin " +
                           std::to_string(overlap.front()) + " on both pans");
    }
    weighings.push_back(std::move(w));
  }

  // Pans must restate the matrix exactly.
  for (int row = 1; row <= rows; ++row) {
    const Weighing& w = weighings[static_cast<std::size_t>(row - 1)];
    for (int c = 1; c <= coins; ++c) {
      const bool on_left = std::binary_search(w.left.begin(), w.left.end(), c);
      const bool on_right = std::binary_search(w.right.begin(), w.right.end(), c);
      const int digit = m.digit(row, c).value();
      const int expected = on_left ? 1 : on_right ? 2 : 0;
      if (digit != expected) {
        throw PlanParseError("weighing " + std::to_string(row) + " disagrees with matrix digit for coin " +
                             std::to_string(c));
      }
    }
  }

  return WeighingPlan{std::move(m), std::move(weighings)};
}

}  // namespace coinweigh
