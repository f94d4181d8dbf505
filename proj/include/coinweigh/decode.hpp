#pragma once

#include <string>
#include <string_view>

#include "coinweigh/matrix.hpp"

namespace coinweigh {

/// Observation that no single-counterfeit world can produce. Usually an
/// operator or equipment error; also the two spare outcomes when the design
/// is below full capacity.
class InvalidSyndromeError : public Error {
 public:
  using Error::Error;
};

class SyndromeParseError : public Error {
 public:
  using Error::Error;
};

enum class CoinWeight { Heavier, Lighter };

constexpr CoinWeight opposite(CoinWeight w) {
  return w == CoinWeight::Heavier ? CoinWeight::Lighter : CoinWeight::Heavier;
}

/// Decoder conclusion: every coin genuine, or one named coin heavier/lighter.
struct Verdict {
  int coin = 0;  // 0 means all genuine
  CoinWeight weight = CoinWeight::Heavier;

  static Verdict all_genuine() { return Verdict{}; }
  static Verdict counterfeit(int coin, CoinWeight weight) { return Verdict{coin, weight}; }

  bool genuine() const { return coin == 0; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string to_string(const Verdict& v);

/// One trit per weighing: 0 balanced, 1 tilts left, 2 tilts right.
using Syndrome = TritVector;

/// Parses "RRB"-style letters (L left, B balance, R right) or "220"-style
/// digits, case-insensitively, mixed freely. Length must match the plan.
Syndrome parse_syndrome(std::string_view text, int expected_length);

/// Renders a syndrome as tilt letters, e.g. (2,2,0) -> "RRB".
std::string syndrome_letters(const Syndrome& s);

/// Direct lookup against a balanced matrix: the zero syndrome means all
/// genuine; a syndrome equal to column c means coin c is heavier; one equal
/// to twice column c means coin c is lighter.
Verdict decode_balanced(const TestMatrix& m, const Syndrome& s);

/// Divisor procedure: divide the syndrome by its first nonzero value b,
/// locate the quotient among the canonical forms of the columns, then read
/// the direction off the flip record. b equal to the coin's flip means
/// heavier (the tilt pattern matches the side the coin actually sits on),
/// otherwise lighter.
Verdict decode_canonical(const TestMatrix& m, const Syndrome& s);

}  // namespace coinweigh
