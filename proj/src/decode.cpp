#include "coinweigh/decode.hpp"

#include <cctype>

namespace coinweigh {

std::string to_string(const Verdict& v) {
  if (v.genuine()) return "all coins genuine";
  return "coin " + std::to_string(v.coin) +
         (v.weight == CoinWeight::Heavier ? ", heavier" : ", lighter");
}

Syndrome parse_syndrome(std::string_view text, int expected_length) {
  if (static_cast<int>(text.size()) != expected_length) {
    throw SyndromeParseError("syndrome \"" + std::string(text) + "\" has " +
                             std::to_string(text.size()) + " entries, plan has " +
                             std::to_string(expected_length) + " weighings");
  }
  std::vector<Trit> digits;
  digits.reserve(text.size());
  for (char c : text) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
      case 'B': case '0': digits.push_back(Trit::checked(0)); break;
      case 'L': case '1': digits.push_back(Trit::checked(1)); break;
      case 'R': case '2': digits.push_back(Trit::checked(2)); break;
      default:
        throw SyndromeParseError(std::string("invalid weighing result '") + c +
                                 "': use L, B, R or 1, 0, 2");
    }
  }
  return Syndrome{std::move(digits)};
}

std::string syndrome_letters(const Syndrome& s) {
  static constexpr char kLetter[3] = {'B', 'L', 'R'};
  std::string out;
  out.reserve(s.digits().size());
  for (Trit t : s.digits()) out.push_back(kLetter[t.value()]);
  return out;
}

namespace {

void check_length(const TestMatrix& m, const Syndrome& s) {
  if (s.length() != m.rows) {
    throw SyndromeParseError("syndrome length " + std::to_string(s.length()) +
                             " does not match the plan's " + std::to_string(m.rows) +
                             " weighings");
  }
}

[[noreturn]] void no_match(const Syndrome& s) {
  throw InvalidSyndromeError("syndrome " + syndrome_letters(s) +
                             " does not match any single-counterfeit scenario");
}

}  // namespace

Verdict decode_balanced(const TestMatrix& m, const Syndrome& s) {
  check_length(m, s);
  if (s.is_zero()) return Verdict::all_genuine();
  const Syndrome doubled = vec_scale(s, Trit::checked(2));
  for (int c = 1; c <= m.cols; ++c) {
    if (m.column(c) == s) return Verdict::counterfeit(c, CoinWeight::Heavier);
    if (m.column(c) == doubled) return Verdict::counterfeit(c, CoinWeight::Lighter);
  }
  no_match(s);
}

Verdict decode_canonical(const TestMatrix& m, const Syndrome& s) {
  check_length(m, s);
  if (s.is_zero()) return Verdict::all_genuine();
  const Trit divisor = first_nonzero(s)->value;
  // Dividing by 1 or 2 mod 3 is the same as multiplying by it.
  const Syndrome quotient = vec_scale(s, divisor);
  for (int c = 1; c <= m.cols; ++c) {
    if (canonical_form(m.column(c)) == quotient) {
      return Verdict::counterfeit(
          c, divisor == m.flip(c) ? CoinWeight::Heavier : CoinWeight::Lighter);
    }
  }
  no_match(s);
}

}  // namespace coinweigh
