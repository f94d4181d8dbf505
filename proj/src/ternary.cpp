#include "coinweigh/ternary.hpp"

#include <algorithm>

namespace coinweigh {

Trit Trit::checked(int value) {
  if (value < 0 || value > 2) {
    throw Error("trit value must be 0, 1 or 2, got " + std::to_string(value));
  }
  return Trit(static_cast<std::uint8_t>(value));
}

TritVector TritVector::zeros(int length) {
  return TritVector(std::vector<Trit>(static_cast<std::size_t>(length)));
}

TritVector TritVector::of(std::initializer_list<int> digits) {
  std::vector<Trit> out;
  out.reserve(digits.size());
  for (int d : digits) out.push_back(Trit::checked(d));
  return TritVector(std::move(out));
}

TritVector TritVector::from_digit_string(std::string_view text) {
  std::vector<Trit> out;
  out.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '2') {
      throw Error(std::string("invalid trit digit '") + c + "' (expected 0, 1 or 2)");
    }
    out.push_back(Trit::checked(c - '0'));
  }
  return TritVector(std::move(out));
}

Trit TritVector::digit(int row) const {
  if (row < 1 || row > length()) {
    throw Error("row " + std::to_string(row) + " out of range 1.." + std::to_string(length()));
  }
  return digits_[static_cast<std::size_t>(row - 1)];
}

void TritVector::set_digit(int row, Trit value) {
  if (row < 1 || row > length()) {
    throw Error("row " + std::to_string(row) + " out of range 1.." + std::to_string(length()));
  }
  digits_[static_cast<std::size_t>(row - 1)] = value;
}

bool TritVector::is_zero() const {
  return std::all_of(digits_.begin(), digits_.end(), [](Trit t) { return t.is_zero(); });
}

std::uint64_t TritVector::code() const {
  std::uint64_t value = 0;
  for (Trit t : digits_) value = value * 3 + static_cast<std::uint64_t>(t.value());
  return value;
}

std::string TritVector::digit_string() const {
  std::string out;
  out.reserve(digits_.size());
  for (Trit t : digits_) out.push_back(static_cast<char>('0' + t.value()));
  return out;
}

std::optional<NonZeroDigit> first_nonzero(const TritVector& v) {
  for (int row = 1; row <= v.length(); ++row) {
    Trit t = v.digit(row);
    if (!t.is_zero()) return NonZeroDigit{row, t};
  }
  return std::nullopt;
}

TritVector vec_scale(const TritVector& v, Trit k) {
  if (k.is_zero()) throw ZeroScaleError();
  std::vector<Trit> out;
  out.reserve(v.digits().size());
  for (Trit t : v.digits()) out.push_back(trit_mul(t, k));
  return TritVector(std::move(out));
}

bool is_proportional(const TritVector& u, const TritVector& v) {
  if (u.length() != v.length()) {
    throw LengthMismatchError("cannot compare vectors of lengths " +
                              std::to_string(u.length()) + " and " + std::to_string(v.length()));
  }
  return u == v || u == vec_scale(v, Trit::checked(2));
}

TritVector canonical_form(const TritVector& v) {
  auto head = first_nonzero(v);
  if (!head) return v;
  // The leading value is its own inverse mod 3, so scaling by it makes the
  // leading digit 1.
  return vec_scale(v, head->value);
}

}  // namespace coinweigh
