#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coinweigh/errors.hpp"

namespace coinweigh {

/// Raised by vec_scale when the factor is 0.
class ZeroScaleError : public Error {
 public:
  ZeroScaleError() : Error("cannot scale a trit vector by 0") {}
};

/// Raised when two vectors that must have equal length do not.
class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

/// A base-3 digit. Values outside {0, 1, 2} are rejected at construction;
/// use Trit::reduced when mod-3 wrapping is actually meant.
class Trit {
 public:
  constexpr Trit() = default;

  static Trit checked(int value);

  static constexpr Trit reduced(long long value) {
    return Trit(static_cast<std::uint8_t>(((value % 3) + 3) % 3));
  }

  constexpr int value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr bool operator==(Trit, Trit) = default;

 private:
  constexpr explicit Trit(std::uint8_t v) : value_(v) {}
  std::uint8_t value_ = 0;
};

constexpr Trit trit_mul(Trit a, Trit b) {
  return Trit::reduced(a.value() * b.value());
}

/// Fixed-length sequence of trits. Rows are addressed 1-based, row 1 first,
/// matching how matrix columns and weighing outcomes are written out.
class TritVector {
 public:
  TritVector() = default;
  explicit TritVector(std::vector<Trit> digits) : digits_(std::move(digits)) {}

  static TritVector zeros(int length);
  static TritVector of(std::initializer_list<int> digits);
  static TritVector from_digit_string(std::string_view text);

  int length() const { return static_cast<int>(digits_.size()); }
  Trit digit(int row) const;
  void set_digit(int row, Trit value);
  const std::vector<Trit>& digits() const { return digits_; }

  bool is_zero() const;

  /// Base-3 value with row 1 as the most significant digit. Defines the
  /// enumeration order used everywhere a column ordering matters.
  std::uint64_t code() const;

  std::string digit_string() const;

  friend bool operator==(const TritVector&, const TritVector&) = default;

 private:
  std::vector<Trit> digits_;
};

struct NonZeroDigit {
  int row = 0;  // 1-based
  Trit value;

  friend bool operator==(const NonZeroDigit&, const NonZeroDigit&) = default;
};

/// Position and value of the first nonzero digit, scanning row 1 downward.
/// Empty for the zero vector.
std::optional<NonZeroDigit> first_nonzero(const TritVector& v);

/// Elementwise mod-3 product with k. k must be 1 or 2; scaling by 2 swaps
/// 1s and 2s and keeps 0s, and is its own inverse.
TritVector vec_scale(const TritVector& v, Trit k);

/// True iff u = v or u = 2v (mod 3), the two ways nonzero vectors can lie on
/// the same line. Equivalent to u + 2v = 0 or u + v = 0.
bool is_proportional(const TritVector& u, const TritVector& v);

/// Rescales so the first nonzero digit is 1. The zero vector is returned
/// unchanged.
TritVector canonical_form(const TritVector& v);

}  // namespace coinweigh
