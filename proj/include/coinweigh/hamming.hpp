#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coinweigh/errors.hpp"

namespace coinweigh {

class UnsupportedLengthError : public Error {
 public:
  using Error::Error;
};

/// Binary word with 1-based positions.
struct BitVector {
  std::vector<std::uint8_t> bits;

  static BitVector from_string(std::string_view text);

  int length() const { return static_cast<int>(bits.size()); }
  int bit(int position) const { return bits[static_cast<std::size_t>(position - 1)]; }

  friend bool operator==(const BitVector&, const BitVector&) = default;
};

/// Minimal number k of parity bits able to locate one error (or none) in an
/// n-bit message: the smallest k with 2^k >= n + 1.
int hamming_parity_count(std::int64_t message_length);

/// Position of the single flipped bit in a received word, or 0 when the word
/// is a valid codeword. Parity sum j runs over the positions whose j-th
/// binary digit is 1, and the sums s_k..s_1 read as a binary number are the
/// error position. Word length must be 2^k - 1 for some k >= 2.
int hamming_syndrome(const BitVector& word);

}  // namespace coinweigh
