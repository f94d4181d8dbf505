#include "coinweigh/hamming.hpp"

namespace coinweigh {

BitVector BitVector::from_string(std::string_view text) {
  BitVector out;
  out.bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(std::string("invalid bit '") + c + "' (expected 0 or 1)");
    }
    out.bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

int hamming_parity_count(std::int64_t message_length) {
  if (message_length < 1) {
    throw Error("message length must be at least 1, got " + std::to_string(message_length));
  }
  int k = 0;
  std::int64_t power = 1;
  while (power < message_length + 1) {
    power *= 2;
    ++k;
  }
  return k;
}

int hamming_syndrome(const BitVector& word) {
  const int n = word.length();
  // Supported lengths are 3, 7, 15, ...: full words of k >= 2 parity bits.
  if (n < 3 || (n & (n + 1)) != 0) {
    throw UnsupportedLengthError("word length " + std::to_string(n) +
                                 " is not 2^k - 1 for any k >= 2");
  }
  int syndrome = 0;
  for (int j = 0; (1 << j) <= n; ++j) {
    int parity = 0;
    for (int pos = 1; pos <= n; ++pos) {
      if ((pos >> j) & 1) parity ^= word.bit(pos);
    }
    syndrome |= parity << j;
  }
  return syndrome;
}

}  // namespace coinweigh
