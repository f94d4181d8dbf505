#pragma once

#include <cstdint>
#include <span>

#include "coinweigh/errors.hpp"

namespace coinweigh {

enum class Unit { Bits, Hartleys, Trits };

/// Nonnegative amount of information tagged with its logarithm base
/// (bits = 2, hartleys = 10, trits = 3).
struct InfoQuantity {
  double value = 0.0;
  Unit unit = Unit::Bits;

  friend bool operator==(const InfoQuantity&, const InfoQuantity&) = default;
};

InfoQuantity convert(InfoQuantity q, Unit to);

/// -log p in the requested unit. p must be in (0, 1].
InfoQuantity self_information(double p, Unit unit);

/// Average self-information of a finite distribution. Probabilities must be
/// nonnegative and sum to 1 within 1e-9; zero entries contribute nothing.
InfoQuantity entropy(std::span<const double> dist, Unit unit);

/// Which counting rule a bound uses.
///   GeneralBound: 3^x outcomes must cover all 2n+1 hypotheses.
///   Practical:    equal pans force a multiple-of-3 layout per weighing,
///                 shrinking capacity to (3^x - 3)/2.
///   KnownWeight:  the defect direction is known, 3^x >= n suffices.
enum class Variant { GeneralBound, Practical, KnownWeight };

/// Fewest weighings that can handle n coins under the variant's rule.
/// Exact integer arithmetic throughout.
int min_weighings(std::int64_t n, Variant v);

/// Largest coin count x weighings can handle under the variant's rule.
std::int64_t max_coins(int x, Variant v);

}  // namespace coinweigh
