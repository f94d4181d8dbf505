#include "coinweigh/bounds.hpp"

#include <cmath>
#include <string>

namespace coinweigh {

namespace {

double log_of_base(Unit unit) {
  switch (unit) {
    case Unit::Bits: return std::log(2.0);
    case Unit::Hartleys: return std::log(10.0);
    case Unit::Trits: return std::log(3.0);
  }
  throw Error("unknown information unit");
}

constexpr std::int64_t kMaxCoins = 1'000'000'000'000'000'000;  // keeps 2n+1 exact
constexpr int kMaxExponent = 39;                               // 3^39 still fits in int64

std::int64_t pow3(int e) {
  std::int64_t p = 1;
  for (int i = 0; i < e; ++i) p *= 3;
  return p;
}

/// Smallest x >= 1 with 3^x >= target. One weighing is the floor: a plan
/// with none answers nothing.
int smallest_power_of_3_reaching(std::int64_t target) {
  std::int64_t p = 3;
  int x = 1;
  while (p < target) {
    p *= 3;
    ++x;
  }
  return x;
}

}  // namespace

InfoQuantity convert(InfoQuantity q, Unit to) {
  if (q.unit == to) return q;
  return InfoQuantity{q.value * log_of_base(q.unit) / log_of_base(to), to};
}

InfoQuantity self_information(double p, Unit unit) {
  if (!(p > 0.0) || p > 1.0) {
    throw Error("probability must be in (0, 1], got " + std::to_string(p));
  }
  return InfoQuantity{-std::log(p) / log_of_base(unit), unit};
}

InfoQuantity entropy(std::span<const double> dist, Unit unit) {
  double sum = 0.0;
  for (double p : dist) {
    if (p < 0.0) throw Error("probabilities must be nonnegative, got " + std::to_string(p));
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error("probabilities must sum to 1, got " + std::to_string(sum));
  }
  const double base = log_of_base(unit);
  double h = 0.0;
  for (double p : dist) {
    if (p > 0.0) h -= p * std::log(p) / base;
  }
  return InfoQuantity{h, unit};
}

int min_weighings(std::int64_t n, Variant v) {
  if (n < 1) throw Error("coin count must be at least 1, got " + std::to_string(n));
  if (n > kMaxCoins) throw Error("coin count too large");
  switch (v) {
    case Variant::GeneralBound:
      return smallest_power_of_3_reaching(2 * n + 1);
    case Variant::Practical: {
      // (3^x - 3)/2 >= n  <=>  3^x >= 2n + 3
      return smallest_power_of_3_reaching(2 * n + 3);
    }
    case Variant::KnownWeight:
      return smallest_power_of_3_reaching(n);
  }
  throw Error("unknown bound variant");
}

std::int64_t max_coins(int x, Variant v) {
  if (x < 1) throw Error("weighing count must be at least 1, got " + std::to_string(x));
  if (x > kMaxExponent) throw Error("weighing count too large");
  switch (v) {
    case Variant::GeneralBound: return (pow3(x) - 1) / 2;
    case Variant::Practical: return (pow3(x) - 3) / 2;
    case Variant::KnownWeight: return pow3(x);
  }
  throw Error("unknown bound variant");
}

}  // namespace coinweigh
