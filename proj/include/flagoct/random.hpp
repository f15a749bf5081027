#pragma once

#include <cstdint>
#include <random>

#include "flagoct/polynomial.hpp"
#include "flagoct/rational.hpp"

namespace flagoct {

/// Seeded source for reproducible reports. Draws use std::mt19937_64 (fully
/// specified by the standard) reduced as lo + engine() % (hi - lo + 1), so the
/// same seed gives the same sequence on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long uniform(long lo, long hi);
  bool coin() { return uniform(0, 1) == 1; }
  Rational rational(long lo, long hi, long max_denominator = 1);

  /// Random polynomial with `terms` terms of total degree <= max_degree.
  Polynomial polynomial(const RingPtr& ring, unsigned max_degree, std::size_t terms, long coeff_bound = 5);
  /// Random homogeneous polynomial of the given total degree.
  Polynomial homogeneous(const RingPtr& ring, unsigned degree, std::size_t terms, long coeff_bound = 5);

 private:
  std::mt19937_64 engine_;
};

}  // namespace flagoct
