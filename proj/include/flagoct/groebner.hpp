#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "flagoct/polynomial.hpp"

namespace flagoct {

inline constexpr std::size_t kMaxGroebnerVariables = 6;
inline constexpr std::size_t kMaxGroebnerGenerators = 30;

/// Reduced, monic Gröbner basis with respect to the ring's monomial order.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, bool homogeneous_input);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  /// Every input generator was homogeneous for the ring grading.
  bool homogeneous_input() const { return homogeneous_; }
  bool is_unit_ideal() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  /// True when m is not divisible by any leading monomial.
  bool is_standard(const Monomial& m) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leading_;
  bool homogeneous_;
};

/// Full reduction of f modulo the given divisors.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors);

/// Buchberger's algorithm with the coprime-leading-term criterion.
/// Throws ResourceError beyond kMaxGroebnerVariables / kMaxGroebnerGenerators.
GroebnerBasis buchberger(std::span<const Polynomial> generators);

/// Entry d is the dimension of the degree-d piece of ring / ideal, d = 0..max_degree.
/// Requires homogeneous generators and positive variable degrees.
std::vector<std::size_t> graded_quotient_dimensions(const GroebnerBasis& gb, int max_degree);

}  // namespace flagoct
