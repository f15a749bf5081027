#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flagoct/rational.hpp"

namespace flagoct {

enum class MonomialOrder { grevlex, lex };

inline constexpr std::size_t kMaxVariables = 8;

/// Exponent vector over at most kMaxVariables variables. Unused slots are zero.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned exponent(std::size_t index) const { return exps_[index]; }
  void set_exponent(std::size_t index, unsigned power);

  unsigned total_degree() const;
  bool is_one() const { return total_degree() == 0; }
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  auto operator<=>(const Monomial&) const = default;

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
};

/// True when a sorts strictly below b in the given order.
bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order);

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Ordered variable list; each variable carries a cohomological degree.
class Ring {
 public:
  Ring(std::vector<std::string> names, std::vector<int> degrees, MonomialOrder order);

  static RingPtr make(std::vector<std::string> names, std::vector<int> degrees,
                      MonomialOrder order = MonomialOrder::grevlex);
  /// All variables of degree 1.
  static RingPtr make(std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int degree(std::size_t i) const { return degrees_[i]; }
  MonomialOrder order() const { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  int graded_degree(const Monomial& m) const;

  bool operator==(const Ring& other) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
  MonomialOrder order_;
};

/// Throws RingMismatchError unless the two rings are the same.
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// Exact polynomial over Q. Terms are kept sorted by the ring's monomial order,
/// so the leading term is the last entry.
class Polynomial {
 public:
  struct OrderCompare {
    MonomialOrder order = MonomialOrder::grevlex;
    bool operator()(const Monomial& a, const Monomial& b) const { return monomial_less(a, b, order); }
  };
  using TermMap = std::map<Monomial, Rational, OrderCompare>;

  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Rational& value);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial term(RingPtr ring, const Monomial& m, const Rational& coefficient);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  Rational coefficient(const Monomial& m) const;
  /// Largest term under the ring order; throws on the zero polynomial.
  std::pair<Monomial, Rational> leading_term() const;

  /// Graded degree of the highest term, nullopt for zero.
  std::optional<int> degree() const;
  unsigned total_degree() const;
  bool is_homogeneous() const;

  void add_term(const Monomial& m, const Rational& coefficient);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  Polynomial pow(unsigned exponent) const;
  /// Term-by-term product with a monomial and a scalar.
  Polynomial multiply_term(const Monomial& m, const Rational& c) const;

  /// Replaces variable i by images[i], which all live in `target`.
  Polynomial substitute(const RingPtr& target, std::span<const Polynomial> images) const;

  /// Value at a rational point.
  Rational evaluate(std::span<const Rational> point) const;

  bool operator==(const Polynomial& other) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  TermMap terms_;
};

/// S_i(a, b, c) for i in {1, 2, 3}.
Polynomial elementary_symmetric(int i, const Polynomial& a, const Polynomial& b, const Polynomial& c);

/// Returns q with f == q * g, or nullopt when g does not divide f.
/// Greedy leading-term cancellation; throws DivisionByZeroError if g == 0.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

/// Linear form sum_i c_i x_i over a fixed ring.
class LinearForm {
 public:
  LinearForm(RingPtr ring, std::vector<Rational> coefficients);
  /// Throws PreconditionError unless p is homogeneous of total degree 1 (or zero).
  static LinearForm from_polynomial(const Polynomial& p);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const;
  bool proportional_to(const LinearForm& other) const;
  Polynomial to_polynomial() const;
  std::string to_string() const;

  bool operator==(const LinearForm& other) const;

 private:
  RingPtr ring_;
  std::vector<Rational> coeffs_;
};

/// scalar * product of linear factors, kept unexpanded.
class FormProduct {
 public:
  FormProduct(RingPtr ring, Rational scalar, std::vector<LinearForm> factors);

  const RingPtr& ring() const { return ring_; }
  const Rational& scalar() const { return scalar_; }
  const std::vector<LinearForm>& factors() const { return factors_; }

  Polynomial expand() const;
  FormProduct operator*(const FormProduct& other) const;
  FormProduct negated() const;
  std::string to_string() const;

 private:
  RingPtr ring_;
  Rational scalar_;
  std::vector<LinearForm> factors_;
};

struct CoprimeWitness {
  std::size_t first_product;
  std::size_t first_factor;
  std::size_t second_product;
  std::size_t second_factor;
};

struct CoprimeResult {
  bool coprime = true;
  std::optional<CoprimeWitness> witness;
};

/// Products of linear forms are pairwise coprime iff no factor of one is a
/// rational multiple of a factor of another. Zero factors are rejected.
CoprimeResult pairwise_coprime(std::span<const FormProduct> products);

}  // namespace flagoct
