#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "flagoct/rational.hpp"
#include "flagoct/weyl.hpp"

namespace flagoct {

/// Weight stored as 2v, so lattice weights have integer entries that are all even or all odd.
using DoubledWeight = std::array<long, 4>;

DoubledWeight doubled(const Weight& w);
Weight undoubled(const DoubledWeight& d);
bool in_weight_lattice(const DoubledWeight& d);

/// Element of the group algebra Z[Lambda] of the Spin(8) weight lattice. The monomial
/// e^lambda is stored by its weight, so y5^2 = y1 y2 y3 y4 holds without any rewriting.
class Character {
 public:
  using TermMap = std::map<DoubledWeight, Integer>;

  Character() = default;

  static Character constant(const Integer& c);
  /// e^lambda; throws PreconditionError off the lattice.
  static Character monomial(const Weight& lambda, const Integer& c = 1);
  static Character monomial(const DoubledWeight& lambda, const Integer& c = 1);
  /// y_j = e^{omega^j}, j = 1..5.
  static Character y(std::size_t j);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const DoubledWeight& w) const;
  /// Value at the identity of the torus: the sum of coefficients.
  Integer dimension() const;

  void add_term(const DoubledWeight& w, const Integer& c);

  Character operator-() const;
  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(const Character& a, const Character& b);
  friend Character operator*(const Integer& s, const Character& a);

  /// Nonnegative powers, and negative powers of a single term with coefficient +-1.
  Character pow(long exponent) const;

  bool operator==(const Character& o) const { return terms_ == o.terms_; }

  /// Canonical form as a sum of y-monomials, e.g. "y5*y1^-1*y2^-1 + 2".
  std::string to_string() const;
  /// Weight list "[(1/2,1/2,1/2,1/2):1, ...]".
  std::string weight_list() const;

 private:
  TermMap terms_;
};

/// Applies w to each weight; PreconditionError unless w preserves the lattice.
Character weyl_act(const WeylElement& w, const Character& f);
bool is_spin8_invariant(const Character& f);

/// True iff f = q d for some q in Z[Lambda]. Both are shifted into 2Z^4-doubled
/// polynomials in Q[z1..z4], divided under lex order, and the quotient is checked for
/// integrality and lattice membership. DivisionByZeroError for d = 0.
bool divides_char(const Character& d, const Character& f);
/// The quotient when divides_char holds.
std::optional<Character> divide_char(const Character& f, const Character& d);

/// e^lambda - 1 divides f iff f maps to zero in Z[Lambda / Z lambda].
bool binomial_divides_by_projection(const Weight& lambda, const Character& f);

/// Parses y1..y5 expressions with integer coefficients; negative exponents allowed.
Character parse_character(std::string_view text);

/// The displayed restrictions of X1..X4 (X4 is the 24-term display without the Cartan part).
Character x_character(int i);
/// Character of the complexified adjoint representation: X4 display + 4.
Character adjoint_character();

}  // namespace flagoct
