#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "flagoct/octonion.hpp"
#include "flagoct/polynomial.hpp"

namespace flagoct {

/// Hermitian 3x3 octonion matrix
///   [ x1     p      q  ]
///   [ p*     x2     r  ]
///   [ q*     r*     x3 ]
struct JordanMatrix {
  Rational x1, x2, x3;
  Octonion p, q, r;

  static constexpr std::size_t kDimension = 27;

  static JordanMatrix diagonal(const Rational& a, const Rational& b, const Rational& c);
  static JordanMatrix identity() { return diagonal(1, 1, 1); }
  /// Throws PreconditionError unless m is Hermitian.
  static JordanMatrix from_matrix(const OctMatrix& m);

  /// Canonical basis: 3 diagonal units, then r-slot e1..e8, p-slot, q-slot.
  static JordanMatrix basis(std::size_t index);
  static JordanMatrix from_coordinates(const std::array<Rational, kDimension>& coords);
  std::array<Rational, kDimension> coordinates() const;

  OctMatrix to_matrix() const;
  Rational trace() const { return x1 + x2 + x3; }
  bool is_diagonal() const { return p.is_zero() && q.is_zero() && r.is_zero(); }

  JordanMatrix& operator+=(const JordanMatrix& o);
  JordanMatrix& operator-=(const JordanMatrix& o);
  JordanMatrix& operator*=(const Rational& s);
  friend JordanMatrix operator+(JordanMatrix a, const JordanMatrix& b) { return a += b; }
  friend JordanMatrix operator-(JordanMatrix a, const JordanMatrix& b) { return a -= b; }
  friend JordanMatrix operator*(const Rational& s, JordanMatrix a) { return a *= s; }

  bool operator==(const JordanMatrix& o) const = default;
};

/// a o b = (ab + ba) / 2.
JordanMatrix jordan_product(const JordanMatrix& a, const JordanMatrix& b);

/// a^2 = a and tr(a) = 1.
bool is_projective_point(const JordanMatrix& a);

/// Re(tr(ab)).
Rational inner_product(const JordanMatrix& a, const JordanMatrix& b);

/// Re(tr(ab)) = 0 for two projective points; PreconditionError otherwise.
bool is_incident(const JordanMatrix& a, const JordanMatrix& b);

/// gamma_1 = x2 - x3, gamma_2 = x1 - x2, gamma_3 = x1 - x3 evaluated on a diagonal matrix.
Rational gamma(std::size_t k, const JordanMatrix& x);

/// [x,[x,a]] == gamma_k(x)^2 a for x traceless diagonal and a supported on the
/// h_gamma_k slot (r for k = 1, p for k = 2, q for k = 3).
bool root_space_check(const JordanMatrix& x, const JordanMatrix& a, std::size_t k);

struct RootDecomposition {
  JordanMatrix d0, h1, h2, h3;
};

/// Splits a traceless matrix into its diagonal part and the three root slots.
RootDecomposition decompose(const JordanMatrix& a);

/// tr(a o a o a)/3 - tr(a o a) tr(a)/2 + tr(a)^3/6.
Rational jordan_determinant(const JordanMatrix& a);

/// jordan_determinant(Diag(x1,x2,x3)) recovered as a polynomial in ring (3 variables)
/// by interpolation on a 4x4x4 grid; exact since the form is cubic.
Polynomial diagonal_determinant_polynomial(const RingPtr& ring);

/// Endomorphism of h3(O) as a 27x27 rational matrix in the canonical basis.
class LinearOperator27 {
 public:
  static constexpr std::size_t N = JordanMatrix::kDimension;

  LinearOperator27() : m_(N * N) {}

  static LinearOperator27 from_function(const std::function<JordanMatrix(const JordanMatrix&)>& f);
  /// y -> a o y.
  static LinearOperator27 hat(const JordanMatrix& a);
  /// y -> [b, y] for skew-Hermitian b.
  static LinearOperator27 tilde(const OctMatrix& b);

  const Rational& operator()(std::size_t i, std::size_t j) const { return m_[i * N + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return m_[i * N + j]; }

  JordanMatrix apply(const JordanMatrix& y) const;

  LinearOperator27& operator+=(const LinearOperator27& o);
  LinearOperator27& operator-=(const LinearOperator27& o);
  LinearOperator27& operator*=(const Rational& s);
  friend LinearOperator27 operator+(LinearOperator27 a, const LinearOperator27& b) { return a += b; }
  friend LinearOperator27 operator-(LinearOperator27 a, const LinearOperator27& b) { return a -= b; }
  friend LinearOperator27 operator*(const Rational& s, LinearOperator27 a) { return a *= s; }
  friend LinearOperator27 operator*(const LinearOperator27& a, const LinearOperator27& b);

  bool operator==(const LinearOperator27& o) const { return m_ == o.m_; }

 private:
  std::vector<Rational> m_;
};

/// [A, B]_* = AB - BA.
LinearOperator27 bracket(const LinearOperator27& a, const LinearOperator27& b);

struct BracketIdentities {
  bool first = false;   // [x^, a^]_* == 1/4 ([x,a])~
  bool second = false;  // [x^, [x^, a^]_*]_* == 1/4 ([x,[x,a]])^
};

/// Both identities as exact 27x27 matrix equalities; x and a must be traceless.
BracketIdentities bracket_identities_check(const JordanMatrix& x, const JordanMatrix& a);

/// "x1,x2,x3; p=(a1,...,a8); q=(...); r=(...)"
JordanMatrix parse_jordan(std::string_view text);
std::string format_jordan(const JordanMatrix& a);

}  // namespace flagoct
