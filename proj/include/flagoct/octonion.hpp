#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "flagoct/rational.hpp"

namespace flagoct {

/// Octonion in the basis e1 = 1, e2..e8.
///
/// Multiplication is Cayley-Dickson doubling of the quaternions H = span{1, i, j, k}:
/// e2 = i, e3 = j, e4 = k, e5 = l, e6 = il, e7 = jl, e8 = kl, and
///   (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)).
/// This is the only place the table is fixed.
class Octonion {
 public:
  Octonion() = default;
  explicit Octonion(const std::array<Rational, 8>& coords) : c_(coords) {}

  static Octonion real(const Rational& value);
  /// e_index for index in 1..8.
  static Octonion unit(std::size_t index);

  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const std::array<Rational, 8>& coords() const { return c_; }

  const Rational& re() const { return c_[0]; }
  Octonion conj() const;
  Rational norm2() const;
  bool is_zero() const;
  bool is_real() const;

  Octonion operator-() const;
  Octonion& operator+=(const Octonion& o);
  Octonion& operator-=(const Octonion& o);
  Octonion& operator*=(const Rational& s);
  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator*(Octonion a, const Rational& s) { return a *= s; }
  friend Octonion operator*(const Rational& s, Octonion a) { return a *= s; }
  friend Octonion operator*(const Octonion& a, const Octonion& b);

  bool operator==(const Octonion& o) const { return c_ == o.c_; }

  std::string to_string() const;

 private:
  std::array<Rational, 8> c_{};
};

/// 3x3 matrix with octonion entries; products use sum_k a_ik b_kj with no
/// associativity assumed.
class OctMatrix {
 public:
  OctMatrix() = default;

  const Octonion& operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }
  Octonion& operator()(std::size_t i, std::size_t j) { return m_[i][j]; }

  static OctMatrix identity();

  OctMatrix& operator+=(const OctMatrix& o);
  OctMatrix& operator-=(const OctMatrix& o);
  OctMatrix& operator*=(const Rational& s);
  friend OctMatrix operator+(OctMatrix a, const OctMatrix& b) { return a += b; }
  friend OctMatrix operator-(OctMatrix a, const OctMatrix& b) { return a -= b; }
  friend OctMatrix operator*(OctMatrix a, const Rational& s) { return a *= s; }
  friend OctMatrix operator*(const Rational& s, OctMatrix a) { return a *= s; }
  friend OctMatrix operator*(const OctMatrix& a, const OctMatrix& b);

  /// Conjugate transpose.
  OctMatrix star() const;
  Octonion trace() const;
  bool is_hermitian() const { return star() == *this; }
  bool is_skew_hermitian() const;

  bool operator==(const OctMatrix& o) const { return m_ == o.m_; }

 private:
  std::array<std::array<Octonion, 3>, 3> m_{};
};

/// Matrix commutator ab - ba.
OctMatrix commutator(const OctMatrix& a, const OctMatrix& b);

}  // namespace flagoct
