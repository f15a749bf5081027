#include "flagoct/octonion.hpp"

#include <algorithm>
#include <sstream>

#include "flagoct/errors.hpp"

namespace flagoct {

namespace {

using Quat = std::array<Rational, 4>;

Quat qmul(const Quat& p, const Quat& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

Quat qconj(const Quat& p) { return {p[0], -p[1], -p[2], -p[3]}; }

}  // namespace

Octonion Octonion::real(const Rational& value) {
  Octonion o;
  o.c_[0] = value;
  return o;
}

Octonion Octonion::unit(std::size_t index) {
  if (index < 1 || index > 8) throw PreconditionError("octonion unit index must be in 1..8");
  Octonion o;
  o.c_[index - 1] = 1;
  return o;
}

Octonion Octonion::conj() const {
  Octonion o = -*this;
  o.c_[0] = c_[0];
  return o;
}

Rational Octonion::norm2() const {
  Rational s = 0;
  for (const auto& x : c_) s += x * x;
  return s;
}

bool Octonion::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

bool Octonion::is_real() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& x) { return x == 0; });
}

Octonion Octonion::operator-() const {
  Octonion o;
  for (std::size_t i = 0; i < 8; ++i) o.c_[i] = -c_[i];
  return o;
}

Octonion& Octonion::operator+=(const Octonion& o) {
  for (std::size_t i = 0; i < 8; ++i) c_[i] += o.c_[i];
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& o) {
  for (std::size_t i = 0; i < 8; ++i) c_[i] -= o.c_[i];
  return *this;
}

Octonion& Octonion::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Octonion operator*(const Octonion& x, const Octonion& y) {
  const Quat a{x[0], x[1], x[2], x[3]}, b{x[4], x[5], x[6], x[7]};
  const Quat c{y[0], y[1], y[2], y[3]}, d{y[4], y[5], y[6], y[7]};
  const Quat ac = qmul(a, c), db = qmul(qconj(d), b);
  const Quat da = qmul(d, a), bc = qmul(b, qconj(c));
  Octonion r;
  for (std::size_t i = 0; i < 4; ++i) {
    r[i] = ac[i] - db[i];
    r[i + 4] = da[i] + bc[i];
  }
  return r;
}

std::string Octonion::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < 8; ++i) out << (i ? "," : "") << c_[i].get_str();
  out << ')';
  return out.str();
}

// ---------------------------------------------------------------------------

OctMatrix OctMatrix::identity() {
  OctMatrix m;
  for (std::size_t i = 0; i < 3; ++i) m(i, i) = Octonion::real(1);
  return m;
}

OctMatrix& OctMatrix::operator+=(const OctMatrix& o) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m_[i][j] += o.m_[i][j];
  return *this;
}

OctMatrix& OctMatrix::operator-=(const OctMatrix& o) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m_[i][j] -= o.m_[i][j];
  return *this;
}

OctMatrix& OctMatrix::operator*=(const Rational& s) {
  for (auto& row : m_)
    for (auto& x : row) x *= s;
  return *this;
}

OctMatrix operator*(const OctMatrix& a, const OctMatrix& b) {
  OctMatrix r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        r(i, j) += a(i, k) * b(k, j);
      }
  return r;
}

OctMatrix OctMatrix::star() const {
  OctMatrix r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r(i, j) = m_[j][i].conj();
  return r;
}

Octonion OctMatrix::trace() const { return m_[0][0] + m_[1][1] + m_[2][2]; }

bool OctMatrix::is_skew_hermitian() const {
  OctMatrix neg = *this;
  neg *= Rational(-1);
  return star() == neg;
}

OctMatrix commutator(const OctMatrix& a, const OctMatrix& b) { return a * b - b * a; }

}  // namespace flagoct
