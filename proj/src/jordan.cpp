#include "flagoct/jordan.hpp"

#include <cctype>
#include <sstream>

#include "flagoct/errors.hpp"

namespace flagoct {

JordanMatrix JordanMatrix::diagonal(const Rational& a, const Rational& b, const Rational& c) {
  JordanMatrix m;
  m.x1 = a;
  m.x2 = b;
  m.x3 = c;
  return m;
}

JordanMatrix JordanMatrix::from_matrix(const OctMatrix& m) {
  if (!m.is_hermitian()) throw PreconditionError("matrix is not Hermitian");
  JordanMatrix j;
  j.x1 = m(0, 0).re();
  j.x2 = m(1, 1).re();
  j.x3 = m(2, 2).re();
  j.p = m(0, 1);
  j.q = m(0, 2);
  j.r = m(1, 2);
  return j;
}

OctMatrix JordanMatrix::to_matrix() const {
  OctMatrix m;
  m(0, 0) = Octonion::real(x1);
  m(1, 1) = Octonion::real(x2);
  m(2, 2) = Octonion::real(x3);
  m(0, 1) = p;
  m(1, 0) = p.conj();
  m(0, 2) = q;
  m(2, 0) = q.conj();
  m(1, 2) = r;
  m(2, 1) = r.conj();
  return m;
}

std::array<Rational, JordanMatrix::kDimension> JordanMatrix::coordinates() const {
  std::array<Rational, kDimension> c;
  c[0] = x1;
  c[1] = x2;
  c[2] = x3;
  for (std::size_t i = 0; i < 8; ++i) {
    c[3 + i] = r[i];
    c[11 + i] = p[i];
    c[19 + i] = q[i];
  }
  return c;
}

JordanMatrix JordanMatrix::from_coordinates(const std::array<Rational, kDimension>& c) {
  JordanMatrix m = diagonal(c[0], c[1], c[2]);
  for (std::size_t i = 0; i < 8; ++i) {
    m.r[i] = c[3 + i];
    m.p[i] = c[11 + i];
    m.q[i] = c[19 + i];
  }
  return m;
}

JordanMatrix JordanMatrix::basis(std::size_t index) {
  if (index >= kDimension) throw PreconditionError("basis index out of range");
  std::array<Rational, kDimension> c;
  c[index] = 1;
  return from_coordinates(c);
}

JordanMatrix& JordanMatrix::operator+=(const JordanMatrix& o) {
  x1 += o.x1;
  x2 += o.x2;
  x3 += o.x3;
  p += o.p;
  q += o.q;
  r += o.r;
  return *this;
}

JordanMatrix& JordanMatrix::operator-=(const JordanMatrix& o) {
  x1 -= o.x1;
  x2 -= o.x2;
  x3 -= o.x3;
  p -= o.p;
  q -= o.q;
  r -= o.r;
  return *this;
}

JordanMatrix& JordanMatrix::operator*=(const Rational& s) {
  x1 *= s;
  x2 *= s;
  x3 *= s;
  p *= s;
  q *= s;
  r *= s;
  return *this;
}

JordanMatrix jordan_product(const JordanMatrix& a, const JordanMatrix& b) {
  const OctMatrix A = a.to_matrix(), B = b.to_matrix();
  return JordanMatrix::from_matrix(Rational(1, 2) * (A * B + B * A));
}

bool is_projective_point(const JordanMatrix& a) {
  const OctMatrix A = a.to_matrix();
  return a.trace() == 1 && A * A == A;
}

Rational inner_product(const JordanMatrix& a, const JordanMatrix& b) {
  return (a.to_matrix() * b.to_matrix()).trace().re();
}

bool is_incident(const JordanMatrix& a, const JordanMatrix& b) {
  if (!is_projective_point(a) || !is_projective_point(b))
    throw PreconditionError("incidence is defined for projective points only");
  return inner_product(a, b) == 0;
}

Rational gamma(std::size_t k, const JordanMatrix& x) {
  switch (k) {
    case 1: return x.x2 - x.x3;
    case 2: return x.x1 - x.x2;
    case 3: return x.x1 - x.x3;
    default: throw PreconditionError("root index must be 1, 2 or 3");
  }
}

namespace {

bool in_slot(const JordanMatrix& a, std::size_t k) {
  if (a.x1 != 0 || a.x2 != 0 || a.x3 != 0) return false;
  switch (k) {
    case 1: return a.p.is_zero() && a.q.is_zero();
    case 2: return a.q.is_zero() && a.r.is_zero();
    case 3: return a.p.is_zero() && a.r.is_zero();
    default: return false;
  }
}

}  // namespace

bool root_space_check(const JordanMatrix& x, const JordanMatrix& a, std::size_t k) {
  if (k < 1 || k > 3) throw PreconditionError("root index must be 1, 2 or 3");
  if (!x.is_diagonal() || x.trace() != 0) throw PreconditionError("x must be traceless diagonal");
  if (!in_slot(a, k)) throw PreconditionError("a is not supported on the root slot");
  const OctMatrix X = x.to_matrix(), A = a.to_matrix();
  const Rational g = gamma(k, x);
  return commutator(X, commutator(X, A)) == (g * g) * A;
}

RootDecomposition decompose(const JordanMatrix& a) {
  if (a.trace() != 0) throw PreconditionError("decomposition needs a traceless matrix");
  RootDecomposition d;
  d.d0 = JordanMatrix::diagonal(a.x1, a.x2, a.x3);
  d.h1.r = a.r;
  d.h2.p = a.p;
  d.h3.q = a.q;
  return d;
}

Rational jordan_determinant(const JordanMatrix& a) {
  const JordanMatrix a2 = jordan_product(a, a);
  const JordanMatrix a3 = jordan_product(a, a2);
  const Rational t = a.trace();
  return a3.trace() / 3 - a2.trace() * t / 2 + t * t * t / 6;
}

Polynomial diagonal_determinant_polynomial(const RingPtr& ring) {
  if (ring->size() != 3) throw PreconditionError("determinant polynomial needs three variables");
  constexpr int kNodes = 4;
  // Lagrange basis on nodes 0..3 in each variable
  auto lagrange = [&](std::size_t var, int node) {
    Polynomial l = Polynomial::constant(ring, 1);
    for (int m = 0; m < kNodes; ++m) {
      if (m == node) continue;
      l *= (Polynomial::variable(ring, var) - Polynomial::constant(ring, m)) * make_rational(1, node - m);
    }
    return l;
  };
  Polynomial result(ring);
  for (int i = 0; i < kNodes; ++i)
    for (int j = 0; j < kNodes; ++j)
      for (int k = 0; k < kNodes; ++k) {
        const Rational v = jordan_determinant(JordanMatrix::diagonal(i, j, k));
        if (v != 0) result += v * (lagrange(0, i) * lagrange(1, j) * lagrange(2, k));
      }
  return result;
}

// ---------------------------------------------------------------------------

LinearOperator27 LinearOperator27::from_function(const std::function<JordanMatrix(const JordanMatrix&)>& f) {
  LinearOperator27 op;
  for (std::size_t j = 0; j < N; ++j) {
    const auto col = f(JordanMatrix::basis(j)).coordinates();
    for (std::size_t i = 0; i < N; ++i) op(i, j) = col[i];
  }
  return op;
}

LinearOperator27 LinearOperator27::hat(const JordanMatrix& a) {
  return from_function([&](const JordanMatrix& y) { return jordan_product(a, y); });
}

LinearOperator27 LinearOperator27::tilde(const OctMatrix& b) {
  if (!b.is_skew_hermitian()) throw PreconditionError("tilde operator needs a skew-Hermitian matrix");
  return from_function(
      [&](const JordanMatrix& y) { return JordanMatrix::from_matrix(commutator(b, y.to_matrix())); });
}

JordanMatrix LinearOperator27::apply(const JordanMatrix& y) const {
  const auto c = y.coordinates();
  std::array<Rational, N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (c[j] != 0) out[i] += (*this)(i, j) * c[j];
  return JordanMatrix::from_coordinates(out);
}

LinearOperator27& LinearOperator27::operator+=(const LinearOperator27& o) {
  for (std::size_t i = 0; i < m_.size(); ++i) m_[i] += o.m_[i];
  return *this;
}

LinearOperator27& LinearOperator27::operator-=(const LinearOperator27& o) {
  for (std::size_t i = 0; i < m_.size(); ++i) m_[i] -= o.m_[i];
  return *this;
}

LinearOperator27& LinearOperator27::operator*=(const Rational& s) {
  for (auto& x : m_) x *= s;
  return *this;
}

LinearOperator27 operator*(const LinearOperator27& a, const LinearOperator27& b) {
  LinearOperator27 r;
  constexpr std::size_t N = LinearOperator27::N;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < N; ++j)
        if (b(k, j) != 0) r(i, j) += aik * b(k, j);
    }
  return r;
}

LinearOperator27 bracket(const LinearOperator27& a, const LinearOperator27& b) { return a * b - b * a; }

BracketIdentities bracket_identities_check(const JordanMatrix& x, const JordanMatrix& a) {
  if (x.trace() != 0 || a.trace() != 0) throw PreconditionError("bracket identities need traceless matrices");
  const OctMatrix X = x.to_matrix(), A = a.to_matrix();
  const LinearOperator27 xh = LinearOperator27::hat(x), ah = LinearOperator27::hat(a);
  const LinearOperator27 inner = bracket(xh, ah);
  const OctMatrix xa = commutator(X, A);
  BracketIdentities result;
  result.first = inner == Rational(1, 4) * LinearOperator27::tilde(xa);
  result.second = bracket(xh, inner) ==
                  Rational(1, 4) * LinearOperator27::hat(JordanMatrix::from_matrix(commutator(X, xa)));
  return result;
}

// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

Rational field(std::string_view s) {
  try {
    return parse_rational(s);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad rational '") + std::string(s) + "'", 0);
  }
}

}  // namespace

JordanMatrix parse_jordan(std::string_view text) {
  const auto sections = split(text, ';');
  if (sections.size() != 4) throw ParseError("expected 'x1,x2,x3; p=(..); q=(..); r=(..)'", 0);
  const auto diag = split(sections[0], ',');
  if (diag.size() != 3) throw ParseError("expected three diagonal entries", 0);
  JordanMatrix m = JordanMatrix::diagonal(field(diag[0]), field(diag[1]), field(diag[2]));
  bool seen[3] = {false, false, false};
  for (std::size_t s = 1; s < 4; ++s) {
    std::string_view part = sections[s];
    if (part.size() < 4 || part[1] != '=' || part[2] != '(' || part.back() != ')')
      throw ParseError("malformed octonion field '" + std::string(part) + "'", 0);
    const auto entries = split(part.substr(3, part.size() - 4), ',');
    if (entries.size() != 8) throw ParseError("octonion needs 8 entries", 0);
    Octonion o;
    for (std::size_t i = 0; i < 8; ++i) o[i] = field(entries[i]);
    const char name = part[0];
    const int slot = name == 'p' ? 0 : name == 'q' ? 1 : name == 'r' ? 2 : -1;
    if (slot < 0 || seen[slot]) throw ParseError("unknown or repeated field '" + std::string(1, name) + "'", 0);
    seen[slot] = true;
    (slot == 0 ? m.p : slot == 1 ? m.q : m.r) = o;
  }
  return m;
}

std::string format_jordan(const JordanMatrix& a) {
  std::ostringstream out;
  out << a.x1.get_str() << ',' << a.x2.get_str() << ',' << a.x3.get_str() << "; p=" << a.p.to_string()
      << "; q=" << a.q.to_string() << "; r=" << a.r.to_string();
  return out.str();
}

}  // namespace flagoct
