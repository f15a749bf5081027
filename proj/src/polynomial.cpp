#include "flagoct/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "flagoct/errors.hpp"

namespace flagoct {

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables) throw ResourceError("too many variables in monomial");
  for (std::size_t i = 0; i < exponents.size(); ++i) set_exponent(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set_exponent(index, power);
  return m;
}

void Monomial::set_exponent(std::size_t index, unsigned power) {
  if (index >= kMaxVariables) throw ResourceError("variable index out of range");
  if (power > std::numeric_limits<std::uint16_t>::max()) throw ResourceError("exponent overflow");
  exps_[index] = static_cast<std::uint16_t>(power);
}

unsigned Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) m.set_exponent(i, unsigned(exps_[i]) + other.exps_[i]);
  return m;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw PreconditionError("monomial does not divide");
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) m.exps_[i] = exps_[i] - divisor.exps_[i];
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return m;
}

bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::lex) {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i);
    }
    return false;
  }
  const unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  // grevlex: the monomial with the larger exponent in the last differing variable is smaller
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i);
  }
  return false;
}

// ---------------------------------------------------------------------------

Ring::Ring(std::vector<std::string> names, std::vector<int> degrees, MonomialOrder order)
    : names_(std::move(names)), degrees_(std::move(degrees)), order_(order) {
  if (names_.size() > kMaxVariables) throw ResourceError("ring has too many variables");
  if (names_.size() != degrees_.size()) throw PreconditionError("names and degrees differ in length");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw PreconditionError("duplicate variable name '" + names_[i] + "'");
}

RingPtr Ring::make(std::vector<std::string> names, std::vector<int> degrees, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(names), std::move(degrees), order);
}

RingPtr Ring::make(std::vector<std::string> names, MonomialOrder order) {
  std::vector<int> degrees(names.size(), 1);
  return make(std::move(names), std::move(degrees), order);
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

int Ring::graded_degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < names_.size(); ++i) d += degrees_[i] * int(m.exponent(i));
  return d;
}

bool Ring::operator==(const Ring& other) const {
  return names_ == other.names_ && degrees_ == other.degrees_ && order_ == other.order_;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw RingMismatchError("operands belong to different rings");
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(RingPtr ring)
    : ring_(std::move(ring)), terms_(OrderCompare{ring_ ? ring_->order() : MonomialOrder::grevlex}) {
  if (!ring_) throw PreconditionError("polynomial needs a ring");
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& value) {
  Polynomial p(std::move(ring));
  p.add_term(Monomial{}, value);
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw PreconditionError("variable index out of range");
  Polynomial p(std::move(ring));
  p.add_term(Monomial::variable(index), 1);
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  auto idx = ring->index_of(name);
  if (!idx) throw UnknownVariableError(std::string(name));
  return variable(std::move(ring), *idx);
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const Rational& coefficient) {
  Polynomial p(std::move(ring));
  p.add_term(m, coefficient);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<Monomial, Rational> Polynomial::leading_term() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  const auto& [m, c] = *terms_.rbegin();
  return {m, c};
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  int best = std::numeric_limits<int>::min();
  for (const auto& [m, c] : terms_) best = std::max(best, ring_->graded_degree(m));
  return best;
}

unsigned Polynomial::total_degree() const {
  unsigned best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m.total_degree());
  return best;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = ring_->graded_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (ring_->graded_degree(m) != d) return false;
  return true;
}

void Polynomial::add_term(const Monomial& m, const Rational& coefficient) {
  if (coefficient == 0) return;
  for (std::size_t i = ring_->size(); i < kMaxVariables; ++i)
    if (m.exponent(i) != 0) throw PreconditionError("monomial uses a variable outside the ring");
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  Polynomial r(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::multiply_term(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  // multiplication by a monomial preserves the order, so hinted insertion is linear
  for (const auto& [tm, tc] : terms_) r.terms_.emplace_hint(r.terms_.end(), tm * m, tc * c);
  return r;
}

Polynomial Polynomial::substitute(const RingPtr& target, std::span<const Polynomial> images) const {
  if (images.size() != ring_->size()) throw PreconditionError("substitution needs one image per variable");
  for (const auto& img : images) require_same_ring(img.ring(), target);
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = constant(target, c);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (m.exponent(i) != 0) t *= power(i, m.exponent(i));
    result += t;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->size()) throw PreconditionError("evaluation point has wrong dimension");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (unsigned e = 0; e < m.exponent(i); ++e) t *= point[i];
    }
    total += t;
  }
  return total;
}

bool Polynomial::operator==(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  return terms_.size() == other.terms_.size() &&
         std::equal(terms_.begin(), terms_.end(), other.terms_.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
}

namespace {

std::string monomial_string(const Ring& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const unsigned e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = monomial_string(*ring_, m);
    if (mono.empty()) {
      out += flagoct::to_string(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += flagoct::to_string(magnitude) + '*' + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Polynomial elementary_symmetric(int i, const Polynomial& a, const Polynomial& b, const Polynomial& c) {
  require_same_ring(a.ring(), b.ring());
  require_same_ring(a.ring(), c.ring());
  switch (i) {
    case 1: return a + b + c;
    case 2: return a * b + a * c + b * c;
    case 3: return a * b * c;
    default: throw PreconditionError("elementary symmetric index must be 1, 2 or 3");
  }
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw DivisionByZeroError("division by the zero polynomial");
  const auto [lm, lc] = g.leading_term();
  Polynomial quotient(f.ring());
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const auto [rm, rc] = rest.leading_term();
    if (!lm.divides(rm)) return std::nullopt;
    const Monomial qm = rm / lm;
    const Rational qc = rc / lc;
    quotient.add_term(qm, qc);
    rest -= g.multiply_term(qm, qc);
  }
  return quotient;
}

// ---------------------------------------------------------------------------

LinearForm::LinearForm(RingPtr ring, std::vector<Rational> coefficients)
    : ring_(std::move(ring)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != ring_->size()) throw PreconditionError("linear form has wrong number of coefficients");
}

LinearForm LinearForm::from_polynomial(const Polynomial& p) {
  std::vector<Rational> coeffs(p.ring()->size());
  for (const auto& [m, c] : p.terms()) {
    if (m.total_degree() != 1) throw PreconditionError("not a linear form: " + p.to_string());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (m.exponent(i) == 1) coeffs[i] = c;
  }
  return LinearForm(p.ring(), std::move(coeffs));
}

bool LinearForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool LinearForm::proportional_to(const LinearForm& other) const {
  require_same_ring(ring_, other.ring_);
  if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
  std::size_t pivot = 0;
  while (coeffs_[pivot] == 0) ++pivot;
  if (other.coeffs_[pivot] == 0) return false;
  const Rational ratio = other.coeffs_[pivot] / coeffs_[pivot];
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] * ratio != other.coeffs_[i]) return false;
  return true;
}

Polynomial LinearForm::to_polynomial() const {
  Polynomial p(ring_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p.add_term(Monomial::variable(i), coeffs_[i]);
  return p;
}

std::string LinearForm::to_string() const { return to_polynomial().to_string(); }

bool LinearForm::operator==(const LinearForm& other) const {
  require_same_ring(ring_, other.ring_);
  return coeffs_ == other.coeffs_;
}

FormProduct::FormProduct(RingPtr ring, Rational scalar, std::vector<LinearForm> factors)
    : ring_(std::move(ring)), scalar_(std::move(scalar)), factors_(std::move(factors)) {
  for (const auto& f : factors_) require_same_ring(ring_, f.ring());
}

Polynomial FormProduct::expand() const {
  Polynomial p = Polynomial::constant(ring_, scalar_);
  for (const auto& f : factors_) p *= f.to_polynomial();
  return p;
}

FormProduct FormProduct::operator*(const FormProduct& other) const {
  require_same_ring(ring_, other.ring_);
  std::vector<LinearForm> merged = factors_;
  merged.insert(merged.end(), other.factors_.begin(), other.factors_.end());
  return FormProduct(ring_, scalar_ * other.scalar_, std::move(merged));
}

FormProduct FormProduct::negated() const { return FormProduct(ring_, -scalar_, factors_); }

std::string FormProduct::to_string() const {
  std::ostringstream out;
  if (scalar_ != 1) out << flagoct::to_string(scalar_);
  for (const auto& f : factors_) out << '(' << f.to_string() << ')';
  const std::string s = out.str();
  return s.empty() ? "1" : s;
}

CoprimeResult pairwise_coprime(std::span<const FormProduct> products) {
  for (const auto& p : products) {
    if (p.scalar() == 0) throw PreconditionError("zero product in coprimality test");
    for (const auto& f : p.factors())
      if (f.is_zero()) throw PreconditionError("zero linear factor in coprimality test");
  }
  for (std::size_t a = 0; a < products.size(); ++a)
    for (std::size_t b = a + 1; b < products.size(); ++b)
      for (std::size_t i = 0; i < products[a].factors().size(); ++i)
        for (std::size_t j = 0; j < products[b].factors().size(); ++j)
          if (products[a].factors()[i].proportional_to(products[b].factors()[j]))
            return {false, CoprimeWitness{a, i, b, j}};
  return {true, std::nullopt};
}

}  // namespace flagoct
