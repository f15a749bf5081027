#include "flagoct/character.hpp"

#include <algorithm>
#include <sstream>

#include "flagoct/errors.hpp"
#include "flagoct/expression.hpp"
#include "flagoct/polynomial.hpp"

namespace flagoct {

DoubledWeight doubled(const Weight& w) {
  DoubledWeight d{};
  for (std::size_t i = 0; i < 4; ++i) {
    const Rational twice = 2 * w.c[i];
    if (!is_integer(twice)) throw PreconditionError("weight " + w.to_string() + " is not in (1/2)Z^4");
    d[i] = twice.get_num().get_si();
  }
  return d;
}

Weight undoubled(const DoubledWeight& d) { return Weight::from_doubled(d); }

bool in_weight_lattice(const DoubledWeight& d) {
  const long parity = ((d[0] % 2) + 2) % 2;
  return std::all_of(d.begin(), d.end(), [&](long x) { return ((x % 2) + 2) % 2 == parity; });
}

Character Character::constant(const Integer& c) { return monomial(DoubledWeight{}, c); }

Character Character::monomial(const Weight& lambda, const Integer& c) { return monomial(doubled(lambda), c); }

Character Character::monomial(const DoubledWeight& lambda, const Integer& c) {
  if (!in_weight_lattice(lambda)) throw PreconditionError("weight " + undoubled(lambda).to_string() + " is off the lattice");
  Character ch;
  ch.add_term(lambda, c);
  return ch;
}

Character Character::y(std::size_t j) { return monomial(Weight::omega(j)); }

Integer Character::coefficient(const DoubledWeight& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer Character::dimension() const {
  Integer sum = 0;
  for (const auto& [w, c] : terms_) sum += c;
  return sum;
}

void Character::add_term(const DoubledWeight& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Character Character::operator-() const {
  Character out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

Character& Character::operator+=(const Character& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Character& Character::operator-=(const Character& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Character operator*(const Character& a, const Character& b) {
  Character out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      DoubledWeight w;
      for (std::size_t i = 0; i < 4; ++i) w[i] = wa[i] + wb[i];
      out.add_term(w, ca * cb);
    }
  return out;
}

Character operator*(const Integer& s, const Character& a) {
  Character out;
  if (s == 0) return out;
  out = a;
  for (auto& [w, c] : out.terms_) c *= s;
  return out;
}

Character Character::pow(long exponent) const {
  if (exponent < 0) {
    if (terms_.size() != 1 || abs(terms_.begin()->second) != 1)
      throw PreconditionError("only a single term with coefficient +-1 has a negative power");
    DoubledWeight w = terms_.begin()->first;
    for (auto& x : w) x = -x;
    Character inv = monomial(w, terms_.begin()->second);
    return inv.pow(-exponent);
  }
  Character result = constant(1);
  Character base = *this;
  for (long e = exponent; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

namespace {

std::string y_monomial(const DoubledWeight& d) {
  const bool half = (d[0] % 2) != 0;
  std::vector<std::string> parts;
  if (half) parts.push_back("y5");
  for (std::size_t i = 0; i < 4; ++i) {
    const long n = half ? (d[i] - 1) / 2 : d[i] / 2;
    if (n == 0) continue;
    std::string p = "y" + std::to_string(i + 1);
    if (n != 1) p += "^" + std::to_string(n);
    parts.push_back(p);
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  return out;
}

}  // namespace

std::string Character::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest weights first under the map order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    const std::string mono = y_monomial(w);
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << mono;
    }
  }
  return out.str();
}

std::string Character::weight_list() const {
  std::ostringstream out;
  out << '[';
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    out << (first ? "" : ", ") << undoubled(it->first).to_string() << ':' << it->second.get_str();
    first = false;
  }
  out << ']';
  return out.str();
}

Character weyl_act(const WeylElement& w, const Character& f) {
  if (!w.preserves_lattice()) throw PreconditionError("Weyl element does not preserve the weight lattice");
  Character out;
  for (const auto& [d, c] : f.terms()) out.add_term(doubled(w.apply(undoubled(d))), c);
  return out;
}

bool is_spin8_invariant(const Character& f) {
  static const std::vector<WeylElement> gens = d4_root_system().simple_reflections();
  return std::all_of(gens.begin(), gens.end(), [&](const WeylElement& w) { return weyl_act(w, f) == f; });
}

namespace {

RingPtr z_ring() {
  static const RingPtr ring = Ring::make({"z1", "z2", "z3", "z4"}, MonomialOrder::lex);
  return ring;
}

DoubledWeight min_corner(const Character& f) {
  DoubledWeight m = f.terms().begin()->first;
  for (const auto& [w, c] : f.terms())
    for (std::size_t i = 0; i < 4; ++i) m[i] = std::min(m[i], w[i]);
  return m;
}

Polynomial shifted_polynomial(const Character& f, const DoubledWeight& corner) {
  Polynomial p(z_ring());
  for (const auto& [w, c] : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < 4; ++i) m.set_exponent(i, static_cast<unsigned>(w[i] - corner[i]));
    p.add_term(m, Rational(c));
  }
  return p;
}

}  // namespace

std::optional<Character> divide_char(const Character& f, const Character& d) {
  if (d.is_zero()) throw DivisionByZeroError("division by the zero character");
  if (f.is_zero()) return Character();
  const DoubledWeight cf = min_corner(f), cd = min_corner(d);
  const auto q = exact_divide(shifted_polynomial(f, cf), shifted_polynomial(d, cd));
  if (!q) return std::nullopt;
  Character out;
  for (const auto& [m, c] : q->terms()) {
    if (!is_integer(c)) return std::nullopt;
    DoubledWeight w;
    for (std::size_t i = 0; i < 4; ++i) w[i] = static_cast<long>(m.exponent(i)) + cf[i] - cd[i];
    if (!in_weight_lattice(w)) return std::nullopt;
    out.add_term(w, c.get_num());
  }
  return out;
}

bool divides_char(const Character& d, const Character& f) { return divide_char(f, d).has_value(); }

bool binomial_divides_by_projection(const Weight& lambda, const Character& f) {
  if (lambda.is_zero()) throw DivisionByZeroError("e^0 - 1 is zero");
  const Rational norm = lambda.dot(lambda);
  std::map<DoubledWeight, Integer> cosets;
  for (const auto& [d, c] : f.terms()) {
    const Weight v = undoubled(d);
    const Rational t = v.dot(lambda) / norm;
    mpz_class k;
    mpz_fdiv_q(k.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    const Weight rep = v - Rational(k) * lambda;
    cosets[doubled(rep)] += c;
  }
  return std::all_of(cosets.begin(), cosets.end(), [](const auto& kv) { return kv.second == 0; });
}

Character parse_character(std::string_view text) {
  static const std::vector<std::string> vars{"y1", "y2", "y3", "y4", "y5"};
  const ExprPtr e = parse_expression(text, vars, ExpressionContext::character);
  const auto leaf = [](const Expr& x) {
    if (x.kind == Expr::Kind::number) {
      if (!is_integer(x.number)) throw ParseError("characters take integer coefficients", x.position);
      return Character::constant(x.number.get_num());
    }
    return Character::y(static_cast<std::size_t>(x.name[1] - '0'));
  };
  const auto pow = [](const Character& c, long n) { return c.pow(n); };
  return fold_expression<Character>(*e, leaf, pow);
}

Character x_character(int i) {
  static const std::array<Character, 4> xs = [] {
    std::array<Character, 4> out;
    out[0] = parse_character(
        "y5 + y5*y1^-1*y2^-1 + y5*y1^-1*y3^-1 + y5*y1^-1*y4^-1 + y5*y2^-1*y3^-1 + y5*y2^-1*y4^-1"
        " + y5*y3^-1*y4^-1 + y5*y1^-1*y2^-1*y3^-1*y4^-1");
    out[1] = parse_character(
        "y5*y1^-1 + y5*y2^-1 + y5*y3^-1 + y5*y4^-1 + y5*y1^-1*y2^-1*y3^-1 + y5*y1^-1*y2^-1*y4^-1"
        " + y5*y1^-1*y3^-1*y4^-1 + y5*y2^-1*y3^-1*y4^-1");
    out[2] = parse_character("y1 + y1^-1 + y2 + y2^-1 + y3 + y3^-1 + y4 + y4^-1");
    // sum over i < j of y_i^{+-1} y_j^{+-1}
    for (std::size_t a = 1; a <= 4; ++a)
      for (std::size_t b = a + 1; b <= 4; ++b)
        for (long ea : {1L, -1L})
          for (long eb : {1L, -1L}) out[3] += Character::y(a).pow(ea) * Character::y(b).pow(eb);
    return out;
  }();
  if (i < 1 || i > 4) throw PreconditionError("X index must be in 1..4");
  return xs[static_cast<std::size_t>(i - 1)];
}

Character adjoint_character() { return x_character(4) + Character::constant(4); }

}  // namespace flagoct
