#include "flagoct/groebner.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "flagoct/errors.hpp"

namespace flagoct {

namespace {

void make_monic(Polynomial& p) {
  if (p.is_zero()) return;
  const Rational lc = p.leading_term().second;
  if (lc != 1) p *= Rational(1 / lc);
}

}  // namespace

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors) {
  Polynomial rest = f;
  Polynomial remainder(f.ring());
  while (!rest.is_zero()) {
    const auto [m, c] = rest.leading_term();
    bool divided = false;
    for (const auto& g : divisors) {
      if (g.is_zero()) continue;
      const auto [gm, gc] = g.leading_term();
      if (gm.divides(m)) {
        rest -= g.multiply_term(m / gm, c / gc);
        divided = true;
        break;
      }
    }
    if (!divided) {
      remainder.add_term(m, c);
      rest -= Polynomial::term(f.ring(), m, c);
    }
  }
  return remainder;
}

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, bool homogeneous_input)
    : ring_(std::move(ring)), elements_(std::move(elements)), homogeneous_(homogeneous_input) {
  for (const auto& g : elements_) leading_.push_back(g.leading_term().first);
}

bool GroebnerBasis::is_unit_ideal() const {
  return std::any_of(leading_.begin(), leading_.end(), [](const Monomial& m) { return m.is_one(); });
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  require_same_ring(f.ring(), ring_);
  return reduce(f, elements_);
}

bool GroebnerBasis::is_standard(const Monomial& m) const {
  return std::none_of(leading_.begin(), leading_.end(), [&](const Monomial& l) { return l.divides(m); });
}

GroebnerBasis buchberger(std::span<const Polynomial> generators) {
  if (generators.empty()) throw PreconditionError("Groebner basis needs at least one generator");
  const RingPtr ring = generators.front().ring();
  if (ring->size() > kMaxGroebnerVariables) throw ResourceError("Groebner computation limited to 6 variables");
  if (generators.size() > kMaxGroebnerGenerators) throw ResourceError("Groebner computation limited to 30 generators");
  bool homogeneous = true;
  std::vector<Polynomial> basis;
  for (const auto& g : generators) {
    require_same_ring(g.ring(), ring);
    homogeneous = homogeneous && g.is_homogeneous();
    if (!g.is_zero()) {
      basis.push_back(g);
      make_monic(basis.back());
    }
  }

  auto lm = [&](std::size_t i) { return basis[i].leading_term().first; };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  const auto order = ring->order();
  while (!pairs.empty()) {
    // normal selection strategy: smallest lcm first
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      return monomial_less(Monomial::lcm(lm(a.first), lm(a.second)), Monomial::lcm(lm(b.first), lm(b.second)),
                           order);
    });
    const auto [i, j] = *best;
    pairs.erase(best);
    const Monomial mi = lm(i), mj = lm(j);
    if (Monomial::gcd(mi, mj).is_one()) continue;
    const Monomial l = Monomial::lcm(mi, mj);
    Polynomial s = basis[i].multiply_term(l / mi, 1) - basis[j].multiply_term(l / mj, 1);
    Polynomial r = reduce(s, basis);
    if (r.is_zero()) continue;
    make_monic(r);
    basis.push_back(std::move(r));
    const std::size_t k = basis.size() - 1;
    for (std::size_t t = 0; t < k; ++t) pairs.emplace_back(t, k);
  }

  // minimalize, then interreduce
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (lm(j).divides(lm(i)) && (lm(j) != lm(i) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const auto [m, c] = minimal[i].leading_term();
    Polynomial tail = minimal[i] - Polynomial::term(ring, m, c);
    Polynomial p = Polynomial::term(ring, m, c) + reduce(tail, others);
    make_monic(p);
    reduced.push_back(std::move(p));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return monomial_less(a.leading_term().first, b.leading_term().first, order);
  });
  return GroebnerBasis(ring, std::move(reduced), homogeneous);
}

std::vector<std::size_t> graded_quotient_dimensions(const GroebnerBasis& gb, int max_degree) {
  if (!gb.homogeneous_input()) throw PreconditionError("graded dimensions need homogeneous generators");
  if (max_degree < 0) throw PreconditionError("negative degree bound");
  const Ring& ring = *gb.ring();
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (ring.degree(i) <= 0) throw PreconditionError("graded dimensions need positive variable degrees");

  std::vector<std::size_t> dims(static_cast<std::size_t>(max_degree) + 1, 0);
  Monomial current;
  std::function<void(std::size_t, int)> walk = [&](std::size_t var, int degree) {
    if (var == ring.size()) {
      if (gb.is_standard(current)) ++dims[static_cast<std::size_t>(degree)];
      return;
    }
    for (unsigned e = 0; degree + int(e) * ring.degree(var) <= max_degree; ++e) {
      current.set_exponent(var, e);
      walk(var + 1, degree + int(e) * ring.degree(var));
    }
    current.set_exponent(var, 0);
  };
  walk(0, 0);
  return dims;
}

}  // namespace flagoct
