#include "flagoct/random.hpp"

#include "flagoct/errors.hpp"

namespace flagoct {

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw PreconditionError("empty random range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Rational Rng::rational(long lo, long hi, long max_denominator) {
  const long num = uniform(lo, hi);
  const long den = max_denominator > 1 ? uniform(1, max_denominator) : 1;
  return make_rational(num, den);
}

Polynomial Rng::polynomial(const RingPtr& ring, unsigned max_degree, std::size_t terms, long coeff_bound) {
  Polynomial p(ring);
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m;
    unsigned budget = static_cast<unsigned>(uniform(0, max_degree));
    for (std::size_t v = 0; v < ring->size() && budget > 0; ++v) {
      const unsigned e = v + 1 == ring->size() ? budget : static_cast<unsigned>(uniform(0, budget));
      m.set_exponent(v, e);
      budget -= e;
    }
    p.add_term(m, rational(-coeff_bound, coeff_bound));
  }
  return p;
}

Polynomial Rng::homogeneous(const RingPtr& ring, unsigned degree, std::size_t terms, long coeff_bound) {
  Polynomial p(ring);
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m;
    unsigned budget = degree;
    for (std::size_t v = 0; v < ring->size(); ++v) {
      const unsigned e = v + 1 == ring->size() ? budget : static_cast<unsigned>(uniform(0, budget));
      m.set_exponent(v, e);
      budget -= e;
    }
    p.add_term(m, rational(-coeff_bound, coeff_bound));
  }
  return p;
}

}  // namespace flagoct
