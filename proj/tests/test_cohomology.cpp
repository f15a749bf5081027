#include <doctest.h>

#include "flagoct/cohomology.hpp"
#include "flagoct/expression.hpp"
#include "flagoct/random.hpp"

using namespace flagoct;

namespace {

const Check& find(const std::vector<Check>& checks, const std::string& id) {
  for (const auto& c : checks)
    if (c.id == id) return c;
  FAIL("missing check " << id);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_SUITE("cohomology") {
  TEST_CASE("change of basis between e and beta") {
    const RingPtr er = euler_ring();
    const Polynomial e1 = Polynomial::variable(er, 0), e2 = Polynomial::variable(er, 1);
    const auto [b1, b2] = beta_from_euler(e1, e2);
    CHECK(b1 == parse_polynomial("1/3*(2*e1+e2)", er));
    const auto [r1, r2] = euler_from_beta(b1, b2);
    CHECK(r1 == e1);
    CHECK(r2 == e2);
    const std::vector<Rational> point{2, -1};
    CHECK(b1.evaluate(point) == 1);
    CHECK(b2.evaluate(point) == 0);
  }

  TEST_CASE("coinvariant quotient has dimensions 1, 2, 2, 1") {
    const CohRing coh = CohRing::standard();
    const auto dims = graded_quotient_dimensions(coh.gb, 32);
    std::size_t total = 0;
    for (std::size_t d = 0; d < dims.size(); ++d) {
      total += dims[d];
      if (d % 8 != 0) CHECK(dims[d] == 0);
    }
    CHECK(dims[0] == 1);
    CHECK(dims[8] == 2);
    CHECK(dims[16] == 2);
    CHECK(dims[24] == 1);
    CHECK(total == 6);
  }

  TEST_CASE("Poincare duals and the fundamental class") {
    const CohRing coh = CohRing::standard();
    const Polynomial e1 = Polynomial::variable(coh.ring, 0), e2 = Polynomial::variable(coh.ring, 1);
    const auto [b1, b2] = beta_from_euler(e1, e2);
    const Polynomial top = make_rational(1, 6) * (e1 * e2 * (e1 + e2));
    const Polynomial d1 = make_rational(1, 3) * (e1 * (e1 + e2));
    const Polynomial d2 = make_rational(1, 3) * (e2 * (e1 + e2));
    CHECK(coh.gb.contains(b1 * b1 + b2 * b2 - b1 * b2));
    CHECK(coh.gb.contains(d1 - b1 * b1));
    CHECK(coh.gb.contains(d2 - b2 * b2));
    CHECK_FALSE(coh.gb.contains(top));
    // beta1 pairs to the top class with d2, and to zero with d1.
    CHECK(coh.gb.contains(b1 * d2 - top));
    CHECK(coh.gb.contains(b2 * d1 - top));
    CHECK(coh.gb.contains(b1 * d1));
  }

  TEST_CASE("presentation report") {
    const auto checks = verify_presentation();
    CHECK(find(checks, "presentation.c-swapped-pairing").passed());
    CHECK_FALSE(find(checks, "presentation.c-fundamental-class").passed());
  }

  TEST_CASE("divided differences") {
    Rng rng(23);
    const RingPtr r = lambda_ring();
    CHECK(divided_difference(1, Polynomial::constant(r, 5)).is_zero());
    for (int trial = 0; trial < 20; ++trial) {
      const Polynomial f = rng.polynomial(r, 4, 5);
      for (int k = 1; k <= 2; ++k) {
        CHECK(simple_reflection(k, simple_reflection(k, f)) == f);
        CHECK(divided_difference(k, divided_difference(k, f)).is_zero());
      }
    }
    CHECK(simple_reflection(1, bgg_root(1)) == -bgg_root(1));
  }

  TEST_CASE("BGG basis reproduces the listed classes") {
    const auto basis = bgg_basis();
    const auto expected = expected_bgg_list();
    REQUIRE(basis.size() == 6);
    REQUIRE(expected.size() == 6);
    for (const auto& p : expected) CHECK(std::find(basis.begin(), basis.end(), p) != basis.end());
  }

  TEST_CASE("frac identity holds with the second class") {
    const RingPtr r = lambda_ring();
    const Polynomial l1 = Polynomial::variable(r, 0);
    const Polynomial g1 = bgg_root(1), g2 = bgg_root(2);
    const Polynomial top = make_rational(1, 6) * (g1 * g2 * (g1 + g2));
    const GroebnerBasis& gb = coinvariant_basis();
    CHECK(gb.contains(l1 * (make_rational(1, 3) * (g2 * (g1 + g2))) - top));
    CHECK_FALSE(gb.contains(l1 * (make_rational(1, 3) * (g1 * (g1 + g2))) - top));
    CHECK_FALSE(gb.contains(l1));
  }

  TEST_CASE("restriction table") {
    const RestrictionTable t = RestrictionTable::published();
    const RingPtr br = b_ring();
    CHECK(t.restriction(Sigma3Element::s1(), 1) == parse_polynomial("-b1", br));
    CHECK(t.restriction(Sigma3Element(), 3) == parse_polynomial("b1+b2", br));
    for (const auto& s : Sigma3Element::all())
      CHECK(t.restriction(s, 1) + t.restriction(s, 2) == t.restriction(s, 3));
    CHECK(eliminate_b3(parse_polynomial("b3^2", b3_ring())) == parse_polynomial("(b1+b2)^2", br));
  }

  TEST_CASE("equivariant relations") {
    const auto checks = verify_equivariant_relations(RestrictionTable::published());
    for (const auto& c : checks) CHECK_MESSAGE(c.passed(), c.id << ": " << c.details);
    RestrictionTable bad = RestrictionTable::published();
    bad.set(Sigma3Element::s1(), 1, parse_polynomial("b1", b3_ring()));
    std::size_t failing = 0;
    for (const auto& c : verify_equivariant_relations(bad)) failing += !c.passed();
    CHECK(failing > 0);
  }

  TEST_CASE("relation generators") {
    const RingPtr br = b_ring();
    const Polynomial b1 = Polynomial::variable(br, 0), b2 = Polynomial::variable(br, 1);
    const auto [s2, s3] = relation_generators(b1, b2);
    CHECK(s2 == elementary_symmetric(2, 2 * b1 + b2, b2 - b1, -b1 - 2 * b2));
    CHECK(s3 == (2 * b1 + b2) * (b2 - b1) * (-b1 - 2 * b2));
  }
}
