#include <doctest.h>

#include "flagoct/character.hpp"
#include "flagoct/errors.hpp"
#include "flagoct/expression.hpp"
#include "flagoct/ktheory.hpp"

using namespace flagoct;

namespace {

Character C(const char* text) { return parse_character(text); }

}  // namespace

TEST_SUITE("ktheory") {
  TEST_CASE("lattice relation y5^2 = y1 y2 y3 y4") {
    CHECK(C("y5^2") == C("y1*y2*y3*y4"));
    CHECK(C("y5*y1^-1*y2^-1").to_string() == "y5*y1^-1*y2^-1");
    CHECK(C("y1*y1^-1") == Character::constant(1));
    CHECK(C("(y1+1)^2") == C("y1^2 + 2*y1 + 1"));
    CHECK_THROWS_AS(C("y6"), UnknownVariableError);
    CHECK_THROWS(C("(y1+1)^-1"));
    CHECK_THROWS(C("1/2*y1"));
  }

  TEST_CASE("X characters") {
    for (int i = 1; i <= 3; ++i) {
      CHECK(x_character(i).dimension() == 8);
      CHECK(x_character(i).size() == 8);
      CHECK(is_spin8_invariant(x_character(i)));
    }
    CHECK(x_character(4).dimension() == 24);
    CHECK(adjoint_character().dimension() == 28);
    CHECK(is_spin8_invariant(x_character(4)));
    CHECK_FALSE(is_spin8_invariant(C("y1")));
  }

  TEST_CASE("division of characters") {
    CHECK(divides_char(C("y1-1"), C("y1^2-1")));
    CHECK_FALSE(divides_char(C("y1-1"), C("y2-1")));
    CHECK(divides_char(C("y5-1"), C("y1*y2*y3*y4-1")));
    const auto q = divide_char(C("y1^2-1"), C("y1-1"));
    REQUIRE(q);
    CHECK(*q == C("y1+1"));
    CHECK_THROWS_AS(divides_char(Character(), C("y1")), DivisionByZeroError);
    // y5 - 1 divides y1 y2 y3 y4 - 1 = y5^2 - 1, which plain Z[y1..y4] would not see.
    CHECK(binomial_divides_by_projection(Weight::omega(5), C("y1*y2*y3*y4-1")));
    CHECK_FALSE(binomial_divides_by_projection(Weight::omega(1), C("y2-1")));
  }

  TEST_CASE("projection test agrees with division for binomials") {
    const Weight lambdas[] = {Weight::omega(1), Weight::omega(5), Weight::omega(5) - Weight::omega(1),
                              Weight::omega(1) + Weight::omega(2)};
    for (const Weight& l : lambdas) {
      const Character d = Character::monomial(l) - Character::constant(1);
      for (const char* f : {"y1^2-1", "y5^3-1", "y1*y2-1", "y5*y1^-1 - y1^-1", "y3 + y4 - 2"}) {
        const Character c = C(f);
        CHECK(divides_char(d, c) == binomial_divides_by_projection(l, c));
      }
    }
  }

  TEST_CASE("factorizations") {
    for (const auto& f : factorizations()) CHECK_MESSAGE(f.lhs == f.rhs, f.id);
    CHECK(divides_char(k_edge_divisor(0), x_character(1) - x_character(2)));
    CHECK(divides_char(k_edge_divisor(1), x_character(1) - x_character(3)));
    CHECK(divides_char(k_edge_divisor(2), x_character(2) - x_character(3)));
    CHECK_FALSE(divides_char(k_edge_divisor(0), x_character(1) - x_character(3)));
  }

  TEST_CASE("to_x_polynomial round trips") {
    const RingPtr xr = x_ring();
    for (const char* text : {"1", "X1", "X4^2", "X1*X2*X3", "X1^2 - 3*X4 + 7", "X2^3*X3"}) {
      const Polynomial p = parse_polynomial(text, xr);
      const auto back = to_x_polynomial(expand_rep(p));
      REQUIRE(back);
      CHECK(*back == p);
    }
    CHECK_FALSE(to_x_polynomial(C("y1 + y1^-1")));
  }

  TEST_CASE("Weyl action") {
    for (const auto& w : weyl_spin8())
      for (int i = 1; i <= 4; ++i) CHECK(weyl_act(w, x_character(i)) == x_character(i));
    const WeylElement s = WeylElement::reflection(Weight::omega(1));
    CHECK(weyl_act(s, C("y1")) == C("y1^-1"));
  }

  TEST_CASE("permutation of X1, X2, X3 by the special reflections") {
    const auto p4 = x_permutation(WeylElement::reflection(sigma_root_omega4()));
    const auto p54 = x_permutation(WeylElement::reflection(sigma_root_omega54()));
    const auto p5 = x_permutation(WeylElement::reflection(sigma_root_omega5()));
    REQUIRE(p4);
    REQUIRE(p54);
    REQUIRE(p5);
    CHECK(*p4 == std::array<int, 3>{2, 1, 3});
    CHECK(*p54 == std::array<int, 3>{3, 2, 1});
    CHECK(*p5 == std::array<int, 3>{1, 3, 2});
    CHECK(x_permutation(WeylElement()) == std::array<int, 3>{1, 2, 3});
  }

  TEST_CASE("membership in both descriptions") {
    const XTuple taut = tautological_x_tuple();
    CHECK(check_k_membership_x(taut).member);
    CHECK(check_k_membership_rt(expand_tuple(taut)).member);
    XTuple single = taut;
    for (std::size_t i = 1; i < 6; ++i) single[i] = Polynomial(x_ring());
    single[0] = parse_polynomial("X1 - X2", x_ring());
    CHECK_FALSE(check_k_membership_x(single).member);
    CHECK_FALSE(check_k_membership_rt(expand_tuple(single)).member);
    Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
      XTuple t = taut;
      const Polynomial base = rng.polynomial(x_ring(), 2, 2, 3);
      for (std::size_t i = 0; i < 6; ++i)
        t[i] = base + (rng.coin() ? rng.polynomial(x_ring(), 1, 2, 2) : Polynomial(x_ring()));
      CHECK(check_k_membership_x(t).member == check_k_membership_rt(expand_tuple(t)).member);
    }
  }

  TEST_CASE("integrality") {
    CHECK(has_integer_coefficients(parse_polynomial("2*X1 - X4^2", x_ring())));
    CHECK_FALSE(has_integer_coefficients(parse_polynomial("1/2*X1", x_ring())));
  }
}
