#include <doctest.h>

#include "flagoct/errors.hpp"
#include "flagoct/expression.hpp"
#include "flagoct/groebner.hpp"
#include "flagoct/linalg.hpp"
#include "flagoct/polynomial.hpp"
#include "flagoct/random.hpp"

using namespace flagoct;

namespace {

RingPtr xy() {
  static const RingPtr r = Ring::make({"x", "y", "z"});
  return r;
}

Polynomial P(const char* text) { return parse_polynomial(text, xy()); }

}  // namespace

TEST_SUITE("exact-poly") {
  TEST_CASE("rationals are canonical") {
    CHECK(make_rational(2, -4) == make_rational(-1, 2));
    CHECK(make_rational(2, -4).get_den() == 2);
    CHECK(parse_rational("-6/4") == make_rational(-3, 2));
    CHECK(to_string(make_rational(3, 1)) == "3");
    CHECK_THROWS(make_rational(1, 0));
  }

  TEST_CASE("arithmetic normalizes and cancels") {
    CHECK((P("x+y") * P("x-y")) == P("x^2-y^2"));
    CHECK((P("x") - P("x")).is_zero());
    CHECK(P("(x+1)^3") == P("x^3+3*x^2+3*x+1"));
    CHECK(P("2/4*x").to_string() == "1/2*x");
    CHECK(P("0*x + 0").is_zero());
  }

  TEST_CASE("ring mismatch is rejected") {
    const RingPtr other = Ring::make({"x", "y", "z"}, MonomialOrder::lex);
    CHECK_THROWS_AS(P("x") + Polynomial::variable(other, 0), RingMismatchError);
  }

  TEST_CASE("elementary symmetric polynomials are symmetric") {
    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
      const Polynomial a = rng.polynomial(xy(), 2, 3), b = rng.polynomial(xy(), 2, 3), c = rng.polynomial(xy(), 2, 3);
      for (int i = 1; i <= 3; ++i) {
        const Polynomial s = elementary_symmetric(i, a, b, c);
        CHECK(s == elementary_symmetric(i, b, a, c));
        CHECK(s == elementary_symmetric(i, c, b, a));
        CHECK(s == elementary_symmetric(i, a, c, b));
      }
    }
    CHECK(elementary_symmetric(2, P("x"), P("y"), P("z")) == P("x*y+x*z+y*z"));
  }

  TEST_CASE("exact division") {
    const auto q = exact_divide(P("x^2-y^2"), P("x-y"));
    REQUIRE(q);
    CHECK(*q == P("x+y"));
    CHECK_FALSE(exact_divide(P("x^2+y^2"), P("x-y")));
    CHECK_THROWS_AS(exact_divide(P("x"), P("0")), DivisionByZeroError);
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const Polynomial f = rng.polynomial(xy(), 3, 4), g = rng.polynomial(xy(), 2, 3);
      if (g.is_zero()) continue;
      const auto back = exact_divide(f * g, g);
      REQUIRE(back);
      CHECK(*back == f);
    }
  }

  TEST_CASE("substitution and evaluation") {
    const Polynomial f = P("x^2*y - z");
    const std::vector<Polynomial> images{P("y+z"), P("2"), P("x")};
    CHECK(f.substitute(xy(), images) == P("2*(y+z)^2 - x"));
    const std::vector<Rational> point{1, 2, 3};
    CHECK(f.evaluate(point) == -1);
  }

  TEST_CASE("Groebner basis of a coinvariant ideal") {
    const RingPtr r = Ring::make({"a", "b"});
    const Polynomial a = Polynomial::variable(r, 0), b = Polynomial::variable(r, 1);
    const std::vector<Polynomial> gens{elementary_symmetric(2, a, b - a, -b), elementary_symmetric(3, a, b - a, -b)};
    const GroebnerBasis gb = buchberger(gens);
    CHECK(gb.contains(gens[0] * a + gens[1] * b));
    CHECK_FALSE(gb.contains(a));
    CHECK_FALSE(gb.is_unit_ideal());
    const auto dims = graded_quotient_dimensions(gb, 4);
    CHECK(dims == std::vector<std::size_t>{1, 2, 2, 1, 0});
  }

  TEST_CASE("Groebner normal form is independent of generator order") {
    Rng rng(3);
    const RingPtr r = Ring::make({"a", "b", "c"});
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Polynomial> gens{rng.homogeneous(r, 2, 2), rng.homogeneous(r, 2, 2), rng.homogeneous(r, 3, 2)};
      const GroebnerBasis g1 = buchberger(gens);
      std::swap(gens[0], gens[2]);
      const GroebnerBasis g2 = buchberger(gens);
      const Polynomial f = rng.polynomial(r, 4, 6);
      CHECK(g1.normal_form(f) == g2.normal_form(f));
      for (const auto& g : gens) CHECK(g1.contains(g));
    }
  }

  TEST_CASE("unit ideal and resource bound") {
    const RingPtr r = Ring::make({"a", "b"});
    const std::vector<Polynomial> unit{Polynomial::variable(r, 0), Polynomial::variable(r, 0) - Polynomial::constant(r, 1)};
    CHECK(buchberger(unit).is_unit_ideal());
    const RingPtr big = Ring::make({"a", "b", "c", "d", "e", "f", "g"});
    const std::vector<Polynomial> gens{Polynomial::variable(big, 0)};
    CHECK_THROWS_AS(buchberger(gens), ResourceError);
  }

  TEST_CASE("linear algebra") {
    RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(rank(m) == 2);
    const auto ns = nullspace(m, 3);
    REQUIRE(ns.size() == 1);
    for (const auto& row : m) {
      Rational dot = 0;
      for (std::size_t j = 0; j < 3; ++j) dot += row[j] * ns[0][j];
      CHECK(dot == 0);
    }
    const auto x = solve({{2, 1}, {1, 3}}, {3, 5});
    REQUIRE(x);
    CHECK((*x)[0] == make_rational(4, 5));
    CHECK((*x)[1] == make_rational(7, 5));
    CHECK_FALSE(solve({{1, 2}, {2, 4}}, {1, 1}));
  }

  TEST_CASE("linear forms and coprimality") {
    const RingPtr r = Ring::make({"a", "b"});
    const LinearForm u(r, {1, 0}), v(r, {0, 1}), w(r, {2, 0});
    CHECK(u.proportional_to(w));
    CHECK_FALSE(u.proportional_to(v));
    const std::vector<FormProduct> ok{FormProduct(r, 1, {u}), FormProduct(r, 3, {v})};
    CHECK(pairwise_coprime(ok).coprime);
    const std::vector<FormProduct> bad{FormProduct(r, 1, {u, v}), FormProduct(r, 1, {w})};
    const CoprimeResult res = pairwise_coprime(bad);
    CHECK_FALSE(res.coprime);
    REQUIRE(res.witness);
    CHECK(res.witness->second_product == 1);
    CHECK_THROWS_AS(LinearForm::from_polynomial(parse_polynomial("a*b", r)), PreconditionError);
  }

  TEST_CASE("parser examples") {
    const std::vector<std::string> vars{"e1", "e2"};
    const ExprPtr e = parse_expression("1/3*(2*e1+e2)", vars);
    const ExprPtr again = parse_expression(print_expression(*e), vars);
    CHECK(e->same_tree(*again));
    CHECK_THROWS_AS(parse_expression("", vars), ParseError);
    try {
      parse_expression("", vars);
    } catch (const ParseError& err) {
      CHECK(err.position() == 0);
    }
    CHECK_THROWS_AS(parse_expression("e1 + w", vars), UnknownVariableError);
    CHECK_THROWS_AS(parse_expression("e1^-1", vars), ParseError);
    CHECK_NOTHROW(parse_expression("e1^-1", vars, ExpressionContext::character));
    CHECK_THROWS_AS(parse_expression("(e1", vars), ParseError);
    CHECK_THROWS_AS(parse_expression("1/0", vars), ParseError);
  }

  TEST_CASE("parse, print and parse again is the identity on trees") {
    const std::vector<std::string> vars{"x", "y", "z"};
    for (const char* text : {"x", "-x^2+3/4*y", "(x-y)*(y-z)*(z-x)", "--x", "2^3*x - (y + z)^2", "x*y*z - 1/7"}) {
      const ExprPtr e = parse_expression(text, vars);
      CHECK(e->same_tree(*parse_expression(print_expression(*e), vars)));
    }
  }
}
