#include <doctest.h>

#include "flagoct/errors.hpp"
#include "flagoct/expression.hpp"
#include "flagoct/jordan.hpp"
#include "flagoct/octonion.hpp"
#include "flagoct/random.hpp"

using namespace flagoct;

namespace {

Octonion random_octonion(Rng& rng) {
  std::array<Rational, 8> c;
  for (auto& x : c) x = rng.rational(-4, 4, 3);
  return Octonion(c);
}

JordanMatrix random_traceless(Rng& rng) {
  JordanMatrix a;
  a.x1 = rng.rational(-3, 3, 2);
  a.x2 = rng.rational(-3, 3, 2);
  a.x3 = -a.x1 - a.x2;
  a.p = random_octonion(rng);
  a.q = random_octonion(rng);
  a.r = random_octonion(rng);
  return a;
}

}  // namespace

TEST_SUITE("octonion-jordan") {
  TEST_CASE("unit table") {
    const Octonion one = Octonion::unit(1);
    for (std::size_t i = 2; i <= 8; ++i) {
      const Octonion e = Octonion::unit(i);
      CHECK(e * e == Octonion::real(-1));
      CHECK(one * e == e);
      CHECK(e * one == e);
      for (std::size_t j = 2; j <= 8; ++j)
        if (i != j) CHECK(e * Octonion::unit(j) == -(Octonion::unit(j) * e));
    }
    // i j = k
    CHECK(Octonion::unit(2) * Octonion::unit(3) == Octonion::unit(4));
  }

  TEST_CASE("composition, alternativity and conjugation") {
    Rng rng(42);
    for (int trial = 0; trial < 30; ++trial) {
      const Octonion p = random_octonion(rng), q = random_octonion(rng);
      CHECK((p * q).norm2() == p.norm2() * q.norm2());
      CHECK((p * p) * q == p * (p * q));
      CHECK((p * q) * q == p * (q * q));
      CHECK((p * q).conj() == q.conj() * p.conj());
      CHECK((p * p.conj()).is_real());
    }
  }

  TEST_CASE("octonions are not associative") {
    const Octonion i = Octonion::unit(2), j = Octonion::unit(3), l = Octonion::unit(5);
    CHECK((i * j) * l != i * (j * l));
    CHECK((i * j) * l == -(i * (j * l)));
  }

  TEST_CASE("Jordan product") {
    Rng rng(5);
    const JordanMatrix I = JordanMatrix::identity();
    for (int trial = 0; trial < 5; ++trial) {
      const JordanMatrix a = random_traceless(rng), b = random_traceless(rng);
      CHECK(jordan_product(a, I) == a);
      CHECK(jordan_product(a, b) == jordan_product(b, a));
      const JordanMatrix a2 = jordan_product(a, a);
      CHECK(jordan_product(jordan_product(a, b), a2) == jordan_product(a, jordan_product(b, a2)));
      CHECK(inner_product(a, b) == inner_product(b, a));
    }
  }

  TEST_CASE("coordinates round trip") {
    Rng rng(9);
    const JordanMatrix a = random_traceless(rng);
    CHECK(JordanMatrix::from_coordinates(a.coordinates()) == a);
    CHECK(JordanMatrix::from_matrix(a.to_matrix()) == a);
    CHECK(parse_jordan(format_jordan(a)) == a);
    CHECK(JordanMatrix::basis(0) == JordanMatrix::diagonal(1, 0, 0));
    CHECK(JordanMatrix::basis(3).r == Octonion::unit(1));
    CHECK(JordanMatrix::basis(11).p == Octonion::unit(1));
    CHECK(JordanMatrix::basis(19).q == Octonion::unit(1));
  }

  TEST_CASE("textual form") {
    const JordanMatrix a = parse_jordan("1/2,0,1/2; p=(0,0,0,0,0,0,0,0); q=(1/2,0,0,0,0,0,0,0); r=(0,0,0,0,0,0,0,0)");
    CHECK(a.x1 == make_rational(1, 2));
    CHECK(a.q == Octonion::real(make_rational(1, 2)));
    CHECK(is_projective_point(a));
    CHECK_THROWS(parse_jordan("1,2; p=(0)"));
  }

  TEST_CASE("points and incidence") {
    const JordanMatrix d1 = JordanMatrix::diagonal(1, 0, 0), d3 = JordanMatrix::diagonal(0, 0, 1);
    CHECK(is_projective_point(d1));
    CHECK_FALSE(is_projective_point(JordanMatrix::identity()));
    CHECK(jordan_product(d1, d3) == JordanMatrix());
    CHECK(is_incident(d1, d3));
    CHECK_FALSE(is_incident(d1, d1));
    CHECK_THROWS_AS(is_incident(d1, JordanMatrix::identity()), PreconditionError);
    // complex lines: (1, i)/sqrt2 and (1, -i)/sqrt2 in the first two coordinates
    JordanMatrix u = JordanMatrix::diagonal(make_rational(1, 2), make_rational(1, 2), 0);
    u.p = Octonion::unit(2) * make_rational(1, 2);
    JordanMatrix v = u;
    v.p = -u.p;
    CHECK(is_projective_point(u));
    CHECK(is_projective_point(v));
    CHECK(is_incident(u, v));
  }

  TEST_CASE("root spaces") {
    const JordanMatrix x = JordanMatrix::diagonal(2, -3, 1);
    CHECK(gamma(1, x) == -4);
    CHECK(gamma(2, x) == 5);
    CHECK(gamma(3, x) == 1);
    for (std::size_t i = 3; i < 27; ++i) {
      const std::size_t k = i < 11 ? 1 : i < 19 ? 2 : 3;
      CHECK(root_space_check(x, JordanMatrix::basis(i), k));
      CHECK_THROWS_AS(root_space_check(x, JordanMatrix::basis(i), k == 1 ? 2 : 1), PreconditionError);
    }
  }

  TEST_CASE("root decomposition") {
    Rng rng(13);
    const JordanMatrix a = random_traceless(rng);
    const RootDecomposition d = decompose(a);
    CHECK(d.d0 + d.h1 + d.h2 + d.h3 == a);
    CHECK(d.d0.is_diagonal());
    CHECK(d.h1.p.is_zero());
    CHECK(d.h1.q.is_zero());
  }

  TEST_CASE("determinant") {
    CHECK(jordan_determinant(JordanMatrix::identity()) == 1);
    CHECK(jordan_determinant(JordanMatrix::diagonal(2, 3, 5)) == 30);
    CHECK(jordan_determinant(JordanMatrix::diagonal(1, 0, 0)) == 0);
    const RingPtr r = Ring::make({"x1", "x2", "x3"});
    CHECK(diagonal_determinant_polynomial(r) == parse_polynomial("x1*x2*x3", r));
  }

  TEST_CASE("bracket identities where the entries associate") {
    Rng rng(17);
    for (int trial = 0; trial < 3; ++trial) {
      JordanMatrix x = random_traceless(rng);
      x.p = x.q = x.r = Octonion();
      const BracketIdentities r = bracket_identities_check(x, random_traceless(rng));
      CHECK(r.first);
      CHECK(r.second);
    }
    const JordanMatrix a = random_traceless(rng);
    const BracketIdentities same = bracket_identities_check(a, a);
    CHECK(same.first);
    CHECK(same.second);
  }

  TEST_CASE("bracket identity (i) fails for generic octonionic pairs") {
    // x o (a o y) - a o (x o y) = [[x,a],y]/4 uses associativity of the entries.
    Rng rng(23);
    const JordanMatrix x = random_traceless(rng), a = random_traceless(rng);
    const BracketIdentities r = bracket_identities_check(x, a);
    CHECK_FALSE(r.first);
    CHECK_FALSE(r.second);
    CHECK_THROWS_AS(bracket_identities_check(JordanMatrix::identity(), a), PreconditionError);
  }

  TEST_CASE("operator algebra") {
    Rng rng(19);
    const JordanMatrix a = random_traceless(rng), y = random_traceless(rng);
    const LinearOperator27 ah = LinearOperator27::hat(a);
    CHECK(ah.apply(y) == jordan_product(a, y));
    CHECK(bracket(ah, ah) == LinearOperator27());
    CHECK_THROWS_AS(LinearOperator27::tilde(a.to_matrix()), PreconditionError);
  }
}
