#include <doctest.h>

#include "flagoct/errors.hpp"
#include "flagoct/expression.hpp"
#include "flagoct/gkm.hpp"

using namespace flagoct;

namespace {

CohTuple zero_tuple(const RingPtr& r) {
  return {Polynomial(r), Polynomial(r), Polynomial(r), Polynomial(r), Polynomial(r), Polynomial(r)};
}

}  // namespace

TEST_SUITE("gkm-coh") {
  TEST_CASE("graph structure") {
    const auto& edges = GkmGraph::edges();
    CHECK(edges.size() == 9);
    std::array<int, 6> degree{};
    for (const auto& e : edges) {
      ++degree[e.from];
      ++degree[e.to];
      const Sigma3Element t = transpositions()[e.transposition];
      CHECK(Sigma3Element::all()[e.to] == t * Sigma3Element::all()[e.from]);
    }
    for (int d : degree) CHECK(d == 3);
    CHECK(transposition_name(0) == "(1,2)");
    CHECK(gamma_of_transposition(2) == 1);
  }

  TEST_CASE("labels") {
    const GkmGraph g = GkmGraph::abstract();
    const RingPtr r = g.ring();
    CHECK(g.label(0) == parse_polynomial("b2", r));
    CHECK(g.label(1) == parse_polynomial("b1+b2", r));
    CHECK(g.label(2) == parse_polynomial("b1", r));
    const GkmGraph lit = GkmGraph::abstract(LabelConvention::literal);
    CHECK(lit.label(0) == parse_polynomial("b1", r));
  }

  TEST_CASE("table classes are members; single-vertex tuples are not") {
    const GkmGraph g = GkmGraph::abstract();
    const RestrictionTable t = RestrictionTable::published();
    for (int k = 1; k <= 3; ++k) CHECK(check_membership(g, table_class(t, k)).member);
    CohTuple single = zero_tuple(g.ring());
    single[0] = parse_polynomial("b1", g.ring());
    const MembershipResult r = check_membership(g, single);
    CHECK_FALSE(r.member);
    REQUIRE(r.failing_edge);
    CHECK(r.failing_edge->from == 0);
  }

  TEST_CASE("the literal labels reject the table class") {
    CHECK_FALSE(check_membership(GkmGraph::abstract(LabelConvention::literal), table_class(RestrictionTable::published(), 1)).member);
  }

  TEST_CASE("polynomials in the classes are members and P1 agrees with P2") {
    const GkmGraph g = GkmGraph::abstract();
    const RestrictionTable t = RestrictionTable::published();
    Rng rng(29);
    for (int trial = 0; trial < 20; ++trial) {
      const Polynomial p = rng.polynomial(class_polynomial_ring(), 3, 4);
      const CohTuple tuple = tuple_from_classes(t, p);
      CHECK(check_membership(g, tuple).member);
      CHECK(condition_p1(g, tuple));
    }
    for (int trial = 0; trial < 40; ++trial) {
      CohTuple tuple = zero_tuple(g.ring());
      for (auto& f : tuple) f = rng.polynomial(g.ring(), 1, 2, 2);
      CHECK(condition_p1(g, tuple) == condition_p2(g, tuple));
    }
  }

  TEST_CASE("rho and L coordinates") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
      const Polynomial f = rng.polynomial(rho_ring(), 3, 4);
      CHECK(l_to_rho(rho_to_l(f)) == f);
    }
  }

  TEST_CASE("realized Euler classes") {
    const EulerRealization r = realize_in_bt();
    for (int k = 0; k < 3; ++k) {
      CHECK(r.weyl_sign[k] != 0);
      CHECK(r.b[k].factors().size() == 4);
      CHECK(is_spin8_invariant(rho_to_l(r.b[k].expand())) == (r.weyl_sign[k] == 1));
    }
    const Polynomial b1 = rho_to_l(r.b[0].expand());
    const Polynomial prod = parse_polynomial("L1*L2*L3*L4", l_ring());
    CHECK((b1 == prod || b1 == -prod));
    const std::vector<FormProduct> all(r.b.begin(), r.b.end());
    CHECK(pairwise_coprime(all).coprime);
    CHECK(r.b[0].expand() + r.b[1].expand() == r.b[2].expand());
  }

  TEST_CASE("hyperplane divisibility agrees with exact division") {
    const EulerRealization r = realize_in_bt();
    Rng rng(37);
    for (int trial = 0; trial < 10; ++trial) {
      const Polynomial q = rng.polynomial(rho_ring(), 2, 3);
      const Polynomial multiple = q * r.b[1].expand();
      CHECK(divisible_by_hyperplanes(multiple, r.b[1]));
      const Polynomial other = multiple + rng.polynomial(rho_ring(), 1, 2);
      CHECK(divisible_by_hyperplanes(other, r.b[1]) == exact_divide(other, r.b[1].expand()).has_value());
    }
  }

  TEST_CASE("free rank series") {
    const auto predicted = predicted_free_ranks(16);
    CHECK(predicted[0] == 1);
    CHECK(predicted[4] == 1);
    CHECK(predicted[8] == 5);
    const auto rows = free_rank_check(8);
    for (const auto& row : rows) CHECK_MESSAGE(row.computed == row.predicted, "degree " << row.degree);
    CHECK_THROWS_AS(free_rank_check(7), PreconditionError);
    CHECK_THROWS_AS(free_rank_check(kMaxRankDegree + 2), ResourceError);
  }
}
