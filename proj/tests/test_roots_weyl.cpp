#include <doctest.h>

#include <set>

#include "flagoct/errors.hpp"
#include "flagoct/weyl.hpp"

using namespace flagoct;

TEST_SUITE("roots-weyl") {
  TEST_CASE("reflections") {
    const Weight v = Weight::L(1) + make_rational(1, 2) * Weight::L(2);
    const Weight root = Weight::L(1) - Weight::L(2);
    CHECK(reflect(reflect(v, root), root) == v);
    CHECK(reflect(root, root) == -root);
    CHECK_THROWS_AS(reflect(v, Weight{}), PreconditionError);
    const WeylElement s = WeylElement::reflection(root);
    CHECK(s.is_orthogonal());
    CHECK(s * s == WeylElement());
  }

  TEST_CASE("group orders") {
    CHECK(weyl_spin8().size() == 192);
    CHECK(weyl_f4().size() == 1152);
    for (const auto& w : weyl_spin8()) {
      CHECK(is_spin8_element(w));
      CHECK(w.preserves_lattice());
    }
    std::size_t inside = 0;
    for (const auto& w : weyl_f4()) inside += in_weyl_spin8(w);
    CHECK(inside == 192);
  }

  TEST_CASE("generation bound") {
    const RootSystem f4 = f4_root_system();
    const auto gens = f4.simple_reflections();
    CHECK_THROWS_AS(generate_group(gens, 100), ResourceError);
  }

  TEST_CASE("root systems") {
    const RootSystem d4 = d4_root_system(), f4 = f4_root_system();
    CHECK(d4.roots.size() == 24);
    CHECK(f4.roots.size() == 48);
    CHECK(d4.positive_roots().size() == 12);
    CHECK(f4.positive_roots().size() == 24);
    for (const auto& r : d4.roots) CHECK(r.dot(r) == 2);
    for (const auto& w : weyl_f4()) {
      std::set<Weight> image;
      for (const auto& r : f4.roots) image.insert(w.apply(r));
      CHECK(image == std::set<Weight>(f4.roots.begin(), f4.roots.end()));
    }
  }

  TEST_CASE("fundamental weights") {
    for (std::size_t j = 1; j <= 4; ++j) {
      const auto rc = Weight::rho(j).rho_coordinates();
      for (std::size_t i = 0; i < 4; ++i) CHECK(rc[i] == (i + 1 == j ? 1 : 0));
    }
    CHECK(Weight::omega(5) == make_rational(1, 2) * (Weight::L(1) + Weight::L(2) + Weight::L(3) + Weight::L(4)));
    CHECK(Weight::omega(5).in_lattice());
    CHECK_FALSE((make_rational(1, 2) * Weight::L(1)).in_lattice());
  }

  TEST_CASE("semidirect product") {
    const SemidirectReport r = semidirect_check();
    CHECK(r.normal);
    CHECK(r.sigma_order == 6);
    CHECK(r.trivial_intersection);
    CHECK(r.orders_multiply);
    CHECK(r.braid);
  }

  TEST_CASE("root partition is 4 + 4 + 4") {
    const auto parts = coset_partition_of_f4_positives();
    for (const auto& p : parts) CHECK(p.size() == 4);
    CHECK(std::find(parts[0].begin(), parts[0].end(), sigma_root_omega4()) != parts[0].end());
    CHECK(std::find(parts[1].begin(), parts[1].end(), sigma_root_omega54()) != parts[1].end());
    CHECK(std::find(parts[2].begin(), parts[2].end(), sigma_root_omega5()) != parts[2].end());
  }

  TEST_CASE("Sigma_3 conventions") {
    const Sigma3Element s1 = Sigma3Element::s1(), s2 = Sigma3Element::s2();
    CHECK(s1 == Sigma3Element::transposition(2, 3));
    CHECK(s2 == Sigma3Element::transposition(1, 2));
    CHECK(s1 * s2 * s1 == s2 * s1 * s2);
    CHECK(s1 * s2 * s1 == Sigma3Element::transposition(1, 3));
    CHECK((s1 * s2)(1) == 3);
    for (const auto& s : Sigma3Element::all()) {
      CHECK(Sigma3Element::from_name(s.name()) == s);
      CHECK(Sigma3Element::all()[s.index()] == s);
      CHECK(s * s.inverse() == Sigma3Element());
    }
  }

  TEST_CASE("inversion sets give the cell dimensions") {
    std::size_t by_length[4] = {0, 0, 0, 0};
    for (const auto& s : Sigma3Element::all()) ++by_length[inversion_set(s).size()];
    CHECK(by_length[0] == 1);
    CHECK(by_length[1] == 2);
    CHECK(by_length[2] == 2);
    CHECK(by_length[3] == 1);
    CHECK(inversion_set(Sigma3Element()).empty());
    CHECK(inversion_set(Sigma3Element::s1()) == std::vector<int>{1});
    CHECK(inversion_set(Sigma3Element::s2()) == std::vector<int>{2});
    CHECK(inversion_set(Sigma3Element::s1() * Sigma3Element::s2() * Sigma3Element::s1()) == std::vector<int>{1, 2, 3});
  }

  TEST_CASE("action on the A2 roots") {
    CHECK(act_on_a2_root(Sigma3Element(), 2) == 2);
    CHECK(act_on_a2_root(Sigma3Element::s1(), 1) == -1);
    CHECK(act_on_a2_root(Sigma3Element::s2(), 2) == -2);
    for (const auto& s : Sigma3Element::all())
      for (int k = 1; k <= 3; ++k) CHECK(std::abs(act_on_a2_root(s, k)) >= 1);
  }
}
