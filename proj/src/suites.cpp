#include "flagoct/suites.hpp"

#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <sstream>

#include "flagoct/errors.hpp"
#include "flagoct/expression.hpp"
#include "flagoct/gkm.hpp"
#include "flagoct/jordan.hpp"
#include "flagoct/ktheory.hpp"
#include "flagoct/octonion.hpp"
#include "flagoct/random.hpp"
#include "flagoct/weyl.hpp"

namespace flagoct {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"octonion", "jordan", "roots", "cohomology", "gkm", "ktheory", "all"};
  return names;
}

bool is_suite_name(const std::string& name) {
  return std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

namespace {

Octonion random_octonion(Rng& rng) {
  std::array<Rational, 8> c;
  for (auto& x : c) x = rng.rational(-5, 5, 4);
  return Octonion(c);
}

JordanMatrix random_traceless(Rng& rng) {
  JordanMatrix a;
  a.x1 = rng.rational(-4, 4, 3);
  a.x2 = rng.rational(-4, 4, 3);
  a.x3 = -a.x1 - a.x2;
  a.p = random_octonion(rng);
  a.q = random_octonion(rng);
  a.r = random_octonion(rng);
  return a;
}

JordanMatrix random_jordan(Rng& rng) {
  JordanMatrix a = random_traceless(rng);
  a.x3 += rng.rational(-3, 3);
  return a;
}

std::string count_text(std::size_t good, std::size_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

template <class F>
bool throws_precondition(F&& f) {
  try {
    f();
  } catch (const PreconditionError&) {
    return true;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Check> octonion_checks(std::uint64_t seed) {
  const char* anchor = "octonion algebra O with conjugation and norm |p|^2 = p conj(p)";
  Rng rng(seed);
  std::vector<Check> checks;
  const Octonion one = Octonion::unit(1);

  std::vector<std::pair<Octonion, Octonion>> pairs;
  for (int i = 0; i < 100; ++i) pairs.emplace_back(random_octonion(rng), random_octonion(rng));

  {
    bool ok = true;
    for (const auto& [p, q] : pairs) ok = ok && one * p == p && p * one == p;
    checks.push_back(Check::make("octonion.identity", "e1 is a two-sided identity", ok, "100 random octonions", anchor));
  }
  {
    bool ok = Octonion::unit(2) * Octonion::unit(2) == -one;
    for (std::size_t k = 2; k <= 8; ++k) ok = ok && Octonion::unit(k) * Octonion::unit(k) == -one;
    checks.push_back(Check::make("octonion.units-square", "e_k e_k = -e1 for k = 2..8", ok, "", anchor));
  }
  {
    bool ok = true;
    for (const auto& [p, q] : pairs) ok = ok && p * p.conj() == Octonion::real(p.norm2());
    checks.push_back(Check::make("octonion.norm", "p conj(p) is real and equals the sum of squares", ok,
                                 "100 random octonions", anchor));
  }
  {
    std::size_t good = 0;
    for (const auto& [p, q] : pairs) good += (p * q).norm2() == p.norm2() * q.norm2();
    checks.push_back(Check::make("octonion.composition", "|pq|^2 = |p|^2 |q|^2", good == pairs.size(),
                                 count_text(good, pairs.size()) + " pairs", anchor));
  }
  {
    std::size_t good = 0;
    for (const auto& [p, q] : pairs) good += (p * p) * q == p * (p * q) && (p * q) * q == p * (q * q);
    checks.push_back(Check::make("octonion.alternativity", "(pp)q = p(pq) and (pq)q = p(qq)", good == pairs.size(),
                                 count_text(good, pairs.size()) + " pairs", anchor));
  }
  {
    bool ok = true;
    for (const auto& [p, q] : pairs) ok = ok && (p * q).conj() == q.conj() * p.conj();
    checks.push_back(Check::make("octonion.conjugation", "conj(pq) = conj(q) conj(p)", ok, "100 random pairs", anchor));
  }
  {
    const Octonion a = Octonion::unit(2), b = Octonion::unit(3), c = Octonion::unit(5);
    const Octonion left = (a * b) * c, right = a * (b * c);
    checks.push_back(Check::make("octonion.non-associative-witness", "(e2 e3) e5 differs from e2 (e3 e5)", !(left == right),
                                 left.to_string() + " vs " + right.to_string(), anchor));
  }
  {
    // Falsified fixture: a product with e_k e_k = +e1 for k >= 2 must break the composition law.
    const auto perturbed = [](const Octonion& p, const Octonion& q) {
      Octonion out = p * q;
      Rational shift = 0;
      for (std::size_t k = 1; k < 8; ++k) shift += 2 * p[k] * q[k];
      out[0] += shift;
      return out;
    };
    std::size_t violations = 0;
    for (const auto& [p, q] : pairs) violations += perturbed(p, q).norm2() != p.norm2() * q.norm2();
    checks.push_back(Check::make("octonion.control.perturbed-table", "a product with e_k^2 = +1 fails the composition law",
                                 violations > 0, count_text(violations, pairs.size()) + " violations", anchor));
  }
  return checks;
}

// ---------------------------------------------------------------------------

std::vector<Check> jordan_checks(std::uint64_t seed) {
  const char* anchor_alg = "the Jordan algebra h3(O) with a o b = (ab + ba)/2";
  const char* anchor_pts = "projective points a^2 = a, tr a = 1 and incidence Re tr(ab) = 0";
  const char* anchor_root = "root functions gamma_k and [x,[x,a]] = gamma_k(x)^2 a on h_gamma_k";
  const char* anchor_det = "the cubic determinant of h3(O)";
  const char* anchor_br = "operator identities for hat and tilde on h3(O)";
  Rng rng(seed);
  std::vector<Check> checks;
  const JordanMatrix I = JordanMatrix::identity();
  const JordanMatrix d1 = JordanMatrix::diagonal(1, 0, 0), d3 = JordanMatrix::diagonal(0, 0, 1);

  {
    bool id = true, comm = true, jordan = true;
    for (int i = 0; i < 20; ++i) {
      const JordanMatrix a = random_jordan(rng), b = random_jordan(rng);
      id = id && jordan_product(a, I) == a;
      comm = comm && jordan_product(a, b) == jordan_product(b, a);
      const JordanMatrix aa = jordan_product(a, a);
      jordan = jordan && jordan_product(jordan_product(a, b), aa) == jordan_product(a, jordan_product(b, aa));
    }
    checks.push_back(Check::make("jordan.product.identity", "a o I = a", id, "20 random matrices", anchor_alg));
    checks.push_back(Check::make("jordan.product.commutative", "a o b = b o a", comm, "20 random pairs", anchor_alg));
    checks.push_back(Check::make("jordan.product.jordan-identity", "(a o b) o (a o a) = a o (b o (a o a))", jordan,
                                 "20 random pairs", anchor_alg));
    checks.push_back(Check::make("jordan.product.d1-d3", "d1 o d3 = 0", jordan_product(d1, d3) == JordanMatrix{}, "",
                                 anchor_alg));
  }
  {
    bool ok = true;
    for (int i = 0; i < 20; ++i) {
      const JordanMatrix a = random_jordan(rng), b = random_jordan(rng);
      ok = ok && inner_product(a, b) == inner_product(b, a);
    }
    checks.push_back(Check::make("jordan.inner-product.symmetric", "Re tr(ab) is symmetric", ok, "20 random pairs",
                                 anchor_alg));
  }
  {
    const bool ok = is_projective_point(d1) && is_projective_point(d3) && !is_projective_point(I);
    checks.push_back(Check::make("jordan.point.examples", "d1 and d3 are points, I is not", ok, "", anchor_pts));
  }
  {
    // Fiber points x1 = 0, p = q = 0, x2 = 1 - x3, |r|^2 + (x3 - 1/2)^2 = 1/4 from rational circle points.
    std::size_t good = 0, rejected = 0;
    const int count = 20;
    for (int i = 0; i < count; ++i) {
      const Rational t = rng.rational(-6, 6, 5);
      const Rational c = (1 - t * t) / (1 + t * t), s = 2 * t / (1 + t * t);
      const Rational u = rng.rational(-6, 6, 5);
      const Rational cu = (1 - u * u) / (1 + u * u), su = 2 * u / (1 + u * u);
      const std::size_t k1 = static_cast<std::size_t>(rng.uniform(1, 8));
      const std::size_t k2 = k1 % 8 + 1;
      JordanMatrix a;
      a.x3 = Rational(1, 2) + c / 2;
      a.x2 = 1 - a.x3;
      a.r = (s / 2) * (cu * Octonion::unit(k1) + su * Octonion::unit(k2));
      const bool on_circle = a.r.norm2() + (a.x3 - Rational(1, 2)) * (a.x3 - Rational(1, 2)) == Rational(1, 4);
      good += on_circle && is_projective_point(a);
      JordanMatrix off = a;
      off.x3 += Rational(1, 7);
      off.x2 -= Rational(1, 7);
      rejected += !is_projective_point(off);
    }
    checks.push_back(Check::make("jordan.point.fiber", "fiber matrices are points exactly on |r|^2 + (x3-1/2)^2 = 1/4",
                                 good == count && rejected == count,
                                 count_text(good, count) + " on the circle accepted, " + count_text(rejected, count) +
                                     " shifted rejected",
                                 anchor_pts));
  }
  {
    JordanMatrix a1 = JordanMatrix::diagonal(Rational(1, 2), Rational(1, 2), 0);
    a1.p = Rational(-1, 2) * Octonion::unit(2);
    JordanMatrix a2 = JordanMatrix::diagonal(Rational(1, 2), Rational(1, 2), 0);
    a2.p = Rational(1, 2) * Octonion::unit(2);
    const bool complex_case = is_projective_point(a1) && is_projective_point(a2) && is_incident(a1, a2);
    const bool ok = is_incident(d1, d3) && !is_incident(d1, d1) && complex_case &&
                    throws_precondition([&] { is_incident(I, d1); });
    checks.push_back(Check::make("jordan.incidence", "(d1,d3) incident, (d1,d1) not, orthogonal complex lines incident",
                                 ok, "", anchor_pts));
  }
  {
    const std::array<JordanMatrix, 3> xs{JordanMatrix::diagonal(1, 0, -1), JordanMatrix::diagonal(3, 1, -4),
                                         JordanMatrix::diagonal(Rational(2, 3), Rational(-5, 2), Rational(11, 6))};
    std::size_t good = 0, total = 0;
    for (const JordanMatrix& x : xs)
      for (std::size_t i = 3; i < JordanMatrix::kDimension; ++i) {
        const JordanMatrix a = JordanMatrix::basis(i);
        const std::size_t k = i < 11 ? 1 : i < 19 ? 2 : 3;
        good += root_space_check(x, a, k);
        ++total;
      }
    const bool zero = root_space_check(JordanMatrix{}, JordanMatrix::basis(3), 1);
    checks.push_back(Check::make("jordan.root-space", "[x,[x,a]] = gamma_k(x)^2 a for the 24 basis vectors and 3 test x",
                                 good == total && zero, count_text(good, total), anchor_root));
    // Falsified fixture: the r-slot vector tested against gamma_2 instead of gamma_1.
    const JordanMatrix x = xs[1], a = JordanMatrix::basis(3);
    const OctMatrix X = x.to_matrix(), A = a.to_matrix();
    const Rational g2 = gamma(2, x);
    checks.push_back(Check::make("jordan.control.wrong-root", "an r-slot vector fails the gamma_2 eigenvalue",
                                 !(commutator(X, commutator(X, A)) == (g2 * g2) * A), "", anchor_root));
  }
  {
    const JordanMatrix diag = JordanMatrix::diagonal(2, -1, -1);
    const RootDecomposition dd = decompose(diag);
    bool ok = dd.d0 == diag && dd.h1 == JordanMatrix{} && dd.h2 == JordanMatrix{} && dd.h3 == JordanMatrix{};
    JordanMatrix r_only;
    r_only.r = Octonion::unit(4);
    const RootDecomposition dr = decompose(r_only);
    ok = ok && dr.h1 == r_only && dr.d0 == JordanMatrix{} && dr.h2 == JordanMatrix{} && dr.h3 == JordanMatrix{};
    for (int i = 0; i < 10; ++i) {
      const JordanMatrix a = random_traceless(rng);
      const RootDecomposition d = decompose(a);
      ok = ok && d.d0 + d.h1 + d.h2 + d.h3 == a;
    }
    checks.push_back(Check::make("jordan.decompose", "h3^0(O) = d0 + h_gamma1 + h_gamma2 + h_gamma3", ok, "", anchor_root));
  }
  {
    const RingPtr ring = Ring::make({"x1", "x2", "x3"});
    const Polynomial det = diagonal_determinant_polynomial(ring);
    const bool symbolic = det == parse_polynomial("x1*x2*x3", ring);
    const bool ok = jordan_determinant(I) == 1 && jordan_determinant(d1) == 0 && symbolic;
    checks.push_back(Check::make("jordan.determinant", "det I = 1, det d1 = 0, det Diag(x1,x2,x3) = x1 x2 x3", ok,
                                 det.to_string(), anchor_det));
  }
  {
    bool ok = true;
    for (int i = 0; i < 5; ++i) {
      const JordanMatrix x = random_traceless(rng);
      const auto r = bracket_identities_check(x, x);
      ok = ok && r.first && r.second;
    }
    checks.push_back(Check::make("jordan.bracket.x-equals-a", "both identities hold for x = a", ok, "5 random x",
                                 anchor_br));
  }
  {
    // x in d0 and a arbitrary traceless
    std::size_t good = 0;
    const int count = 10;
    for (int i = 0; i < count; ++i) {
      JordanMatrix x = random_traceless(rng);
      x.p = x.q = x.r = Octonion();
      const auto r = bracket_identities_check(x, random_traceless(rng));
      good += r.first && r.second;
    }
    checks.push_back(Check::make("jordan.bracket.diagonal-x", "identities (i) and (ii) for x in d0 and random a",
                                 good == count, count_text(good, count), anchor_br));
  }
  {
    // For x in d0 and a in h_gamma_k, [x^,[x^,a^]] = gamma_k(x)^2/4 a^.
    const JordanMatrix x = JordanMatrix::diagonal(3, 1, -4);
    bool ok = true;
    for (std::size_t i : {std::size_t{3}, std::size_t{12}, std::size_t{26}}) {
      const JordanMatrix a = JordanMatrix::basis(i);
      const std::size_t k = i < 11 ? 1 : i < 19 ? 2 : 3;
      const LinearOperator27 xh = LinearOperator27::hat(x), ah = LinearOperator27::hat(a);
      const Rational g = gamma(k, x);
      ok = ok && bracket(xh, bracket(xh, ah)) == (g * g / 4) * ah;
    }
    checks.push_back(Check::make("jordan.bracket.eigenvalue", "[x^,[x^,a^]] = gamma_k(x)^2/4 a^ for x in d0, a in h_gamma_k",
                                 ok, "", anchor_br));
  }
  {
    std::size_t first = 0, second = 0;
    const int count = 50;
    for (int i = 0; i < count; ++i) {
      const JordanMatrix x = random_traceless(rng), a = random_traceless(rng);
      const auto r = bracket_identities_check(x, a);
      first += r.first;
      second += r.second;
    }
    checks.push_back(Check::make("jordan.bracket.generic", "identities (i) and (ii) on 50 seeded traceless pairs",
                                 first == count && second == count,
                                 "(i) " + count_text(first, count) + ", (ii) " + count_text(second, count), anchor_br));
  }
  {
    // With x, a, y all in h3(H) the entries associate and both identities must hold.
    // Quaternionic x^ and tilde preserve h3(H), so comparing those columns is exact.
    auto quaternionic = [&] {
      JordanMatrix a = random_traceless(rng);
      for (Octonion* o : {&a.p, &a.q, &a.r})
        for (std::size_t c = 4; c < 8; ++c) (*o)[c] = 0;
      return a;
    };
    std::vector<std::size_t> columns{0, 1, 2};
    for (std::size_t slot : {3, 11, 19})
      for (std::size_t c = 0; c < 4; ++c) columns.push_back(slot + c);
    auto agree = [&](const LinearOperator27& u, const LinearOperator27& v) {
      for (std::size_t j : columns)
        for (std::size_t i = 0; i < LinearOperator27::N; ++i)
          if (u(i, j) != v(i, j)) return false;
      return true;
    };
    std::size_t good = 0;
    const int count = 10;
    for (int i = 0; i < count; ++i) {
      const JordanMatrix x = quaternionic(), a = quaternionic();
      const OctMatrix X = x.to_matrix(), xa = commutator(X, a.to_matrix());
      const LinearOperator27 xh = LinearOperator27::hat(x), inner = bracket(xh, LinearOperator27::hat(a));
      good += agree(inner, Rational(1, 4) * LinearOperator27::tilde(xa)) &&
              agree(bracket(xh, inner), Rational(1, 4) * LinearOperator27::hat(JordanMatrix::from_matrix(commutator(X, xa))));
    }
    checks.push_back(Check::make("jordan.bracket.quaternionic", "identities (i) and (ii) restricted to h3(H)",
                                 good == count, count_text(good, count), anchor_br));
  }
  return checks;
}

// ---------------------------------------------------------------------------

std::vector<Check> roots_checks() {
  const char* anchor_w = "Weyl groups of Spin(8) and F4 on t*";
  const char* anchor_s = "W_F4 as the semidirect product of Sigma_3 and W_Spin(8)";
  const char* anchor_p = "partition of the positive F4 roots outside Spin(8) into three cosets";
  const char* anchor_i = "inversion sets of Sigma_3 and the Schubert cell dimensions";
  std::vector<Check> checks;

  {
    const bool ok = reflect(Weight::L(1), Weight::L(1) - Weight::L(2)) == Weight::L(2) &&
                    reflect(Weight::rho(4), Weight::L(4)) == Weight::rho(3) &&
                    reflect(reflect(Weight::rho(2), Weight::omega(5)), Weight::omega(5)) == Weight::rho(2) &&
                    throws_precondition([] { reflect(Weight::L(1), Weight{}); });
    checks.push_back(Check::make("roots.reflect", "s_{L1-L2} L1 = L2, s_{L4} rho4 = rho3, reflections are involutions", ok,
                                 "", anchor_w));
  }
  {
    const std::vector<WeylElement> single{WeylElement::reflection(Weight::L(1))};
    const bool ok = weyl_spin8().size() == 192 && weyl_f4().size() == 1152 && generate_group(single).size() == 2;
    checks.push_back(Check::make("roots.group-orders", "|W_Spin(8)| = 192, |W_F4| = 1152, a reflection has order 2", ok,
                                 std::to_string(weyl_spin8().size()) + ", " + std::to_string(weyl_f4().size()), anchor_w));
  }
  {
    const WeylElement flips = WeylElement::reflection(Weight::L(3)) * WeylElement::reflection(Weight::L(4)) *
                              WeylElement::reflection(Weight::L(1) - Weight::L(2));
    const bool ok = is_spin8_element(WeylElement()) && !is_spin8_element(WeylElement::reflection(sigma_root_omega4())) &&
                    is_spin8_element(flips) &&
                    std::all_of(weyl_spin8().begin(), weyl_spin8().end(), [](const WeylElement& w) { return is_spin8_element(w); });
    checks.push_back(Check::make("roots.spin8-elements", "W_Spin(8) is the signed permutations with an even number of signs",
                                 ok, "", anchor_w));
  }
  {
    const RootSystem f4 = f4_root_system(), d4 = d4_root_system();
    bool integral = true;
    for (const Weight& r : f4.positive_roots())
      for (const Rational& k : f4.simple_coordinates(r)) integral = integral && is_integer(k) && k >= 0;
    std::vector<Weight> long_roots;
    for (const Weight& r : f4.roots)
      if (r.dot(r) == 2) long_roots.push_back(r);
    std::vector<Weight> d4_roots = d4.roots;
    std::sort(long_roots.begin(), long_roots.end());
    std::sort(d4_roots.begin(), d4_roots.end());
    const bool ok = integral && f4.roots.size() == 48 && f4.positive_roots().size() == 24 && long_roots == d4_roots;
    checks.push_back(Check::make("roots.f4-system", "48 F4 roots, integral simple coordinates, long roots = Spin(8) roots",
                                 ok, std::to_string(long_roots.size()) + " long roots", anchor_w));
  }
  {
    bool ok = true;
    for (std::size_t j = 1; j <= 5; ++j) ok = ok && Weight::omega(j).in_lattice();
    ok = ok && Rational(2) * Weight::omega(5) ==
                   Weight::omega(1) + Weight::omega(2) + Weight::omega(3) + Weight::omega(4);
    for (std::size_t j = 1; j <= 4; ++j) ok = ok && Weight::rho(j).in_lattice();
    ok = ok && !Weight::from_doubled({1, 0, 0, 0}).in_lattice();
    // rho coordinates of the standard generators are integral, so rho1..rho4 generate the lattice
    for (std::size_t i = 1; i <= 4; ++i)
      for (const Rational& c : Weight::L(i).rho_coordinates()) ok = ok && is_integer(c);
    for (const Rational& c : Weight::omega(5).rho_coordinates()) ok = ok && is_integer(c);
    checks.push_back(Check::make("roots.lattice", "rho1..rho4 generate the lattice and 2 omega5 = omega1+...+omega4", ok,
                                 "", anchor_w));
  }
  {
    const SemidirectReport r = semidirect_check();
    checks.push_back(Check::make("roots.semidirect", "normality, |Sigma_3| = 6, trivial intersection, orders, braid relation",
                                 r.all(),
                                 std::string("normal ") + (r.normal ? "yes" : "no") + ", order " +
                                     std::to_string(r.sigma_order) + ", braid " + (r.braid ? "yes" : "no"),
                                 anchor_s));
  }
  {
    const auto classes = coset_partition_of_f4_positives();
    std::vector<Weight> a{Weight::L(1), Weight::L(2), Weight::L(3), Weight::L(4)};
    std::vector<Weight> b, c;
    for (long s1 : {1L, -1L})
      for (long s2 : {1L, -1L})
        for (long s3 : {1L, -1L}) {
          const Weight w = Weight::from_doubled({1, s1, s2, s3});
          ((s1 < 0) + (s2 < 0) + (s3 < 0)) % 2 == 0 ? c.push_back(w) : b.push_back(w);
        }
    auto sorted = [](std::vector<Weight> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    const bool ok = sorted(classes[0]) == sorted(a) && sorted(classes[1]) == sorted(b) && sorted(classes[2]) == sorted(c);
    std::ostringstream details;
    details << "sizes " << classes[0].size() << "+" << classes[1].size() << "+" << classes[2].size();
    checks.push_back(Check::make("roots.coset-partition",
                                 "classes of s_omega4, s_omega5-omega4, s_omega5: L^i, odd and even half-roots", ok,
                                 details.str(), anchor_p));
  }
  {
    const std::array<std::pair<const char*, std::vector<int>>, 6> table{{
        {"1", {}}, {"s1", {1}}, {"s2", {2}}, {"s2s1", {2, 3}}, {"s1s2", {1, 3}}, {"s1s2s1", {1, 2, 3}},
    }};
    bool ok = true;
    std::ostringstream details;
    for (const auto& [name, expected] : table) {
      const auto got = inversion_set(Sigma3Element::from_name(name));
      ok = ok && got == expected;
      details << name << ":" << got.size() << " ";
    }
    checks.push_back(Check::make("roots.inversion-table", "inversion sets of all six elements match the table", ok,
                                 details.str(), anchor_i));
    // Falsified fixture: s1s2 with gamma_2 in place of gamma_3.
    const bool control = inversion_set(Sigma3Element::from_name("s1s2")) != std::vector<int>{1, 2};
    checks.push_back(Check::make("roots.control.inversion-table", "a perturbed table row is rejected", control, "",
                                 anchor_i));
  }
  {
    std::array<int, 4> coeffs{};
    for (const auto& s : Sigma3Element::all()) ++coeffs[inversion_set(s).size()];
    const bool ok = coeffs == std::array<int, 4>{1, 2, 2, 1};
    checks.push_back(Check::make("roots.cell-polynomial", "sum over sigma of t^(8 |inv(sigma)|) = 1 + 2t^8 + 2t^16 + t^24",
                                 ok,
                                 std::to_string(coeffs[0]) + " + " + std::to_string(coeffs[1]) + "t^8 + " +
                                     std::to_string(coeffs[2]) + "t^16 + " + std::to_string(coeffs[3]) + "t^24",
                                 anchor_i));
  }
  {
    const bool ok = act_on_a2_root(Sigma3Element::s1(), 2) == 3 && act_on_a2_root(Sigma3Element::s2(), 1) == 3 &&
                    act_on_a2_root(Sigma3Element::s1(), 1) == -1 && act_on_a2_root(Sigma3Element::s2(), 2) == -2;
    checks.push_back(Check::make("roots.a2-action", "s1(gamma2) = s2(gamma1) = gamma3 and s_k(gamma_k) = -gamma_k", ok, "",
                                 anchor_i));
  }
  return checks;
}

// ---------------------------------------------------------------------------

RestrictionTable corrupted_table() {
  RestrictionTable t = RestrictionTable::published();
  t.set(Sigma3Element::s1(), 1, -t.raw(Sigma3Element::s1(), 1));
  return t;
}

RestrictionTable parse_table_fixture(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("table fixture is not valid JSON: ") + e.what(), e.byte);
  }
  RestrictionTable table = RestrictionTable::published();
  for (int k = 1; k <= 3; ++k) {
    const std::string key = "E" + std::to_string(k);
    if (!doc.contains(key) || !doc[key].is_array() || doc[key].size() != 6)
      throw PreconditionError("table fixture needs " + key + " as a list of 6 expressions");
    for (std::size_t i = 0; i < 6; ++i) {
      if (!doc[key][i].is_string()) throw PreconditionError("table fixture entries must be strings");
      table.set(Sigma3Element::all()[i], k, parse_polynomial(doc[key][i].get<std::string>(), b3_ring()));
    }
  }
  return table;
}

std::vector<Check> cohomology_checks(std::uint64_t seed, const RestrictionTable& table) {
  Rng rng(seed);
  std::vector<Check> checks = verify_presentation();
  for (auto&& group : {verify_bgg(), verify_frac_identity(), verify_restriction_table(table),
                       verify_equivariant_relations(table)})
    checks.insert(checks.end(), group.begin(), group.end());
  {
    std::size_t good = 0;
    const int count = 100;
    for (int i = 0; i < count; ++i) {
      const int k = 1 + i % 2;
      const Polynomial f = rng.polynomial(lambda_ring(), 5, 5, 6);
      good += divided_difference(k, divided_difference(k, f)).is_zero();
    }
    checks.push_back(Check::make("bgg.delta-squared", "Delta_gamma^2 = 0 on random polynomials", good == count,
                                 count_text(good, count), "divided difference operators on Q[l1,l2]"));
  }
  {
    const auto corrupted = verify_equivariant_relations(corrupted_table());
    const std::size_t failures =
        std::count_if(corrupted.begin(), corrupted.end(), [](const Check& c) { return !c.passed(); });
    checks.push_back(Check::make("equivariant.control.corrupted-table",
                                 "the table with the (s1, E1) entry negated fails the relation checks", failures > 0,
                                 std::to_string(failures) + " failing checks", "restriction table of e_M(E_k)"));
  }
  return checks;
}

std::vector<Check> gkm_checks(std::uint64_t seed, const RestrictionTable& table, int degree_cutoff) {
  Rng rng(seed);
  std::vector<Check> checks = verify_gkm(rng, table, degree_cutoff);
  const MembershipResult r = check_membership(GkmGraph::abstract(), table_class(corrupted_table(), 1));
  checks.push_back(Check::make("gkm.control.corrupted-table", "the corrupted class of e_M(E1) is not a member", !r.member,
                               "", "GKM description of the M-equivariant cohomology on the Sigma_3 graph"));
  return checks;
}

std::vector<Check> ktheory_checks(std::uint64_t seed) {
  Rng rng(seed);
  return verify_ktheory(rng);
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (!is_suite_name(name)) throw PreconditionError("unknown suite '" + name + "'");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = name;
  report.seed = options.seed;
  const RestrictionTable table = options.table ? *options.table : RestrictionTable::published();
  const bool all = name == "all";
  auto add = [&](std::vector<Check> checks) {
    for (auto& c : checks) report.checks.push_back(std::move(c));
  };
  if (all || name == "octonion") add(octonion_checks(options.seed));
  if (all || name == "jordan") add(jordan_checks(options.seed));
  if (all || name == "roots") add(roots_checks());
  if (all || name == "cohomology") add(cohomology_checks(options.seed, table));
  if (all || name == "gkm") add(gkm_checks(options.seed, table, options.degree_cutoff));
  if (all || name == "ktheory") add(ktheory_checks(options.seed));
  report.finalize();
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace flagoct
