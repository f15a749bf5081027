#include "flagoct/ktheory.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "flagoct/errors.hpp"
#include "flagoct/expression.hpp"

namespace flagoct {

RingPtr x_ring() {
  static const RingPtr ring = Ring::make({"X1", "X2", "X3", "X4"});
  return ring;
}

bool has_integer_coefficients(const Polynomial& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return is_integer(t.second); });
}

namespace {

const Character& x_power(std::size_t i, unsigned e) {
  static std::map<std::pair<std::size_t, unsigned>, Character> cache;
  const auto key = std::make_pair(i, e);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Character value = e == 0 ? Character::constant(1) : x_power(i, e - 1) * x_character(static_cast<int>(i + 1));
  return cache.emplace(key, std::move(value)).first->second;
}

}  // namespace

Character expand_rep(const Polynomial& p) {
  require_same_ring(p.ring(), x_ring());
  if (!has_integer_coefficients(p)) throw PreconditionError("representation ring elements have integer coefficients");
  Character out;
  for (const auto& [m, c] : p.terms()) {
    Character term = Character::constant(c.get_num());
    for (std::size_t i = 0; i < 4; ++i)
      if (m.exponent(i) > 0) term = term * x_power(i, m.exponent(i));
    out += term;
  }
  return out;
}

std::optional<Polynomial> to_x_polynomial(const Character& f) {
  if (!is_spin8_invariant(f)) return std::nullopt;
  Polynomial result(x_ring());
  Character rest = f;
  for (int guard = 0; !rest.is_zero(); ++guard) {
    if (guard > 100000) throw ResourceError("dominant-term subtraction did not terminate");
    // For a = (a1,a2,a3,a4) the height in the simple roots L1-L2, L2-L3, L3-L4, L3+L4 is 3a1+2a2+a3.
    auto top = rest.terms().begin();
    long best = 0;
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it) {
      const auto& d = it->first;
      const long h = 3 * d[0] + 2 * d[1] + d[2];
      if (it == rest.terms().begin() || h > best) best = h, top = it;
    }
    const auto r = undoubled(top->first).rho_coordinates();
    const std::array<Rational, 4> exps{r[3], r[2], r[0], r[1]};
    Monomial m;
    for (std::size_t i = 0; i < 4; ++i) {
      if (!is_integer(exps[i]) || exps[i] < 0)
        throw std::logic_error("leading weight " + undoubled(top->first).to_string() + " is not dominant integral");
      m.set_exponent(i, static_cast<unsigned>(exps[i].get_num().get_ui()));
    }
    const Integer c = top->second;
    const Polynomial term = Polynomial::term(x_ring(), m, Rational(c));
    result += term;
    rest -= expand_rep(term);
  }
  return result;
}

const Character& k_edge_divisor(std::size_t transposition) {
  static const std::array<Character, 3> divisors{
      parse_character("(y1-1)*(y2-1)*(y3-1)*(y4-1)"),
      parse_character("(y5*y4^-1-1)*(y5*y3^-1-1)*(y5*y2^-1-1)*(y5*y1^-1-1)"),
      parse_character("(y5-1)*(y5*y1^-1*y4^-1-1)*(y5*y2^-1*y4^-1-1)*(y5*y1^-1*y2^-1-1)"),
  };
  return divisors.at(transposition);
}

Polynomial x_edge_divisor(std::size_t transposition) {
  static const char* texts[] = {"X1-X2", "X1-X3", "X2-X3"};
  return parse_polynomial(texts[transposition], x_ring());
}

MembershipResult check_k_membership_rt(const KTuple& tuple) {
  for (const GkmEdge& e : GkmGraph::edges()) {
    if (!divides_char(k_edge_divisor(e.transposition), tuple[e.from] - tuple[e.to])) return {false, e};
  }
  return {};
}

MembershipResult check_k_membership_x(const XTuple& tuple) {
  for (const auto& f : tuple) require_same_ring(f.ring(), x_ring());
  for (const GkmEdge& e : GkmGraph::edges()) {
    const Polynomial diff = tuple[e.from] - tuple[e.to];
    if (diff.is_zero()) continue;
    const auto q = exact_divide(diff, x_edge_divisor(e.transposition));
    if (!q || !has_integer_coefficients(*q)) return {false, e};
  }
  return {};
}

KTuple expand_tuple(const XTuple& tuple) {
  KTuple out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = expand_rep(tuple[i]);
  return out;
}

XTuple tautological_x_tuple() {
  const RingPtr r = x_ring();
  XTuple out{Polynomial(r), Polynomial(r), Polynomial(r), Polynomial(r), Polynomial(r), Polynomial(r)};
  for (const auto& s : Sigma3Element::all()) out[s.index()] = Polynomial::variable(r, static_cast<std::size_t>(s(1) - 1));
  return out;
}

std::vector<Factorization> factorizations() {
  return {
      {"X1-X2-factorization", x_character(1) - x_character(2),
       parse_character("y1^-1*y2^-1*y3^-1*y4^-1*y5*(y1-1)*(y2-1)*(y3-1)*(y4-1)")},
      {"X1-X3-factorization", x_character(1) - x_character(3),
       parse_character("y5^-1*(y5*y4^-1-1)*(y5*y3^-1-1)*(y5*y2^-1-1)*(y5*y1^-1-1)")},
      {"X3-X2-factorization", x_character(3) - x_character(2),
       parse_character("y3^-1*(y5-1)*(y5*y1^-1*y4^-1-1)*(y5*y2^-1*y4^-1-1)*(y5*y1^-1*y2^-1-1)")},
  };
}

std::optional<std::array<int, 3>> x_permutation(const WeylElement& w) {
  std::array<int, 3> images{};
  for (int i = 1; i <= 3; ++i) {
    const Character image = weyl_act(w, x_character(i));
    int found = 0;
    for (int j = 1; j <= 3; ++j)
      if (image == x_character(j)) found = j;
    if (found == 0) return std::nullopt;
    images[static_cast<std::size_t>(i - 1)] = found;
  }
  return images;
}

// ---------------------------------------------------------------------------

namespace {

std::string permutation_text(const std::optional<std::array<int, 3>>& p) {
  if (!p) return "none";
  std::vector<int> moved;
  for (int i = 1; i <= 3; ++i)
    if ((*p)[static_cast<std::size_t>(i - 1)] != i) moved.push_back(i);
  if (moved.empty()) return "id";
  if (moved.size() == 2) return "(" + std::to_string(moved[0]) + "," + std::to_string(moved[1]) + ")";
  return "[" + std::to_string((*p)[0]) + std::to_string((*p)[1]) + std::to_string((*p)[2]) + "]";
}

std::array<int, 3> transposition_images(std::size_t t) {
  const Sigma3Element& s = transpositions()[t];
  return {s(1), s(2), s(3)};
}

std::set<DoubledWeight> support(const Character& c) {
  std::set<DoubledWeight> out;
  for (const auto& [w, k] : c.terms()) out.insert(w);
  return out;
}

bool all_multiplicity_one(const Character& c) {
  return std::all_of(c.terms().begin(), c.terms().end(), [](const auto& t) { return t.second == 1; });
}

Polynomial random_x_polynomial(Rng& rng, unsigned max_degree, std::size_t terms) {
  Polynomial p = rng.polynomial(x_ring(), max_degree, terms, 3);
  return p;
}

XTuple permuted_tuple(const Polynomial& p) {
  const RingPtr r = x_ring();
  XTuple out{Polynomial(r), Polynomial(r), Polynomial(r), Polynomial(r), Polynomial(r), Polynomial(r)};
  for (const auto& s : Sigma3Element::all()) {
    const std::vector<Polynomial> images{Polynomial::variable(r, static_cast<std::size_t>(s(1) - 1)),
                                         Polynomial::variable(r, static_cast<std::size_t>(s(2) - 1)),
                                         Polynomial::variable(r, static_cast<std::size_t>(s(3) - 1)),
                                         Polynomial::variable(r, std::size_t{3})};
    out[s.index()] = p.substitute(r, images);
  }
  return out;
}

std::string edge_name(const GkmEdge& e) {
  return "{" + Sigma3Element::all()[e.from].name() + ", " + Sigma3Element::all()[e.to].name() + "} via " +
         transposition_name(e.transposition);
}

}  // namespace

std::vector<Check> verify_ktheory(Rng& rng) {
  const char* anchor_x = "restriction R[Spin(8)] -> R[T] of X1..X4 and their weights";
  const char* anchor_f = "factorizations of X1-X2, X1-X3, X3-X2 in R[T]";
  const char* anchor_div = "divisibility in R[T] versus divisibility by X_i - X_j";
  const char* anchor_gkm = "GKM description of K_Spin(8)(F4/Spin(8))";
  const char* anchor_remark = "outer automorphisms s_omega4, s_omega5-omega4, s_omega5 permuting X1, X2, X3";
  std::vector<Check> checks;

  {
    std::set<DoubledWeight> even, odd, vector_w, roots;
    for (long s0 : {1L, -1L})
      for (long s1 : {1L, -1L})
        for (long s2 : {1L, -1L})
          for (long s3 : {1L, -1L}) (((s0 < 0) + (s1 < 0) + (s2 < 0) + (s3 < 0)) % 2 ? odd : even).insert({s0, s1, s2, s3});
    for (std::size_t i = 0; i < 4; ++i) {
      DoubledWeight w{};
      w[i] = 2;
      vector_w.insert(w);
      w[i] = -2;
      vector_w.insert(w);
    }
    for (const auto& r : d4_root_system().roots) roots.insert(doubled(r));
    const bool ok = support(x_character(1)) == even && support(x_character(2)) == odd &&
                    support(x_character(3)) == vector_w && support(x_character(4)) == roots &&
                    all_multiplicity_one(x_character(1)) && all_multiplicity_one(x_character(2)) &&
                    all_multiplicity_one(x_character(3)) && all_multiplicity_one(x_character(4));
    std::ostringstream details;
    for (int i = 1; i <= 4; ++i) details << "X" << i << ":" << x_character(i).size() << " terms ";
    checks.push_back(Check::make("ktheory.x.weights",
                                 "X1, X2 are the even/odd half-spin weights, X3 is +-L^i, X4 is the 24 roots, multiplicity 1",
                                 ok, details.str(), anchor_x));
  }
  {
    std::ostringstream details;
    bool ok = true;
    const long expected[] = {8, 8, 8, 24};
    for (int i = 1; i <= 4; ++i) {
      ok = ok && x_character(i).dimension() == expected[i - 1];
      details << "dim X" << i << " = " << x_character(i).dimension().get_str() << " ";
    }
    checks.push_back(Check::make("ktheory.x.dimensions", "dimensions 8, 8, 8 and 24 for the X4 display", ok,
                                 details.str(), anchor_x));
  }
  {
    const Character adj = adjoint_character();
    const bool ok = adj.dimension() == 28 && adj.coefficient(DoubledWeight{}) == 4 && x_character(4).coefficient(DoubledWeight{}) == 0;
    checks.push_back(Check::make("ktheory.x4.adjoint-vs-display",
                                 "the X4 display omits the 4-dimensional zero weight space of the adjoint representation",
                                 ok, "display dim 24, adjoint = display + 4 has dim 28", anchor_x));
  }
  {
    bool ok = true;
    for (const WeylElement& w : weyl_spin8())
      for (int i = 1; i <= 4; ++i) ok = ok && weyl_act(w, x_character(i)) == x_character(i);
    checks.push_back(Check::make("ktheory.x.invariance", "X1..X4 are fixed by all 192 elements of W_Spin(8)", ok,
                                 std::to_string(weyl_spin8().size()) + " elements", anchor_x));
  }
  {
    bool ok = true;
    for (int i = 0; i < 20; ++i) {
      const WeylElement& w = weyl_f4()[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(weyl_f4().size()) - 1))];
      const Character f = expand_rep(random_x_polynomial(rng, 1, 2)) + parse_character("y1*y5^-1 - 2*y3");
      const Character g = expand_rep(random_x_polynomial(rng, 1, 2)) + parse_character("y2^2 + y5");
      ok = ok && weyl_act(w, f * g) == weyl_act(w, f) * weyl_act(w, g) && weyl_act(w, f + g) == weyl_act(w, f) + weyl_act(w, g);
    }
    checks.push_back(Check::make("ktheory.weyl.automorphism", "w(fg) = w(f)w(g) and w(f+g) = w(f)+w(g) for W_F4 elements",
                                 ok, "20 random pairs", anchor_x));
  }

  for (const Factorization& f : factorizations())
    checks.push_back(Check::make(f.id, "the displayed product expands to " + f.id.substr(0, 5), f.lhs == f.rhs,
                                 f.lhs == f.rhs ? "" : "lhs " + f.lhs.to_string() + " rhs " + f.rhs.to_string(), anchor_f));
  {
    // Dropping the y5 factor from the first factorization must break it.
    const Character perturbed = parse_character("y1^-1*y2^-1*y3^-1*y4^-1*(y1-1)*(y2-1)*(y3-1)*(y4-1)");
    checks.push_back(Check::make("ktheory.factorization-control", "a perturbed factorization of X1-X2 is rejected",
                                 perturbed != x_character(1) - x_character(2), "", anchor_f));
  }

  {
    const bool a = divides_char(parse_character("y1-1"), parse_character("y1^2-1"));
    const bool b = !divides_char(parse_character("y1-1"), parse_character("y2-1"));
    const bool c = divides_char(k_edge_divisor(0), x_character(1) - x_character(2));
    checks.push_back(Check::make("ktheory.divides.examples",
                                 "y1-1 | y1^2-1, y1-1 does not divide y2-1, prod(y_i-1) | X1-X2", a && b && c, "",
                                 anchor_div));
  }
  {
    std::size_t agree = 0, divisible = 0;
    const int trials = 60;
    for (int i = 0; i < trials; ++i) {
      DoubledWeight lam;
      const bool half = rng.coin();
      for (auto& x : lam) x = 2 * rng.uniform(-1, 1) + (half ? 1 : 0);
      if (lam == DoubledWeight{}) lam[0] = 2;
      const Character binomial = Character::monomial(lam) - Character::constant(1);
      Character f;
      for (int t = 0; t < 3; ++t) {
        DoubledWeight w;
        const bool h = rng.coin();
        for (auto& x : w) x = 2 * rng.uniform(-1, 1) + (h ? 1 : 0);
        f.add_term(w, rng.uniform(-3, 3));
      }
      if (i % 2 == 0) f = f * binomial;
      const bool by_projection = binomial_divides_by_projection(undoubled(lam), f);
      const bool by_division = divides_char(binomial, f);
      agree += by_projection == by_division;
      divisible += by_division;
    }
    checks.push_back(Check::make("ktheory.divides.projection-agrees",
                                 "lattice-quotient projection and exact division agree for binomials e^lambda - 1",
                                 agree == static_cast<std::size_t>(trials),
                                 std::to_string(agree) + "/" + std::to_string(trials) + " agree, " +
                                     std::to_string(divisible) + " divisible",
                                 anchor_div));
  }
  {
    bool ok = true;
    for (int i = 0; i < 10; ++i) {
      const Character f = expand_rep((x_edge_divisor(0) * random_x_polynomial(rng, 1, 2)));
      if (!divides_char(k_edge_divisor(0), f)) ok = false;
      for (std::size_t j = 1; j <= 4; ++j) ok = ok && divides_char(Character::y(j) - Character::constant(1), f);
    }
    checks.push_back(Check::make("ktheory.divides.product-implies-factor",
                                 "divisibility by prod(y_i-1) implies divisibility by each y_i-1", ok, "10 random multiples",
                                 anchor_div));
  }

  {
    const std::array<WeylElement, 3> refl{WeylElement::reflection(sigma_root_omega4()),
                                          WeylElement::reflection(sigma_root_omega54()),
                                          WeylElement::reflection(sigma_root_omega5())};
    const std::array<std::size_t, 3> claimed{0, 2, 1};  // (1,2), (2,3), (1,3)
    const char* names[] = {"s_omega4", "s_omega5-omega4", "s_omega5"};
    bool ok = true;
    std::ostringstream details;
    for (std::size_t k = 0; k < 3; ++k) {
      const auto p = x_permutation(refl[k]);
      ok = ok && p && *p == transposition_images(claimed[k]);
      details << names[k] << " acts as " << permutation_text(p) << " (claimed " << transposition_name(claimed[k])
              << "); ";
    }
    checks.push_back(Check::make("ktheory.x-permutation.claimed",
                                 "s_omega4, s_omega5-omega4, s_omega5 permute X1,X2,X3 as (1,2), (2,3), (1,3)", ok,
                                 details.str(), anchor_remark));

    // The reflection whose coset contains the weights of the (i,j) edge divisor should act as (i,j).
    const auto classes = coset_partition_of_f4_positives();
    bool consistent = true;
    std::ostringstream d2;
    for (std::size_t t = 0; t < 3; ++t) {
      std::optional<std::size_t> cls;
      static const std::array<std::vector<std::string>, 3> factor_weights{{
          {"y1", "y2", "y3", "y4"},
          {"y5*y4^-1", "y5*y3^-1", "y5*y2^-1", "y5*y1^-1"},
          {"y5", "y5*y1^-1*y4^-1", "y5*y2^-1*y4^-1", "y5*y1^-1*y2^-1"},
      }};
      std::set<std::size_t> seen;
      for (const auto& text : factor_weights[t]) {
        const Weight lambda = undoubled(parse_character(text).terms().begin()->first);
        for (std::size_t k = 0; k < 3; ++k)
          for (const Weight& r : classes[k])
            if (r == lambda || r == -lambda) seen.insert(k);
      }
      if (seen.size() == 1) cls = *seen.begin();
      const auto p = cls ? x_permutation(refl[*cls]) : std::nullopt;
      const bool match = p && *p == transposition_images(t);
      consistent = consistent && match;
      d2 << transposition_name(t) << " divisor weights in coset of " << (cls ? names[*cls] : "?") << " acting as "
         << permutation_text(p) << "; ";
    }
    checks.push_back(Check::make("ktheory.x-permutation.edge-divisors",
                                 "the reflection coset holding the (i,j) divisor weights acts on X1,X2,X3 as (i,j)",
                                 consistent, d2.str(), anchor_remark));
  }
  {
    // omega5, omega5-omega4, omega4 occur as weights; the Pi-dominant highest weights are rho4, rho3, rho1.
    const std::array<Weight, 3> claimed{Weight::omega(5), Weight::omega(5) - Weight::omega(4), Weight::omega(4)};
    const std::array<std::size_t, 3> dominant{4, 3, 1};
    bool ok = true;
    std::ostringstream details;
    for (std::size_t i = 0; i < 3; ++i) {
      const Character x = x_character(static_cast<int>(i + 1));
      const bool occurs = x.coefficient(doubled(claimed[i])) == 1;
      const bool top = to_x_polynomial(x) == Polynomial::variable(x_ring(), i) &&
                       x.coefficient(doubled(Weight::rho(dominant[i]))) == 1;
      ok = ok && occurs && top;
      details << "X" << i + 1 << ": " << claimed[i].to_string() << (occurs ? " occurs" : " missing")
              << ", dominant " << Weight::rho(dominant[i]).to_string()
              << (claimed[i] == Weight::rho(dominant[i]) ? " (same)" : " (differs)") << "; ";
    }
    checks.push_back(Check::make("ktheory.highest-weights", "claimed highest weights occur in X1, X2, X3 (dominance reported)",
                                 ok, details.str(), anchor_remark));
  }

  {
    bool ok = true;
    std::size_t count = 0;
    for (unsigned a = 0; a <= 4; ++a)
      for (unsigned b = 0; a + b <= 4; ++b)
        for (unsigned c = 0; a + b + c <= 4; ++c)
          for (unsigned d = 0; a + b + c + d <= 4; ++d) {
            const std::array<unsigned, 4> e{a, b, c, d};
            const Polynomial p = Polynomial::term(x_ring(), Monomial(e), Rational(1));
            ok = ok && to_x_polynomial(expand_rep(p)) == p;
            ++count;
          }
    checks.push_back(Check::make("ktheory.to-x.monomials", "to_x_polynomial inverts expansion on monomials of degree <= 4",
                                 ok, std::to_string(count) + " monomials", anchor_x));
  }
  {
    bool ok = true;
    for (int i = 0; i < 20; ++i) {
      const Polynomial p = random_x_polynomial(rng, 3, 4);
      ok = ok && to_x_polynomial(expand_rep(p)) == p;
    }
    const bool rejects = !to_x_polynomial(parse_character("y1 + y1^-1")).has_value();
    checks.push_back(Check::make("ktheory.to-x.random", "random X-polynomials round trip and y1 + y1^-1 is rejected",
                                 ok && rejects, "20 polynomials of degree <= 3", anchor_x));
  }

  {
    const RingPtr xr = x_ring();
    const Polynomial zero(xr);
    XTuple constant{zero, zero, zero, zero, zero, zero};
    for (auto& f : constant) f = Polynomial::constant(xr, Rational(3));
    const bool c_ok = check_k_membership_x(constant).member && check_k_membership_rt(expand_tuple(constant)).member;
    const XTuple taut = tautological_x_tuple();
    const bool t_ok = check_k_membership_x(taut).member && check_k_membership_rt(expand_tuple(taut)).member;
    checks.push_back(Check::make("ktheory.membership.examples",
                                 "constant tuples and f_sigma = X_sigma(1) are members in both descriptions", c_ok && t_ok,
                                 "", anchor_gkm));

    KTuple single;
    single[0] = Character::y(1);
    const MembershipResult r1 = check_k_membership_rt(single);
    XTuple x4{zero, zero, zero, zero, zero, zero};
    x4[0] = Polynomial::variable(xr, std::size_t{3});
    const MembershipResult r2 = check_k_membership_x(x4);
    checks.push_back(Check::make("ktheory.membership.controls", "f_1 = y1 and f_1 = X4 (0 elsewhere) are rejected",
                                 !r1.member && !r2.member,
                                 (r1.failing_edge ? "y1 fails at " + edge_name(*r1.failing_edge) : std::string("y1 accepted")) +
                                     "; " +
                                     (r2.failing_edge ? "X4 fails at " + edge_name(*r2.failing_edge) : std::string("X4 accepted")),
                                 anchor_gkm));
  }
  {
    std::size_t agree = 0, members = 0;
    for (int i = 0; i < 100; ++i) {
      XTuple t = permuted_tuple(random_x_polynomial(rng, 2, 3));
      if (rng.coin()) {
        const std::size_t v = static_cast<std::size_t>(rng.uniform(0, 5));
        t[v] += random_x_polynomial(rng, 1, 2);
      }
      const bool by_x = check_k_membership_x(t).member;
      const bool by_rt = check_k_membership_rt(expand_tuple(t)).member;
      agree += by_x == by_rt;
      members += by_x;
    }
    checks.push_back(Check::make("ktheory.membership.agreement",
                                 "R[T] and Z[X1..X4] membership agree on 100 invariant tuples", agree == 100,
                                 std::to_string(agree) + "/100 agree, " + std::to_string(members) + " members", anchor_gkm));
  }
  {
    std::size_t forward = 0, backward = 0, non_divisible = 0;
    const int count = 20;
    for (int i = 0; i < count; ++i) {
      const std::size_t t = static_cast<std::size_t>(rng.uniform(0, 2));
      const Polynomial h = random_x_polynomial(rng, 2, 3);
      if (divides_char(k_edge_divisor(t), expand_rep(x_edge_divisor(t) * h))) ++forward;
      const Polynomial g = random_x_polynomial(rng, 2, 3) + Polynomial::variable(x_ring(), std::size_t{2});
      const auto q = exact_divide(g, x_edge_divisor(t));
      if (!q) {
        ++non_divisible;
        if (!divides_char(k_edge_divisor(t), expand_rep(g))) ++backward;
      }
    }
    const bool zero_ok = divides_char(k_edge_divisor(0), Character());
    checks.push_back(Check::make("ktheory.equivalence-spotcheck",
                                 "(X_i - X_j) h is divisible by the y-product and non-multiples are not",
                                 forward == static_cast<std::size_t>(count) && backward == non_divisible && zero_ok,
                                 std::to_string(forward) + "/" + std::to_string(count) + " multiples, " +
                                     std::to_string(backward) + "/" + std::to_string(non_divisible) + " non-multiples rejected",
                                 anchor_div));
  }
  return checks;
}

}  // namespace flagoct
