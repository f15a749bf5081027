#include "flagoct/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "flagoct/errors.hpp"
#include "flagoct/linalg.hpp"

namespace flagoct {

Weight Weight::L(std::size_t i) {
  if (i < 1 || i > 4) throw PreconditionError("L index must be in 1..4");
  Weight w;
  w.c[i - 1] = 1;
  return w;
}

Weight Weight::rho(std::size_t j) {
  const Rational h(1, 2);
  switch (j) {
    case 1: return Weight{{1, 0, 0, 0}};
    case 2: return Weight{{1, 1, 0, 0}};
    case 3: return Weight{{h, h, h, -h}};
    case 4: return Weight{{h, h, h, h}};
    default: throw PreconditionError("rho index must be in 1..4");
  }
}

Weight Weight::omega(std::size_t j) {
  if (j == 5) return rho(4);
  return L(j);
}

Weight Weight::from_rho(const std::array<Rational, 4>& k) {
  Weight w;
  for (std::size_t j = 0; j < 4; ++j) w += k[j] * rho(j + 1);
  return w;
}

Weight Weight::from_doubled(const std::array<long, 4>& twice) {
  Weight w;
  for (std::size_t i = 0; i < 4; ++i) w.c[i] = Rational(twice[i], 2), w.c[i].canonicalize();
  return w;
}

std::array<Rational, 4> Weight::rho_coordinates() const {
  // L1 = r1, L2 = r2 - r1, L3 = r3 + r4 - r2, L4 = r4 - r3
  const auto& [a, b, c3, d] = c;
  return {a - b, b - c3, c3 - d, c3 + d};
}

bool Weight::in_lattice() const {
  const bool integral = std::all_of(c.begin(), c.end(), [](const Rational& x) { return is_integer(x); });
  const bool half = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.get_den() == 2; });
  return integral || half;
}

bool Weight::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; });
}

Rational Weight::dot(const Weight& o) const {
  Rational s = 0;
  for (std::size_t i = 0; i < 4; ++i) s += c[i] * o.c[i];
  return s;
}

Weight Weight::operator-() const {
  Weight w;
  for (std::size_t i = 0; i < 4; ++i) w.c[i] = -c[i];
  return w;
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < 4; ++i) c[i] += o.c[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < 4; ++i) c[i] -= o.c[i];
  return *this;
}

Weight operator*(const Rational& s, Weight a) {
  for (auto& x : a.c) x *= s;
  return a;
}

bool Weight::operator<(const Weight& o) const {
  return std::lexicographical_compare(c.begin(), c.end(), o.c.begin(), o.c.end());
}

std::string Weight::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < 4; ++i) out << (i ? "," : "") << c[i].get_str();
  out << ')';
  return out.str();
}

Weight reflect(const Weight& v, const Weight& root) {
  const Rational n = root.dot(root);
  if (n == 0) throw PreconditionError("cannot reflect in the zero vector");
  return v - (2 * v.dot(root) / n) * root;
}

// ---------------------------------------------------------------------------

WeylElement::WeylElement() {
  for (std::size_t i = 0; i < 4; ++i) m_[i][i] = 1;
}

WeylElement WeylElement::reflection(const Weight& root) {
  WeylElement w;
  for (std::size_t j = 0; j < 4; ++j) {
    const Weight image = reflect(Weight::L(j + 1), root);
    for (std::size_t i = 0; i < 4; ++i) w.m_[i][j] = image.c[i];
  }
  return w;
}

Weight WeylElement::apply(const Weight& v) const {
  Weight r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (m_[i][j] != 0) r.c[i] += m_[i][j] * v.c[j];
  return r;
}

WeylElement WeylElement::inverse_orthogonal() const {
  WeylElement t;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) t.m_[i][j] = m_[j][i];
  return t;
}

bool WeylElement::is_orthogonal() const { return inverse_orthogonal() * *this == WeylElement(); }

bool WeylElement::preserves_lattice() const {
  for (std::size_t j = 1; j <= 4; ++j)
    if (!apply(Weight::rho(j)).in_lattice()) return false;
  return true;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  WeylElement r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < 4; ++k) s += a.m_[i][k] * b.m_[k][j];
      r.m_[i][j] = s;
    }
  return r;
}

bool WeylElement::operator<(const WeylElement& o) const {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (m_[i][j] < o.m_[i][j]) return true;
      if (o.m_[i][j] < m_[i][j]) return false;
    }
  return false;
}

std::vector<WeylElement> generate_group(std::span<const WeylElement> generators, std::size_t bound) {
  for (const auto& g : generators)
    if (!g.preserves_lattice()) throw PreconditionError("generator does not preserve the weight lattice");
  std::set<WeylElement> seen{WeylElement()};
  std::vector<WeylElement> order{WeylElement()};
  std::deque<WeylElement> queue{WeylElement()};
  while (!queue.empty()) {
    const WeylElement w = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      WeylElement next = g * w;
      if (seen.insert(next).second) {
        if (seen.size() > bound) throw ResourceError("group enumeration exceeded bound");
        order.push_back(next);
        queue.push_back(std::move(next));
      }
    }
  }
  return order;
}

bool is_spin8_element(const WeylElement& w) {
  int minus = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    int nonzero = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      const Rational& x = w(i, j);
      if (x == 0) continue;
      if (x == 1) {
        ++nonzero;
      } else if (x == -1) {
        ++nonzero;
        ++minus;
      } else {
        return false;
      }
    }
    if (nonzero != 1) return false;
  }
  for (std::size_t j = 0; j < 4; ++j) {
    int nonzero = 0;
    for (std::size_t i = 0; i < 4; ++i) nonzero += w(i, j) != 0;
    if (nonzero != 1) return false;
  }
  return minus % 2 == 0;
}

// ---------------------------------------------------------------------------

std::array<Rational, 4> RootSystem::simple_coordinates(const Weight& v) const {
  if (simple.size() != 4) throw PreconditionError("simple system must have four roots");
  RationalMatrix a(4, std::vector<Rational>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) a[i][j] = simple[j].c[i];
  auto x = solve(a, std::vector<Rational>(v.c.begin(), v.c.end()));
  if (!x) throw PreconditionError("simple roots are not a basis");
  return {(*x)[0], (*x)[1], (*x)[2], (*x)[3]};
}

bool RootSystem::is_positive(const Weight& root) const {
  const auto k = simple_coordinates(root);
  return std::all_of(k.begin(), k.end(), [](const Rational& x) { return x >= 0; });
}

std::vector<Weight> RootSystem::positive_roots() const {
  std::vector<Weight> out;
  for (const auto& r : roots)
    if (is_positive(r)) out.push_back(r);
  return out;
}

std::vector<WeylElement> RootSystem::simple_reflections() const {
  std::vector<WeylElement> out;
  for (const auto& s : simple) out.push_back(WeylElement::reflection(s));
  return out;
}

namespace {

std::vector<Weight> long_roots() {
  std::vector<Weight> roots;
  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t j = i + 1; j <= 4; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) roots.push_back(Rational(si) * Weight::L(i) + Rational(sj) * Weight::L(j));
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

RootSystem d4_root_system() {
  RootSystem rs;
  rs.roots = long_roots();
  rs.simple = {Weight::L(1) - Weight::L(2), Weight::L(2) - Weight::L(3), Weight::L(3) - Weight::L(4),
               Weight::L(3) + Weight::L(4)};
  return rs;
}

RootSystem f4_root_system() {
  RootSystem rs;
  rs.roots = long_roots();
  for (std::size_t i = 1; i <= 4; ++i) {
    rs.roots.push_back(Weight::L(i));
    rs.roots.push_back(-Weight::L(i));
  }
  for (int mask = 0; mask < 16; ++mask) {
    std::array<long, 4> twice{};
    for (int i = 0; i < 4; ++i) twice[i] = (mask >> i) & 1 ? -1 : 1;
    rs.roots.push_back(Weight::from_doubled(twice));
  }
  std::sort(rs.roots.begin(), rs.roots.end());
  rs.simple = {Weight::from_doubled({1, -1, -1, -1}), Weight::L(2), Weight::L(3) - Weight::L(2),
               Weight::L(4) - Weight::L(3)};
  return rs;
}

const std::vector<WeylElement>& weyl_spin8() {
  static const std::vector<WeylElement> group = [] {
    const auto gens = d4_root_system().simple_reflections();
    return generate_group(gens);
  }();
  return group;
}

const std::vector<WeylElement>& weyl_f4() {
  static const std::vector<WeylElement> group = [] {
    const auto gens = f4_root_system().simple_reflections();
    return generate_group(gens);
  }();
  return group;
}

bool in_weyl_spin8(const WeylElement& w) {
  static const std::set<WeylElement> members(weyl_spin8().begin(), weyl_spin8().end());
  return members.count(w) > 0;
}

Weight sigma_root_omega4() { return Weight::omega(4); }
Weight sigma_root_omega54() { return Weight::omega(5) - Weight::omega(4); }
Weight sigma_root_omega5() { return Weight::omega(5); }

std::array<std::vector<Weight>, 3> coset_partition_of_f4_positives() {
  const std::array<WeylElement, 3> reps{WeylElement::reflection(sigma_root_omega4()),
                                        WeylElement::reflection(sigma_root_omega54()),
                                        WeylElement::reflection(sigma_root_omega5())};
  std::array<std::vector<Weight>, 3> classes;
  for (const auto& delta : f4_root_system().positive_roots()) {
    const WeylElement s = WeylElement::reflection(delta);
    if (in_weyl_spin8(s)) continue;
    for (std::size_t k = 0; k < 3; ++k) {
      // reflections are involutions, so s_gamma^{-1} = s_gamma
      if (in_weyl_spin8(s * reps[k])) {
        classes[k].push_back(delta);
        break;
      }
    }
  }
  return classes;
}

SemidirectReport semidirect_check() {
  SemidirectReport rep;
  const auto& spin8 = weyl_spin8();
  const auto& f4 = weyl_f4();
  const auto f4_gens = f4_root_system().simple_reflections();
  rep.normal = true;
  for (const auto& g : f4_gens) {
    const WeylElement gi = g.inverse_orthogonal();
    for (const auto& h : spin8)
      if (!in_weyl_spin8(g * h * gi)) rep.normal = false;
  }
  const std::array<WeylElement, 3> sig{WeylElement::reflection(sigma_root_omega4()),
                                       WeylElement::reflection(sigma_root_omega54()),
                                       WeylElement::reflection(sigma_root_omega5())};
  const auto sigma = generate_group(sig);
  rep.sigma_order = sigma.size();
  rep.trivial_intersection =
      std::count_if(sigma.begin(), sigma.end(), [](const WeylElement& w) { return in_weyl_spin8(w); }) == 1;
  rep.orders_multiply = sigma.size() * spin8.size() == f4.size();
  rep.braid = sig[2] == sig[0] * sig[1] * sig[0];
  return rep;
}

// ---------------------------------------------------------------------------

Sigma3Element::Sigma3Element(std::array<int, 3> images) : images_(images) {
  std::array<int, 3> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2}) throw PreconditionError("not a permutation of {1,2,3}");
}

Sigma3Element Sigma3Element::s1() { return Sigma3Element({0, 2, 1}); }
Sigma3Element Sigma3Element::s2() { return Sigma3Element({1, 0, 2}); }

Sigma3Element Sigma3Element::transposition(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3 || i == j) throw PreconditionError("bad transposition");
  std::array<int, 3> images{0, 1, 2};
  std::swap(images[i - 1], images[j - 1]);
  return Sigma3Element(images);
}

const std::array<Sigma3Element, 6>& Sigma3Element::all() {
  static const std::array<Sigma3Element, 6> elements{
      Sigma3Element(), s1(), s2(), s1() * s2(), s2() * s1(), s1() * s2() * s1()};
  return elements;
}

Sigma3Element Sigma3Element::from_name(std::string_view name) {
  static const std::array<std::string_view, 6> names{"1", "s1", "s2", "s1s2", "s2s1", "s1s2s1"};
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return all()[i];
  throw PreconditionError("unknown permutation name '" + std::string(name) + "'");
}

Sigma3Element Sigma3Element::inverse() const {
  std::array<int, 3> inv{};
  for (int i = 0; i < 3; ++i) inv[images_[i]] = i;
  return Sigma3Element(inv);
}

std::size_t Sigma3Element::index() const {
  const auto& a = all();
  return static_cast<std::size_t>(std::find(a.begin(), a.end(), *this) - a.begin());
}

std::string Sigma3Element::name() const {
  static const std::array<const char*, 6> names{"1", "s1", "s2", "s1s2", "s2s1", "s1s2s1"};
  return names[index()];
}

Sigma3Element operator*(const Sigma3Element& a, const Sigma3Element& b) {
  std::array<int, 3> images{};
  for (int i = 0; i < 3; ++i) images[i] = a.images_[b.images_[i]];
  return Sigma3Element(images);
}

std::array<int, 3> a2_root(int k) {
  switch (k) {
    case 1: return {0, 1, -1};
    case 2: return {1, -1, 0};
    case 3: return {1, 0, -1};
    default: throw PreconditionError("A2 root index must be 1, 2 or 3");
  }
}

int act_on_a2_root(const Sigma3Element& sigma, int k) {
  const auto c = a2_root(k);
  // (sigma gamma)(x) = gamma(sigma^{-1} x) moves coefficient i to slot sigma(i)
  std::array<int, 3> moved{};
  for (int i = 1; i <= 3; ++i) moved[sigma(i) - 1] = c[i - 1];
  for (int j = 1; j <= 3; ++j) {
    const auto r = a2_root(j);
    if (moved == r) return j;
    if (moved == std::array<int, 3>{-r[0], -r[1], -r[2]}) return -j;
  }
  throw PreconditionError("image is not an A2 root");
}

std::vector<int> inversion_set(const Sigma3Element& sigma) {
  std::vector<int> out;
  for (int k = 1; k <= 3; ++k)
    if (act_on_a2_root(sigma.inverse(), k) < 0) out.push_back(k);
  return out;
}

}  // namespace flagoct
