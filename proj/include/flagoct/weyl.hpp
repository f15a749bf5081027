#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flagoct/rational.hpp"

namespace flagoct {

/// Element of t* in the L1..L4 basis.
struct Weight {
  std::array<Rational, 4> c{};

  static Weight L(std::size_t i);
  /// Fundamental weights rho_1..rho_4 for the simple system of Spin(8).
  static Weight rho(std::size_t j);
  /// omega^1..omega^4 = L^i, omega^5 = (L1+L2+L3+L4)/2.
  static Weight omega(std::size_t j);
  static Weight from_rho(const std::array<Rational, 4>& coefficients);
  static Weight from_doubled(const std::array<long, 4>& twice);

  std::array<Rational, 4> rho_coordinates() const;
  /// All coordinates integral, or all in Z + 1/2.
  bool in_lattice() const;
  bool is_zero() const;
  Rational dot(const Weight& o) const;

  Weight operator-() const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight a);

  bool operator==(const Weight& o) const { return c == o.c; }
  bool operator<(const Weight& o) const;

  std::string to_string() const;
};

/// v - 2<v,root>/<root,root> root; throws PreconditionError for root == 0.
Weight reflect(const Weight& v, const Weight& root);

/// Linear map of t* as a 4x4 rational matrix acting on L-coordinate columns.
class WeylElement {
 public:
  WeylElement();  // identity

  static WeylElement reflection(const Weight& root);

  const Rational& operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return m_[i][j]; }

  Weight apply(const Weight& v) const;
  WeylElement inverse_orthogonal() const;  // transpose
  bool is_orthogonal() const;
  bool preserves_lattice() const;

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  bool operator==(const WeylElement& o) const { return m_ == o.m_; }
  bool operator<(const WeylElement& o) const;

 private:
  std::array<std::array<Rational, 4>, 4> m_{};
};

inline constexpr std::size_t kGroupBound = 2000;

/// Breadth-first closure of the generators; ResourceError once size exceeds bound.
std::vector<WeylElement> generate_group(std::span<const WeylElement> generators, std::size_t bound = kGroupBound);

/// Signed permutation matrix with an even number of -1 entries.
bool is_spin8_element(const WeylElement& w);

struct RootSystem {
  std::vector<Weight> roots;
  std::vector<Weight> simple;

  /// Coefficients of a vector in the simple basis (simple roots must be a basis).
  std::array<Rational, 4> simple_coordinates(const Weight& v) const;
  bool is_positive(const Weight& root) const;
  std::vector<Weight> positive_roots() const;
  std::vector<WeylElement> simple_reflections() const;
};

RootSystem d4_root_system();
RootSystem f4_root_system();

/// Cached enumerations (192 and 1152 elements).
const std::vector<WeylElement>& weyl_spin8();
const std::vector<WeylElement>& weyl_f4();
bool in_weyl_spin8(const WeylElement& w);

/// The special short roots omega^4, omega^5 - omega^4, omega^5.
Weight sigma_root_omega4();
Weight sigma_root_omega54();
Weight sigma_root_omega5();

/// Positive F4 roots delta with s_delta outside W_Spin(8), grouped by the coset of
/// s_delta: index 0 for s_{omega4}, 1 for s_{omega5-omega4}, 2 for s_{omega5}.
std::array<std::vector<Weight>, 3> coset_partition_of_f4_positives();

struct SemidirectReport {
  bool normal = false;
  std::size_t sigma_order = 0;
  bool trivial_intersection = false;
  bool orders_multiply = false;
  bool braid = false;
  bool all() const { return normal && sigma_order == 6 && trivial_intersection && orders_multiply && braid; }
};

SemidirectReport semidirect_check();

/// Permutation of {1,2,3}; s1 = (2,3), s2 = (1,2), composition (st)(i) = s(t(i)).
class Sigma3Element {
 public:
  Sigma3Element() : images_{0, 1, 2} {}
  explicit Sigma3Element(std::array<int, 3> images_zero_based);

  static Sigma3Element s1();
  static Sigma3Element s2();
  /// Transposition (i,j) with 1-based i, j.
  static Sigma3Element transposition(int i, int j);
  static Sigma3Element from_name(std::string_view name);
  /// 1, s1, s2, s1s2, s2s1, s1s2s1.
  static const std::array<Sigma3Element, 6>& all();

  /// Image of i (1-based).
  int operator()(int i) const { return images_[i - 1] + 1; }
  Sigma3Element inverse() const;
  std::size_t index() const;  // position in all()
  std::string name() const;

  friend Sigma3Element operator*(const Sigma3Element& a, const Sigma3Element& b);
  bool operator==(const Sigma3Element& o) const { return images_ == o.images_; }

 private:
  std::array<int, 3> images_;
};

/// gamma_1 = x2-x3, gamma_2 = x1-x2, gamma_3 = x1-x3 as coefficient vectors on (x1,x2,x3).
std::array<int, 3> a2_root(int k);
/// (sigma gamma)(x) = gamma(sigma^{-1} x); returns +k or -k for the resulting root.
int act_on_a2_root(const Sigma3Element& sigma, int k);
/// { gamma_k : sigma^{-1} gamma_k negative }, as sorted k values.
std::vector<int> inversion_set(const Sigma3Element& sigma);

}  // namespace flagoct
