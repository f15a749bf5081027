#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagoct/cohomology.hpp"
#include "flagoct/polynomial.hpp"
#include "flagoct/random.hpp"
#include "flagoct/report.hpp"
#include "flagoct/weyl.hpp"

namespace flagoct {

/// Transpositions of Sigma_3 in a fixed order: (1,2), (1,3), (2,3).
const std::array<Sigma3Element, 3>& transpositions();
std::string transposition_name(std::size_t t);

/// Index k with s_{gamma_k} equal to transposition t: (2,3) -> 1, (1,2) -> 2, (1,3) -> 3.
int gamma_of_transposition(std::size_t t);

/// How edges {sigma, (i,j) sigma} are labelled in Q[b1,b2].
enum class LabelConvention {
  /// e_ij = e_M(h_gamma) with gamma = x_i - x_j: (1,2) -> b2, (2,3) -> b1, (1,3) -> b1+b2.
  root,
  /// e_12 = b1, e_23 = b2, e_13 = b1+b2 read off literally.
  literal,
};

struct GkmEdge {
  std::size_t from;        // index into Sigma3Element::all()
  std::size_t to;
  std::size_t transposition;
};

/// The 6-vertex graph on Sigma_3 with edges {sigma, t sigma}; 9 edges, every vertex of degree 3.
class GkmGraph {
 public:
  GkmGraph(RingPtr ring, std::array<Polynomial, 3> labels);

  static GkmGraph abstract(LabelConvention convention = LabelConvention::root);
  /// Labels b_k^T in Q[rho1..rho4].
  static GkmGraph realized();

  const RingPtr& ring() const { return ring_; }
  const Polynomial& label(std::size_t transposition) const { return labels_[transposition]; }
  static const std::vector<GkmEdge>& edges();

 private:
  RingPtr ring_;
  std::array<Polynomial, 3> labels_;
};

using CohTuple = std::array<Polynomial, 6>;

struct MembershipResult {
  bool member = true;
  std::optional<GkmEdge> failing_edge;
};

/// Every edge difference f_sigma - f_{t sigma} divisible by its label (condition P2).
MembershipResult check_membership(const GkmGraph& graph, const CohTuple& tuple);

/// P1: only the pairs with gamma in the inversion set of sigma.
bool condition_p1(const GkmGraph& graph, const CohTuple& tuple);
bool condition_p2(const GkmGraph& graph, const CohTuple& tuple);

/// sigma -> restriction(sigma, k) in Q[b1,b2].
CohTuple table_class(const RestrictionTable& table, int k);

/// sigma -> P(b1, b2, E1(sigma), E2(sigma)) for P in Q[b1,b2,E1,E2].
CohTuple tuple_from_classes(const RestrictionTable& table, const Polynomial& p);
RingPtr class_polynomial_ring();

// ---- realization in H*(BT) ------------------------------------------------

/// Q[rho1..rho4], degree 2.
RingPtr rho_ring();
/// Q[L1..L4], degree 2.
RingPtr l_ring();
/// rho_j written in L-coordinates and back.
Polynomial rho_to_l(const Polynomial& f);
Polynomial l_to_rho(const Polynomial& f);

struct EulerRealization {
  std::array<FormProduct, 3> b;   // b_k^T with the sign normalization applied
  std::array<int, 3> sign{};      // sign applied to the product of the raw factors
  std::array<int, 3> weyl_sign{}; // +1 if invariant, -1 if some element negates it, 0 otherwise
};

/// b1 = rho1(rho2-rho1)(rho4-rho3)(rho4-rho2+rho3), b2 = rho4(rho4-rho2)(rho3-rho1)(rho3-rho2+rho1),
/// b3 = rho3(rho3-rho2)(rho4-rho1)(rho4-rho2+rho1); lex-leading coefficient made positive.
EulerRealization realize_in_bt();

/// Polynomial in Q[L1..L4] acted on by a Weyl element (L_i -> w(L_i)).
Polynomial weyl_act_polynomial(const WeylElement& w, const Polynomial& f);
bool is_spin8_invariant(const Polynomial& f_in_l);

/// Divisibility of f by a product of pairwise non-proportional linear forms, tested
/// by restricting f to each hyperplane.
bool divisible_by_hyperplanes(const Polynomial& f, const FormProduct& divisor);

/// Sign patterns (s1,s2,s3) in {+1,-1}^3 with s1 b1 + s2 b2 = s3 b3, up to overall sign.
std::vector<std::array<int, 3>> additive_sign_choices(const EulerRealization& r);

struct RankRow {
  int degree;
  std::size_t computed;
  std::size_t predicted;
};

inline constexpr int kMaxRankDegree = 16;

/// Coefficients of (1+2t^8+2t^16+t^24)/((1-t^4)(1-t^8)^2(1-t^12)) up to max_degree.
std::vector<std::size_t> predicted_free_ranks(int max_degree);

/// Dimension of W_Spin(8)-invariant tuples satisfying the realized GKM conditions,
/// for each even degree up to the cutoff. ResourceError above kMaxRankDegree.
std::vector<RankRow> free_rank_check(int degree_cutoff);

std::vector<Check> verify_gkm(Rng& rng, const RestrictionTable& table, int degree_cutoff);

}  // namespace flagoct
