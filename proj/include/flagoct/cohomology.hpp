#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "flagoct/groebner.hpp"
#include "flagoct/polynomial.hpp"
#include "flagoct/report.hpp"
#include "flagoct/weyl.hpp"

namespace flagoct {

/// Q[e1,e2] with e_k = e(E_k), degree 8.
RingPtr euler_ring();
/// Q[beta1,beta2], degree 8.
RingPtr beta_ring();
/// Q[b1,b2], degree 8.
RingPtr b_ring();
/// Q[b1,b2,b3], degree 8; b3 kept free so displayed expressions can be compared verbatim.
RingPtr b3_ring();
/// Q[l1,l2] (fundamental weights lambda_1, lambda_2 of the complex flag model), degree 2.
RingPtr lambda_ring();

/// (S_2, S_3) of (2a+b, -a+b, -a-2b).
std::array<Polynomial, 2> relation_generators(const Polynomial& a, const Polynomial& b);

struct CohRing {
  RingPtr ring;
  Polynomial g2, g3;
  GroebnerBasis gb;

  static CohRing standard();
};

/// beta_1 = (2 e1 + e2)/3, beta_2 = (e1 + 2 e2)/3.
std::pair<Polynomial, Polynomial> beta_from_euler(const Polynomial& e1, const Polynomial& e2);
/// e1 = 2 beta_1 - beta_2, e2 = -beta_1 + 2 beta_2.
std::pair<Polynomial, Polynomial> euler_from_beta(const Polynomial& b1, const Polynomial& b2);

/// Sub-checks (a)-(e) of the coinvariant presentation.
std::vector<Check> verify_presentation();

// ---- divided differences on Q[l1,l2] --------------------------------------

/// gamma_1 = 2 l1 - l2, gamma_2 = 2 l2 - l1.
Polynomial bgg_root(int k);
/// s_gamma_k acting on Q[l1,l2].
Polynomial simple_reflection(int k, const Polynomial& f);
/// (f - s_gamma_k f) / gamma_k; throws std::logic_error if the division is inexact.
Polynomial divided_difference(int k, const Polynomial& f);

/// top = gamma1 gamma2 (gamma1+gamma2)/6 followed by D1 top, D2 top, D2 D1 top, D1 D2 top, D1 D2 D1 top.
std::vector<Polynomial> bgg_basis();
/// The listed basis: gamma1(gamma1+gamma2)/3, gamma2(gamma1+gamma2)/3, l1, l2, 1 (plus top).
std::vector<Polynomial> expected_bgg_list();
/// Groebner basis of the ideal of nonconstant symmetric polynomials in (l1, l2-l1, -l2).
const GroebnerBasis& coinvariant_basis();

std::vector<Check> verify_bgg();
std::vector<Check> verify_frac_identity();

// ---- restriction table ----------------------------------------------------

/// e_M(E_k) restricted to the fixed point sigma x0, as polynomials in Q[b1,b2,b3].
class RestrictionTable {
 public:
  /// The published table.
  static RestrictionTable published();

  const Polynomial& raw(const Sigma3Element& sigma, int k) const;
  void set(const Sigma3Element& sigma, int k, Polynomial value);

  /// Entry with b3 replaced by b1 + b2, in Q[b1,b2].
  Polynomial restriction(const Sigma3Element& sigma, int k) const;

 private:
  explicit RestrictionTable(std::vector<Polynomial> entries) : entries_(std::move(entries)) {}
  std::vector<Polynomial> entries_;  // index 6*(k-1) + sigma.index()
};

/// Q[b1,b2,b3] -> Q[b1,b2] with b3 = b1 + b2.
Polynomial eliminate_b3(const Polynomial& f);

std::vector<Check> verify_restriction_table(const RestrictionTable& table);

/// Ten substitution checks, the five displayed triples, e1+e2-e3 consistency, and
/// the freeness evidence for the relation ideal over Q[b1,b2].
std::vector<Check> verify_equivariant_relations(const RestrictionTable& table);

}  // namespace flagoct
