#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "flagoct/character.hpp"
#include "flagoct/gkm.hpp"
#include "flagoct/polynomial.hpp"
#include "flagoct/random.hpp"
#include "flagoct/report.hpp"

namespace flagoct {

/// Q[X1..X4]; a RepRingElement is a polynomial here with integer coefficients.
RingPtr x_ring();
bool has_integer_coefficients(const Polynomial& p);

/// P(X1..X4) expanded through the displayed restrictions.
Character expand_rep(const Polynomial& p);

/// nullopt when f is not W_Spin(8)-invariant. Repeatedly removes the term of
/// greatest height, whose weight a rho4 + b rho3 + c rho1 + d rho2 gives X1^a X2^b X3^c X4^d.
std::optional<Polynomial> to_x_polynomial(const Character& f);

/// Edge divisors of the K-theoretic description, indexed like transpositions():
/// (1,2): prod (y_i - 1); (1,3): prod (y5 y_i^-1 - 1); (2,3): (y5-1)(y5 y1^-1 y4^-1 - 1)(y5 y2^-1 y4^-1 - 1)(y5 y1^-1 y2^-1 - 1).
const Character& k_edge_divisor(std::size_t transposition);
/// X_i - X_j for the transposition (i,j).
Polynomial x_edge_divisor(std::size_t transposition);

using KTuple = std::array<Character, 6>;
using XTuple = std::array<Polynomial, 6>;

MembershipResult check_k_membership_rt(const KTuple& tuple);
MembershipResult check_k_membership_x(const XTuple& tuple);
KTuple expand_tuple(const XTuple& tuple);

/// f_sigma = X_{sigma(1)}; every edge difference is 0 or +-(X_i - X_j).
XTuple tautological_x_tuple();

struct Factorization {
  std::string id;
  Character lhs;
  Character rhs;
};

/// The three displayed factorizations of X1-X2, X1-X3 and X3-X2.
std::vector<Factorization> factorizations();

/// Image of {X1,X2,X3} under w as a permutation (1-based images), or nullopt if w does not permute them.
std::optional<std::array<int, 3>> x_permutation(const WeylElement& w);

std::vector<Check> verify_ktheory(Rng& rng);

}  // namespace flagoct
