#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ugb/groebner.hpp"

namespace ugb {

struct GeneratorSet {
  std::vector<Polynomial> gens;
  MonomialOrder order;
};

struct Division {
  Polynomial remainder;
  std::vector<Polynomial> quotients;
};

/// Multivariate division; the first divisor in list order whose head
/// divides the current head is used.
Division divide(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& order);

/// Reduced Groebner basis of ideal(F) by the classical Buchberger algorithm
/// (coprime-head criterion only). Throws Timeout after `max_spairs` reduced
/// S-pairs and NotZeroDimensional when the ideal is not zero dimensional.
ReducedGroebnerBasis buchberger(const GeneratorSet& f, std::size_t max_spairs = 10'000);

/// True iff the columns of A indexed by mu are linearly independent.
/// Throws BadSubset unless mu is n distinct column labels.
bool is_basic(const CoeffTable& a, const std::vector<ExponentVector>& mu);

/// Basic n-staircases, by exhaustive enumeration and rank tests.
std::vector<Staircase> basic_staircases(const CoeffTable& a);

/// Random positive integer weights in [1, 10^6]^d, redrawn until generic;
/// returns the initial staircases met by convert_basis.
std::set<Staircase> brute_initial_staircases(const CoeffTable& a, std::size_t samples, std::uint64_t seed = 1);

/// Vertices of conv(points) + R_+^d, sorted. Throws DimensionUnsupported
/// for d > 3.
std::vector<IntVector> positive_hull_vertices(const std::vector<IntVector>& points);

/// Every edge of the matroid polytope of basic n-subsets of V_n^d is a
/// difference e_u - e_v. Throws TooLarge when |V_n^d| > max_ground.
bool matroid_edge_check(const CoeffTable& a, std::size_t max_ground = 8);

/// Nonzero n x n minors of A keyed by column subsets (in column order).
/// Throws TooLarge when C(|U|, n) > max_subsets.
std::map<std::vector<ExponentVector>, Scalar> plucker_dual(const CoeffTable& a, std::uint64_t max_subsets = 100'000);

/// Rows x^u - [x^u]_lambda for u in U outside lambda, over the monomials of U.
Matrix relation_matrix(const CoeffTable& a);

}  // namespace ugb
