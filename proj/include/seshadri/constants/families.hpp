#pragma once

#include <vector>

#include "seshadri/groebner/ideal.hpp"
#include "seshadri/poly/random.hpp"

namespace seshadri {

/// Index of the Plücker coordinate p_ij (i < j) in lexicographic order of pairs.
std::size_t plucker_index(unsigned k, unsigned i, unsigned j);

/// Plücker ideal of Gr(2, k) in P^{C(k,2) - 1}: p_ab p_cd - p_ac p_bd + p_ad p_bc
/// for every a < b < c < d.
Ideal plucker_ideal(unsigned k);

/// Plücker coordinates of u ∧ v.
std::vector<Rational> wedge(const std::vector<Rational>& u, const std::vector<Rational>& v);

/// Random form of the given degree vanishing at `point`.
Poly random_form_through(const std::vector<Rational>& point, unsigned degree, Rng& rng, int bound = 5);

}  // namespace seshadri
