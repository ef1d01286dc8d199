#pragma once

#include <cstddef>
#include <random>

#include "seshadri/poly/polynomial.hpp"

namespace seshadri {

/// The single random source used for every "general" choice; seeded once per run.
using Rng = std::mt19937_64;

/// Uniform integer in [-bound, bound].
Rational random_coefficient(Rng& rng, int bound);

/// Random homogeneous form of degree d in the variables [lo, hi) of an
/// nvars-variable ring, with coefficients uniform in [-bound, bound].
Poly random_form(std::size_t nvars, std::size_t lo, std::size_t hi, unsigned degree, Rng& rng, int bound = 5);

}  // namespace seshadri
