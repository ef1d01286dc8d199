#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seshadri/groebner/ideal.hpp"
#include "seshadri/poly/random.hpp"

namespace seshadri {

/// Generators and a point reduced modulo a small prime q.
struct ModularInstance {
  struct Term {
    std::uint32_t coeff;
    Monomial monomial;
  };
  using Form = std::vector<Term>;

  std::uint32_t q = 0;
  std::size_t nvars = 0;
  std::vector<Form> generators;
  std::vector<std::uint32_t> point;
  /// First nonzero coordinate of the reduced point.
  std::size_t pivot = 0;
};

/// Throws InputError when q is not prime, when q divides a denominator, when
/// the point reduces to zero, or when a generator does not vanish at the point mod q.
ModularInstance reduce_instance(const std::vector<Poly>& generators, const std::vector<Rational>& point, std::uint32_t q);
ModularInstance reduce_instance(const Ideal& ideal, const std::vector<Rational>& point, std::uint32_t q);

/// Coefficients of g(a + t b + t^2 c) in t, lowest first; c may be empty.
std::vector<std::uint32_t> restrict_to_curve(const ModularInstance::Form& g, const std::vector<std::uint32_t>& a,
                                             const std::vector<std::uint32_t>& b, const std::vector<std::uint32_t>& c,
                                             std::uint32_t q);

struct LineCount {
  std::uint64_t count = 0;
  /// Directions v with v[pivot] = 0, scaled so the first nonzero entry is 1, sorted.
  std::vector<std::vector<std::uint32_t>> directions;
};

/// Enumerates every line through p by its meeting point with x_pivot = 0.
/// Work is split across `threads` workers (0 = hardware concurrency); the
/// result does not depend on the split.
LineCount count_lines_mod_q(const ModularInstance& inst, unsigned threads = 0);

struct ConicWitness {
  /// p + t v + t^2 w lies on X and p, v, w are independent.
  std::vector<std::uint32_t> v;
  std::vector<std::uint32_t> w;
  unsigned draws = 0;
};

/// Search over parametrized conics through p: `budget` random tangent
/// directions v, each with the solutions w of the second-order conditions.
/// std::nullopt is inconclusive.
std::optional<ConicWitness> find_conic_mod_q(const ModularInstance& inst, unsigned budget, Rng& rng);

/// Order of the lowest nonzero form of a plane curve at a point of the curve.
/// Throws InputError when the point is not on the curve.
unsigned lowest_form_mult(const Poly& plane_curve, const std::vector<Rational>& point);

enum class OracleVerdict { Agree, BadPrimeWarning, Disagree };
std::string to_string(OracleVerdict v);

/// Compares a characteristic-zero line scheme with per-prime counts: a
/// mismatch at every prime is a disagreement, a mismatch at some primes a warning.
OracleVerdict compare_line_counts(bool line_scheme_empty, const std::vector<std::uint64_t>& counts);

}  // namespace seshadri
