#pragma once

#include <cstddef>
#include <vector>

#include "seshadri/groebner/ideal.hpp"

namespace seshadri {

/// Hilbert data of Proj(Q[x_0..x_{n-1}] / I) for a homogeneous ideal I.
struct HilbertData {
  /// Projective dimension; -1 for the empty scheme.
  int dimension = -1;
  /// Degree of the scheme; 0 when it is empty.
  Integer degree = 0;
  /// Hilbert polynomial coefficients in t, constant term first; empty when zero.
  std::vector<Rational> polynomial;
  /// Hilbert series numerator h(t) after cancelling every factor (1 - t), so
  /// the series is h(t) / (1 - t)^(dimension + 1).
  std::vector<Integer> numerator;

  /// Value of the Hilbert function at degree d.
  Integer hilbert_function(int d) const;
  Rational hilbert_polynomial(const Rational& t) const;
};

/// Numerator of the Hilbert series of Q[x]/(gens) for a monomial ideal: the
/// series equals N(t) / (1 - t)^n. Coefficients of t^0, t^1, ...
std::vector<Integer> hilbert_numerator(std::vector<Monomial> gens);

HilbertData hilbert_data_from_numerator(std::vector<Integer> numerator, std::size_t nvars);

/// Computed from the leading monomials of the grevlex basis.
/// Throws std::invalid_argument for a non-homogeneous ideal.
HilbertData hilbert_data(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex());

}  // namespace seshadri
