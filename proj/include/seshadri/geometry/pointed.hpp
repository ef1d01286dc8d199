#pragma once

#include <cstddef>
#include <vector>

#include "seshadri/groebner/hilbert.hpp"
#include "seshadri/poly/matrix.hpp"

namespace seshadri {

/// A projective scheme X ⊂ P^N with a point p ∈ X, together with coordinates
/// y in which p = [1:0:...:0].
///
/// `frame` is the matrix A with x = A·y; its first column is p and the others
/// are the standard basis vectors except the one at p's first nonzero
/// coordinate. `normalized` is generated by the polynomials f(A·y).
struct PointedVariety {
  std::size_t ambient_dim = 0;
  Ideal ideal{1};
  std::vector<Rational> point;
  Matrix<Rational> frame;
  Matrix<Rational> transform;  // inverse of frame: sends p to e_0
  Ideal normalized{1};

  std::size_t nvars() const { return ambient_dim + 1; }
  Poly to_normalized(const Poly& f) const { return f.substitute_linear(frame); }
  Poly from_normalized(const Poly& g) const { return g.substitute_linear(transform); }
  /// Direction vector in the normalized y_1..y_N coordinates mapped back to x coordinates.
  std::vector<Rational> direction_to_original(const std::vector<Rational>& v) const;
};

/// Throws InputError when p is zero, has the wrong length, or misses V(I).
PointedVariety normalize_point(const Ideal& ideal, std::vector<Rational> point);

/// f = sum_{i=1}^{d} x_0^{d-i} f^i with f^i of degree i in x_1..x_N.
struct SliceDecomposition {
  Poly source;
  unsigned degree = 0;
  /// slices[i - 1] is f^i, kept in the ring of f (x_0 does not occur).
  std::vector<Poly> slices;

  const Poly& slice(unsigned i) const { return slices.at(i - 1); }
  Poly reassemble() const;
};

/// Throws InputError for a nonzero x_0^d coefficient (p not on the
/// hypersurface) and std::invalid_argument for a zero or non-homogeneous f.
SliceDecomposition slice_decomposition(const Poly& f);

/// Lines through p = [1:0:...:0] as a subscheme of the P^{N-1} of directions,
/// in the variables y_1..y_N renumbered 0..N-1.
struct LineScheme {
  Ideal ideal{1};
  HilbertData hilbert;

  bool empty() const { return hilbert.dimension < 0; }
};

/// From explicit local generators in normalized coordinates (all vanishing at e_0).
LineScheme line_scheme(const std::vector<Poly>& local_gens, std::size_t nvars);
/// From the generators of the normalized ideal.
LineScheme line_scheme(const PointedVariety& x);

/// Ideal in x_0..x_N with the same generators as z (which lives in x_1..x_N).
Ideal cone_ideal(const Ideal& z);

/// Maps a polynomial in x_1..x_N (indices 0..N-1) into the ring x_0..x_N.
Poly lift_from_directions(const Poly& f);
/// Inverse of lift_from_directions; x_0 must not occur.
Poly drop_first_variable(const Poly& f);

struct CutOutOptions {
  /// Check that the ideal is saturated before trusting graded pieces.
  bool validate = false;
};

/// d_p(X): the least d for which J_d : I_X, with J_d generated by the degree-d
/// part of I_X, has a generator not vanishing at p.
int cut_out_degree(const PointedVariety& x, const CutOutOptions& options = {});

/// The irrelevant-ideal saturation equals the ideal itself.
bool is_saturated(const Ideal& ideal);

}  // namespace seshadri
