#pragma once

#include <cstddef>
#include <vector>

#include "seshadri/poly/polynomial.hpp"

namespace seshadri {

struct GroebnerOptions {
  /// When positive, compute modulo the ideal of all monomials of this degree:
  /// terms of degree >= truncate are discarded on sight. Requires a
  /// degree-compatible order.
  unsigned truncate = 0;
};

/// Reduced Groebner basis of the ideal generated by `gens` under `order`.
///
/// Buchberger's algorithm with the Gebauer-Moeller pair criteria and sugar
/// selection. The result is monic, sorted by increasing leading monomial and
/// independent of generator order; the unit ideal yields {1}, the zero ideal {}.
/// In truncated mode the monomials of degree `truncate` are implicit members
/// and are not listed.
std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const MonomialOrder& order,
                                 const GroebnerOptions& options = {});

/// Remainder of f under full multivariate division by `basis`. The
/// polynomials must share f's order; `truncate` drops high-degree terms as in
/// GroebnerOptions.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis, unsigned truncate = 0);

Poly s_polynomial(const Poly& f, const Poly& g);

/// Buchberger's criterion: every S-polynomial reduces to zero.
bool is_groebner_basis(const std::vector<Poly>& basis);

/// Exact quotient f / g; throws std::domain_error when g does not divide f.
Poly divide_exact(const Poly& f, const Poly& g);

}  // namespace seshadri
