#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "seshadri/groebner/groebner.hpp"

namespace seshadri {

/// Ideal of Q[x_0, ..., x_{n-1}] given by generators.
///
/// Generators are stored in grevlex. Reduced Groebner bases are computed on
/// demand and cached per order; the cache is shared by copies (generators are
/// immutable) and guarded so concurrent readers never see a partial basis.
class Ideal {
 public:
  explicit Ideal(std::size_t nvars);
  Ideal(std::size_t nvars, const std::vector<Poly>& gens);

  static Ideal unit(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Poly>& generators() const { return gens_; }
  bool is_homogeneous() const { return homogeneous_; }

  const std::vector<Poly>& basis(const MonomialOrder& order = MonomialOrder::grevlex()) const;

  /// Normal form under the reduced basis; the result uses `order`.
  Poly normal_form(const Poly& f, const MonomialOrder& order = MonomialOrder::grevlex()) const;

  bool contains(const Poly& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const { return gens_.empty(); }

 private:
  struct Cache;

  std::size_t nvars_;
  std::vector<Poly> gens_;
  bool homogeneous_ = true;
  std::shared_ptr<Cache> cache_;
};

bool same_ideal(const Ideal& a, const Ideal& b);

Ideal operator+(const Ideal& a, const Ideal& b);
/// Ideal generated by I and the extra polynomials.
Ideal with_generators(const Ideal& ideal, const std::vector<Poly>& extra);

/// I ∩ J, by eliminating t from t·I + (1 − t)·J.
Ideal intersect(const Ideal& a, const Ideal& b);

enum class QuotientRoute {
  /// Uses the grevlex shortcut for a homogeneous ideal and a variable, elimination otherwise.
  Automatic,
  /// Always (J ∩ (f)) / f.
  Elimination,
};

/// J : f.
Ideal quotient(const Ideal& j, const Poly& f, QuotientRoute route = QuotientRoute::Automatic);

/// J : I, the intersection of J : f over the generators f of I.
Ideal ideal_quotient(const Ideal& j, const Ideal& i, QuotientRoute route = QuotientRoute::Automatic);

/// I : x_var^∞. For homogeneous I this divides a grevlex basis with x_var
/// placed last by the highest power of x_var; otherwise it iterates quotients.
Ideal saturate_by_variable(const Ideal& ideal, std::size_t var);

/// I : J^∞ by iterated quotients until two successive ideals coincide.
Ideal saturate(const Ideal& ideal, const Ideal& j, QuotientRoute route = QuotientRoute::Automatic);

/// The ideal (x_lo, ..., x_{hi-1}).
Ideal variable_ideal(std::size_t nvars, std::size_t lo, std::size_t hi);

/// Vector-space basis of the degree-d component of a homogeneous ideal, in
/// reduced echelon form with respect to grevlex.
std::vector<Poly> graded_piece(const Ideal& ideal, int d);

}  // namespace seshadri
