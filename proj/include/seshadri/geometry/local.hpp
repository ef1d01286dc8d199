#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "seshadri/geometry/pointed.hpp"

namespace seshadri {

struct LocalOptions {
  /// Largest truncation degree m tried before giving up.
  unsigned max_m = 24;
  /// Number of consecutive equal finite differences required for multiplicity.
  unsigned window = 3;
};

/// Affine chart y_0 = 1 of a normalized ideal, studied at the origin through
/// the truncations I_aff + (y_1..y_N)^m. Each truncated quotient is supported
/// at the origin only, so its dimension and membership questions are already
/// local. Bases are cached per m.
class LocalRing {
 public:
  explicit LocalRing(const Ideal& normalized);

  std::size_t nvars() const { return nvars_; }
  /// f(1, y_1, ..., y_N).
  Poly dehomogenize(const Poly& f) const;

  /// dim_Q Q[y]/(I_aff + m^m).
  Integer colength(unsigned m) const;
  /// Whether f_aff ∈ I_aff + m^m.
  bool contains(const Poly& f_aff, unsigned m) const;

 private:
  const std::vector<Poly>& truncated_basis(unsigned m) const;

  std::size_t nvars_;
  std::vector<Poly> gens_;
  mutable std::mutex mu_;
  mutable std::map<unsigned, std::unique_ptr<const std::vector<Poly>>> bases_;
};

/// mult_p(X): the eventual value of the (dim X)-th finite difference of
/// m -> colength(m). Throws std::runtime_error when the differences do not
/// settle below options.max_m.
unsigned multiplicity_at(const PointedVariety& x, const LocalOptions& options = {});

/// Same, from a normalized homogeneous ideal of known projective dimension.
unsigned multiplicity_at_origin(const Ideal& normalized, int dimension, const LocalOptions& options = {});

/// ord_p of a function on X; `infinite` when it vanishes on a component of X through p.
struct Order {
  unsigned value = 0;
  bool infinite = false;

  std::string to_string() const { return infinite ? "infinite" : std::to_string(value); }
  friend bool operator==(const Order&, const Order&) = default;
};

/// f is homogeneous in the original coordinates of X.
Order ord_at(const Poly& f, const PointedVariety& x, const LocalOptions& options = {});

/// f is homogeneous in the normalized coordinates; `local` must be built from `normalized`.
Order ord_at_origin(const Poly& f, const Ideal& normalized, const LocalRing& local, const LocalOptions& options = {});

}  // namespace seshadri
