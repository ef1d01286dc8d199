#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace seshadri {

/// Upper bound on ring variables. Elimination adds one auxiliary variable, so
/// ambient spaces up to P^14 fit.
inline constexpr std::size_t kMaxVariables = 16;

/// Dense exponent vector with cached total degree. Slots past the ring's
/// variable count are always zero, which lets comparisons ignore the ring size.
class Monomial {
 public:
  static constexpr unsigned kMaxExponent = 255;

  Monomial() = default;
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Sum of exponents over the index range [lo, hi).
  unsigned degree_in(std::size_t lo, std::size_t hi) const;

  /// Highest variable index with a nonzero exponent plus one.
  std::size_t support_end() const;

  Monomial operator*(const Monomial& o) const;
  /// Precondition: o divides *this.
  Monomial operator/(const Monomial& o) const;

  bool divides(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);

  /// Returns a copy with variable i's exponent set to e.
  Monomial with(std::size_t i, unsigned e) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint16_t degree_ = 0;
};

/// All monomials of total degree d in the variables [lo, hi), in decreasing lex order.
std::vector<Monomial> monomials_of_degree(std::size_t lo, std::size_t hi, unsigned d);

/// Total monomial order. Every kind is multiplicative and a well-order.
struct MonomialOrder {
  enum class Kind { Grevlex, Lex, Elimination };

  Kind kind = Kind::Grevlex;
  /// For Elimination: variables [0, split) form the eliminated block, compared
  /// first by grevlex; ties are broken by grevlex on the remaining variables.
  std::size_t split = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder elimination(std::size_t split) { return {Kind::Elimination, split}; }

  /// Negative, zero or positive as a is smaller, equal or larger than b.
  int compare(const Monomial& a, const Monomial& b) const;

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool degree_compatible() const { return kind == Kind::Grevlex; }

  std::string name() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && (a.kind != Kind::Elimination || a.split == b.split);
  }
};

}  // namespace seshadri

template <>
struct std::hash<seshadri::Monomial> {
  std::size_t operator()(const seshadri::Monomial& m) const noexcept { return m.hash(); }
};
