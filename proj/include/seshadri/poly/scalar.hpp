#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace seshadri {

// Exact rationals. mpq_class keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool is_one(const Rational& c) { return c == 1; }

std::string to_string(const Rational& c);

/// Parses "p" or "p/q" with optional sign; throws InputError on malformed text.
Rational parse_rational(std::string_view text);

/// Element of the prime field F_q.
///
/// The modulus is a per-thread context installed with ModulusScope, so that
/// Polynomial<Zp> can build constants without carrying q in every term.
/// Values are always kept in [0, q).
class Zp {
 public:
  Zp() = default;
  Zp(std::int64_t v);  // NOLINT(google-explicit-constructor): integer literals in generic code

  static std::uint32_t modulus();
  std::uint32_t value() const { return v_; }

  Zp operator+(Zp o) const;
  Zp operator-(Zp o) const;
  Zp operator*(Zp o) const;
  Zp operator/(Zp o) const;
  Zp operator-() const;
  Zp& operator+=(Zp o) { return *this = *this + o; }
  Zp& operator-=(Zp o) { return *this = *this - o; }
  Zp& operator*=(Zp o) { return *this = *this * o; }
  Zp& operator/=(Zp o) { return *this = *this / o; }
  Zp inverse() const;
  Zp pow(std::uint64_t e) const;

  friend bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }
  friend bool operator!=(Zp a, Zp b) { return a.v_ != b.v_; }

 private:
  friend class ModulusScope;
  std::uint32_t v_ = 0;
  static thread_local std::uint32_t modulus_;
};

inline bool is_zero(Zp c) { return c.value() == 0; }
inline bool is_one(Zp c) { return c.value() == 1; }
std::string to_string(Zp c);

/// Installs q as the active modulus for Zp on this thread; restores the previous one.
class ModulusScope {
 public:
  explicit ModulusScope(std::uint32_t q);
  ~ModulusScope();
  ModulusScope(const ModulusScope&) = delete;
  ModulusScope& operator=(const ModulusScope&) = delete;

 private:
  std::uint32_t previous_;
};

bool is_prime(std::uint64_t n);

/// Reduces a rational mod q. Throws InputError when q divides the denominator.
Zp reduce_mod(const Rational& c, std::uint32_t q);

}  // namespace seshadri
