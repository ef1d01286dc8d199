#include "seshadri/poly/monomial.hpp"

#include <algorithm>

namespace seshadri {

namespace {

[[noreturn]] void overflow() {
  throw std::overflow_error("monomial exponent exceeds " + std::to_string(Monomial::kMaxExponent));
}

// Graded reverse lex restricted to variables [lo, hi).
int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned da = a.degree_in(lo, hi);
  unsigned db = b.degree_in(lo, hi);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables) throw std::invalid_argument("too many variables");
  unsigned total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > kMaxExponent) overflow();
    exps_[i] = static_cast<std::uint8_t>(exponents[i]);
    total += exponents[i];
  }
  degree_ = static_cast<std::uint16_t>(total);
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  if (index >= kMaxVariables) throw std::invalid_argument("variable index out of range");
  if (power > kMaxExponent) overflow();
  Monomial m;
  m.exps_[index] = static_cast<std::uint8_t>(power);
  m.degree_ = static_cast<std::uint16_t>(power);
  return m;
}

unsigned Monomial::degree_in(std::size_t lo, std::size_t hi) const {
  unsigned s = 0;
  for (std::size_t i = lo; i < hi; ++i) s += exps_[i];
  return s;
}

std::size_t Monomial::support_end() const {
  for (std::size_t i = kMaxVariables; i-- > 0;)
    if (exps_[i] != 0) return i + 1;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned{exps_[i]} + o.exps_[i];
    if (e > kMaxExponent) overflow();
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ + o.degree_);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - o.exps_[i]);
  r.degree_ = static_cast<std::uint16_t>(degree_ - o.degree_);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree_ > o.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] != 0 && o.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  unsigned total = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    total += r.exps_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(total);
  return r;
}

Monomial Monomial::with(std::size_t i, unsigned e) const {
  if (e > kMaxExponent) overflow();
  Monomial r = *this;
  r.degree_ = static_cast<std::uint16_t>(r.degree_ - r.exps_[i] + e);
  r.exps_[i] = static_cast<std::uint8_t>(e);
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<Monomial> monomials_of_degree(std::size_t lo, std::size_t hi, unsigned d) {
  std::vector<Monomial> out;
  if (lo >= hi) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> e(hi, 0);
  // Recursive composition of d into hi - lo parts, largest first exponent first.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == hi) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(rec, lo, d);
  return out;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case Kind::Grevlex:
      return grevlex_range(a, b, 0, kMaxVariables);
    case Kind::Lex:
      for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::Elimination: {
      int c = grevlex_range(a, b, 0, split);
      if (c != 0) return c;
      return grevlex_range(a, b, split, kMaxVariables);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Elimination:
      return "elim(" + std::to_string(split) + ")";
  }
  return "?";
}

}  // namespace seshadri
