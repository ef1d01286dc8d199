#include "seshadri/poly/scalar.hpp"

#include <cctype>
#include <stdexcept>

#include "seshadri/error.hpp"

namespace seshadri {

thread_local std::uint32_t Zp::modulus_ = 0;

std::string to_string(const Rational& c) { return c.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return InputError("malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  std::size_t slash = s.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t k = from; k < to; ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits(i, s.size())) throw bad();
  } else if (!digits(i, slash) || !digits(slash + 1, s.size())) {
    throw bad();
  }
  Rational r;
  if (r.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) throw bad();
  if (sgn(r.get_den()) == 0) throw InputError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

Zp::Zp(std::int64_t v) {
  const std::uint32_t q = modulus_;
  if (q == 0) throw std::logic_error("Zp used without an active ModulusScope");
  std::int64_t r = v % static_cast<std::int64_t>(q);
  if (r < 0) r += q;
  v_ = static_cast<std::uint32_t>(r);
}

std::uint32_t Zp::modulus() { return modulus_; }

Zp Zp::operator+(Zp o) const {
  Zp r;
  std::uint64_t s = std::uint64_t{v_} + o.v_;
  r.v_ = static_cast<std::uint32_t>(s >= modulus_ ? s - modulus_ : s);
  return r;
}

Zp Zp::operator-(Zp o) const {
  Zp r;
  r.v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t{v_} + modulus_ - o.v_);
  return r;
}

Zp Zp::operator*(Zp o) const {
  Zp r;
  r.v_ = static_cast<std::uint32_t>((std::uint64_t{v_} * o.v_) % modulus_);
  return r;
}

Zp Zp::operator-() const {
  Zp r;
  r.v_ = v_ == 0 ? 0 : modulus_ - v_;
  return r;
}

Zp Zp::pow(std::uint64_t e) const {
  Zp base = *this;
  Zp acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Zp Zp::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in F_q");
  return pow(modulus_ - 2);
}

Zp Zp::operator/(Zp o) const { return *this * o.inverse(); }

std::string to_string(Zp c) { return std::to_string(c.value()); }

ModulusScope::ModulusScope(std::uint32_t q) : previous_(Zp::modulus_) {
  if (!is_prime(q)) throw InputError("modulus " + std::to_string(q) + " is not prime");
  Zp::modulus_ = q;
}

ModulusScope::~ModulusScope() { Zp::modulus_ = previous_; }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Zp reduce_mod(const Rational& c, std::uint32_t q) {
  mpz_class qq(q);
  mpz_class num = c.get_num() % qq;
  mpz_class den = c.get_den() % qq;
  if (den == 0)
    throw InputError("bad reduction: " + c.get_str() + " has denominator divisible by " +
                     std::to_string(q));
  if (num < 0) num += qq;
  if (den < 0) den += qq;
  return Zp(static_cast<std::int64_t>(num.get_si())) / Zp(static_cast<std::int64_t>(den.get_si()));
}

}  // namespace seshadri
