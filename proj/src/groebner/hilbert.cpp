#include "seshadri/groebner/hilbert.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace seshadri {

namespace {

using Series = std::vector<Integer>;

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

Series add(Series a, const Series& b, unsigned shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  trim(a);
  return a;
}

Series times_one_minus_power(const Series& a, unsigned e) {
  Series out = a;
  Series shifted(e, 0);
  for (const auto& c : a) shifted.push_back(-c);
  return add(out, shifted, 0);
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> kept;
  for (const auto& m : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) kept.push_back(m);
  }
  gens = std::move(kept);
}

Series numerator(std::vector<Monomial> gens) {
  minimalize(gens);
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};

  bool coprime = true;
  std::array<unsigned, kMaxVariables> count{};
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t v = 0; v < kMaxVariables; ++v)
      if (gens[a][v] > 0) ++count[v];
    for (std::size_t b = a + 1; b < gens.size() && coprime; ++b) coprime = gens[a].coprime(gens[b]);
  }
  if (coprime) {
    Series s = {1};
    for (const auto& m : gens) s = times_one_minus_power(s, m.degree());
    return s;
  }

  std::size_t var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  std::vector<unsigned> exps;
  for (const auto& m : gens)
    if (m[var] > 0) exps.push_back(m[var]);
  std::sort(exps.begin(), exps.end());
  unsigned e = exps[exps.size() / 2];
  if (e == exps.back()) e = exps.front();
  Monomial pivot = Monomial::variable(var, e);

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  // m : pivot = m / gcd(m, pivot)
  std::vector<Monomial> colon;
  for (const auto& m : gens) colon.push_back(m.with(var, m[var] > e ? m[var] - e : 0));
  return add(numerator(std::move(with_pivot)), numerator(std::move(colon)), e);
}

}  // namespace

std::vector<Integer> hilbert_numerator(std::vector<Monomial> gens) { return numerator(std::move(gens)); }

HilbertData hilbert_data_from_numerator(std::vector<Integer> num, std::size_t nvars) {
  trim(num);
  HilbertData h;
  std::size_t krull = nvars;
  while (!num.empty() && krull > 0) {
    Integer at_one = 0;
    for (const auto& c : num) at_one += c;
    if (at_one != 0) break;
    Series q(num.size() - 1);
    Integer acc = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) {
      acc += num[i];
      q[i] = acc;
    }
    num = std::move(q);
    trim(num);
    --krull;
  }
  h.numerator = num;
  if (num.empty() || krull == 0) return h;
  h.dimension = static_cast<int>(krull) - 1;
  for (const auto& c : num) h.degree += c;

  // Sum_i h_i C(t - i + D - 1, D - 1) expanded in powers of t.
  const std::size_t k = krull - 1;
  std::vector<Rational> poly(k + 1, 0);
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i] == 0) continue;
    std::vector<Rational> term = {Rational(1)};
    for (std::size_t j = 0; j < k; ++j) {
      // Multiply by (t + k - i - j) / (j + 1).
      Rational c(static_cast<long>(k) - static_cast<long>(i) - static_cast<long>(j));
      Rational inv(1, static_cast<long>(j + 1));
      std::vector<Rational> next(term.size() + 1, 0);
      for (std::size_t a = 0; a < term.size(); ++a) {
        next[a] += term[a] * c * inv;
        next[a + 1] += term[a] * inv;
      }
      term = std::move(next);
    }
    for (std::size_t a = 0; a < term.size(); ++a) poly[a] += Rational(num[i]) * term[a];
  }
  while (!poly.empty() && sgn(poly.back()) == 0) poly.pop_back();
  h.polynomial = std::move(poly);
  return h;
}

Integer HilbertData::hilbert_function(int d) const {
  if (d < 0) return 0;
  const int krull = dimension + 1;
  if (krull == 0) return d < static_cast<int>(numerator.size()) ? numerator[d] : Integer(0);
  Integer sum = 0;
  for (std::size_t i = 0; i < numerator.size() && static_cast<int>(i) <= d; ++i) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(d - static_cast<int>(i) + krull - 1),
                 static_cast<unsigned long>(krull - 1));
    sum += numerator[i] * b;
  }
  return sum;
}

Rational HilbertData::hilbert_polynomial(const Rational& t) const {
  Rational v = 0, power = 1;
  for (const auto& c : polynomial) {
    v += c * power;
    power *= t;
  }
  return v;
}

HilbertData hilbert_data(const Ideal& ideal, const MonomialOrder& order) {
  if (!ideal.is_homogeneous()) throw std::invalid_argument("hilbert_data needs a homogeneous ideal");
  std::vector<Monomial> leads;
  for (const auto& g : ideal.basis(order)) leads.push_back(g.leading_monomial());
  return hilbert_data_from_numerator(hilbert_numerator(std::move(leads)), ideal.nvars());
}

}  // namespace seshadri
