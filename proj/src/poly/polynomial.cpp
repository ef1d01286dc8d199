#include "seshadri/poly/polynomial.hpp"

#include "seshadri/poly/random.hpp"

namespace seshadri {

PolyZp reduce_mod(const Poly& f, std::uint32_t q) {
  std::vector<Term<Zp>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.monomial, reduce_mod(t.coeff, q)});
  return PolyZp(f.nvars(), std::move(terms), f.order());
}

Rational random_coefficient(Rng& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  return Rational(dist(rng));
}

Poly random_form(std::size_t nvars, std::size_t lo, std::size_t hi, unsigned degree, Rng& rng, int bound) {
  std::vector<Term<Rational>> terms;
  for (const auto& m : monomials_of_degree(lo, hi, degree)) terms.push_back({m, random_coefficient(rng, bound)});
  return Poly(nvars, std::move(terms));
}

}  // namespace seshadri
