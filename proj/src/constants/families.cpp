#include "seshadri/constants/families.hpp"

#include <stdexcept>

namespace seshadri {

std::size_t plucker_index(unsigned k, unsigned i, unsigned j) {
  if (!(i < j && j < k)) throw std::invalid_argument("plucker_index needs i < j < k");
  std::size_t idx = 0;
  for (unsigned a = 0; a < i; ++a) idx += k - 1 - a;
  return idx + (j - i - 1);
}

Ideal plucker_ideal(unsigned k) {
  if (k < 2) throw std::invalid_argument("Gr(2, k) needs k >= 2");
  const std::size_t n = k * (k - 1) / 2;
  if (n > kMaxVariables) throw std::invalid_argument("too many Plücker coordinates");
  auto p = [&](unsigned i, unsigned j) { return Poly::variable(n, plucker_index(k, i, j)); };
  std::vector<Poly> gens;
  for (unsigned a = 0; a < k; ++a)
    for (unsigned b = a + 1; b < k; ++b)
      for (unsigned c = b + 1; c < k; ++c)
        for (unsigned d = c + 1; d < k; ++d) gens.push_back(p(a, b) * p(c, d) - p(a, c) * p(b, d) + p(a, d) * p(b, c));
  return Ideal(n, gens);
}

std::vector<Rational> wedge(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  if (u.size() != v.size()) throw std::invalid_argument("wedge of vectors of different length");
  const auto k = static_cast<unsigned>(u.size());
  std::vector<Rational> out(k * (k - 1) / 2);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = i + 1; j < k; ++j) out[plucker_index(k, i, j)] = u[i] * v[j] - u[j] * v[i];
  return out;
}

Poly random_form_through(const std::vector<Rational>& point, unsigned degree, Rng& rng, int bound) {
  const std::size_t n = point.size();
  std::size_t pivot = 0;
  while (pivot < n && point[pivot] == 0) ++pivot;
  if (pivot == n) throw std::invalid_argument("zero point");
  Poly f = random_form(n, 0, n, degree, rng, bound);
  Rational pk = 1;
  for (unsigned i = 0; i < degree; ++i) pk *= point[pivot];
  return f - Poly::monomial(n, f.evaluate(point) / pk, Monomial::variable(pivot, degree));
}

}  // namespace seshadri
