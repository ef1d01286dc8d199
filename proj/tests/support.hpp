#pragma once

// Helpers shared by the unit tests.

#include <string>
#include <vector>

#include "seshadri/groebner/ideal.hpp"
#include "seshadri/poly/parser.hpp"
#include "seshadri/poly/random.hpp"

namespace testing {

using namespace seshadri;

inline Poly parse(const std::string& s, std::size_t nvars) { return parse_polynomial(s, indexed_names("x", nvars)); }

inline Ideal ideal(std::size_t nvars, const std::vector<std::string>& gens) {
  std::vector<Poly> g;
  for (const auto& s : gens) g.push_back(parse(s, nvars));
  return Ideal(nvars, g);
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

/// Hilbert function of Q[x]/I at degree d from the rank of the degree-d
/// Macaulay matrix of the generators. Uses no Groebner basis.
inline Integer macaulay_hilbert_function(const Ideal& ideal, unsigned d) {
  const std::size_t n = ideal.nvars();
  std::vector<Monomial> cols = monomials_of_degree(0, n, d);
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : ideal.generators()) {
    int dg = g.total_degree();
    if (dg > static_cast<int>(d)) continue;
    for (const auto& m : monomials_of_degree(0, n, d - static_cast<unsigned>(dg))) {
      std::vector<Rational> row(cols.size(), 0);
      for (const auto& t : g.terms()) {
        Monomial mm = t.monomial * m;
        for (std::size_t c = 0; c < cols.size(); ++c)
          if (cols[c] == mm) row[c] = t.coeff;
      }
      rows.push_back(std::move(row));
    }
  }
  Matrix<Rational> mat(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) mat(i, j) = rows[i][j];
  return Integer(static_cast<unsigned long>(cols.size() - rank(mat)));
}

/// Random ideal of `count` forms with degrees in [1, max_degree].
inline Ideal random_homogeneous_ideal(std::size_t nvars, std::size_t count, unsigned max_degree, Rng& rng,
                                      int bound = 3) {
  std::vector<Poly> gens;
  for (std::size_t k = 0; k < count; ++k) {
    unsigned d = 1 + static_cast<unsigned>(rng() % max_degree);
    // Sparse: keep a few random terms so bases stay small.
    Poly f = random_form(nvars, 0, nvars, d, rng, bound);
    std::vector<Term<Rational>> kept;
    for (const auto& t : f.terms())
      if (rng() % 3 == 0) kept.push_back(t);
    if (kept.empty() && !f.is_zero()) kept.push_back(f.terms().front());
    gens.emplace_back(nvars, kept);
  }
  return Ideal(nvars, gens);
}

}  // namespace testing
