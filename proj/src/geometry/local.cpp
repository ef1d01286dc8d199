#include "seshadri/geometry/local.hpp"

#include <algorithm>
#include <stdexcept>

namespace seshadri {

LocalRing::LocalRing(const Ideal& normalized) : nvars_(normalized.nvars() - 1) {
  for (const auto& g : normalized.generators()) {
    Poly a = dehomogenize(g);
    if (!a.is_zero()) gens_.push_back(std::move(a));
  }
}

Poly LocalRing::dehomogenize(const Poly& f) const {
  if (f.nvars() != nvars_ + 1) throw std::invalid_argument("polynomial lives in a different ring");
  return f.dehomogenize(0).with_order(MonomialOrder::grevlex());
}

const std::vector<Poly>& LocalRing::truncated_basis(unsigned m) const {
  {
    std::lock_guard lock(mu_);
    auto it = bases_.find(m);
    if (it != bases_.end()) return *it->second;
  }
  GroebnerOptions opt;
  opt.truncate = m;
  auto basis = std::make_unique<const std::vector<Poly>>(groebner_basis(gens_, MonomialOrder::grevlex(), opt));
  std::lock_guard lock(mu_);
  auto [it, inserted] = bases_.emplace(m, std::move(basis));
  return *it->second;
}

Integer LocalRing::colength(unsigned m) const {
  const auto& basis = truncated_basis(m);
  Integer count = 0;
  for (unsigned d = 0; d < m; ++d)
    for (const Monomial& mono : monomials_of_degree(0, nvars_, d)) {
      bool leading = std::any_of(basis.begin(), basis.end(),
                                 [&](const Poly& g) { return g.leading_monomial().divides(mono); });
      if (!leading) ++count;
    }
  return count;
}

bool LocalRing::contains(const Poly& f_aff, unsigned m) const {
  return normal_form(f_aff.with_order(MonomialOrder::grevlex()), truncated_basis(m), m).is_zero();
}

unsigned multiplicity_at_origin(const Ideal& normalized, int dimension, const LocalOptions& options) {
  if (dimension < 0) throw std::invalid_argument("multiplicity of an empty scheme");
  LocalRing local(normalized);
  std::vector<Integer> h = {0};  // h[m] = colength(m), with colength(0) = 0
  std::vector<Integer> diffs;
  const unsigned dim = static_cast<unsigned>(dimension);
  for (unsigned m = 1; m <= options.max_m; ++m) {
    h.push_back(local.colength(m));
    // (dim)-th backward difference at m, taking h = 0 at negative arguments.
    Integer d = 0;
    for (unsigned k = 0; k <= dim; ++k) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), dim, k);
      Integer v = k <= m ? h[m - k] : Integer(0);
      d += (k % 2 == 0 ? 1 : -1) * b * v;
    }
    diffs.push_back(d);
    if (diffs.size() < options.window) continue;
    bool stable = std::all_of(diffs.end() - options.window, diffs.end(), [&](const Integer& v) { return v == d; });
    if (!stable) continue;
    if (d <= 0) throw std::runtime_error("local dimension at p is smaller than dim X");
    return static_cast<unsigned>(d.get_ui());
  }
  throw std::runtime_error("multiplicity did not stabilize up to m = " + std::to_string(options.max_m));
}

unsigned multiplicity_at(const PointedVariety& x, const LocalOptions& options) {
  return multiplicity_at_origin(x.normalized, hilbert_data(x.normalized).dimension, options);
}

Order ord_at_origin(const Poly& f, const Ideal& normalized, const LocalRing& local, const LocalOptions& options) {
  if (!f.is_homogeneous()) throw std::invalid_argument("ord_at needs a homogeneous polynomial");
  if (normalized.contains(f)) return {0, true};
  Poly a = local.dehomogenize(f);
  std::vector<Rational> origin(local.nvars(), 0);
  if (!is_zero(a.evaluate(origin))) return {0, false};
  for (unsigned m = 2; m <= options.max_m; ++m)
    if (!local.contains(a, m)) return {m - 1, false};
  // f vanishes to order >= max_m: it must vanish on a component through p.
  Ideal q = quotient(normalized, f);
  std::vector<Rational> e0(normalized.nvars(), 0);
  e0[0] = 1;
  for (const auto& g : q.generators())
    if (!is_zero(g.evaluate(e0))) return {0, true};
  throw std::runtime_error("order of vanishing exceeds the cap m = " + std::to_string(options.max_m));
}

Order ord_at(const Poly& f, const PointedVariety& x, const LocalOptions& options) {
  LocalRing local(x.normalized);
  return ord_at_origin(x.to_normalized(f), x.normalized, local, options);
}

}  // namespace seshadri
