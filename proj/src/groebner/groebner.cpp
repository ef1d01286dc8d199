#include "seshadri/groebner/groebner.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace seshadri {

namespace {

// A critical pair (i, j), or, with j == kAnnihilator, the element u * g_i that
// truncation forces into the ideal.
struct Pair {
  static constexpr std::size_t kAnnihilator = std::numeric_limits<std::size_t>::max();
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  unsigned sugar;
};

const Poly* find_divisor(const Monomial& m, const std::vector<const Poly*>& divisors) {
  for (const Poly* g : divisors)
    if (g->leading_monomial().divides(m)) return g;
  return nullptr;
}

Poly reduce(Poly f, const std::vector<const Poly*>& divisors, unsigned truncate) {
  if (truncate > 0) f = f.truncated_below(truncate);
  std::vector<Term<Rational>> rest;
  const std::size_t nvars = f.nvars();
  const MonomialOrder order = f.order();
  while (!f.is_zero()) {
    const auto& lt = f.leading_term();
    if (const Poly* g = find_divisor(lt.monomial, divisors)) {
      Rational c = lt.coeff / g->leading_coefficient();
      f = f.minus_scaled(c, lt.monomial / g->leading_monomial(), *g);
    } else {
      rest.push_back(lt);
      f = f.tail();
    }
  }
  return Poly(nvars, std::move(rest), order);
}

class Buchberger {
 public:
  Buchberger(std::size_t nvars, const MonomialOrder& order, const GroebnerOptions& options)
      : nvars_(nvars), order_(order), options_(options) {
    if (options_.truncate > 0 && !order_.degree_compatible())
      throw std::invalid_argument("truncated Groebner bases need a degree-compatible order");
  }

  std::vector<Poly> run(std::vector<Poly> gens) {
    std::sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) {
      return order_.less(a.leading_monomial(), b.leading_monomial());
    });
    for (auto& g : gens) {
      Poly h = reduce(g, active_polys(), options_.truncate);
      if (h.is_zero()) continue;
      if (h.is_constant()) return unit();
      install(h.monic(), static_cast<unsigned>(h.total_degree()));
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        return order_.less(a.lcm, b.lcm);
      });
      Pair p = *best;
      *best = pairs_.back();
      pairs_.pop_back();
      Poly s = p.j == Pair::kAnnihilator ? basis_[p.i].scaled(Rational(1), p.lcm / basis_[p.i].leading_monomial())
                                         : s_polynomial(basis_[p.i], basis_[p.j]);
      Poly h = reduce(std::move(s), active_polys(), options_.truncate);
      if (h.is_zero()) continue;
      if (h.is_constant()) return unit();
      install(h.monic(), p.sugar);
    }
    return finish();
  }

 private:
  std::vector<Poly> unit() const { return {Poly::constant(nvars_, Rational(1), order_)}; }

  const std::vector<const Poly*>& active_polys() {
    active_ptrs_.clear();
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) active_ptrs_.push_back(&basis_[k]);
    return active_ptrs_;
  }

  // Gebauer-Moeller update for a new element h.
  void install(Poly h, unsigned sugar) {
    const std::size_t hi = basis_.size();
    const Monomial& lh = h.leading_monomial();

    std::vector<Pair> fresh;
    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k]) fresh.push_back({k, hi, Monomial::lcm(basis_[k].leading_monomial(), lh), pair_sugar(k, h, sugar)});

    // Chain criterion among the new pairs: keep (k, h) unless another new pair's lcm divides its lcm.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Pair& p = fresh[a];
      if (basis_[p.i].leading_monomial().coprime(lh)) {
        kept.push_back(p);
        continue;
      }
      bool redundant = false;
      for (std::size_t b = 0; b < fresh.size() && !redundant; ++b) {
        if (a == b || !fresh[b].lcm.divides(p.lcm)) continue;
        // Among pairs with equal lcm, keep the first.
        redundant = !(fresh[b].lcm == p.lcm) || b < a;
      }
      if (!redundant) kept.push_back(p);
    }

    // Drop old pairs made redundant by h.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (p.j == Pair::kAnnihilator || !lh.divides(p.lcm)) return false;
      Monomial li = Monomial::lcm(basis_[p.i].leading_monomial(), lh);
      Monomial lj = Monomial::lcm(basis_[p.j].leading_monomial(), lh);
      return !(li == p.lcm) && !(lj == p.lcm);
    });

    // Product criterion.
    for (const Pair& p : kept)
      if (!basis_[p.i].leading_monomial().coprime(lh)) pairs_.push_back(p);

    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k] && lh.divides(basis_[k].leading_monomial())) active_[k] = false;

    if (options_.truncate > 0) {
      unsigned d = lh.degree();
      unsigned k = options_.truncate - d;
      for (const Monomial& u : monomials_of_degree(0, nvars_, k))
        pairs_.push_back({hi, Pair::kAnnihilator, u * lh, sugar + k});
    }

    basis_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);
  }

  unsigned pair_sugar(std::size_t k, const Poly& h, unsigned h_sugar) const {
    Monomial l = Monomial::lcm(basis_[k].leading_monomial(), h.leading_monomial());
    unsigned a = sugar_[k] + l.degree() - basis_[k].leading_monomial().degree();
    unsigned b = h_sugar + l.degree() - h.leading_monomial().degree();
    return std::max(a, b);
  }

  std::vector<Poly> finish() {
    std::vector<Poly> g;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) g.push_back(basis_[k]);
    std::sort(g.begin(), g.end(), [&](const Poly& a, const Poly& b) {
      return order_.less(a.leading_monomial(), b.leading_monomial());
    });
    // Tail reduction; leading monomials are already minimal.
    for (std::size_t k = 0; k < g.size(); ++k) {
      std::vector<const Poly*> others;
      for (std::size_t l = 0; l < g.size(); ++l)
        if (l != k) others.push_back(&g[l]);
      const auto& lt = g[k].leading_term();
      Poly t = reduce(g[k].tail(), others, options_.truncate);
      g[k] = Poly::monomial(nvars_, lt.coeff, lt.monomial, order_) + t;
      g[k] = g[k].monic();
    }
    return g;
  }

  std::size_t nvars_;
  MonomialOrder order_;
  GroebnerOptions options_;
  std::vector<Poly> basis_;
  std::vector<unsigned> sugar_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::vector<const Poly*> active_ptrs_;
};

}  // namespace

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const MonomialOrder& order,
                                 const GroebnerOptions& options) {
  std::vector<Poly> work;
  std::size_t nvars = 0;
  for (const auto& g : gens) {
    if (!work.empty() && g.nvars() != nvars) throw std::invalid_argument("generators live in different rings");
    nvars = g.nvars();
    Poly h = g.order() == order ? g : g.with_order(order);
    if (options.truncate > 0) h = h.truncated_below(options.truncate);
    if (!h.is_zero()) work.push_back(std::move(h));
  }
  if (work.empty()) return {};
  return Buchberger(nvars, order, options).run(std::move(work));
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, unsigned truncate) {
  std::vector<const Poly*> divisors;
  for (const auto& g : basis) {
    if (g.nvars() != f.nvars() || !(g.order() == f.order()))
      throw std::invalid_argument("normal_form: basis and polynomial use different rings or orders");
    divisors.push_back(&g);
  }
  return reduce(f, divisors, truncate);
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Poly a = f.scaled(Rational(1) / f.leading_coefficient(), l / f.leading_monomial());
  return a.minus_scaled(Rational(1) / g.leading_coefficient(), l / g.leading_monomial(), g);
}

bool is_groebner_basis(const std::vector<Poly>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

Poly divide_exact(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  Poly rem = f;
  Poly quot(f.nvars(), f.order());
  const Poly gg = g.order() == f.order() ? g : g.with_order(f.order());
  while (!rem.is_zero()) {
    const auto& lt = rem.leading_term();
    if (!gg.leading_monomial().divides(lt.monomial)) throw std::domain_error("polynomial division is not exact");
    Rational c = lt.coeff / gg.leading_coefficient();
    Monomial m = lt.monomial / gg.leading_monomial();
    quot += Poly::monomial(f.nvars(), c, m, f.order());
    rem = rem.minus_scaled(c, m, gg);
  }
  return quot;
}

}  // namespace seshadri
