#include "seshadri/groebner/ideal.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace seshadri {

struct Ideal::Cache {
  std::mutex mu;
  std::vector<std::pair<MonomialOrder, std::unique_ptr<const std::vector<Poly>>>> entries;
};

Ideal::Ideal(std::size_t nvars) : nvars_(nvars), cache_(std::make_shared<Cache>()) {
  if (nvars > kMaxVariables) throw std::invalid_argument("too many variables");
}

Ideal::Ideal(std::size_t nvars, const std::vector<Poly>& gens) : Ideal(nvars) {
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw std::invalid_argument("generator lives in a different ring");
    if (g.is_zero()) continue;
    gens_.push_back(g.order() == MonomialOrder::grevlex() ? g : g.with_order(MonomialOrder::grevlex()));
    homogeneous_ = homogeneous_ && g.is_homogeneous();
  }
}

Ideal Ideal::unit(std::size_t nvars) { return Ideal(nvars, {Poly::constant(nvars, Rational(1))}); }

const std::vector<Poly>& Ideal::basis(const MonomialOrder& order) const {
  {
    std::lock_guard lock(cache_->mu);
    for (const auto& [o, b] : cache_->entries)
      if (o == order) return *b;
  }
  auto computed = std::make_unique<const std::vector<Poly>>(groebner_basis(gens_, order));
  std::lock_guard lock(cache_->mu);
  for (const auto& [o, b] : cache_->entries)
    if (o == order) return *b;
  cache_->entries.emplace_back(order, std::move(computed));
  return *cache_->entries.back().second;
}

Poly Ideal::normal_form(const Poly& f, const MonomialOrder& order) const {
  if (f.nvars() != nvars_) throw std::invalid_argument("polynomial lives in a different ring");
  return seshadri::normal_form(f.order() == order ? f : f.with_order(order), basis(order));
}

bool Ideal::contains(const Poly& f) const { return normal_form(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  if (other.nvars_ != nvars_) throw std::invalid_argument("ideals live in different rings");
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Poly& g) { return contains(g); });
}

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b.front().is_constant();
}

bool same_ideal(const Ideal& a, const Ideal& b) { return a.contains(b) && b.contains(a); }

Ideal operator+(const Ideal& a, const Ideal& b) { return with_generators(a, b.generators()); }

Ideal with_generators(const Ideal& ideal, const std::vector<Poly>& extra) {
  std::vector<Poly> gens = ideal.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(ideal.nvars(), gens);
}

namespace {

std::vector<int> shift_table(std::size_t n, int delta, int dropped = -1) {
  std::vector<int> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<int>(i) == dropped ? -1 : static_cast<int>(i) + delta;
  return t;
}

std::vector<int> swap_table(std::size_t n, std::size_t a, std::size_t b) {
  std::vector<int> t = shift_table(n, 0);
  std::swap(t[a], t[b]);
  return t;
}

// Highest power of x_var dividing every term.
unsigned variable_content(const Poly& g, std::size_t var) {
  unsigned e = Monomial::kMaxExponent;
  for (const auto& t : g.terms()) e = std::min(e, t.monomial[var]);
  return g.is_zero() ? 0 : e;
}

Poly divide_by_variable(const Poly& g, std::size_t var, unsigned e) {
  std::vector<Term<Rational>> terms;
  for (const auto& t : g.terms()) terms.push_back({t.monomial.with(var, t.monomial[var] - e), t.coeff});
  return Poly(g.nvars(), std::move(terms), g.order());
}

// Single variable up to a scalar, or -1.
int as_variable(const Poly& f) {
  if (f.size() != 1 || f.total_degree() != 1) return -1;
  const Monomial& m = f.leading_monomial();
  for (std::size_t i = 0; i < f.nvars(); ++i)
    if (m[i] == 1) return static_cast<int>(i);
  return -1;
}

// Grevlex basis of a homogeneous ideal with x_var moved last, each element
// divided by x_var^min(content, cap); moved back afterwards.
Ideal strip_variable(const Ideal& ideal, std::size_t var, unsigned cap) {
  const std::size_t n = ideal.nvars();
  const std::size_t last = n - 1;
  auto table = swap_table(n, var, last);
  std::vector<Poly> moved;
  for (const auto& g : ideal.generators()) moved.push_back(g.remap(n, table));
  std::vector<Poly> out;
  for (const auto& g : groebner_basis(moved, MonomialOrder::grevlex())) {
    unsigned e = std::min(variable_content(g, last), cap);
    out.push_back(divide_by_variable(g, last, e).remap(n, table));
  }
  return Ideal(n, out);
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("ideals live in different rings");
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  const std::size_t n = a.nvars();
  if (a.is_zero() || b.is_zero()) return Ideal(n);
  if (n + 1 > kMaxVariables) throw std::invalid_argument("intersection needs one spare variable");
  const auto up = shift_table(n, 1);
  const MonomialOrder elim = MonomialOrder::elimination(1);
  Poly t = Poly::variable(n + 1, 0, elim);
  Poly one_minus_t = Poly::constant(n + 1, Rational(1), elim) - t;
  std::vector<Poly> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.remap(n + 1, up).with_order(elim));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.remap(n + 1, up).with_order(elim));
  const auto down = shift_table(n + 1, -1, 0);
  std::vector<Poly> out;
  for (const auto& g : groebner_basis(gens, elim))
    if (g.degree_in(0) == 0) out.push_back(g.remap(n, down).with_order(MonomialOrder::grevlex()));
  return Ideal(n, out);
}

Ideal quotient(const Ideal& j, const Poly& f, QuotientRoute route) {
  const std::size_t n = j.nvars();
  if (f.nvars() != n) throw std::invalid_argument("polynomial lives in a different ring");
  if (f.is_zero() || j.contains(f)) return Ideal::unit(n);
  int var = as_variable(f);
  if (route == QuotientRoute::Automatic && var >= 0 && j.is_homogeneous())
    return strip_variable(j, static_cast<std::size_t>(var), 1);
  Poly fg = f.with_order(MonomialOrder::grevlex());
  Ideal both = intersect(j, Ideal(n, {fg}));
  std::vector<Poly> out;
  for (const auto& g : both.generators()) out.push_back(divide_exact(g, fg));
  return Ideal(n, out);
}

Ideal ideal_quotient(const Ideal& j, const Ideal& i, QuotientRoute route) {
  if (j.nvars() != i.nvars()) throw std::invalid_argument("ideals live in different rings");
  Ideal result = Ideal::unit(j.nvars());
  for (const auto& f : i.generators()) {
    result = intersect(result, quotient(j, f, route));
  }
  return result;
}

Ideal saturate_by_variable(const Ideal& ideal, std::size_t var) {
  if (var >= ideal.nvars()) throw std::invalid_argument("variable index out of range");
  if (ideal.is_homogeneous()) return strip_variable(ideal, var, Monomial::kMaxExponent);
  Poly x = Poly::variable(ideal.nvars(), var);
  Ideal cur = ideal;
  while (true) {
    Ideal next = quotient(cur, x);
    if (cur.contains(next)) return cur;
    cur = next;
  }
}

Ideal saturate(const Ideal& ideal, const Ideal& j, QuotientRoute route) {
  Ideal cur = ideal;
  while (true) {
    Ideal next = ideal_quotient(cur, j, route);
    if (cur.contains(next)) return cur;
    cur = next;
  }
}

Ideal variable_ideal(std::size_t nvars, std::size_t lo, std::size_t hi) {
  std::vector<Poly> gens;
  for (std::size_t i = lo; i < hi; ++i) gens.push_back(Poly::variable(nvars, i));
  return Ideal(nvars, gens);
}

std::vector<Poly> graded_piece(const Ideal& ideal, int d) {
  if (d <= 0) throw std::invalid_argument("graded_piece needs a positive degree");
  if (!ideal.is_homogeneous()) throw std::invalid_argument("graded_piece needs a homogeneous ideal");
  const auto& g = ideal.basis();
  std::vector<Poly> out;
  for (const Monomial& m : monomials_of_degree(0, ideal.nvars(), static_cast<unsigned>(d))) {
    bool leading = std::any_of(g.begin(), g.end(), [&](const Poly& b) { return b.leading_monomial().divides(m); });
    if (!leading) continue;
    Poly mono = Poly::monomial(ideal.nvars(), Rational(1), m);
    out.push_back(mono - normal_form(mono, g));
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    return MonomialOrder::grevlex().compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return out;
}

}  // namespace seshadri
