#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "seshadri/poly/matrix.hpp"
#include "seshadri/poly/monomial.hpp"
#include "seshadri/poly/scalar.hpp"

namespace seshadri {

template <class K>
struct Term {
  Monomial monomial;
  K coeff;
};

/// Sparse multivariate polynomial over an exact field K.
///
/// Terms are stored strictly decreasing in the polynomial's monomial order,
/// with no zero coefficients and no repeated monomials. Binary operations
/// require both operands to share the variable count and the order; changing
/// the order is explicit through with_order().
template <class K>
class Polynomial {
 public:
  using Scalar = K;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars, MonomialOrder order = {}) : nvars_(nvars), order_(order) {
    check_nvars();
  }
  Polynomial(std::size_t nvars, std::vector<Term<K>> terms, MonomialOrder order = {})
      : nvars_(nvars), order_(order), terms_(std::move(terms)) {
    check_nvars();
    for (const auto& t : terms_)
      if (t.monomial.support_end() > nvars_) throw std::invalid_argument("monomial outside the ring");
    normalize();
  }

  static Polynomial constant(std::size_t nvars, const K& c, MonomialOrder order = {}) {
    return monomial(nvars, c, Monomial{}, order);
  }
  static Polynomial variable(std::size_t nvars, std::size_t i, MonomialOrder order = {}) {
    if (i >= nvars) throw std::invalid_argument("variable index out of range");
    return monomial(nvars, K(1), Monomial::variable(i), order);
  }
  static Polynomial monomial(std::size_t nvars, const K& c, const Monomial& m, MonomialOrder order = {}) {
    Polynomial p(nvars, order);
    if (m.support_end() > nvars) throw std::invalid_argument("monomial outside the ring");
    if (!seshadri::is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  const Term<K>& leading_term() const { return nonzero().terms_.front(); }
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const K& leading_coefficient() const { return leading_term().coeff; }

  /// Maximal total degree of a term; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
    return d;
  }
  /// Minimal total degree of a term; -1 for the zero polynomial.
  int low_degree() const {
    if (terms_.empty()) return -1;
    int d = static_cast<int>(terms_.front().monomial.degree());
    for (const auto& t : terms_) d = std::min(d, static_cast<int>(t.monomial.degree()));
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
    return true;
  }
  /// Exponent of variable i in the highest power that occurs.
  unsigned degree_in(std::size_t i) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial[i]);
    return d;
  }

  Polynomial with_order(const MonomialOrder& order) const {
    Polynomial p = *this;
    p.order_ = order;
    p.sort_terms();
    return p;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  Polynomial operator+(const Polynomial& o) const { return combine(o, false); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, true); }

  Polynomial operator*(const Polynomial& o) const {
    check_compatible(o);
    Polynomial p(nvars_, order_);
    if (is_zero() || o.is_zero()) return p;
    p.terms_.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) p.terms_.push_back({a.monomial * b.monomial, K(a.coeff * b.coeff)});
    p.normalize();
    return p;
  }

  Polynomial operator*(const K& c) const { return scaled(c, Monomial{}); }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// c * m * (*this).
  Polynomial scaled(const K& c, const Monomial& m) const {
    Polynomial p(nvars_, order_);
    if (seshadri::is_zero(c)) return p;
    if (m.support_end() > nvars_) throw std::invalid_argument("monomial outside the ring");
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, K(t.coeff * c)});
    return p;
  }

  /// *this - c * m * g, computed by a single merge.
  Polynomial minus_scaled(const K& c, const Monomial& m, const Polynomial& g) const {
    check_compatible(g);
    Polynomial out(nvars_, order_);
    out.terms_.reserve(terms_.size() + g.terms_.size());
    auto a = terms_.begin();
    auto b = g.terms_.begin();
    while (a != terms_.end() || b != g.terms_.end()) {
      if (b == g.terms_.end()) {
        out.terms_.push_back(*a++);
        continue;
      }
      Monomial mb = b->monomial * m;
      int cmp = a == terms_.end() ? -1 : order_.compare(a->monomial, mb);
      if (cmp > 0) {
        out.terms_.push_back(*a++);
      } else if (cmp < 0) {
        out.terms_.push_back({mb, K(-(c * b->coeff))});
        ++b;
      } else {
        K v = a->coeff - c * b->coeff;
        if (!seshadri::is_zero(v)) out.terms_.push_back({mb, std::move(v)});
        ++a;
        ++b;
      }
    }
    return out;
  }

  /// All terms but the leading one.
  Polynomial tail() const {
    Polynomial p(nvars_, order_);
    if (!terms_.empty()) p.terms_.assign(terms_.begin() + 1, terms_.end());
    return p;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * (K(1) / leading_coefficient());
  }

  K evaluate(std::span<const K> point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong length");
    K sum(0);
    for (const auto& t : terms_) {
      K v = t.coeff;
      for (std::size_t i = 0; i < nvars_ && !seshadri::is_zero(v); ++i)
        for (unsigned e = 0; e < t.monomial[i]; ++e) v *= point[i];
      sum += v;
    }
    return sum;
  }
  K evaluate(const std::vector<K>& point) const { return evaluate(std::span<const K>(point)); }

  /// f(M x): variable i is replaced by the linear form sum_j M(i, j) x_j.
  /// Throws std::invalid_argument on a size mismatch and std::domain_error when M is singular.
  Polynomial substitute_linear(const Matrix<K>& m) const {
    if (m.rows() != nvars_ || m.cols() != nvars_) throw std::invalid_argument("substitution matrix size mismatch");
    if (rank(m) != nvars_) throw std::domain_error("singular substitution matrix");
    std::vector<std::vector<Polynomial>> powers(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      Polynomial form(nvars_, order_);
      for (std::size_t j = 0; j < nvars_; ++j)
        if (!seshadri::is_zero(m(i, j))) form.terms_.push_back({Monomial::variable(j), m(i, j)});
      form.sort_terms();
      powers[i].push_back(constant(nvars_, K(1), order_));
      powers[i].push_back(std::move(form));
    }
    auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
      while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * powers[i][1]);
      return powers[i][e];
    };
    Polynomial result(nvars_, order_);
    for (const auto& t : terms_) {
      Polynomial prod = constant(nvars_, t.coeff, order_);
      for (std::size_t i = 0; i < nvars_; ++i)
        if (t.monomial[i] > 0) prod = prod * power(i, t.monomial[i]);
      result += prod;
    }
    return result;
  }

  Polynomial derivative(std::size_t i) const {
    Polynomial p(nvars_, order_);
    for (const auto& t : terms_) {
      unsigned e = t.monomial[i];
      if (e == 0) continue;
      p.terms_.push_back({t.monomial.with(i, e - 1), K(t.coeff * K(static_cast<std::int64_t>(e)))});
    }
    p.normalize();
    return p;
  }

  /// Terms of total degree exactly d.
  Polynomial homogeneous_part(unsigned d) const {
    Polynomial p(nvars_, order_);
    for (const auto& t : terms_)
      if (t.monomial.degree() == d) p.terms_.push_back(t);
    return p;
  }

  /// Terms of total degree strictly below d.
  Polynomial truncated_below(unsigned d) const {
    Polynomial p(nvars_, order_);
    for (const auto& t : terms_)
      if (t.monomial.degree() < d) p.terms_.push_back(t);
    return p;
  }

  /// Moves variable i to index target[i] in a ring with new_nvars variables.
  /// A negative target drops the variable; it must not occur in any term.
  Polynomial remap(std::size_t new_nvars, std::span<const int> target) const {
    if (target.size() != nvars_) throw std::invalid_argument("remap table size mismatch");
    Polynomial p(new_nvars, order_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      std::vector<unsigned> e(new_nvars, 0);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (t.monomial[i] == 0) continue;
        if (target[i] < 0 || static_cast<std::size_t>(target[i]) >= new_nvars)
          throw std::invalid_argument("remap drops a variable that occurs");
        e[target[i]] += t.monomial[i];
      }
      p.terms_.push_back({Monomial(e), t.coeff});
    }
    p.normalize();
    return p;
  }

  /// Sets variable i to 1 and removes it from the ring.
  Polynomial dehomogenize(std::size_t i) const {
    Polynomial p(nvars_ - 1, order_);
    for (const auto& t : terms_) {
      std::vector<unsigned> e;
      for (std::size_t k = 0; k < nvars_; ++k)
        if (k != i) e.push_back(t.monomial[k]);
      p.terms_.push_back({Monomial(e), t.coeff});
    }
    p.normalize();
    return p;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    Polynomial tmp;
    const Polynomial* rhs = &b;
    if (!(a.order_ == b.order_)) {
      tmp = b.with_order(a.order_);
      rhs = &tmp;
    }
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].monomial == rhs->terms_[i].monomial) || a.terms_[i].coeff != rhs->terms_[i].coeff)
        return false;
    return true;
  }

 private:
  const Polynomial& nonzero() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    return *this;
  }

  void check_nvars() const {
    if (nvars_ > kMaxVariables) throw std::invalid_argument("too many variables");
  }

  void check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomials live in different rings");
    if (!(order_ == o.order_)) throw std::invalid_argument("polynomials use different monomial orders");
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(),
              [this](const Term<K>& a, const Term<K>& b) { return order_.compare(a.monomial, b.monomial) > 0; });
  }

  void normalize() {
    sort_terms();
    std::vector<Term<K>> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().monomial == t.monomial) {
        merged.back().coeff += t.coeff;
      } else {
        if (!merged.empty() && seshadri::is_zero(merged.back().coeff)) merged.pop_back();
        merged.push_back(std::move(t));
      }
    }
    if (!merged.empty() && seshadri::is_zero(merged.back().coeff)) merged.pop_back();
    terms_ = std::move(merged);
  }

  Polynomial combine(const Polynomial& o, bool subtract) const {
    check_compatible(o);
    Polynomial out(nvars_, order_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      int cmp = a == terms_.end() ? -1 : b == o.terms_.end() ? 1 : order_.compare(a->monomial, b->monomial);
      if (cmp > 0) {
        out.terms_.push_back(*a++);
      } else if (cmp < 0) {
        out.terms_.push_back({b->monomial, subtract ? K(-b->coeff) : b->coeff});
        ++b;
      } else {
        K v = subtract ? K(a->coeff - b->coeff) : K(a->coeff + b->coeff);
        if (!seshadri::is_zero(v)) out.terms_.push_back({a->monomial, std::move(v)});
        ++a;
        ++b;
      }
    }
    return out;
  }

  std::size_t nvars_ = 0;
  MonomialOrder order_{};
  std::vector<Term<K>> terms_;
};

using Poly = Polynomial<Rational>;
using PolyZp = Polynomial<Zp>;

/// Coefficient-wise reduction mod q; the result uses the active ModulusScope.
PolyZp reduce_mod(const Poly& f, std::uint32_t q);

}  // namespace seshadri
