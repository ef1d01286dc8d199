#include "seshadri/geometry/pointed.hpp"

#include <algorithm>
#include <stdexcept>

#include "seshadri/error.hpp"

namespace seshadri {

std::vector<Rational> PointedVariety::direction_to_original(const std::vector<Rational>& v) const {
  if (v.size() != ambient_dim) throw std::invalid_argument("direction has wrong length");
  std::vector<Rational> y(nvars(), 0);
  std::copy(v.begin(), v.end(), y.begin() + 1);
  return frame.apply(y);
}

PointedVariety normalize_point(const Ideal& ideal, std::vector<Rational> point) {
  const std::size_t n = ideal.nvars();
  if (n == 0) throw InputError("empty ambient space");
  if (point.size() != n)
    throw InputError("point has " + std::to_string(point.size()) + " coordinates, expected " + std::to_string(n));
  auto pivot = std::find_if(point.begin(), point.end(), [](const Rational& c) { return !is_zero(c); });
  if (pivot == point.end()) throw InputError("the zero vector is not a projective point");
  for (std::size_t k = 0; k < ideal.generators().size(); ++k)
    if (!is_zero(ideal.generators()[k].evaluate(point)))
      throw InputError("point is not on the variety: generator " + std::to_string(k + 1) + " does not vanish");

  const std::size_t k = static_cast<std::size_t>(pivot - point.begin());
  PointedVariety x;
  x.ambient_dim = n - 1;
  x.ideal = ideal;
  x.point = std::move(point);
  x.frame = Matrix<Rational>(n, n);
  for (std::size_t i = 0; i < n; ++i) x.frame(i, 0) = x.point[i];
  std::size_t col = 1;
  for (std::size_t j = 0; j < n; ++j)
    if (j != k) x.frame(j, col++) = 1;
  x.transform = inverse(x.frame);
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.substitute_linear(x.frame));
  x.normalized = Ideal(n, gens);
  return x;
}

Poly SliceDecomposition::reassemble() const {
  Poly f(source.nvars());
  for (unsigned i = 1; i <= degree; ++i)
    f += slice(i).scaled(Rational(1), Monomial::variable(0, degree - i));
  return f;
}

SliceDecomposition slice_decomposition(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("slice decomposition of the zero polynomial");
  if (!f.is_homogeneous()) throw std::invalid_argument("slice decomposition needs a homogeneous polynomial");
  SliceDecomposition s;
  s.source = f.with_order(MonomialOrder::grevlex());
  s.degree = static_cast<unsigned>(f.total_degree());
  std::vector<std::vector<Term<Rational>>> parts(s.degree);
  for (const auto& t : f.terms()) {
    unsigned i = s.degree - t.monomial[0];
    if (i == 0) throw InputError("polynomial does not vanish at [1:0:...:0]");
    parts[i - 1].push_back({t.monomial.with(0, 0), t.coeff});
  }
  for (auto& p : parts) s.slices.emplace_back(f.nvars(), std::move(p));
  return s;
}

Poly lift_from_directions(const Poly& f) {
  std::vector<int> table(f.nvars());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<int>(i) + 1;
  return f.remap(f.nvars() + 1, table);
}

Poly drop_first_variable(const Poly& f) {
  std::vector<int> table(f.nvars());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<int>(i) - 1;
  return f.remap(f.nvars() - 1, table);
}

LineScheme line_scheme(const std::vector<Poly>& local_gens, std::size_t nvars) {
  if (nvars < 2) throw std::invalid_argument("line schemes need at least P^1");
  std::vector<Poly> slices;
  for (const auto& g : local_gens) {
    if (g.nvars() != nvars) throw std::invalid_argument("generator lives in a different ring");
    for (const auto& s : slice_decomposition(g).slices)
      if (!s.is_zero()) slices.push_back(drop_first_variable(s));
  }
  LineScheme ls;
  ls.ideal = Ideal(nvars - 1, slices);
  ls.hilbert = hilbert_data(ls.ideal);
  return ls;
}

LineScheme line_scheme(const PointedVariety& x) { return line_scheme(x.normalized.generators(), x.nvars()); }

Ideal cone_ideal(const Ideal& z) {
  if (!z.is_homogeneous()) throw std::invalid_argument("cone over a non-homogeneous ideal");
  std::vector<Poly> gens;
  for (const auto& g : z.generators()) gens.push_back(lift_from_directions(g));
  return Ideal(z.nvars() + 1, gens);
}

bool is_saturated(const Ideal& ideal) {
  Ideal sat = saturate(ideal, variable_ideal(ideal.nvars(), 0, ideal.nvars()));
  return ideal.contains(sat);
}

int cut_out_degree(const PointedVariety& x, const CutOutOptions& options) {
  const Ideal& i = x.normalized;
  if (!i.is_homogeneous()) throw InputError("the ideal of X must be homogeneous");
  if (options.validate && !is_saturated(x.ideal)) throw InputError("the ideal of X is not saturated");
  if (i.is_zero()) return 1;
  HilbertData h = hilbert_data(i);
  if (h.dimension < 0) throw InputError("X is empty");
  const long bound = h.degree.get_si();
  std::vector<Rational> e0(x.nvars(), 0);
  e0[0] = 1;
  for (long d = 1; d <= bound; ++d) {
    auto piece = graded_piece(i, static_cast<int>(d));
    if (piece.empty()) continue;
    Ideal j(x.nvars(), piece);
    if (j.contains(i)) return static_cast<int>(d);
    Ideal q = ideal_quotient(j, i);
    for (const auto& g : q.generators())
      if (!is_zero(g.evaluate(e0))) return static_cast<int>(d);
  }
  throw InconsistencyError("no degree up to deg X = " + h.degree.get_str() + " cuts out X at p");
}

}  // namespace seshadri
