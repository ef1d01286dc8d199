#include "seshadri/oracle/oracle.hpp"

#include <algorithm>
#include <thread>

#include "seshadri/error.hpp"
#include "seshadri/poly/matrix.hpp"

namespace seshadri {

namespace {

using Vec = std::vector<std::uint32_t>;

std::uint32_t mulmod(std::uint64_t a, std::uint64_t b, std::uint32_t q) { return static_cast<std::uint32_t>(a * b % q); }

// Product of univariate polynomials mod q.
Vec multiply(const Vec& a, const Vec& b, std::uint32_t q) {
  Vec out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulmod(a[i], b[j], q)) % q;
  }
  return out;
}

Vec to_vec(const std::vector<Zp>& v) {
  Vec out;
  for (Zp z : v) out.push_back(z.value());
  return out;
}

std::vector<Zp> to_zp(const Vec& v) { return {v.begin(), v.end()}; }

// Direction number `index` in P^{n-1}(F_q): first nonzero entry is 1.
Vec direction(std::uint64_t index, std::size_t n, std::uint32_t q) {
  Vec v(n, 0);
  std::uint64_t block = 1;
  for (std::size_t i = 1; i < n; ++i) block *= q;
  for (std::size_t lead = 0; lead < n; ++lead) {
    if (index < block) {
      v[lead] = 1;
      for (std::size_t i = n; i-- > lead + 1;) {
        v[i] = static_cast<std::uint32_t>(index % q);
        index /= q;
      }
      return v;
    }
    index -= block;
    block /= q;
  }
  throw std::out_of_range("direction index");
}

std::uint64_t projective_size(std::size_t n, std::uint32_t q) {
  std::uint64_t total = 0, block = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total += block;
    block *= q;
  }
  return total;
}

// g(x) mod q.
std::uint32_t evaluate(const ModularInstance::Form& g, const Vec& x, std::uint32_t q) {
  std::uint64_t sum = 0;
  for (const auto& t : g) {
    std::uint64_t prod = t.coeff;
    for (std::size_t i = 0; i < x.size() && prod != 0; ++i)
      for (unsigned e = t.monomial[i]; e > 0; --e) prod = prod * x[i] % q;
    sum += prod;
  }
  return static_cast<std::uint32_t>(sum % q);
}

bool vanishes_on(const ModularInstance& inst, const Vec& a, const Vec& b, const Vec& c) {
  // Cheap rejection at t = 1 before expanding in t.
  Vec x(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    x[i] = static_cast<std::uint32_t>((std::uint64_t{a[i]} + (b.empty() ? 0 : b[i]) + (c.empty() ? 0 : c[i])) % inst.q);
  for (const auto& g : inst.generators)
    if (evaluate(g, x, inst.q) != 0) return false;
  for (const auto& g : inst.generators) {
    Vec r = restrict_to_curve(g, a, b, c, inst.q);
    if (std::any_of(r.begin(), r.end(), [](std::uint32_t x) { return x != 0; })) return false;
  }
  return true;
}

}  // namespace

ModularInstance reduce_instance(const std::vector<Poly>& generators, const std::vector<Rational>& point, std::uint32_t q) {
  if (!is_prime(q)) throw InputError("modulus " + std::to_string(q) + " is not prime");
  if (generators.empty()) throw InputError("no generators to reduce");
  ModulusScope scope(q);
  ModularInstance inst;
  inst.q = q;
  inst.nvars = generators.front().nvars();
  if (point.size() != inst.nvars) throw InputError("point has the wrong number of coordinates");
  // Clear denominators of the point first: only its projective class matters.
  Integer common = 1;
  for (const auto& c : point) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  for (const auto& c : point) {
    Integer num = c.get_num() * (common / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  if (content == 0) throw InputError("zero point");
  for (const auto& c : point) {
    Rational scaled = c * Rational(common) / Rational(content);
    inst.point.push_back(reduce_mod(scaled, q).value());
  }
  auto nz = std::find_if(inst.point.begin(), inst.point.end(), [](std::uint32_t x) { return x != 0; });
  if (nz == inst.point.end()) throw InputError("point reduces to zero mod " + std::to_string(q));
  inst.pivot = static_cast<std::size_t>(nz - inst.point.begin());
  for (const auto& g : generators) {
    if (g.nvars() != inst.nvars) throw InputError("generators live in different rings");
    ModularInstance::Form form;
    for (const auto& t : g.terms()) {
      Zp c = reduce_mod(t.coeff, q);
      if (c.value() != 0) form.push_back({c.value(), t.monomial});
    }
    inst.generators.push_back(std::move(form));
  }
  Vec zero;
  for (const auto& g : inst.generators) {
    Vec r = restrict_to_curve(g, inst.point, zero, zero, q);
    if (!r.empty() && r[0] != 0) throw InputError("point is not on the variety mod " + std::to_string(q));
  }
  return inst;
}

ModularInstance reduce_instance(const Ideal& ideal, const std::vector<Rational>& point, std::uint32_t q) {
  return reduce_instance(ideal.generators(), point, q);
}

std::vector<std::uint32_t> restrict_to_curve(const ModularInstance::Form& g, const Vec& a, const Vec& b, const Vec& c,
                                             std::uint32_t q) {
  const std::size_t n = a.size();
  // x_i(t) = a_i + b_i t + c_i t^2 and its powers, built on demand.
  std::vector<std::vector<Vec>> powers(n);
  auto power = [&](std::size_t i, unsigned e) -> const Vec& {
    if (powers[i].empty()) {
      powers[i].push_back({1});
      Vec lin = {a[i], b.empty() ? 0 : b[i]};
      if (!c.empty()) lin.push_back(c[i]);
      powers[i].push_back(lin);
    }
    while (powers[i].size() <= e) powers[i].push_back(multiply(powers[i].back(), powers[i][1], q));
    return powers[i][e];
  };
  Vec out;
  for (const auto& t : g) {
    Vec prod = {t.coeff};
    for (std::size_t i = 0; i < n; ++i)
      if (t.monomial[i] > 0) prod = multiply(prod, power(i, t.monomial[i]), q);
    if (out.size() < prod.size()) out.resize(prod.size(), 0);
    for (std::size_t k = 0; k < prod.size(); ++k) out[k] = (out[k] + prod[k]) % q;
  }
  return out;
}

LineCount count_lines_mod_q(const ModularInstance& inst, unsigned threads) {
  const std::size_t n = inst.nvars;
  if (n < 2) throw InputError("no directions in P^0");
  const std::uint64_t total = projective_size(n - 1, inst.q);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

  std::vector<std::vector<Vec>> found(threads);
  auto work = [&](unsigned w) {
    Vec v(n);
    for (std::uint64_t idx = w; idx < total; idx += threads) {
      Vec d = direction(idx, n - 1, inst.q);
      for (std::size_t i = 0, k = 0; i < n; ++i) v[i] = i == inst.pivot ? 0 : d[k++];
      if (vanishes_on(inst, inst.point, v, {})) found[w].push_back(v);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();

  LineCount out;
  for (auto& f : found) out.directions.insert(out.directions.end(), f.begin(), f.end());
  std::sort(out.directions.begin(), out.directions.end());
  out.count = out.directions.size();
  return out;
}

std::optional<ConicWitness> find_conic_mod_q(const ModularInstance& inst, unsigned budget, Rng& rng) {
  const std::uint32_t q = inst.q;
  const std::size_t n = inst.nvars;
  ModulusScope scope(q);
  std::uniform_int_distribution<std::uint32_t> coin(0, q - 1);

  // Tangent conditions: the t-coefficient of g(p + t v) is linear in v.
  Matrix<Zp> jac(inst.generators.size(), n);
  for (std::size_t k = 0; k < inst.generators.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) {
      Vec e(n, 0);
      e[i] = 1;
      Vec r = restrict_to_curve(inst.generators[k], inst.point, e, {}, q);
      jac(k, i) = r.size() > 1 ? Zp(r[1]) : Zp(0);
    }
  auto tangent = kernel(jac);
  if (tangent.empty()) return std::nullopt;

  auto combine = [&](const std::vector<std::vector<Zp>>& basis) {
    std::vector<Zp> v(n, Zp(0));
    for (const auto& b : basis) {
      Zp s(coin(rng));
      for (std::size_t i = 0; i < n; ++i) v[i] += s * b[i];
    }
    return v;
  };
  const std::vector<Zp> p = to_zp(inst.point);

  // Given v, w is pinned down by the conic, so the affine solution space of
  // the t^2 conditions is walked exhaustively when small and sampled otherwise.
  constexpr std::uint64_t kMaxShifts = 4096;
  std::uint64_t shifts = 1;
  for (std::size_t k = 0; k < tangent.size() && shifts <= kMaxShifts; ++k) shifts *= q;
  const bool exhaustive = shifts <= kMaxShifts;
  if (!exhaustive) shifts = kMaxShifts;

  for (unsigned draw = 1; draw <= budget; ++draw) {
    std::vector<Zp> v = combine(tangent);
    Matrix<Zp> pv(2, n);
    for (std::size_t i = 0; i < n; ++i) {
      pv(0, i) = p[i];
      pv(1, i) = v[i];
    }
    if (rank(pv) < 2) continue;
    // t^2-coefficient: jac * w + (t^2-coefficient of g(p + t v)) = 0.
    std::vector<Zp> rhs;
    for (const auto& g : inst.generators) {
      Vec r = restrict_to_curve(g, inst.point, to_vec(v), {}, q);
      rhs.push_back(-(r.size() > 2 ? Zp(r[2]) : Zp(0)));
    }
    auto particular = solve(jac, rhs);
    if (!particular) continue;
    for (std::uint64_t s = 0; s < shifts; ++s) {
      std::vector<Zp> w = *particular;
      std::uint64_t digits = s;
      for (const auto& b : tangent) {
        Zp a = exhaustive ? Zp(static_cast<std::int64_t>(digits % q)) : Zp(coin(rng));
        digits /= q;
        for (std::size_t i = 0; i < n; ++i) w[i] += a * b[i];
      }
      Matrix<Zp> pvw(3, n);
      for (std::size_t i = 0; i < n; ++i) {
        pvw(0, i) = p[i];
        pvw(1, i) = v[i];
        pvw(2, i) = w[i];
      }
      if (rank(pvw) < 3) continue;
      if (vanishes_on(inst, inst.point, to_vec(v), to_vec(w))) return ConicWitness{to_vec(v), to_vec(w), draw};
    }
  }
  return std::nullopt;
}

unsigned lowest_form_mult(const Poly& plane_curve, const std::vector<Rational>& point) {
  if (plane_curve.nvars() != 3 || point.size() != 3) throw InputError("expected a plane curve and a point of P^2");
  if (!plane_curve.is_homogeneous() || plane_curve.is_zero()) throw InputError("expected a nonzero form");
  std::size_t chart = 0;
  while (chart < 3 && point[chart] == 0) ++chart;
  if (chart == 3) throw InputError("zero point");
  if (!is_zero(plane_curve.evaluate(point))) throw InputError("point is not on the curve");
  // Affine chart x_chart = 1, translated so the point sits at the origin.
  Matrix<Rational> m(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    m(i, chart) = point[i] / point[chart];
    if (i != chart) m(i, i) = 1;
  }
  Poly g = plane_curve.substitute_linear(m).dehomogenize(chart);
  unsigned low = ~0u;
  for (const auto& t : g.terms()) low = std::min(low, t.monomial.degree());
  return low;
}

std::string to_string(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::Agree:
      return "agree";
    case OracleVerdict::BadPrimeWarning:
      return "bad-prime warning";
    case OracleVerdict::Disagree:
      return "disagree";
  }
  return "?";
}

OracleVerdict compare_line_counts(bool line_scheme_empty, const std::vector<std::uint64_t>& counts) {
  std::size_t mismatches = 0;
  for (auto c : counts) mismatches += (c == 0) != line_scheme_empty;
  if (mismatches == 0) return OracleVerdict::Agree;
  return mismatches == counts.size() ? OracleVerdict::Disagree : OracleVerdict::BadPrimeWarning;
}

}  // namespace seshadri
