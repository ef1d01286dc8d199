// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "../support.hpp"
#include "seshadri/cli/instance.hpp"
#include "seshadri/constants/families.hpp"
#include "seshadri/constants/seshadri.hpp"
#include "seshadri/error.hpp"
#include "seshadri/oracle/oracle.hpp"

using namespace seshadri;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: " << what;
      pass = false;
    }
  }
};

cli::Instance bundled(const std::string& name) { return cli::load_instance(std::string(SESHADRI_INSTANCE_DIR) + "/" + name); }

std::vector<Rational> e0(std::size_t n) {
  std::vector<Rational> v(n, 0);
  v[0] = 1;
  return v;
}

const std::vector<std::string> kInstances = {
    "fermat-cubic.json",      "quartic-threefold.json",  "two-quadrics.json",         "grassmannian-g24-conic.json",
    "grassmannian-g25.json",  "quadric-surface.json",    "quadric-threefold.json",    "twisted-cubic.json",
};

// Shared shape of criteria 1-3: an instance with an empty line scheme and a known exact value.
void exact_value(Outcome& o, const std::string& file, const Rational& expected) {
  cli::Instance inst = bundled(file);
  LineScheme ls = line_scheme(inst.pointed());
  o.require(ls.empty(), "line scheme is empty");
  Classification c = classify_ci(inst.complete_intersection());
  o.require(c.report.status == Status::Exact, "status EXACT");
  o.require(c.report.epsilon == expected, "epsilon = " + to_string(expected));
  o.detail << "epsilon = " << to_string(c.report.epsilon) << ", line scheme dim " << ls.hilbert.dimension;
}

void c1(Outcome& o) { exact_value(o, "fermat-cubic.json", Rational(3, 2)); }

void c2(Outcome& o) {
  exact_value(o, "quartic-threefold.json", Rational(4, 3));
  SharpnessInstance s = sharpness_example(3, 4, 2);
  o.require(s.lines.empty(), "sharpness line scheme empty");
  o.require(s.certificate.degree == 8 && s.certificate.multiplicity == 6, "sharpness curve deg 8, mult 6");
  CurveCertificate c = seshadri_curve(bundled("quartic-threefold.json").complete_intersection(), std::nullopt, 41);
  o.require(c.degree == 8 && c.multiplicity == 6 && c.ratio == Rational(4, 3), "cone curve deg 8, mult 6");
  o.detail << "; sharpness curve " << s.certificate.degree << "/" << s.certificate.multiplicity << ", cone curve "
           << c.degree << "/" << c.multiplicity;
}

void c3(Outcome& o) { exact_value(o, "two-quadrics.json", Rational(2)); }

void c4(Outcome& o) {
  exact_value(o, "grassmannian-g24-conic.json", Rational(2));
  cli::Instance inst = bundled("grassmannian-g24-conic.json");
  o.require(inst.ambient_homogeneous, "ambient_homogeneous asserted");
  Classification c = classify_ci(inst.complete_intersection());
  o.require(c.degrees.back() == 1, "d_r = 1 branch");
  HilbertData h = hilbert_data(c.x.normalized);
  unsigned mult = multiplicity_at(c.x);
  o.require(h.dimension == 1 && h.degree == 2 && mult == 1, "X is a conic smooth at p");
  o.detail << "; X: dim " << h.dimension << ", deg/mult = " << h.degree << "/" << mult;
}

void c5(Outcome& o) {
  const std::pair<unsigned, unsigned> cases[] = {{1, 2}, {2, 3}, {2, 4}, {3, 4}};
  int runs = 0;
  for (auto [n, d] : cases)
    for (std::uint64_t seed : {1, 2, 3}) {
      SharpnessInstance s = sharpness_example(n, d, seed);
      Integer fact = 1;
      for (unsigned k = 2; k < n; ++k) fact *= k;
      std::string tag = "(" + std::to_string(n) + "," + std::to_string(d) + ") seed " + std::to_string(seed);
      o.require(s.lines.empty(), tag + " line scheme empty");
      o.require(s.certificate.ratio == Rational(d) / Rational(d - 1), tag + " ratio");
      o.require(s.certificate.degree == fact * d, tag + " degree");
      o.require(Integer(s.certificate.multiplicity) == fact * (d - 1), tag + " multiplicity");
      ++runs;
    }
  o.detail << runs << " instances, ratios d/(d-1)";
}

void c6(Outcome& o) {
  Rng rng(6);
  Ideal q = testing::ideal(4, {"x0*x3 - x1*x2"});
  const std::uint32_t primes[] = {5, 7, 11};
  int points = 0;
  while (points < 10) {
    Rational s = random_coefficient(rng, 9), t = random_coefficient(rng, 9);
    Rational u = random_coefficient(rng, 9), v = random_coefficient(rng, 9);
    std::vector<Rational> p = {s * u, s * v, t * u, t * v};
    std::vector<ModularInstance> reduced;
    try {
      for (auto prime : primes) reduced.push_back(reduce_instance(q, p, prime));
    } catch (const InputError&) {
      continue;  // zero point, or zero modulo one of the primes
    }
    SeshadriReport r = lower_bound(normalize_point(q, p));
    o.require(r.status == Status::LineFound && r.epsilon == 1, "LINE_FOUND with epsilon 1");
    for (const auto& inst : reduced)
      o.require(count_lines_mod_q(inst).count == 2, "two lines mod " + std::to_string(inst.q));
    ++points;
  }
  o.detail << points << " points, 2 lines at q = 5, 7, 11";
}

void c7(Outcome& o) {
  for (const auto& file : kInstances) {
    PointedVariety x = bundled(file).pointed();
    int dp = cut_out_degree(x);
    Integer deg = hilbert_data(x.normalized).degree;
    o.require(Integer(dp) <= deg, file + ": d_p <= deg");
    o.detail << file.substr(0, file.find('.')) << " " << dp << "<=" << deg << " ";
  }
}

void c8(Outcome& o) {
  for (const std::string file : {"fermat-cubic.json", "quartic-threefold.json", "two-quadrics.json"}) {
    PointedVariety x = bundled(file).pointed();
    AuxDivisors a = aux_divisors(x);
    for (const auto& d : a.divisors)
      o.require(d.order.infinite || d.order.value >= d.i + 1, file + ": ord >= i + 1");
    o.require(a.common_zero_is_point == line_scheme(x).empty(), file + ": common zero test matches line scheme");
    o.detail << a.divisors.size() << " divisors ";
  }
  // Nonempty line schemes as controls for the other direction.
  for (const std::string file : {"quadric-surface.json", "quadric-threefold.json"}) {
    PointedVariety x = bundled(file).pointed();
    o.require(!aux_divisors(x).common_zero_is_point && !line_scheme(x).empty(), file + ": control");
  }
}

void c9(Outcome& o) {
  std::vector<Ideal> samples = {
      testing::ideal(3, {"x0*x2 - x1^2"}),
      testing::ideal(3, {"x0*x1*x2 + x1^3 - x2^3"}),
      testing::ideal(3, {"x1", "x0 - x2"}),
      testing::ideal(4, {"x0*x3 - x1*x2", "x1^2 - x0*x2", "x2^2 - x1*x3"}),
      testing::ideal(4, {"x0^2 + x1^2 + x2^2 + x3^2", "x0*x1 - x2*x3"}),
  };
  for (const auto& z : samples) {
    Ideal c = cone_ideal(z);
    Integer dz = hilbert_data(z).degree, dc = hilbert_data(c).degree;
    unsigned m = multiplicity_at(normalize_point(c, e0(c.nvars())));
    o.require(dz == dc && Integer(m) == dz, "deg(cone) = deg(Z) = mult");
    o.detail << dz << "=" << dc << "=" << m << " ";
  }
}

void c10(Outcome& o) {
  Rng rng(123);
  auto curve = [&](unsigned e, unsigned k) {
    Poly f(3);
    for (unsigned j = k; j <= e; ++j) f += random_form(3, 1, 3, j, rng, 4).scaled(Rational(1), Monomial::variable(0, e - j));
    return f;
  };
  int checked = 0;
  for (int trial = 0; checked < 10 && trial < 60; ++trial) {
    unsigned e = 2 + trial % 3, k = 1 + trial % e;
    Poly c = curve(e, k);
    Poly d = curve(1 + trial % 3, 1 + trial % 2);
    if (hilbert_data(Ideal(3, {c, d})).dimension != 0) continue;
    PointedVariety cc = normalize_point(Ideal(3, {c}), e0(3));
    unsigned mult = multiplicity_at(cc);
    Order ord = ord_at(d, cc);
    o.require(!ord.infinite, "no common component");
    o.require(static_cast<long>(c.total_degree() * d.total_degree()) >= static_cast<long>(ord.value * mult),
              "deg C * deg D >= ord * mult");
    o.require(mult == lowest_form_mult(c, e0(3)), "multiplicity matches lowest form");
    ++checked;
  }
  o.require(checked == 10, "10 pairs");
  o.detail << checked << " pairs";
}

void c11(Outcome& o) {
  Rng rng(11);
  int bases = 0, quotients = 0, hilbert = 0, oracle = 0, warnings = 0;
  for (int trial = 0; trial < 20; ++trial) {
    Ideal i = testing::random_homogeneous_ideal(4, 2 + trial % 3, 3, rng);
    o.require(is_groebner_basis(i.basis()) && is_groebner_basis(i.basis(MonomialOrder::lex())), "S-pair check");
    ++bases;
    HilbertData a = hilbert_data(i), b = hilbert_data(i, MonomialOrder::lex());
    o.require(a.dimension == b.dimension && a.degree == b.degree && a.polynomial == b.polynomial, "Hilbert order independence");
    for (unsigned d = 0; d <= 4; ++d)
      o.require(a.hilbert_function(static_cast<int>(d)) == testing::macaulay_hilbert_function(i, d), "Hilbert vs Macaulay");
    ++hilbert;
  }
  for (int trial = 0; trial < 10; ++trial) {
    Ideal j = testing::random_homogeneous_ideal(3, 2, 3, rng);
    Ideal i = testing::random_homogeneous_ideal(3, 1 + trial % 2, 2, rng);
    Ideal q = ideal_quotient(j, i);
    o.require(q.contains(j), "J ⊆ J:I");
    for (const auto& x : q.generators())
      for (const auto& y : i.generators()) o.require(j.contains(x * y), "(J:I)·I ⊆ J");
    Ideal m = variable_ideal(3, 1, 3);
    o.require(same_ideal(ideal_quotient(j, m), ideal_quotient(j, m, QuotientRoute::Elimination)), "quotient routes agree");
    Ideal s = saturate(j, m);
    o.require(same_ideal(saturate(s, m), s) && same_ideal(s, saturate(j, m, QuotientRoute::Elimination)), "saturation");
    ++quotients;
  }
  // Cubic surfaces through e0; half of them carry the line x2 = x3 = 0.
  for (int trial = 0; trial < 20; ++trial) {
    Poly f = random_form_through(e0(4), 3, rng, 4);
    if (trial % 2) {
      Poly g(4);
      for (const auto& t : f.terms())
        if (t.monomial[2] + t.monomial[3] > 0) g += Poly::monomial(4, t.coeff, t.monomial);
      f = g;
    }
    Ideal x(4, {f});
    bool empty = line_scheme(normalize_point(x, e0(4))).empty();
    std::vector<std::uint64_t> counts;
    for (std::uint32_t q : {5u, 7u, 11u}) counts.push_back(count_lines_mod_q(reduce_instance(x, e0(4), q)).count);
    OracleVerdict v = compare_line_counts(empty, counts);
    o.require(v != OracleVerdict::Disagree, "oracle/GB agreement");
    warnings += v == OracleVerdict::BadPrimeWarning;
    ++oracle;
  }
  o.detail << bases << " bases, " << quotients << " quotient checks, " << hilbert << " Hilbert checks, " << oracle
           << " oracle instances (" << warnings << " bad-prime warnings)";
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 = no limit
  std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Fermat cubic surface: epsilon = 3/2", 10, c1},
      {2, "random quartic threefold: epsilon = 4/3, curve 8/6", 60, c2},
      {3, "two quadrics in P^4: epsilon = 2", 60, c3},
      {4, "Gr(2,4) cut by 3 hyperplanes: epsilon = 2, X a conic", 30, c4},
      {5, "sharpness family ratios d/(d-1)", 0, c5},
      {6, "line criterion on the quadric surface", 0, c6},
      {7, "d_p(X) <= deg X on bundled instances", 0, c7},
      {8, "auxiliary divisor orders and common-zero test", 0, c8},
      {9, "cone law", 0, c9},
      {10, "Bezout-type inequality on plane curves", 0, c10},
      {11, "kernel property suites", 0, c11},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.pass = false;
      o.detail << " (over time limit)";
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.name << "  ["
              << o.detail.str() << "]  " << std::fixed << std::setprecision(2) << secs << " s";
    if (c.limit_seconds > 0) std::cout << " (limit " << std::setprecision(0) << c.limit_seconds << " s)";
    std::cout << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
