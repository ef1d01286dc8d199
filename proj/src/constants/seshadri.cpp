#include "seshadri/constants/seshadri.hpp"

#include <algorithm>
#include <numeric>

#include "seshadri/error.hpp"

namespace seshadri {

namespace {

Rational ratio(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

std::vector<Rational> origin(std::size_t nvars) {
  std::vector<Rational> e0(nvars, 0);
  e0[0] = 1;
  return e0;
}

// x_0^{i-1} f^1 + ... + x_0 f^{i-1} + f^i.
Poly partial_sum(const SliceDecomposition& s, unsigned i) {
  Poly d(s.source.nvars());
  for (unsigned k = 1; k <= i; ++k) d += s.slice(k).scaled(Rational(1), Monomial::variable(0, i - k));
  return d;
}

// Random form of degree d vanishing at [1:0:...:0].
Poly random_form_through_origin(std::size_t nvars, unsigned d, Rng& rng, int bound) {
  Poly f = random_form(nvars, 0, nvars, d, rng, bound);
  return f - Poly::monomial(nvars, f.evaluate(origin(nvars)), Monomial::variable(0, d));
}

std::string describe_degrees(const std::vector<unsigned>& degrees) {
  std::string s;
  for (unsigned d : degrees) s += (s.empty() ? "" : ", ") + std::to_string(d);
  return "(" + s + ")";
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::LineFound:
      return "LINE_FOUND";
    case Status::Exact:
      return "EXACT";
    case Status::LowerBoundOnly:
      return "LOWER_BOUND_ONLY";
  }
  return "?";
}

SeshadriReport lower_bound(const PointedVariety& x, const AnalysisOptions& options) {
  HilbertData h = hilbert_data(x.normalized);
  if (h.dimension < 1) throw InputError("X must have positive dimension");
  SeshadriReport rep;
  LineScheme ls = line_scheme(x);
  rep.line_scheme_dimension = ls.hilbert.dimension;
  rep.d_p = cut_out_degree(x, {options.validate});
  rep.assumptions.push_back({"ideal of X is saturated", options.validate,
                             options.validate ? "checked by saturation" : "taken as given"});
  if (!ls.empty()) {
    rep.status = Status::LineFound;
    rep.epsilon = 1;
    rep.assumptions.push_back({"a line through p lies on X", true,
                               "line scheme has dimension " + std::to_string(ls.hilbert.dimension)});
    return rep;
  }
  rep.assumptions.push_back({"no line through p lies on X", true, "line scheme is empty"});
  if (rep.d_p == 1)
    throw InconsistencyError("d_p(X) = 1 but no line passes through p: X would be a linear space");
  rep.status = Status::LowerBoundOnly;
  rep.epsilon = ratio(rep.d_p, rep.d_p - 1);
  return rep;
}

bool zero_set_within_origin(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw std::invalid_argument("expected a homogeneous ideal");
  for (std::size_t v = 1; v < ideal.nvars(); ++v)
    if (hilbert_data(saturate_by_variable(ideal, v)).dimension >= 0) return false;
  return true;
}

AuxDivisors aux_divisors(const PointedVariety& x, const AnalysisOptions& options) {
  AuxDivisors out;
  out.d_p = cut_out_degree(x, {options.validate});
  out.generators = graded_piece(x.normalized, out.d_p);
  LocalRing local(x.normalized);
  std::vector<Poly> equations;
  for (std::size_t j = 0; j < out.generators.size(); ++j) {
    SliceDecomposition s = slice_decomposition(out.generators[j]);
    for (unsigned i = 1; i < static_cast<unsigned>(out.d_p); ++i) {
      AuxDivisor d;
      d.j = j + 1;
      d.i = i;
      d.equation = partial_sum(s, i);
      d.order = ord_at_origin(d.equation, x.normalized, local, options.local);
      equations.push_back(d.equation);
      out.divisors.push_back(std::move(d));
    }
  }
  out.common_zero_is_point = zero_set_within_origin(with_generators(x.normalized, equations));
  return out;
}

Classification classify_ci(const CompleteIntersectionInput& input, const AnalysisOptions& options) {
  if (input.cuts.empty()) throw InputError("at least one cutting form is required");
  const std::size_t n = input.ambient.nvars();
  std::vector<Poly> cuts = input.cuts;
  for (const auto& f : cuts) {
    if (f.nvars() != n) throw InputError("cutting form lives in a different ring");
    if (f.is_zero() || !f.is_homogeneous()) throw InputError("cutting forms must be nonzero and homogeneous");
  }
  std::stable_sort(cuts.begin(), cuts.end(),
                   [](const Poly& a, const Poly& b) { return a.total_degree() < b.total_degree(); });

  Classification c;
  for (const auto& f : cuts) c.degrees.push_back(static_cast<unsigned>(f.total_degree()));
  const unsigned r = static_cast<unsigned>(cuts.size());
  const unsigned dr = c.degrees.back();
  const unsigned sum = std::accumulate(c.degrees.begin(), c.degrees.end(), 0u);

  c.y = normalize_point(input.ambient, input.point);
  c.x = normalize_point(with_generators(input.ambient, cuts), input.point);
  c.lines_x = line_scheme(c.x);
  c.dp_x = cut_out_degree(c.x, {options.validate});
  SeshadriReport& rep = c.report;
  rep.d_p = c.dp_x;
  rep.line_scheme_dimension = c.lines_x.hilbert.dimension;

  if (!c.lines_x.empty()) {
    rep.status = Status::LineFound;
    rep.epsilon = 1;
    rep.assumptions.push_back({"a line through p lies on X", true,
                               "line scheme has dimension " + std::to_string(c.lines_x.hilbert.dimension)});
    return c;
  }
  rep.assumptions.push_back({"no line through p lies on X", true, "line scheme is empty"});

  HilbertData hy = hilbert_data(c.y.normalized);
  HilbertData hx = hilbert_data(c.x.normalized);
  if (hy.dimension - hx.dimension != static_cast<int>(r))
    throw HypothesisError("i) complete intersection",
                          "codim(X, Y) = " + std::to_string(hy.dimension - hx.dimension) + " but r = " + std::to_string(r));
  rep.assumptions.push_back({"i) X is cut out of Y by r forms of codimension r", true,
                             "dim Y = " + std::to_string(hy.dimension) + ", dim X = " + std::to_string(hx.dimension)});

  c.lines_y = line_scheme(c.y);
  if (c.lines_y.empty()) throw HypothesisError("ii) lines on Y", "no line through p lies on Y");
  if (static_cast<int>(sum) > c.lines_y.hilbert.dimension + 1)
    throw HypothesisError("ii) lines on Y", "sum of degrees " + std::to_string(sum) + " exceeds dim F_p(Y) + 1 = " +
                                                std::to_string(c.lines_y.hilbert.dimension + 1));
  rep.assumptions.push_back({"ii) sum of degrees <= dim F_p(Y) + 1", true,
                             std::to_string(sum) + " <= " + std::to_string(c.lines_y.hilbert.dimension + 1)});

  c.dp_y = cut_out_degree(c.y, {options.validate});
  if (dr >= 2) {
    if (c.dp_y > static_cast<int>(dr))
      throw HypothesisError("iii) d_p(Y) <= d_r",
                            "d_p(Y) = " + std::to_string(c.dp_y) + " exceeds d_r = " + std::to_string(dr));
    rep.assumptions.push_back({"iii) d_p(Y) <= d_r", true, std::to_string(c.dp_y) + " <= " + std::to_string(dr)});
    rep.status = Status::Exact;
    rep.epsilon = ratio(dr, dr - 1);
    rep.notes.push_back("degrees " + describe_degrees(c.degrees) + ", value d_r/(d_r - 1)");
    return c;
  }

  if (c.dp_y > 2)
    throw HypothesisError("iii) Y cut out by quadrics at p", "d_p(Y) = " + std::to_string(c.dp_y) + " exceeds 2");
  rep.assumptions.push_back({"iii) Y is cut out by quadrics at p", true, "d_p(Y) = " + std::to_string(c.dp_y)});
  if (!input.ambient_homogeneous) {
    if (c.dp_x < 2) throw InconsistencyError("d_p(X) = 1 but no line passes through p");
    rep.status = Status::LowerBoundOnly;
    rep.epsilon = ratio(c.dp_x, c.dp_x - 1);
    rep.notes.push_back("all cuts are linear and Y is not asserted homogeneous; only the cut-out bound applies");
    rep.notes.push_back("a conic through p on X would show the value 2; try the oracle conic search");
    return c;
  }
  rep.assumptions.push_back({"Y is a rational homogeneous space of Picard number one", false, "user assertion"});
  rep.status = Status::Exact;
  rep.epsilon = 2;
  rep.notes.push_back("all cuts are linear, value 2");
  return c;
}

void measure_curve(CurveCertificate& cert, const LocalOptions& options) {
  HilbertData h = hilbert_data(cert.curve);
  if (h.dimension != 1)
    throw DegenerateChoice("constructed scheme has dimension " + std::to_string(h.dimension) + ", not 1");
  for (const auto& g : cert.curve.generators())
    if (!is_zero(g.evaluate(origin(cert.curve.nvars())))) throw InconsistencyError("curve misses p");
  cert.degree = h.degree;
  cert.multiplicity = multiplicity_at_origin(cert.curve, 1, options);
  cert.ratio = Rational(cert.degree) / Rational(static_cast<long>(cert.multiplicity));
}

CurveCertificate seshadri_curve(const CompleteIntersectionInput& input, const std::optional<Ideal>& component,
                                std::uint64_t seed, const CurveOptions& options) {
  if (input.cuts.empty()) throw InputError("at least one cutting form is required");
  std::vector<Poly> cuts = input.cuts;
  std::stable_sort(cuts.begin(), cuts.end(),
                   [](const Poly& a, const Poly& b) { return a.total_degree() < b.total_degree(); });
  std::vector<unsigned> degrees;
  for (const auto& f : cuts) degrees.push_back(static_cast<unsigned>(f.total_degree()));
  const unsigned dr = degrees.back();
  const unsigned sum = std::accumulate(degrees.begin(), degrees.end(), 0u);
  if (dr < 2) throw HypothesisError("d_r >= 2", "the cone construction needs a non-linear last cut");

  PointedVariety y = normalize_point(input.ambient, input.point);
  LineScheme lines_y = line_scheme(y);
  if (static_cast<int>(sum) != lines_y.hilbert.dimension + 1)
    throw HypothesisError("sum of degrees = dim F_p(Y) + 1",
                          std::to_string(sum) + " vs " + std::to_string(lines_y.hilbert.dimension + 1));
  Ideal z = component.value_or(lines_y.ideal);
  if (z.nvars() != lines_y.ideal.nvars()) throw InputError("component lives in the wrong number of variables");
  HilbertData hz = hilbert_data(z);
  if (hz.dimension != lines_y.hilbert.dimension)
    throw HypothesisError("component of maximal dimension", "dim Z = " + std::to_string(hz.dimension) +
                                                                ", dim F_p(Y) = " +
                                                                std::to_string(lines_y.hilbert.dimension));
  if (!z.contains(lines_y.ideal)) throw InputError("component is not contained in the line scheme of Y");

  CurveCertificate cert;
  cert.seed = seed;
  cert.expected_degree = hz.degree;
  cert.expected_multiplicity = hz.degree;
  for (std::size_t j = 0; j + 1 < degrees.size(); ++j) {
    cert.expected_degree *= factorial(degrees[j]);
    cert.expected_multiplicity *= factorial(degrees[j]);
  }
  cert.expected_degree *= factorial(dr - 2) * dr;
  cert.expected_multiplicity *= factorial(dr - 1);
  const Rational target = ratio(dr, dr - 1);

  std::vector<Poly> normalized;
  for (const auto& f : cuts) {
    Poly g = y.to_normalized(f);
    if (!is_zero(g.evaluate(origin(g.nvars())))) throw InputError("cutting form does not vanish at p");
    normalized.push_back(g);
  }

  Rng rng(seed);
  Ideal cone = cone_ideal(z);
  for (unsigned attempt = 0; attempt <= options.retries; ++attempt) {
    cert.attempts = attempt + 1;
    if (attempt > 0) {
      cert.perturbed = true;
      for (auto& g : normalized)
        g += random_form_through_origin(g.nvars(), static_cast<unsigned>(g.total_degree()), rng,
                                        options.coefficient_bound);
    }
    std::vector<Poly> gens = cone.generators();
    for (std::size_t j = 0; j < normalized.size(); ++j) {
      SliceDecomposition s = slice_decomposition(normalized[j]);
      const bool last = j + 1 == normalized.size();
      const unsigned full = last ? dr - 2 : degrees[j];
      for (unsigned i = 1; i <= full; ++i) gens.push_back(s.slice(i));
      if (last) gens.push_back(s.slice(dr - 1).scaled(Rational(1), Monomial::variable(0)) + s.slice(dr));
    }
    cert.curve = Ideal(y.nvars(), gens);
    cert.trace.clear();
    cert.trace.push_back("Z: degree " + hz.degree.get_str() + ", dimension " + std::to_string(hz.dimension));
    cert.trace.push_back("cuts: degrees " + describe_degrees(degrees) + (cert.perturbed ? ", perturbed" : ""));
    try {
      measure_curve(cert, options.analysis.local);
    } catch (const DegenerateChoice&) {
      if (attempt == options.retries) throw;
      continue;
    }
    if (cert.ratio != target)
      throw InconsistencyError("curve ratio " + to_string(cert.ratio) + " differs from d_r/(d_r - 1) = " +
                               to_string(target) + " (degree " + cert.degree.get_str() + ", multiplicity " +
                               std::to_string(cert.multiplicity) + ")");
    if (cert.degree != cert.expected_degree || Integer(cert.multiplicity) != cert.expected_multiplicity)
      cert.trace.push_back("degree and multiplicity differ from the generic values " + cert.expected_degree.get_str() +
                           ", " + cert.expected_multiplicity.get_str());
    return cert;
  }
  throw DegenerateChoice("no non-degenerate curve within the retry budget");
}

SharpnessInstance sharpness_example(unsigned n, unsigned d, std::uint64_t seed, const CurveOptions& options) {
  if (n < 1) throw InputError("n must be at least 1");
  if (d < n + 1) throw InputError("the sharpness family needs d >= n + 1");
  const std::size_t nvars = n + 2;
  if (nvars > kMaxVariables) throw InputError("dimension too large");
  Rng rng(seed);
  const Rational target = ratio(d, d - 1);
  for (unsigned attempt = 0; attempt <= options.retries; ++attempt) {
    auto slice = [&](unsigned i) { return random_form(nvars, 1, nvars, i, rng, options.coefficient_bound); };
    std::vector<Poly> low;
    for (unsigned i = 1; i + 1 <= n; ++i) low.push_back(slice(i));
    Poly top1 = slice(d - 1);
    Poly top = slice(d);
    Poly last = top1.scaled(Rational(1), Monomial::variable(0)) + top;
    Poly f = last;
    for (unsigned i = 1; i + 1 <= n; ++i) f += low[i - 1].scaled(Rational(1), Monomial::variable(0, d - i));

    SharpnessInstance out;
    out.n = n;
    out.d = d;
    out.equation = f;
    out.x = normalize_point(Ideal(nvars, {f}), origin(nvars));
    out.lines = line_scheme(out.x);
    if (!out.lines.empty()) continue;

    CurveCertificate& cert = out.certificate;
    std::vector<Poly> gens = low;
    gens.push_back(last);
    cert.curve = Ideal(nvars, gens);
    cert.seed = seed;
    cert.attempts = attempt + 1;
    cert.expected_degree = factorial(n - 1) * d;
    cert.expected_multiplicity = factorial(n - 1) * (d - 1);
    cert.trace.push_back("C = V(f^1, ..., f^" + std::to_string(n - 1) + ", x0*f^" + std::to_string(d - 1) + " + f^" +
                         std::to_string(d) + ")");
    try {
      measure_curve(cert, options.analysis.local);
    } catch (const DegenerateChoice&) {
      continue;
    }
    if (cert.ratio != target)
      throw InconsistencyError("sharpness curve ratio " + to_string(cert.ratio) + " differs from " + to_string(target));
    return out;
  }
  throw DegenerateChoice("no non-degenerate sharpness instance within the retry budget");
}

}  // namespace seshadri
