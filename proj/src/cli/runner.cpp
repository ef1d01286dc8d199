#include "seshadri/cli/runner.hpp"

#include <set>

#include "seshadri/error.hpp"
#include "seshadri/oracle/oracle.hpp"

namespace seshadri::cli {

using nlohmann::json;

namespace {

std::string str(const Rational& r) { return to_string(r); }
std::string str(const Integer& z) { return z.get_str(); }

json hilbert_json(const HilbertData& h) {
  json poly = json::array();
  for (const auto& c : h.polynomial) poly.push_back(str(c));
  json num = json::array();
  for (const auto& c : h.numerator) num.push_back(str(c));
  return {{"dimension", h.dimension}, {"degree", str(h.degree)}, {"polynomial", poly}, {"numerator", num}};
}

json polys_json(const std::vector<Poly>& gens, const VariableNames& names) {
  json out = json::array();
  for (const auto& g : gens) out.push_back(to_string(g, names));
  return out;
}

json report_json(const SeshadriReport& r) {
  json assumptions = json::array();
  for (const auto& a : r.assumptions)
    assumptions.push_back({{"name", a.name}, {"verified", a.verified}, {"detail", a.detail}});
  return {{"status", to_string(r.status)},
          {"epsilon", str(r.epsilon)},
          {"d_p", r.d_p},
          {"line_scheme_dimension", r.line_scheme_dimension},
          {"assumptions", assumptions},
          {"notes", r.notes}};
}

// Normalized coordinates y0..yN, p = [1:0:...:0]; directions y1..yN.
VariableNames normalized_names(std::size_t n) { return indexed_names("y", n); }
VariableNames direction_names(std::size_t n) { return indexed_names("y", n - 1, 1); }

json line_scheme_json(const LineScheme& ls, std::size_t nvars) {
  json j = hilbert_json(ls.hilbert);
  j["empty"] = ls.empty();
  j["ideal"] = polys_json(ls.ideal.basis(MonomialOrder::grevlex()), direction_names(nvars));
  return j;
}

json certificate_json(const CurveCertificate& c) {
  return {{"curve", polys_json(c.curve.generators(), normalized_names(c.curve.nvars()))},
          {"degree", str(c.degree)},
          {"multiplicity", c.multiplicity},
          {"ratio", str(c.ratio)},
          {"expected_degree", str(c.expected_degree)},
          {"expected_multiplicity", str(c.expected_multiplicity)},
          {"seed", c.seed},
          {"attempts", c.attempts},
          {"perturbed", c.perturbed},
          {"irreducibility_certified", c.irreducibility_certified},
          {"trace", c.trace}};
}

std::vector<std::uint32_t> primes_for(const RunOptions& o, const Instance& inst) {
  auto primes = o.primes.value_or(inst.primes);
  if (primes.empty()) throw InputError("at least one prime is required");
  return primes;
}

// Line counts at each prime plus the verdict against the Groebner answer.
json line_oracle_json(const Ideal& x, const std::vector<Rational>& point, bool gb_empty,
                      const std::vector<std::uint32_t>& primes, unsigned threads, bool with_directions) {
  json per = json::array();
  std::vector<std::uint64_t> counts;
  for (auto q : primes) {
    LineCount lc = count_lines_mod_q(reduce_instance(x, point, q), threads);
    counts.push_back(lc.count);
    json entry = {{"prime", q}, {"lines", lc.count}};
    if (with_directions) entry["directions"] = lc.directions;
    per.push_back(entry);
  }
  OracleVerdict v = compare_line_counts(gb_empty, counts);
  if (v == OracleVerdict::Disagree)
    throw InconsistencyError("line oracle disagrees with the Groebner line scheme at every tested prime");
  return {{"per_prime", per}, {"verdict", to_string(v)}};
}

json conic_oracle_json(const Ideal& x, const std::vector<Rational>& point, const std::vector<std::uint32_t>& primes,
                       unsigned budget, std::uint64_t seed) {
  json per = json::array();
  Rng rng(seed);
  for (auto q : primes) {
    auto w = find_conic_mod_q(reduce_instance(x, point, q), budget, rng);
    json entry = {{"prime", q}, {"found", w.has_value()}};
    if (w) {
      entry["v"] = w->v;
      entry["w"] = w->w;
      entry["draws"] = w->draws;
    } else {
      entry["inconclusive"] = true;
    }
    per.push_back(entry);
  }
  return per;
}

json run_command(const RunOptions& o, const Instance& inst, std::uint64_t seed) {
  AnalysisOptions analysis;
  analysis.validate = o.validate;
  analysis.local.max_m = o.max_m.value_or(inst.max_m);
  json result;

  if (o.command == "bound") {
    PointedVariety x = inst.pointed();
    result = report_json(lower_bound(x, analysis));
    AuxDivisors aux = aux_divisors(x, analysis);
    json divs = json::array();
    for (const auto& d : aux.divisors)
      divs.push_back({{"j", d.j}, {"i", d.i}, {"order", d.order.to_string()}});
    result["auxiliary_divisors"] = divs;
    result["common_zero_is_point"] = aux.common_zero_is_point;
  } else if (o.command == "fano") {
    PointedVariety x = inst.pointed();
    result["line_scheme"] = line_scheme_json(line_scheme(x), x.nvars());
  } else if (o.command == "dp") {
    PointedVariety x = inst.pointed();
    result["d_p"] = cut_out_degree(x, {o.validate});
    result["degree"] = str(hilbert_data(x.normalized).degree);
    result["dimension"] = hilbert_data(x.normalized).dimension;
  } else if (o.command == "classify") {
    Classification c = classify_ci(inst.complete_intersection(), analysis);
    result = report_json(c.report);
    result["degrees"] = c.degrees;
    result["d_p_x"] = c.dp_x;
    result["d_p_y"] = c.dp_y;
    result["line_scheme_x"] = line_scheme_json(c.lines_x, c.x.nvars());
    if (c.report.status != Status::LineFound) result["line_scheme_y"] = hilbert_json(c.lines_y.hilbert);
    auto primes = primes_for(o, inst);
    json oracle;
    oracle["lines"] = line_oracle_json(c.x.ideal, inst.point, c.lines_x.empty(), primes, o.threads, false);
    if (c.report.status != Status::LineFound && c.degrees.back() == 1)
      oracle["conics"] = conic_oracle_json(c.x.ideal, inst.point, primes, o.budget, seed);
    result["oracle"] = oracle;
  } else if (o.command == "curve") {
    CurveOptions opts;
    opts.analysis = analysis;
    opts.retries = o.retries;
    CompleteIntersectionInput in = inst.complete_intersection();
    Classification c = classify_ci(in, analysis);
    if (c.report.status != Status::Exact)
      throw HypothesisError("classification", "curve needs an EXACT classification, got " + to_string(c.report.status));
    CurveCertificate cert = seshadri_curve(in, std::nullopt, seed, opts);
    if (cert.ratio != c.report.epsilon)
      throw InconsistencyError("certificate ratio " + str(cert.ratio) + " differs from classification " +
                               str(c.report.epsilon));
    result["epsilon"] = str(c.report.epsilon);
    result["certificate"] = certificate_json(cert);
  } else if (o.command == "oracle") {
    Ideal x = inst.ideal();
    auto primes = primes_for(o, inst);
    bool gb_empty = line_scheme(inst.pointed()).empty();
    result["line_scheme_empty"] = gb_empty;
    result["lines"] = line_oracle_json(x, inst.point, gb_empty, primes, o.threads, true);
    result["conics"] = conic_oracle_json(x, inst.point, primes, o.budget, seed);
  } else {
    throw InputError("unknown command: " + o.command);
  }
  return result;
}

json error_json(const char* kind, const std::exception& e) {
  json err = {{"kind", kind}, {"message", e.what()}};
  if (auto h = dynamic_cast<const HypothesisError*>(&e)) err["condition"] = h->condition();
  return err;
}

template <class F>
RunResult guarded(json report, F&& body) {
  RunResult out;
  try {
    report["result"] = body();
    out.exit_code = kSuccess;
  } catch (const HypothesisError& e) {
    report["error"] = error_json("hypothesis", e);
    out.exit_code = kHypothesis;
  } catch (const InputError& e) {
    report["error"] = error_json("input", e);
    out.exit_code = kInput;
  } catch (const InconsistencyError& e) {
    report["error"] = error_json("inconsistency", e);
    out.exit_code = kInconsistency;
  } catch (const std::exception& e) {
    report["error"] = error_json("failure", e);
    out.exit_code = kFailure;
  }
  report["exit_code"] = out.exit_code;
  out.report = std::move(report);
  return out;
}

}  // namespace

RunResult run(const RunOptions& o, const Instance& inst) {
  const std::uint64_t seed = o.seed.value_or(inst.seed);
  json report = {{"command", o.command}, {"seed", seed}, {"validate", o.validate}, {"instance", to_json(inst)}};
  return guarded(std::move(report), [&] { return run_command(o, inst, seed); });
}

RunResult run(const RunOptions& o) {
  if (o.command == "sharpness") {
    const std::uint64_t seed = o.seed.value_or(1);
    json report = {{"command", o.command}, {"seed", seed}, {"validate", o.validate}, {"n", o.n}, {"d", o.d}};
    return guarded(std::move(report), [&] {
      CurveOptions opts;
      opts.retries = o.retries;
      if (o.max_m) opts.analysis.local.max_m = *o.max_m;
      SharpnessInstance s = sharpness_example(o.n, o.d, seed, opts);
      VariableNames names = indexed_names("x", s.x.nvars());
      json r;
      r["equation"] = to_string(s.equation, names);
      r["line_scheme"] = line_scheme_json(s.lines, s.x.nvars());
      r["epsilon"] = str(Rational(o.d) / Rational(o.d - 1));
      r["certificate"] = certificate_json(s.certificate);
      return r;
    });
  }
  json report = {{"command", o.command}, {"file", o.file}};
  Instance inst;
  try {
    inst = load_instance(o.file);
  } catch (const InputError& e) {
    report["error"] = error_json("input", e);
    report["exit_code"] = kInput;
    return {kInput, report};
  }
  return run(o, inst);
}

namespace {

void flatten(const json& node, const std::string& path, std::string& out) {
  if (node.is_object()) {
    for (const auto& [k, v] : node.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (node.is_array() && std::any_of(node.begin(), node.end(), [](const json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out += path + ": " + (node.is_string() ? node.get<std::string>() : node.dump()) + "\n";
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::string out;
  flatten(report, "", out);
  return out;
}

}  // namespace seshadri::cli
