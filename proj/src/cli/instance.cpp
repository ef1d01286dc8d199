#include "seshadri/cli/instance.hpp"

#include <fstream>
#include <set>

#include "seshadri/error.hpp"

namespace seshadri::cli {

using nlohmann::json;

namespace {

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("instance is missing \"") + key + "\"");
  return doc.at(key);
}

std::vector<std::string> string_list(const json& node, const char* key) {
  if (!node.is_array()) throw InputError(std::string("\"") + key + "\" must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : node) {
    if (!item.is_string()) throw InputError(std::string("\"") + key + "\" must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Rational coordinate(const json& item) {
  if (item.is_number_integer()) return Rational(item.get<long>());
  if (item.is_string()) return parse_rational(item.get<std::string>());
  throw InputError("point coordinates must be integers or rational strings");
}

}  // namespace

Ideal Instance::ambient_ideal() const {
  std::vector<Poly> gens;
  for (const auto& g : ambient) gens.push_back(parse_polynomial(g, variables));
  return Ideal(nvars(), gens);
}

Ideal Instance::ideal() const {
  std::vector<Poly> gens;
  for (const auto& c : cuts) gens.push_back(c.poly);
  return with_generators(ambient_ideal(), gens);
}

PointedVariety Instance::pointed() const { return normalize_point(ideal(), point); }

CompleteIntersectionInput Instance::complete_intersection() const {
  CompleteIntersectionInput in;
  in.ambient = ambient_ideal();
  for (const auto& c : cuts) in.cuts.push_back(c.poly);
  in.point = point;
  in.ambient_homogeneous = ambient_homogeneous;
  return in;
}

Instance parse_instance(const json& doc) {
  if (!doc.is_object()) throw InputError("instance must be a JSON object");
  Instance inst;
  inst.name = doc.value("name", std::string("unnamed"));
  inst.variables = string_list(require(doc, "variables"), "variables");
  if (inst.variables.size() < 2) throw InputError("at least two variables are required");
  if (inst.variables.size() > kMaxVariables)
    throw InputError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  if (std::set<std::string>(inst.variables.begin(), inst.variables.end()).size() != inst.variables.size())
    throw InputError("variable names must be distinct");

  if (doc.contains("ambient")) inst.ambient = string_list(doc.at("ambient"), "ambient");
  for (const auto& g : inst.ambient) {
    Poly f = parse_polynomial(g, inst.variables);
    if (f.is_zero() || !f.is_homogeneous()) throw InputError("ambient generator is not a nonzero form: " + g);
  }

  if (doc.contains("cuts")) {
    const json& cuts = doc.at("cuts");
    if (!cuts.is_array()) throw InputError("\"cuts\" must be an array");
    for (const auto& item : cuts) {
      Cut c;
      if (item.is_string()) {
        c.expression = item.get<std::string>();
      } else if (item.is_object()) {
        c.expression = require(item, "equation").get<std::string>();
        if (item.contains("degree")) c.degree = item.at("degree").get<unsigned>();
      } else {
        throw InputError("each cut is an expression or {\"degree\", \"equation\"}");
      }
      c.poly = parse_polynomial(c.expression, inst.variables);
      if (c.poly.is_zero() || !c.poly.is_homogeneous())
        throw InputError("cut is not a nonzero form: " + c.expression);
      const auto actual = static_cast<unsigned>(c.poly.total_degree());
      if (c.degree != 0 && c.degree != actual)
        throw InputError("cut declared of degree " + std::to_string(c.degree) + " has degree " +
                         std::to_string(actual) + ": " + c.expression);
      c.degree = actual;
      if (!inst.cuts.empty() && inst.cuts.back().degree > c.degree)
        throw InputError("cuts must be listed by ascending degree");
      inst.cuts.push_back(std::move(c));
    }
  }
  if (inst.ambient.empty() && inst.cuts.empty()) throw InputError("instance defines no equations");

  const json& point = require(doc, "point");
  if (!point.is_array() || point.size() != inst.variables.size())
    throw InputError("point must list one coordinate per variable");
  for (const auto& item : point) inst.point.push_back(coordinate(item));

  inst.ambient_homogeneous = doc.value("ambient_homogeneous", false);
  if (doc.contains("primes")) {
    inst.primes.clear();
    for (const auto& q : doc.at("primes")) inst.primes.push_back(q.get<std::uint32_t>());
  }
  inst.seed = doc.value("seed", std::uint64_t{1});
  inst.max_m = doc.value("max_m", 24u);
  return inst;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  try {
    return parse_instance(doc);
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

json to_json(const Instance& inst) {
  json cuts = json::array();
  for (const auto& c : inst.cuts) cuts.push_back({{"degree", c.degree}, {"equation", c.expression}});
  json point = json::array();
  for (const auto& c : inst.point) point.push_back(to_string(c));
  return {{"name", inst.name},
          {"variables", inst.variables},
          {"ambient", inst.ambient},
          {"cuts", cuts},
          {"point", point},
          {"ambient_homogeneous", inst.ambient_homogeneous},
          {"primes", inst.primes},
          {"seed", inst.seed},
          {"max_m", inst.max_m}};
}

}  // namespace seshadri::cli
