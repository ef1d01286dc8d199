#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "seshadri/constants/seshadri.hpp"
#include "seshadri/poly/parser.hpp"

namespace seshadri::cli {

struct Cut {
  unsigned degree = 0;
  std::string expression;
  Poly poly;
};

/// A pointed variety X = Y ∩ V(cuts) read from a JSON instance file.
struct Instance {
  std::string name;
  VariableNames variables;
  std::vector<std::string> ambient;  // generators of Y; empty means P^N
  std::vector<Cut> cuts;             // ascending degree
  std::vector<Rational> point;
  bool ambient_homogeneous = false;
  std::vector<std::uint32_t> primes = {5, 7, 11};
  std::uint64_t seed = 1;
  unsigned max_m = 24;

  std::size_t nvars() const { return variables.size(); }
  Ideal ambient_ideal() const;
  /// Ideal of X: ambient generators together with the cuts.
  Ideal ideal() const;
  PointedVariety pointed() const;
  CompleteIntersectionInput complete_intersection() const;
};

/// Validates and parses; every problem surfaces as InputError.
Instance parse_instance(const nlohmann::json& doc);
Instance load_instance(const std::filesystem::path& path);
nlohmann::json to_json(const Instance& inst);

}  // namespace seshadri::cli
