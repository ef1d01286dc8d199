#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seshadri/geometry/local.hpp"
#include "seshadri/poly/random.hpp"

namespace seshadri {

enum class Status { LineFound, Exact, LowerBoundOnly };

std::string to_string(Status s);

/// One hypothesis consumed by a conclusion and how it was established.
struct Assumption {
  std::string name;
  /// True when checked by computation, false when taken from the user.
  bool verified = false;
  std::string detail;
};

struct SeshadriReport {
  Status status = Status::LowerBoundOnly;
  /// The Seshadri constant for LineFound / Exact, a lower bound otherwise.
  Rational epsilon = 1;
  /// d_p(X).
  int d_p = 0;
  int line_scheme_dimension = -1;
  std::vector<Assumption> assumptions;
  std::vector<std::string> notes;
};

struct AnalysisOptions {
  LocalOptions local;
  bool validate = false;
};

/// ε(X; p) = 1 when a line through p lies on X, otherwise ε >= d_p/(d_p - 1).
/// Throws InconsistencyError when d_p = 1 while no line passes through p.
SeshadriReport lower_bound(const PointedVariety& x, const AnalysisOptions& options = {});

struct AuxDivisor {
  std::size_t j = 0;  // index of the generator f_j, from 1
  unsigned i = 0;     // 1 <= i <= d_p - 1
  /// x_0^{i-1} f_j^1 + ... + f_j^i in normalized coordinates.
  Poly equation;
  Order order;
};

struct AuxDivisors {
  int d_p = 0;
  /// Basis of the degree-d_p part of I_X, normalized coordinates.
  std::vector<Poly> generators;
  std::vector<AuxDivisor> divisors;
  /// X ∩ ⋂ D_j^i = {p} as sets.
  bool common_zero_is_point = false;
};

AuxDivisors aux_divisors(const PointedVariety& x, const AnalysisOptions& options = {});

/// Whether V(ideal) ⊆ {[1:0:...:0]} for a homogeneous ideal.
bool zero_set_within_origin(const Ideal& ideal);

struct CompleteIntersectionInput {
  /// Ideal of the ambient Y; the zero ideal means Y = P^N.
  Ideal ambient{1};
  /// Cutting forms f_1..f_r; sorted by degree on use.
  std::vector<Poly> cuts;
  std::vector<Rational> point;
  /// User assertion that Y is a rational homogeneous space of Picard number one.
  bool ambient_homogeneous = false;
};

struct Classification {
  SeshadriReport report;
  PointedVariety x;
  PointedVariety y;
  LineScheme lines_x;
  LineScheme lines_y;
  int dp_x = 0;
  int dp_y = 0;
  std::vector<unsigned> degrees;  // d_1 <= ... <= d_r
};

/// Exact Seshadri constant of X = Y ∩ V(f_1..f_r) at p when the
/// complete-intersection hypotheses hold. Throws HypothesisError naming the
/// failed condition.
Classification classify_ci(const CompleteIntersectionInput& input, const AnalysisOptions& options = {});

struct CurveCertificate {
  /// Curve ideal in the normalized coordinates of X (p = [1:0:...:0]).
  Ideal curve{1};
  Integer degree = 0;
  unsigned multiplicity = 0;
  Rational ratio = 0;
  Integer expected_degree = 0;
  Integer expected_multiplicity = 0;
  std::uint64_t seed = 0;
  unsigned attempts = 0;
  /// Whether the cutting forms were perturbed after a degenerate attempt.
  bool perturbed = false;
  std::vector<std::string> trace;
  /// Irreducibility of the curve is never certified.
  bool irreducibility_certified = false;
};

struct CurveOptions {
  AnalysisOptions analysis;
  unsigned retries = 5;
  int coefficient_bound = 5;
};

/// Cone-cutting Seshadri curve for a classified complete intersection with
/// d_r >= 2 and Σ d_j = dim F_p(Y) + 1. `component` is an ideal in the
/// direction variables of Y's normalized coordinates; std::nullopt uses all of F_p(Y).
CurveCertificate seshadri_curve(const CompleteIntersectionInput& input, const std::optional<Ideal>& component,
                                std::uint64_t seed, const CurveOptions& options = {});

struct SharpnessInstance {
  unsigned n = 0;
  unsigned d = 0;
  PointedVariety x;
  Poly equation;
  LineScheme lines;
  CurveCertificate certificate;
};

/// X = V(x_0^{d-1} f^1 + ... + x_0^{d-n+1} f^{n-1} + x_0 f^{d-1} + f^d) ⊂ P^{n+1}
/// with random f^i, p = [1:0:...:0], and C = V(f^1..f^{n-1}, x_0 f^{d-1} + f^d).
SharpnessInstance sharpness_example(unsigned n, unsigned d, std::uint64_t seed, const CurveOptions& options = {});

/// Degree and multiplicity of a curve ideal in normalized coordinates, recomputed from scratch.
void measure_curve(CurveCertificate& cert, const LocalOptions& options);

}  // namespace seshadri
