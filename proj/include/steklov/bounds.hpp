#pragma once

// Closed-form upper bounds on Steklov eigenvalues and their comparison
// against the computed spectrum.
//
// Every evaluator returns data, never throws for inapplicability: a bound
// whose hypotheses fail comes back with applicable = false and a reason.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "steklov/generators.hpp"
#include "steklov/graph.hpp"
#include "steklov/spectral.hpp"

namespace steklov {

/// Tolerance for "sigma_k <= value".
inline constexpr double kBoundTolerance = 1e-9;

struct BoundReport {
  std::string bound_name;
  int k = 2;
  std::optional<double> value;  // set iff applicable
  std::vector<std::string> assumptions;
  std::string reason;           // why not applicable, when it is not
  double sigma_k = 0.0;

  bool applicable() const { return value.has_value(); }
  bool satisfied() const { return !applicable() || sigma_k <= *value + kBoundTolerance; }
  /// value - sigma_k; NaN when not applicable.
  double slack() const;
  bool tight(double tol = kBoundTolerance) const { return applicable() && std::abs(slack()) <= tol; }
};

struct BoundaryDegreeStats {
  std::vector<int> degrees;           // sorted d_1 <= ... <= d_|B|
  std::vector<int> induced_degrees;   // sorted degrees inside G' = (B, E(B,B))
  long long s1 = 0;
  long long s2 = 0;
  long long s1_induced = 0;
};

BoundaryDegreeStats boundary_degree_stats(const BoundedGraph& g);

/// 8 Delta / |B| for caller-asserted planar graphs (Euler check |E| <= 3n - 6).
BoundReport bound_planar(const BoundedGraph& g, const SteklovSpectrum& spectrum);
/// (8 Delta + 4 X) / |B| with X the caller-asserted crossing number.
BoundReport bound_crossing(const BoundedGraph& g, const SteklovSpectrum& spectrum);
/// Same with an explicit crossing-number upper bound, overriding metadata.
BoundReport bound_crossing(const BoundedGraph& g, const SteklovSpectrum& spectrum, long long crossings,
                           std::string assumption);
/// |B| delta_B / (|B| - 1).
BoundReport bound_min_degree(const BoundedGraph& g, const SteklovSpectrum& spectrum);
/// sigma_k <= mu_k(N), N = L restricted to B; one report per k.
std::vector<BoundReport> bound_interlacing(const BoundedGraph& g, const SteklovSpectrum& spectrum);
/// sigma_k <= d_k when B is independent; one report per k.
std::vector<BoundReport> bound_independent_degrees(const BoundedGraph& g, const SteklovSpectrum& spectrum);

/// (q+1)(q^{t+1} - q^t + 1) / q^{t+1}.
double degree_diameter_value(int q, int t);
/// q - (q^t - q - 1) / q^{t+1}; algebraically identical to the above.
double degree_diameter_value_alt(int q, int t);

/// Needs Delta >= 3 and D_B >= 2t + 2 >= 4.
BoundReport bound_degree_diameter(const BoundedGraph& g, const SteklovSpectrum& spectrum, int t);

struct LayeredTestFunction {
  Vertex x0 = 0;
  Vertex y0 = 0;
  int t = 1;
  int q = 2;
  double a = 0.0;
  double b = 0.0;
  std::vector<double> f;
  double quotient = 0.0;
  double bound = 0.0;  // degree_diameter_value(q, t)
};

/// Builds the layered test function around a diameter-realising boundary
/// pair (x0, y0), lexicographically smallest. Throws PreconditionFailed,
/// LayersOverlap or DegenerateNormalization.
LayeredTestFunction degree_diameter_test_function(const BoundedGraph& g, int t);

struct DegreeSequenceBound {
  BoundReport report;       // S_1' form (primary)
  double weak_value = 0.0;  // S_1 form
};

/// 1 <= k <= |B|. Throws NegativeDiscriminant if |B|(S_2 + S_1') < S_1^2.
DegreeSequenceBound bound_degree_sequence(const BoundedGraph& g, const SteklovSpectrum& spectrum, int k);

/// The same trace bound written in terms of an arbitrary symmetric matrix:
/// (1/m) { tr N + sqrt((k-1)/(m-k+1) [m tr(N^2) - (tr N)^2]) }.
double trace_bound(const Matrix& n, int k);

/// A Laplacian-side bound that does not extend to Steklov eigenvalues.
struct RefutedProbe {
  std::string name;
  std::string statement;
  double threshold = 0.0;
  bool violated = false;  // sigma_2 > threshold
};

struct BoundTable {
  SteklovSpectrum spectrum;
  std::vector<BoundReport> reports;
  std::vector<RefutedProbe> probes;
  double laplacian_lambda2 = 0.0;
  double fiedler_bound = 0.0;  // n delta_V / (n - 1)
  int max_degree = 0;
  int min_boundary_degree = 0;
  int min_degree = 0;
  std::optional<int> boundary_diameter;

  bool all_satisfied() const;
};

/// Every applicable bound for g, plus the Laplacian comparison column and
/// the refuted-bound probes.
BoundTable evaluate_all(const BoundedGraph& g);

struct GenusScalingRow {
  std::string graph;
  int boundary_size = 0;
  int max_degree = 0;
  int genus = 0;
  double sigma2 = 0.0;
  double ratio = 0.0;  // sigma_2 |B| / (Delta (g+1)^3)
};

/// One row per graph. Throws PreconditionFailed when genus metadata is missing.
GenusScalingRow genus_scaling_row(const std::string& label, const BoundedGraph& g);
std::vector<GenusScalingRow> genus_scaling_report(Family family, const std::vector<int>& params,
                                                  const std::string& boundary_spec = "default");

}  // namespace steklov
