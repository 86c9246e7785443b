#pragma once

// Boundary flows, vertex congestion, randomized rounding, the node-weighted
// metric functional Lambda_s, and the min-congestion / max-Lambda pair.
//
// Demand pairs are unordered distinct boundary pairs (the edges of K_|B|).

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "steklov/graph.hpp"

namespace steklov {

struct DemandPair {
  Vertex u;
  Vertex v;  // u < v

  friend bool operator==(const DemandPair&, const DemandPair&) = default;
  friend auto operator<=>(const DemandPair&, const DemandPair&) = default;
};

struct PathMass {
  std::vector<Vertex> path;  // simple, from demand.u to demand.v
  double mass = 0.0;
};

/// Sparse flow: for each demand pair, the supported paths and their masses.
class BoundaryFlow {
 public:
  BoundaryFlow() = default;
  explicit BoundaryFlow(std::vector<DemandPair> demands);

  /// Empty flow over every unordered boundary pair of g.
  static BoundaryFlow complete_demand(const BoundedGraph& g);

  const std::vector<DemandPair>& demands() const noexcept { return demands_; }
  std::size_t num_demands() const noexcept { return demands_.size(); }
  const std::vector<PathMass>& support(std::size_t demand) const { return support_[demand]; }
  std::vector<PathMass>& support(std::size_t demand) { return support_[demand]; }
  /// Adds mass to a path, merging with an identical supported path.
  void add(std::size_t demand, std::vector<Vertex> path, double mass);
  void scale(double factor);
  std::size_t support_size() const;

  /// Each demand carries total mass 1 within tol.
  bool is_unit(double tol = 1e-9) const;
  /// At most one supported path per demand, with mass exactly 1.
  bool is_integral() const;
  /// Paths are simple, follow edges of g, join their demand pair, and carry
  /// positive mass. Throws InvalidFlow.
  void check_paths(const BoundedGraph& g) const;

 private:
  std::vector<DemandPair> demands_;
  std::vector<std::vector<PathMass>> support_;
};

struct CongestionProfile {
  std::vector<double> per_vertex;                  // C_F(v)
  std::vector<std::pair<double, double>> norms;    // (p, con_p)

  double con(double p) const;  // computed on demand when not cached
  double max() const;
};

std::vector<double> vertex_congestion(const BoundedGraph& g, const BoundaryFlow& flow);
CongestionProfile congestion(const BoundedGraph& g, const BoundaryFlow& flow, std::span<const double> p_values);
double congestion_norm(std::span<const double> per_vertex, double p);

/// Picks one path per demand independently with probability equal to its
/// mass. Throws MassNotNormalized when a demand's mass is off by > 1e-9.
BoundaryFlow round_to_integral(const BoundaryFlow& flow, std::uint64_t seed);

/// Exact E[con_2(F*)^2] over the rounding distribution (closed form).
double expected_rounded_con2_squared(const BoundedGraph& g, const BoundaryFlow& flow);

struct RoundingOutcome {
  double probability = 0.0;
  double con2_squared = 0.0;
};

/// Every joint rounding outcome; throws PreconditionFailed above max_outcomes.
std::vector<RoundingOutcome> enumerate_rounding_outcomes(const BoundedGraph& g, const BoundaryFlow& flow,
                                                         std::size_t max_outcomes = 1u << 20);

struct RoundingReport {
  int trials = 0;
  std::uint64_t seed = 0;
  double con1 = 0.0;
  double con2 = 0.0;
  double expectation_bound = 0.0;     // con1 + con2^2
  double exact_expectation = 0.0;     // E[con2(F*)^2]
  double sample_mean = 0.0;           // of con2(F*)^2
  double sample_std_error = 0.0;
  double best_sample_con2 = 0.0;
  double existence_bound = 0.0;       // con2 + sqrt(con1)
  bool expectation_ok = false;        // sample mean <= bound + 3 standard errors
  bool existence_ok = false;          // some sample within existence_bound
  bool refinement_applicable = false; // |B| >= |V|^{1/4 + 0.1}
  double refinement_bound = 0.0;      // 2 con2 + |B|^{2/(1 + 0.4)}
  bool refinement_ok = false;
};

RoundingReport verify_rounding_inequality(const BoundedGraph& g, const BoundaryFlow& flow, int trials,
                                          std::uint64_t seed);

/// Sum over unordered boundary pairs of d_s, divided by ||s||_2.
double lambda_s(const BoundedGraph& g, const WeightFunction& s);

struct SolverOptions {
  int max_iters = 5000;
  double tol = 1e-6;
};

struct MinCongestionResult {
  BoundaryFlow flow;
  std::vector<double> congestion;  // C_F at the returned iterate
  double con2 = 0.0;
  double fw_gap = 0.0;              // <grad, F - S> at the last iterate
  int iterations = 0;
  bool converged = false;
  std::vector<double> objective;    // ||C_F||^2 per iteration, first entry = start
};

/// Frank-Wolfe on ||C_F||_2^2 over unit K_|B| flows with exact line search
/// and a node-weighted shortest-path linear oracle. Non-convergence is
/// reported through `converged`, not thrown.
MinCongestionResult min_congestion_flow(const BoundedGraph& g, const SolverOptions& options = {});

struct MaxLambdaResult {
  std::vector<double> s;        // unit norm
  double lambda = 0.0;          // best found
  double flow_lambda = 0.0;     // Lambda at s proportional to C_F
  double ascent_lambda = 0.0;   // best over the multistart ascents
};

/// Recovers s from the min-congestion iterate, then refines with 20 seeded
/// projected-supergradient ascents.
MaxLambdaResult max_lambda(const BoundedGraph& g, const MinCongestionResult& flow_solution,
                           std::uint64_t seed = 0);
MaxLambdaResult max_lambda(const BoundedGraph& g, const SolverOptions& options = {}, std::uint64_t seed = 0);

struct DualityReport {
  double con2_star = 0.0;
  double lambda_star = 0.0;
  double gap = 0.0;  // con2_star - lambda_star
  double fw_gap = 0.0;
  int iterations = 0;
  bool converged = false;
  bool weak_duality_ok = false;  // gap >= -1e-6
};

DualityReport duality_gap(const BoundedGraph& g, const SolverOptions& options = {}, std::uint64_t seed = 0);

}  // namespace steklov
