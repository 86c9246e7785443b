#include "steklov/flows.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "steklov/random.hpp"

namespace steklov {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double demand_mass(const std::vector<PathMass>& paths) {
  double total = 0.0;
  for (const auto& p : paths) total += p.mass;
  return total;
}

void require_connected_boundary(const BoundedGraph& g) {
  const auto comp = connected_components(g);
  for (Vertex b : g.boundary())
    if (comp[b] != comp[g.boundary().front()])
      throw Error(ErrorCode::DisconnectedBoundary, "boundary vertices lie in different components");
}

struct OracleResult {
  std::vector<WeightedPath> paths;  // one per demand
  double total_length = 0.0;
};

// For each demand (u, v), the lexicographically smallest minimum-weight path.
OracleResult shortest_paths(const BoundedGraph& g, const std::vector<DemandPair>& demands,
                            std::span<const double> weights) {
  OracleResult out;
  out.paths.resize(demands.size());
  std::size_t i = 0;
  while (i < demands.size()) {
    const Vertex target = demands[i].v;
    // Trees are rooted at the larger endpoint so that demands sharing a
    // target reuse one Dijkstra run; demands are sorted by (u, v).
    const auto tree = node_weighted_tree(g, weights, target);
    for (std::size_t j = 0; j < demands.size(); ++j) {
      if (demands[j].v != target || !out.paths[j].vertices.empty()) continue;
      out.paths[j] = extract_path(g, weights, tree, demands[j].u);
    }
    while (i < demands.size() && !out.paths[i].vertices.empty()) ++i;
  }
  for (const auto& p : out.paths) out.total_length += p.length;
  return out;
}

std::vector<double> path_congestion(int n, const std::vector<WeightedPath>& paths) {
  std::vector<double> c(static_cast<std::size_t>(n), 0.0);
  for (const auto& p : paths)
    for (Vertex x : p.vertices) c[x] += 1.0;
  return c;
}

}  // namespace

BoundaryFlow::BoundaryFlow(std::vector<DemandPair> demands)
    : demands_(std::move(demands)), support_(demands_.size()) {}

BoundaryFlow BoundaryFlow::complete_demand(const BoundedGraph& g) {
  std::vector<DemandPair> demands;
  const auto& b = g.boundary();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) demands.push_back({b[i], b[j]});
  return BoundaryFlow(std::move(demands));
}

void BoundaryFlow::add(std::size_t demand, std::vector<Vertex> path, double mass) {
  if (mass == 0.0) return;
  auto& paths = support_[demand];
  for (auto& p : paths) {
    if (p.path == path) {
      p.mass += mass;
      return;
    }
  }
  paths.push_back({std::move(path), mass});
}

void BoundaryFlow::scale(double factor) {
  for (auto& paths : support_) {
    for (auto& p : paths) p.mass *= factor;
    std::erase_if(paths, [](const PathMass& p) { return p.mass == 0.0; });
  }
}

std::size_t BoundaryFlow::support_size() const {
  std::size_t total = 0;
  for (const auto& paths : support_) total += paths.size();
  return total;
}

bool BoundaryFlow::is_unit(double tol) const {
  return std::all_of(support_.begin(), support_.end(),
                     [&](const auto& paths) { return std::abs(demand_mass(paths) - 1.0) <= tol; });
}

bool BoundaryFlow::is_integral() const {
  return std::all_of(support_.begin(), support_.end(), [](const auto& paths) {
    return paths.size() <= 1 && (paths.empty() || paths.front().mass == 1.0);
  });
}

void BoundaryFlow::check_paths(const BoundedGraph& g) const {
  for (std::size_t d = 0; d < demands_.size(); ++d) {
    const auto [u, v] = demands_[d];
    if (!g.is_boundary(u) || !g.is_boundary(v) || u >= v)
      throw Error(ErrorCode::InvalidFlow, "demand is not an ordered boundary pair");
    for (const auto& pm : support_[d]) {
      const auto& p = pm.path;
      if (!(pm.mass > 0.0)) throw Error(ErrorCode::InvalidFlow, "non-positive path mass");
      if (p.size() < 2 || !((p.front() == u && p.back() == v) || (p.front() == v && p.back() == u)))
        throw Error(ErrorCode::InvalidFlow, "path endpoints do not match demand");
      std::vector<Vertex> sorted = p;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::InvalidFlow, "path is not simple");
      for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] < 0 || p[i] >= g.num_vertices() || !g.has_edge(p[i], p[i + 1]))
          throw Error(ErrorCode::InvalidFlow, "path uses a non-edge");
    }
  }
}

double congestion_norm(std::span<const double> per_vertex, double p) {
  if (!(p >= 1.0)) throw Error(ErrorCode::PreconditionFailed, "con_p needs p >= 1");
  double acc = 0.0;
  for (double c : per_vertex) acc += std::pow(c, p);
  return std::pow(acc, 1.0 / p);
}

double CongestionProfile::con(double p) const {
  for (const auto& [q, value] : norms)
    if (q == p) return value;
  return congestion_norm(per_vertex, p);
}

double CongestionProfile::max() const {
  return per_vertex.empty() ? 0.0 : *std::max_element(per_vertex.begin(), per_vertex.end());
}

std::vector<double> vertex_congestion(const BoundedGraph& g, const BoundaryFlow& flow) {
  std::vector<double> c(static_cast<std::size_t>(g.num_vertices()), 0.0);
  for (std::size_t d = 0; d < flow.num_demands(); ++d)
    for (const auto& pm : flow.support(d))
      for (Vertex x : pm.path) c[x] += pm.mass;
  return c;
}

CongestionProfile congestion(const BoundedGraph& g, const BoundaryFlow& flow, std::span<const double> p_values) {
  CongestionProfile profile;
  profile.per_vertex = vertex_congestion(g, flow);
  for (double p : p_values) profile.norms.emplace_back(p, congestion_norm(profile.per_vertex, p));
  return profile;
}

BoundaryFlow round_to_integral(const BoundaryFlow& flow, std::uint64_t seed) {
  BoundaryFlow out(flow.demands());
  Rng rng(seed);
  for (std::size_t d = 0; d < flow.num_demands(); ++d) {
    const auto& paths = flow.support(d);
    const double total = demand_mass(paths);
    if (std::abs(total - 1.0) > 1e-9)
      throw Error(ErrorCode::MassNotNormalized, "demand " + std::to_string(d) + " carries mass " +
                                                    std::to_string(total));
    const double u = rng.uniform() * total;
    double acc = 0.0;
    std::size_t pick = paths.size() - 1;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      acc += paths[i].mass;
      if (u < acc) {
        pick = i;
        break;
      }
    }
    out.add(d, paths[pick].path, 1.0);
  }
  return out;
}

double expected_rounded_con2_squared(const BoundedGraph& g, const BoundaryFlow& flow) {
  // C*(x) is a sum of independent Bernoulli(p_d(x)) over demands d, so
  // E[C*(x)^2] = sum_d p_d(x)(1 - p_d(x)) + (sum_d p_d(x))^2.
  const int n = g.num_vertices();
  std::vector<double> mean(static_cast<std::size_t>(n), 0.0);
  std::vector<double> variance(static_cast<std::size_t>(n), 0.0);
  std::vector<double> p(static_cast<std::size_t>(n));
  for (std::size_t d = 0; d < flow.num_demands(); ++d) {
    std::fill(p.begin(), p.end(), 0.0);
    const double total = demand_mass(flow.support(d));
    for (const auto& pm : flow.support(d))
      for (Vertex x : pm.path) p[x] += pm.mass / total;
    for (int x = 0; x < n; ++x) {
      mean[x] += p[x];
      variance[x] += p[x] * (1.0 - p[x]);
    }
  }
  double out = 0.0;
  for (int x = 0; x < n; ++x) out += variance[x] + mean[x] * mean[x];
  return out;
}

std::vector<RoundingOutcome> enumerate_rounding_outcomes(const BoundedGraph& g, const BoundaryFlow& flow,
                                                         std::size_t max_outcomes) {
  const std::size_t m = flow.num_demands();
  std::size_t count = 1;
  for (std::size_t d = 0; d < m; ++d) {
    const std::size_t k = flow.support(d).size();
    if (k == 0) throw Error(ErrorCode::InvalidFlow, "demand without support");
    if (count > max_outcomes / k) throw Error(ErrorCode::PreconditionFailed, "too many rounding outcomes");
    count *= k;
  }
  std::vector<RoundingOutcome> out;
  out.reserve(count);
  std::vector<std::size_t> choice(m, 0);
  std::vector<double> c(static_cast<std::size_t>(g.num_vertices()));
  for (std::size_t iter = 0; iter < count; ++iter) {
    std::fill(c.begin(), c.end(), 0.0);
    double prob = 1.0;
    for (std::size_t d = 0; d < m; ++d) {
      const auto& paths = flow.support(d);
      prob *= paths[choice[d]].mass / demand_mass(paths);
      for (Vertex x : paths[choice[d]].path) c[x] += 1.0;
    }
    out.push_back({prob, dot(c, c)});
    for (std::size_t d = 0; d < m; ++d) {  // odometer
      if (++choice[d] < flow.support(d).size()) break;
      choice[d] = 0;
    }
  }
  return out;
}

RoundingReport verify_rounding_inequality(const BoundedGraph& g, const BoundaryFlow& flow, int trials,
                                          std::uint64_t seed) {
  RoundingReport r;
  r.trials = trials;
  r.seed = seed;
  const auto c = vertex_congestion(g, flow);
  r.con1 = std::accumulate(c.begin(), c.end(), 0.0);
  r.con2 = std::sqrt(dot(c, c));
  r.expectation_bound = r.con1 + r.con2 * r.con2;
  r.exact_expectation = expected_rounded_con2_squared(g, flow);
  r.existence_bound = r.con2 + std::sqrt(r.con1);

  const double nb = g.boundary_size();
  const double eps = 0.1;
  r.refinement_applicable = nb >= std::pow(static_cast<double>(g.num_vertices()), 0.25 + eps);
  r.refinement_bound = 2.0 * r.con2 + std::pow(nb, 2.0 / (1.0 + 4.0 * eps));

  double sum = 0.0, sum_sq = 0.0;
  r.best_sample_con2 = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    const auto rounded = round_to_integral(flow, seed + static_cast<std::uint64_t>(t));
    const auto rc = vertex_congestion(g, rounded);
    const double sq = dot(rc, rc);
    sum += sq;
    sum_sq += sq * sq;
    r.best_sample_con2 = std::min(r.best_sample_con2, std::sqrt(sq));
  }
  if (trials > 0) {
    r.sample_mean = sum / trials;
    const double var = trials > 1 ? std::max(0.0, (sum_sq - trials * r.sample_mean * r.sample_mean) / (trials - 1)) : 0.0;
    r.sample_std_error = std::sqrt(var / trials);
  }
  r.expectation_ok = r.sample_mean <= r.expectation_bound + 3.0 * r.sample_std_error;
  r.existence_ok = r.best_sample_con2 <= r.existence_bound + 1e-9;
  r.refinement_ok = !r.refinement_applicable || r.best_sample_con2 <= r.refinement_bound + 1e-9;
  return r;
}

double lambda_s(const BoundedGraph& g, const WeightFunction& s) {
  if (static_cast<int>(s.size()) != g.num_vertices())
    throw Error(ErrorCode::DimensionMismatch, "weight vector has wrong length");
  if (s.is_zero()) throw Error(ErrorCode::ZeroWeights, "Lambda_s needs s not identically zero");
  const auto& b = g.boundary();
  double total = 0.0;
  for (std::size_t j = 1; j < b.size(); ++j) {
    const auto tree = node_weighted_tree(g, s.values(), b[j]);
    for (std::size_t i = 0; i < j; ++i) {
      if (tree.hops[b[i]] < 0) throw Error(ErrorCode::DisconnectedBoundary, "boundary pair is unreachable");
      total += tree.dist[b[i]];
    }
  }
  return total / s.norm();
}

MinCongestionResult min_congestion_flow(const BoundedGraph& g, const SolverOptions& options) {
  require_connected_boundary(g);
  const int n = g.num_vertices();
  MinCongestionResult result;
  result.flow = BoundaryFlow::complete_demand(g);
  const auto& demands = result.flow.demands();

  // Start from hop-shortest paths.
  const std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
  auto start = shortest_paths(g, demands, ones);
  for (std::size_t d = 0; d < demands.size(); ++d) result.flow.add(d, start.paths[d].vertices, 1.0);
  std::vector<double> c = path_congestion(n, start.paths);
  result.objective.push_back(dot(c, c));

  std::vector<double> direction(static_cast<std::size_t>(n));
  for (int iter = 0; iter < options.max_iters; ++iter) {
    const auto oracle = shortest_paths(g, demands, c);
    const double objective = dot(c, c);
    // <grad, F - S> with grad_p = 2 sum_{x in p} c(x); sum_p F(p) len_c(p) = ||c||^2.
    result.fw_gap = 2.0 * (objective - oracle.total_length);
    result.iterations = iter;
    if (result.fw_gap <= options.tol) {
      result.converged = true;
      break;
    }
    const auto target = path_congestion(n, oracle.paths);
    for (int x = 0; x < n; ++x) direction[x] = target[x] - c[x];
    const double curvature = dot(direction, direction);
    if (curvature <= 0.0) {
      result.converged = true;
      break;
    }
    const double gamma = std::clamp(-dot(c, direction) / curvature, 0.0, 1.0);
    result.flow.scale(1.0 - gamma);
    for (std::size_t d = 0; d < demands.size(); ++d) result.flow.add(d, oracle.paths[d].vertices, gamma);
    for (int x = 0; x < n; ++x) c[x] += gamma * direction[x];
    result.objective.push_back(dot(c, c));
    result.iterations = iter + 1;
  }
  if (!result.converged) {
    const auto oracle = shortest_paths(g, demands, c);
    result.fw_gap = 2.0 * (dot(c, c) - oracle.total_length);
    result.converged = result.fw_gap <= options.tol;
  }
  // Recompute from the stored flow so C_F and F agree exactly.
  result.congestion = vertex_congestion(g, result.flow);
  result.con2 = std::sqrt(dot(result.congestion, result.congestion));
  return result;
}

MaxLambdaResult max_lambda(const BoundedGraph& g, const MinCongestionResult& flow_solution, std::uint64_t seed) {
  require_connected_boundary(g);
  const int n = g.num_vertices();
  const auto demands = BoundaryFlow::complete_demand(g).demands();

  auto normalise = [](std::vector<double>& s) {
    double norm = 0.0;
    for (double x : s) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > 0.0)
      for (double& x : s) x /= norm;
    return norm > 0.0;
  };

  MaxLambdaResult out;
  out.s = flow_solution.congestion;
  normalise(out.s);
  out.flow_lambda = lambda_s(g, WeightFunction(out.s));
  out.lambda = out.flow_lambda;

  constexpr int kStarts = 20;
  constexpr int kSteps = 200;
  Rng rng(seed);
  out.ascent_lambda = 0.0;
  std::vector<double> s(static_cast<std::size_t>(n));
  for (int start = 0; start < kStarts; ++start) {
    if (start == 0) s = out.s;
    else
      for (double& x : s) x = rng.uniform();
    if (!normalise(s)) s.assign(static_cast<std::size_t>(n), 1.0 / std::sqrt(n));
    for (int step = 0; step < kSteps; ++step) {
      // On the unit sphere Lambda_s equals the (concave) sum of distances.
      const auto oracle = shortest_paths(g, demands, s);
      const double value = oracle.total_length;
      if (value > out.ascent_lambda) out.ascent_lambda = value;
      if (value > out.lambda) {
        out.lambda = value;
        out.s = s;
      }
      auto grad = path_congestion(n, oracle.paths);
      // Project the supergradient onto the tangent space of the sphere.
      const double radial = dot(grad, s);
      double gnorm = 0.0;
      for (int x = 0; x < n; ++x) {
        grad[x] -= radial * s[x];
        gnorm += grad[x] * grad[x];
      }
      gnorm = std::sqrt(gnorm);
      if (gnorm == 0.0) break;
      const double eta = 0.5 / std::sqrt(step + 1.0);
      for (int x = 0; x < n; ++x) s[x] = std::max(0.0, s[x] + eta * grad[x] / gnorm);
      if (!normalise(s)) break;
    }
  }
  return out;
}

MaxLambdaResult max_lambda(const BoundedGraph& g, const SolverOptions& options, std::uint64_t seed) {
  return max_lambda(g, min_congestion_flow(g, options), seed);
}

DualityReport duality_gap(const BoundedGraph& g, const SolverOptions& options, std::uint64_t seed) {
  const auto flow = min_congestion_flow(g, options);
  const auto dual = max_lambda(g, flow, seed);
  DualityReport r;
  r.con2_star = flow.con2;
  r.lambda_star = dual.lambda;
  r.gap = r.con2_star - r.lambda_star;
  r.fw_gap = flow.fw_gap;
  r.iterations = flow.iterations;
  r.converged = flow.converged;
  r.weak_duality_ok = r.gap >= -1e-6;
  return r;
}

}  // namespace steklov
