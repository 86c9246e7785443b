#include "steklov/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace steklov {

namespace {

BoundReport make_report(std::string name, int k, const SteklovSpectrum& spectrum) {
  BoundReport r;
  r.bound_name = std::move(name);
  r.k = k;
  r.sigma_k = spectrum.sigma(k);
  return r;
}

BoundReport not_applicable(BoundReport r, std::string reason) {
  r.value.reset();
  r.reason = std::move(reason);
  return r;
}

double ipow(int base, int exp) {
  double out = 1.0;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

struct DiameterPair {
  int diameter = 0;
  Vertex x0 = 0;
  Vertex y0 = 0;
};

// Lexicographically smallest boundary pair at distance D_B.
DiameterPair diameter_pair(const BoundedGraph& g) {
  DiameterPair best{-1, 0, 0};
  const auto& b = g.boundary();
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto dist = bfs_distances(g, b[i]);
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (dist[b[j]] < 0) throw Error(ErrorCode::DisconnectedBoundary, "boundary spans components");
      if (dist[b[j]] > best.diameter) best = {dist[b[j]], b[i], b[j]};
    }
  }
  return best;
}

// Empty string when the degree-diameter hypotheses hold.
std::string degree_diameter_violation(int max_degree, int diameter, int t) {
  if (t < 1) return "t must be >= 1";
  if (max_degree < 3) return "needs Delta >= 3 (Delta = " + std::to_string(max_degree) + ")";
  if (diameter < 2 * t + 2)
    return "needs D_B >= 2t+2 = " + std::to_string(2 * t + 2) + " (D_B = " + std::to_string(diameter) + ")";
  return {};
}

}  // namespace

double BoundReport::slack() const {
  return applicable() ? *value - sigma_k : std::numeric_limits<double>::quiet_NaN();
}

BoundaryDegreeStats boundary_degree_stats(const BoundedGraph& g) {
  BoundaryDegreeStats stats;
  for (Vertex b : g.boundary()) {
    const int d = g.degree(b);
    int inside = 0;
    for (Vertex y : g.neighbors(b))
      if (g.is_boundary(y)) ++inside;
    stats.degrees.push_back(d);
    stats.induced_degrees.push_back(inside);
    stats.s1 += d;
    stats.s2 += static_cast<long long>(d) * d;
    stats.s1_induced += inside;
  }
  std::sort(stats.degrees.begin(), stats.degrees.end());
  std::sort(stats.induced_degrees.begin(), stats.induced_degrees.end());
  return stats;
}

BoundReport bound_planar(const BoundedGraph& g, const SteklovSpectrum& spectrum) {
  auto r = make_report("planar", 2, spectrum);
  const auto& meta = g.metadata();
  if (!meta.planar.value_or(false)) return not_applicable(std::move(r), "planarity not asserted");
  const int n = g.num_vertices();
  if (n >= 3 && g.num_edges() > 3 * n - 6)
    return not_applicable(std::move(r), "asserted planar but |E| > 3n - 6");
  r.assumptions.push_back("planar asserted by caller");
  r.value = 8.0 * degrees(g).max_degree / g.boundary_size();
  return r;
}

BoundReport bound_crossing(const BoundedGraph& g, const SteklovSpectrum& spectrum, long long crossings,
                           std::string assumption) {
  auto r = make_report("crossing", 2, spectrum);
  if (crossings < 0) return not_applicable(std::move(r), "negative crossing number");
  r.assumptions.push_back(std::move(assumption));
  r.value = (8.0 * degrees(g).max_degree + 4.0 * static_cast<double>(crossings)) / g.boundary_size();
  return r;
}

BoundReport bound_crossing(const BoundedGraph& g, const SteklovSpectrum& spectrum) {
  const auto& x = g.metadata().crossing_number;
  if (!x) return not_applicable(make_report("crossing", 2, spectrum), "crossing number not given");
  return bound_crossing(g, spectrum, *x, "crossing number X = " + std::to_string(*x) + " asserted by caller");
}

BoundReport bound_min_degree(const BoundedGraph& g, const SteklovSpectrum& spectrum) {
  auto r = make_report("min_boundary_degree", 2, spectrum);
  const double nb = g.boundary_size();
  r.value = nb / (nb - 1.0) * degrees(g).min_boundary_degree;
  return r;
}

std::vector<BoundReport> bound_interlacing(const BoundedGraph& g, const SteklovSpectrum& spectrum) {
  const Vector mu = symmetric_eigenvalues(principal_submatrix(laplacian(g), g.boundary()));
  std::vector<BoundReport> out;
  for (int k = 1; k <= g.boundary_size(); ++k) {
    auto r = make_report("interlacing", k, spectrum);
    r.value = mu(k - 1);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<BoundReport> bound_independent_degrees(const BoundedGraph& g, const SteklovSpectrum& spectrum) {
  const bool independent = is_boundary_independent(g);
  const auto stats = boundary_degree_stats(g);
  std::vector<BoundReport> out;
  for (int k = 1; k <= g.boundary_size(); ++k) {
    auto r = make_report("independent_boundary_degree", k, spectrum);
    if (independent) {
      r.value = stats.degrees[k - 1];
      r.assumptions.push_back("boundary is an independent set");
    } else {
      r = not_applicable(std::move(r), "boundary vertices are adjacent");
    }
    out.push_back(std::move(r));
  }
  return out;
}

double degree_diameter_value(int q, int t) {
  const double qt1 = ipow(q, t + 1);
  return (q + 1.0) * (qt1 - ipow(q, t) + 1.0) / qt1;
}

double degree_diameter_value_alt(int q, int t) {
  return q - (ipow(q, t) - q - 1.0) / ipow(q, t + 1);
}

BoundReport bound_degree_diameter(const BoundedGraph& g, const SteklovSpectrum& spectrum, int t) {
  auto r = make_report("degree_diameter", 2, spectrum);
  const int max_degree = degrees(g).max_degree;
  int diameter = 0;
  try {
    diameter = boundary_diameter(g);
  } catch (const Error&) {
    return not_applicable(std::move(r), "boundary spans several components");
  }
  if (auto why = degree_diameter_violation(max_degree, diameter, t); !why.empty())
    return not_applicable(std::move(r), "PreconditionFailed: " + why);
  r.assumptions.push_back("t = " + std::to_string(t));
  r.value = degree_diameter_value(max_degree - 1, t);
  return r;
}

LayeredTestFunction degree_diameter_test_function(const BoundedGraph& g, int t) {
  const int max_degree = degrees(g).max_degree;
  const auto pair = diameter_pair(g);
  if (auto why = degree_diameter_violation(max_degree, pair.diameter, t); !why.empty())
    throw Error(ErrorCode::PreconditionFailed, why);

  LayeredTestFunction out;
  out.x0 = pair.x0;
  out.y0 = pair.y0;
  out.t = t;
  out.q = max_degree - 1;
  out.bound = degree_diameter_value(out.q, t);

  const auto dx = bfs_distances(g, pair.x0);
  const auto dy = bfs_distances(g, pair.y0);
  const int n = g.num_vertices();
  auto in_left = [&](Vertex v) { return dx[v] >= 0 && dx[v] <= t; };
  auto in_right = [&](Vertex v) { return dy[v] >= 0 && dy[v] <= t; };

  std::vector<double> shape(static_cast<std::size_t>(n), 0.0);  // q^{t+1-i} on the layers
  double left_mass = 0.0, right_mass = 0.0;
  for (Vertex v = 0; v < n; ++v) {
    if (in_left(v) && in_right(v))
      throw Error(ErrorCode::LayersOverlap, "vertex " + std::to_string(v) + " lies in both layer families");
    if (in_left(v)) shape[v] = ipow(out.q, t + 1 - dx[v]);
    if (in_right(v)) shape[v] = ipow(out.q, t + 1 - dy[v]);
    if (g.is_boundary(v)) {
      if (in_left(v)) left_mass += shape[v];
      if (in_right(v)) right_mass += shape[v];
    }
  }
  if (left_mass == 0.0 || right_mass == 0.0)
    throw Error(ErrorCode::DegenerateNormalization, "no boundary mass on one side");

  // a * left_mass + b * right_mass = 0, then a^2 + b^2 = 1.
  const double norm = std::hypot(right_mass, left_mass);
  out.a = right_mass / norm;
  out.b = -left_mass / norm;
  out.f.assign(static_cast<std::size_t>(n), 0.0);
  for (Vertex v = 0; v < n; ++v) {
    if (in_left(v)) out.f[v] = out.a * shape[v];
    else if (in_right(v)) out.f[v] = out.b * shape[v];
  }
  out.quotient = rayleigh_quotient(g, out.f);
  return out;
}

double trace_bound(const Matrix& n, int k) {
  const double m = static_cast<double>(n.rows());
  const double tr = n.trace();
  const double tr2 = (n * n).trace();
  const double disc = m * tr2 - tr * tr;
  const double weight = (k - 1.0) / (m - k + 1.0);
  return (tr + std::sqrt(weight * std::max(0.0, disc))) / m;
}

DegreeSequenceBound bound_degree_sequence(const BoundedGraph& g, const SteklovSpectrum& spectrum, int k) {
  const int nb = g.boundary_size();
  if (k < 1 || k > nb) throw Error(ErrorCode::PreconditionFailed, "k must lie in 1..|B|");
  const auto stats = boundary_degree_stats(g);
  const long long disc = nb * (stats.s2 + stats.s1_induced) - stats.s1 * stats.s1;
  const long long weak_disc = nb * (stats.s2 + stats.s1) - stats.s1 * stats.s1;
  if (disc < 0 || weak_disc < 0)
    throw Error(ErrorCode::NegativeDiscriminant, "|B|(S2 + S1') - S1^2 = " + std::to_string(disc));
  const double weight = (k - 1.0) / (nb - k + 1.0);

  DegreeSequenceBound out;
  out.report = make_report("degree_sequence", k, spectrum);
  out.report.value = (stats.s1 + std::sqrt(weight * static_cast<double>(disc))) / nb;
  out.weak_value = (stats.s1 + std::sqrt(weight * static_cast<double>(weak_disc))) / nb;
  return out;
}

bool BoundTable::all_satisfied() const {
  return std::all_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.satisfied(); });
}

BoundTable evaluate_all(const BoundedGraph& g) {
  BoundTable table;
  table.spectrum = steklov_spectrum(g);
  const auto& sp = table.spectrum;
  const auto deg = degrees(g);
  table.max_degree = deg.max_degree;
  table.min_boundary_degree = deg.min_boundary_degree;
  table.min_degree = deg.min_degree;
  try {
    table.boundary_diameter = boundary_diameter(g);
  } catch (const Error&) {
    table.boundary_diameter.reset();
  }

  auto& out = table.reports;
  out.push_back(bound_planar(g, sp));
  out.push_back(bound_crossing(g, sp));
  out.push_back(bound_min_degree(g, sp));

  const int t_max = table.boundary_diameter ? (*table.boundary_diameter - 2) / 2 : 0;
  out.push_back(bound_degree_diameter(g, sp, std::max(1, t_max)));
  if (out.back().applicable()) {
    auto r = make_report("degree_diameter_test_function", 2, sp);
    try {
      const auto tf = degree_diameter_test_function(g, t_max);
      r.value = tf.quotient;
      r.assumptions.push_back("t = " + std::to_string(t_max) + ", x0 = " + std::to_string(tf.x0) +
                              ", y0 = " + std::to_string(tf.y0));
    } catch (const Error& e) {
      r = not_applicable(std::move(r), e.what());
    }
    out.push_back(std::move(r));
  }

  for (auto& r : bound_interlacing(g, sp)) out.push_back(std::move(r));
  for (auto& r : bound_independent_degrees(g, sp)) out.push_back(std::move(r));
  for (int k = 1; k <= g.boundary_size(); ++k) out.push_back(bound_degree_sequence(g, sp, k).report);

  const Vector lambda = symmetric_eigenvalues(laplacian(g));
  const int n = g.num_vertices();
  table.laplacian_lambda2 = n >= 2 ? lambda(1) : 0.0;
  table.fiedler_bound = n >= 2 ? static_cast<double>(n) * deg.min_degree / (n - 1.0) : 0.0;

  const double sigma2 = sp.sigma(2);
  auto probe = [&](std::string name, std::string statement, double threshold) {
    table.probes.push_back({std::move(name), std::move(statement), threshold, sigma2 > threshold + kBoundTolerance});
  };
  probe("min_boundary_degree_plain", "sigma_2 <= delta_B", deg.min_boundary_degree);
  if (g.metadata().planar.value_or(false)) probe("planar_constant", "sigma_2 <= 4 (planar)", 4.0);
  probe("edge_sqrt", "sigma_2 <= floor(-1 + sqrt(1 + 2|E|))",
        std::floor(-1.0 + std::sqrt(1.0 + 2.0 * g.num_edges())));
  return table;
}

GenusScalingRow genus_scaling_row(const std::string& label, const BoundedGraph& g) {
  const auto& genus = g.metadata().genus;
  if (!genus) throw Error(ErrorCode::PreconditionFailed, "genus metadata missing for " + label);
  GenusScalingRow row;
  row.graph = label;
  row.boundary_size = g.boundary_size();
  row.max_degree = degrees(g).max_degree;
  row.genus = *genus;
  row.sigma2 = steklov_spectrum(g).sigma(2);
  const double g1 = row.genus + 1.0;
  row.ratio = row.sigma2 * row.boundary_size / (row.max_degree * g1 * g1 * g1);
  return row;
}

std::vector<GenusScalingRow> genus_scaling_report(Family family, const std::vector<int>& params,
                                                  const std::string& boundary_spec) {
  std::vector<GenusScalingRow> rows;
  for (int p : params) {
    const FamilySpec spec{family, {p}};
    rows.push_back(genus_scaling_row(to_string(spec), generate(spec, boundary_spec)));
  }
  return rows;
}

}  // namespace steklov
