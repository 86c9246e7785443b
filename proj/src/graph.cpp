#include "steklov/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <tuple>

namespace steklov {

namespace {

std::string edge_str(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

bool BoundedGraph::has_edge(Vertex u, Vertex v) const {
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

RawGraph BoundedGraph::to_raw() const {
  RawGraph raw;
  raw.num_vertices = num_vertices_;
  raw.edges.reserve(edges_.size());
  for (const auto& e : edges_) raw.edges.emplace_back(e.u, e.v);
  raw.boundary.assign(boundary_.begin(), boundary_.end());
  raw.metadata = metadata_;
  return raw;
}

BoundedGraph validate(const RawGraph& raw) {
  const int n = raw.num_vertices;
  if (n <= 0) throw Error(ErrorCode::VertexOutOfRange, "num_vertices must be positive");

  BoundedGraph g;
  g.num_vertices_ = n;
  g.metadata_ = raw.metadata;
  g.adjacency_.assign(static_cast<std::size_t>(n), {});

  g.edges_.reserve(raw.edges.size());
  for (auto [a, b] : raw.edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error(ErrorCode::VertexOutOfRange, "edge " + edge_str(a, b));
    if (a == b) throw Error(ErrorCode::LoopEdge, "edge " + edge_str(a, b));
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end())
    throw Error(ErrorCode::DuplicateEdge, "edge " + edge_str(dup->u, dup->v));
  for (const auto& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());

  g.boundary_index_.assign(static_cast<std::size_t>(n), -1);
  g.interior_index_.assign(static_cast<std::size_t>(n), -1);
  std::vector<char> in_boundary(static_cast<std::size_t>(n), 0);
  for (int b : raw.boundary) {
    if (b < 0 || b >= n)
      throw Error(ErrorCode::BoundaryOutOfRange, "boundary vertex " + std::to_string(b));
    in_boundary[b] = 1;
  }
  for (int v = 0; v < n; ++v) {
    if (in_boundary[v]) {
      g.boundary_index_[v] = static_cast<int>(g.boundary_.size());
      g.boundary_.push_back(v);
    } else {
      g.interior_index_[v] = static_cast<int>(g.interior_.size());
      g.interior_.push_back(v);
    }
  }
  if (g.boundary_.size() < 2)
    throw Error(ErrorCode::BoundaryTooSmall,
                "need |B| >= 2, got " + std::to_string(g.boundary_.size()));

  const auto comp = connected_components(g);
  const int num_comp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<char> touched(static_cast<std::size_t>(num_comp), 0);
  for (Vertex b : g.boundary_) touched[comp[b]] = 1;
  for (int c = 0; c < num_comp; ++c) {
    if (!touched[c]) {
      const auto first = std::find(comp.begin(), comp.end(), c) - comp.begin();
      throw Error(ErrorCode::ComponentWithoutBoundary,
                  "component containing vertex " + std::to_string(first) + " has no boundary vertex");
    }
  }
  return g;
}

DegreeInfo degrees(const BoundedGraph& g) {
  DegreeInfo info;
  const int n = g.num_vertices();
  info.degree.resize(static_cast<std::size_t>(n));
  info.min_degree = std::numeric_limits<int>::max();
  info.min_boundary_degree = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < n; ++v) {
    const int d = g.degree(v);
    info.degree[v] = d;
    info.max_degree = std::max(info.max_degree, d);
    info.min_degree = std::min(info.min_degree, d);
    if (g.is_boundary(v)) info.min_boundary_degree = std::min(info.min_boundary_degree, d);
  }
  return info;
}

std::vector<int> bfs_distances(const BoundedGraph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), -1);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push(y);
      }
    }
  }
  return dist;
}

std::vector<int> connected_components(const BoundedGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int label = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = label;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (comp[y] < 0) {
          comp[y] = label;
          stack.push_back(y);
        }
      }
    }
    ++label;
  }
  return comp;
}

bool is_connected(const BoundedGraph& g) {
  const auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

int boundary_diameter(const BoundedGraph& g) {
  int diameter = 0;
  for (Vertex b : g.boundary()) {
    const auto dist = bfs_distances(g, b);
    for (Vertex c : g.boundary()) {
      if (dist[c] < 0)
        throw Error(ErrorCode::DisconnectedBoundary, "boundary vertices " + std::to_string(b) +
                                                         " and " + std::to_string(c) +
                                                         " lie in different components");
      diameter = std::max(diameter, dist[c]);
    }
  }
  return diameter;
}

bool is_boundary_independent(const BoundedGraph& g) {
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return g.is_boundary(e.u) && g.is_boundary(e.v); });
}

WeightFunction::WeightFunction(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] >= 0.0) || !std::isfinite(values_[i]))
      throw Error(ErrorCode::NegativeWeight, "s(" + std::to_string(i) + ") must be finite and >= 0");
  }
}

double WeightFunction::norm() const {
  double acc = 0.0;
  for (double x : values_) acc += x * x;
  return std::sqrt(acc);
}

bool WeightFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](double x) { return x == 0.0; });
}

NodeWeightedTree node_weighted_tree(const BoundedGraph& g, std::span<const double> weights,
                                    Vertex target) {
  const int n = g.num_vertices();
  if (static_cast<int>(weights.size()) != n)
    throw Error(ErrorCode::DimensionMismatch, "weight vector has wrong length");
  if (target < 0 || target >= n)
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(target));

  NodeWeightedTree tree;
  tree.target = target;
  tree.dist.assign(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
  tree.hops.assign(static_cast<std::size_t>(n), -1);

  // Key (distance, hops, vertex), compared lexicographically.
  using Key = std::tuple<double, int, Vertex>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
  std::vector<char> settled(static_cast<std::size_t>(n), 0);
  tree.dist[target] = weights[target];
  tree.hops[target] = 0;
  heap.emplace(tree.dist[target], 0, target);
  while (!heap.empty()) {
    const auto [d, h, x] = heap.top();
    heap.pop();
    if (settled[x]) continue;
    settled[x] = 1;
    for (Vertex y : g.neighbors(x)) {
      if (settled[y]) continue;
      const double nd = d + weights[y];
      const int nh = h + 1;
      if (nd < tree.dist[y] || (nd == tree.dist[y] && nh < tree.hops[y])) {
        tree.dist[y] = nd;
        tree.hops[y] = nh;
        heap.emplace(nd, nh, y);
      }
    }
  }
  return tree;
}

WeightedPath extract_path(const BoundedGraph& g, std::span<const double> weights,
                          const NodeWeightedTree& tree, Vertex source) {
  if (tree.hops[source] < 0)
    throw Error(ErrorCode::Unreachable, "no path from " + std::to_string(source) + " to " +
                                            std::to_string(tree.target));
  WeightedPath path;
  path.length = tree.dist[source];
  path.vertices.push_back(source);
  Vertex x = source;
  while (x != tree.target) {
    const double tol = 1e-12 * std::max(1.0, tree.dist[x]);
    Vertex next = -1;
    for (Vertex y : g.neighbors(x)) {  // ascending, so the first hit is the smallest
      if (tree.hops[y] != tree.hops[x] - 1) continue;
      if (std::abs(weights[x] + tree.dist[y] - tree.dist[x]) <= tol) {
        next = y;
        break;
      }
    }
    // The Dijkstra predecessor always qualifies, so next is found.
    x = next;
    path.vertices.push_back(x);
  }
  return path;
}

WeightedPath node_weighted_shortest_path(const BoundedGraph& g, std::span<const double> weights,
                                         Vertex source, Vertex target) {
  return extract_path(g, weights, node_weighted_tree(g, weights, target), source);
}

double node_weighted_distance(const BoundedGraph& g, const WeightFunction& s, Vertex u, Vertex v) {
  if (u < 0 || u >= g.num_vertices())
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(u));
  const auto tree = node_weighted_tree(g, s.values(), v);
  if (tree.hops[u] < 0)
    throw Error(ErrorCode::Unreachable,
                "no path from " + std::to_string(u) + " to " + std::to_string(v));
  return tree.dist[u];
}

}  // namespace steklov
