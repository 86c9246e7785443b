#pragma once

// Graph-with-boundary data model.
//
// A BoundedGraph is a simple undirected graph on vertices 0..n-1 together
// with a boundary vertex set B (|B| >= 2) such that every connected
// component meets B. The remaining vertices form the interior.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "steklov/error.hpp"

namespace steklov {

using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;  // invariant after validation: u < v

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Caller-asserted topology. Nothing here is verified beyond cheap
/// necessary conditions (see bounds).
struct TopologyMetadata {
  std::optional<bool> planar;
  std::optional<int> crossing_number;
  std::optional<int> genus;
};

/// Unvalidated input: what a file or a generator hands to validate().
struct RawGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> boundary;
  TopologyMetadata metadata;
};

class BoundedGraph {
 public:
  int num_vertices() const noexcept { return num_vertices_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Sorted ascending.
  const std::vector<Vertex>& boundary() const noexcept { return boundary_; }
  /// Sorted ascending; may be empty.
  const std::vector<Vertex>& interior() const noexcept { return interior_; }
  int boundary_size() const noexcept { return static_cast<int>(boundary_.size()); }
  bool is_boundary(Vertex v) const { return boundary_index_[v] >= 0; }
  /// Position of v in boundary(), or -1 for interior vertices.
  int boundary_index(Vertex v) const { return boundary_index_[v]; }
  /// Position of v in interior(), or -1 for boundary vertices.
  int interior_index(Vertex v) const { return interior_index_[v]; }
  /// Sorted neighbour lists.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  const TopologyMetadata& metadata() const noexcept { return metadata_; }

  /// Copy of the raw description (edges sorted, boundary sorted).
  RawGraph to_raw() const;

  friend BoundedGraph validate(const RawGraph& raw);

 private:
  BoundedGraph() = default;

  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<Vertex> boundary_;
  std::vector<Vertex> interior_;
  std::vector<int> boundary_index_;
  std::vector<int> interior_index_;
  std::vector<std::vector<Vertex>> adjacency_;
  TopologyMetadata metadata_;
};

/// Checks every invariant and builds the immutable graph.
/// Throws Error with LoopEdge, DuplicateEdge, VertexOutOfRange,
/// BoundaryTooSmall, BoundaryOutOfRange or ComponentWithoutBoundary.
BoundedGraph validate(const RawGraph& raw);

struct DegreeInfo {
  std::vector<int> degree;
  int max_degree = 0;           // Delta
  int min_boundary_degree = 0;  // delta_B
  int min_degree = 0;           // delta_V
};

DegreeInfo degrees(const BoundedGraph& g);

/// Hop distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const BoundedGraph& g, Vertex source);

/// Component label per vertex, labels numbered 0.. in order of first vertex.
std::vector<int> connected_components(const BoundedGraph& g);

bool is_connected(const BoundedGraph& g);

/// Largest hop distance between two boundary vertices.
/// Throws DisconnectedBoundary when B spans several components.
int boundary_diameter(const BoundedGraph& g);

/// True iff no edge joins two boundary vertices.
bool is_boundary_independent(const BoundedGraph& g);

/// Nonnegative vertex weights s : V -> R_+.
class WeightFunction {
 public:
  /// Throws NegativeWeight on any negative or non-finite entry.
  explicit WeightFunction(std::vector<double> values);

  static WeightFunction constant(int n, double value) {
    return WeightFunction(std::vector<double>(static_cast<std::size_t>(n), value));
  }

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](Vertex v) const { return values_[static_cast<std::size_t>(v)]; }
  std::span<const double> values() const noexcept { return values_; }
  double norm() const;
  bool is_zero() const;

 private:
  std::vector<double> values_;
};

struct WeightedPath {
  double length = 0.0;
  std::vector<Vertex> vertices;  // from source to target inclusive
};

/// d_s(u, v): minimum over u-v paths of the sum of s over every path
/// vertex, both endpoints included. Throws Unreachable.
double node_weighted_distance(const BoundedGraph& g, const WeightFunction& s, Vertex u, Vertex v);

/// Single-target node-weighted distances: dist[x] = d_s(x, target), with
/// the hop count of the chosen shortest path as a secondary key.
struct NodeWeightedTree {
  Vertex target = 0;
  std::vector<double> dist;  // +inf when unreachable
  std::vector<int> hops;     // -1 when unreachable
};

NodeWeightedTree node_weighted_tree(const BoundedGraph& g, std::span<const double> weights,
                                    Vertex target);

/// Extracts the lexicographically smallest vertex sequence among the
/// minimum-weight, minimum-hop paths from `source` to the tree's target.
WeightedPath extract_path(const BoundedGraph& g, std::span<const double> weights,
                          const NodeWeightedTree& tree, Vertex source);

/// Convenience: node_weighted_tree + extract_path.
WeightedPath node_weighted_shortest_path(const BoundedGraph& g, std::span<const double> weights,
                                         Vertex source, Vertex target);

}  // namespace steklov
