#pragma once

// Generators for the graph families used throughout the examples and tests.
//
// Textual family specs, as accepted by the CLI:
//   path:N  cycle:N  star:N  grid:W[,H]  complete:N  bipartite:A,B
//   k2dvee:DELTA  torus:W[,H]
// star:N has N vertices in total (centre 0, leaves 1..N-1).
// grid:W,H and torus:W,H number vertex (x, y) as y*W + x.
//
// Boundary specs: default | ends | all | leaves | border | explicit list "0,2,5".

#include <string>
#include <string_view>
#include <vector>

#include "steklov/graph.hpp"

namespace steklov {

enum class Family { Path, Cycle, Star, Grid, Complete, CompleteBipartite, K2DVee, Torus };

struct FamilySpec {
  Family family = Family::Path;
  std::vector<int> params;
};

/// Parses "name:a,b". Throws BadFamilyParameters.
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);
std::string_view family_name(Family family);
/// Throws BadFamilyParameters on unknown names.
Family family_from_name(std::string_view name);

/// Edges and known topology metadata; boundary left empty.
RawGraph generate_raw(const FamilySpec& spec);

/// Resolves a boundary mini-language spec against a generated graph.
std::vector<Vertex> resolve_boundary(const FamilySpec& spec, const RawGraph& raw,
                                     std::string_view boundary_spec);

BoundedGraph generate(const FamilySpec& spec, std::string_view boundary_spec = "default");

// Shorthands used heavily by the tests.
BoundedGraph path_graph(int n);                     // B = endpoints
BoundedGraph cycle_graph(int n, std::vector<Vertex> boundary);
BoundedGraph star_graph(int leaves);                // K_{1,leaves}, B = leaves
BoundedGraph complete_graph(int n);                 // B = V
BoundedGraph k2d_vee(int max_degree);               // B = {u1, u2}

}  // namespace steklov
