#include "steklov/generators.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace steklov {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadFamilyParameters, what); }

std::vector<int> parse_int_list(std::string_view text, ErrorCode code) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw Error(code, "cannot parse integer list '" + std::string(text) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

void add_grid_edges(RawGraph& raw, int w, int h, bool wrap) {
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const int v = y * w + x;
      if (x + 1 < w) raw.edges.emplace_back(v, v + 1);
      else if (wrap) raw.edges.emplace_back(v, y * w);
      if (y + 1 < h) raw.edges.emplace_back(v, v + w);
      else if (wrap) raw.edges.emplace_back(v, x);
    }
  }
}

// floor(n/2) floor((n-1)/2) floor((n-2)/2) floor((n-3)/2) / 4; proven for n <= 12.
int complete_crossing_number(int n) {
  if (n < 4) return 0;
  return (n / 2) * ((n - 1) / 2) * ((n - 2) / 2) * ((n - 3) / 2) / 4;
}

// Zarankiewicz's formula; proven when min(a, b) <= 6.
int bipartite_crossing_number(int a, int b) {
  return (a / 2) * ((a - 1) / 2) * (b / 2) * ((b - 1) / 2);
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::vector<int> sized(const FamilySpec& spec, std::size_t lo, std::size_t hi) {
  if (spec.params.size() < lo || spec.params.size() > hi)
    bad(std::string(family_name(spec.family)) + " takes " + std::to_string(lo) +
        (lo == hi ? "" : ".." + std::to_string(hi)) + " parameters");
  return spec.params;
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Star: return "star";
    case Family::Grid: return "grid";
    case Family::Complete: return "complete";
    case Family::CompleteBipartite: return "bipartite";
    case Family::K2DVee: return "k2dvee";
    case Family::Torus: return "torus";
  }
  return "?";
}

Family family_from_name(std::string_view name) {
  for (Family f : {Family::Path, Family::Cycle, Family::Star, Family::Grid, Family::Complete,
                   Family::CompleteBipartite, Family::K2DVee, Family::Torus}) {
    if (family_name(f) == name) return f;
  }
  bad("unknown family '" + std::string(name) + "'");
}

FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) bad("expected FAMILY:ARGS, got '" + std::string(text) + "'");
  FamilySpec spec;
  spec.family = family_from_name(text.substr(0, colon));
  spec.params = parse_int_list(text.substr(colon + 1), ErrorCode::BadFamilyParameters);
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string out(family_name(spec.family));
  out += ':';
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spec.params[i]);
  }
  return out;
}

RawGraph generate_raw(const FamilySpec& spec) {
  RawGraph raw;
  auto& meta = raw.metadata;
  switch (spec.family) {
    case Family::Path: {
      const int n = sized(spec, 1, 1)[0];
      if (n < 2) bad("path needs n >= 2");
      raw.num_vertices = n;
      for (int i = 0; i + 1 < n; ++i) raw.edges.emplace_back(i, i + 1);
      meta = {true, 0, 0};
      break;
    }
    case Family::Cycle: {
      const int n = sized(spec, 1, 1)[0];
      if (n < 3) bad("cycle needs n >= 3");
      raw.num_vertices = n;
      for (int i = 0; i < n; ++i) raw.edges.emplace_back(i, (i + 1) % n);
      meta = {true, 0, 0};
      break;
    }
    case Family::Star: {
      const int n = sized(spec, 1, 1)[0];
      if (n < 3) bad("star needs n >= 3 vertices");
      raw.num_vertices = n;
      for (int i = 1; i < n; ++i) raw.edges.emplace_back(0, i);
      meta = {true, 0, 0};
      break;
    }
    case Family::Grid:
    case Family::Torus: {
      const auto p = sized(spec, 1, 2);
      const int w = p[0];
      const int h = p.size() > 1 ? p[1] : p[0];
      const bool torus = spec.family == Family::Torus;
      if (torus ? (w < 3 || h < 3) : (w < 1 || h < 1 || w * h < 2))
        bad(torus ? "torus needs W, H >= 3" : "grid needs at least two vertices");
      raw.num_vertices = w * h;
      add_grid_edges(raw, w, h, torus);
      if (torus) meta = {false, std::nullopt, 1};
      else meta = {true, 0, 0};
      break;
    }
    case Family::Complete: {
      const int n = sized(spec, 1, 1)[0];
      if (n < 2) bad("complete needs n >= 2");
      raw.num_vertices = n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) raw.edges.emplace_back(i, j);
      meta.planar = n <= 4;
      if (n <= 12) meta.crossing_number = complete_crossing_number(n);
      meta.genus = n >= 3 ? ceil_div((n - 3) * (n - 4), 12) : 0;
      break;
    }
    case Family::CompleteBipartite: {
      const auto p = sized(spec, 2, 2);
      const int a = p[0], b = p[1];
      if (a < 1 || b < 1) bad("bipartite needs A, B >= 1");
      raw.num_vertices = a + b;
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) raw.edges.emplace_back(i, a + j);
      meta.planar = std::min(a, b) <= 2;
      if (std::min(a, b) <= 6) meta.crossing_number = bipartite_crossing_number(a, b);
      meta.genus = ceil_div(std::max(0, (a - 2) * (b - 2)), 4);
      break;
    }
    case Family::K2DVee: {
      // u1 = 0, u2 = 1, v_i = i + 1 for i = 1..Delta. Start from K_{2,Delta},
      // drop u2 v1 and add v1 v2.
      const int delta = sized(spec, 1, 1)[0];
      if (delta < 3) bad("k2dvee needs Delta >= 3");
      raw.num_vertices = delta + 2;
      for (int i = 1; i <= delta; ++i) raw.edges.emplace_back(0, i + 1);
      for (int i = 2; i <= delta; ++i) raw.edges.emplace_back(1, i + 1);
      raw.edges.emplace_back(2, 3);
      meta = {true, 0, 0};
      break;
    }
  }
  return raw;
}

std::vector<Vertex> resolve_boundary(const FamilySpec& spec, const RawGraph& raw,
                                     std::string_view boundary_spec) {
  const int n = raw.num_vertices;
  std::string_view resolved = boundary_spec;
  if (resolved == "default") {
    switch (spec.family) {
      case Family::Path: resolved = "ends"; break;
      case Family::Star: resolved = "leaves"; break;
      case Family::Grid: resolved = "border"; break;
      case Family::Complete: resolved = "all"; break;
      case Family::Cycle: return {0, n / 2};
      case Family::CompleteBipartite: {
        std::vector<Vertex> part(static_cast<std::size_t>(spec.params[0]));
        for (int i = 0; i < spec.params[0]; ++i) part[i] = i;
        return part;
      }
      case Family::K2DVee: return {0, 1};
      case Family::Torus: {
        std::vector<Vertex> row(static_cast<std::size_t>(spec.params[0]));
        for (int x = 0; x < spec.params[0]; ++x) row[x] = x;
        return row;
      }
    }
  }

  std::vector<Vertex> out;
  if (resolved == "all") {
    for (int v = 0; v < n; ++v) out.push_back(v);
  } else if (resolved == "ends") {
    out = {0, n - 1};
  } else if (resolved == "leaves") {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : raw.edges) {
      ++deg[u];
      ++deg[v];
    }
    for (int v = 0; v < n; ++v)
      if (deg[v] == 1) out.push_back(v);
  } else if (resolved == "border") {
    if (spec.family != Family::Grid)
      throw Error(ErrorCode::BadBoundarySpec, "'border' applies to grid only");
    const int w = spec.params[0];
    const int h = spec.params.size() > 1 ? spec.params[1] : w;
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x)
        if (x == 0 || y == 0 || x == w - 1 || y == h - 1) out.push_back(y * w + x);
  } else {
    out = parse_int_list(resolved, ErrorCode::BadBoundarySpec);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BoundedGraph generate(const FamilySpec& spec, std::string_view boundary_spec) {
  RawGraph raw = generate_raw(spec);
  raw.boundary = resolve_boundary(spec, raw, boundary_spec);
  return validate(raw);
}

BoundedGraph path_graph(int n) { return generate({Family::Path, {n}}, "ends"); }

BoundedGraph cycle_graph(int n, std::vector<Vertex> boundary) {
  RawGraph raw = generate_raw({Family::Cycle, {n}});
  raw.boundary = std::move(boundary);
  return validate(raw);
}

BoundedGraph star_graph(int leaves) { return generate({Family::Star, {leaves + 1}}, "leaves"); }

BoundedGraph complete_graph(int n) { return generate({Family::Complete, {n}}, "all"); }

BoundedGraph k2d_vee(int max_degree) { return generate({Family::K2DVee, {max_degree}}, "default"); }

}  // namespace steklov
