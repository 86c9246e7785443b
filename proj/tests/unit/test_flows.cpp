#include <doctest.h>

#include <cmath>
#include <map>

#include "steklov/flows.hpp"
#include "steklov/generators.hpp"
#include "test_support.hpp"

using namespace steklov;

namespace {

BoundaryFlow p3_flow() {
  auto f = BoundaryFlow::complete_demand(path_graph(3));
  f.add(0, {0, 1, 2}, 1.0);
  return f;
}

BoundedGraph c4() { return cycle_graph(4, {0, 2}); }

BoundaryFlow c4_flow() {
  auto f = BoundaryFlow::complete_demand(c4());
  f.add(0, {0, 1, 2}, 0.5);
  f.add(0, {0, 3, 2}, 0.5);
  return f;
}

// Boundary 0 and 4 joined through interior 1, 2, 3.
BoundedGraph parallel_paths() {
  return validate({5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, {0, 4}, {}});
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("congestion examples") {
  const auto p3 = path_graph(3);
  const double ps[] = {1.0, 2.0};
  auto prof = congestion(p3, p3_flow(), ps);
  CHECK(prof.per_vertex == std::vector<double>{1, 1, 1});
  CHECK(prof.con(1) == doctest::Approx(3.0));
  CHECK(prof.con(2) == doctest::Approx(std::sqrt(3.0)));

  prof = congestion(c4(), c4_flow(), ps);
  CHECK(prof.per_vertex == std::vector<double>{1, 0.5, 1, 0.5});
  CHECK(prof.con(2) == doctest::Approx(std::sqrt(2.5)));
  CHECK(prof.max() == 1.0);

  const auto empty = BoundaryFlow::complete_demand(p3);
  CHECK_FALSE(empty.is_unit());
  CHECK(p3_flow().is_unit());
  CHECK(p3_flow().is_integral());
  CHECK_FALSE(c4_flow().is_integral());
}

TEST_CASE("flow path validation") {
  const auto p3 = path_graph(3);
  auto f = BoundaryFlow::complete_demand(p3);
  f.add(0, {0, 2}, 1.0);
  CHECK(code_of([&] { f.check_paths(p3); }) == ErrorCode::InvalidFlow);
  auto g = BoundaryFlow::complete_demand(p3);
  g.add(0, {0, 1, 0, 1, 2}, 1.0);
  CHECK(code_of([&] { g.check_paths(p3); }) == ErrorCode::InvalidFlow);
  auto h = BoundaryFlow::complete_demand(p3);
  h.add(0, {2, 1, 0}, 1.0);
  CHECK_NOTHROW(h.check_paths(p3));  // pairs are unordered
  CHECK_NOTHROW(p3_flow().check_paths(p3));

  auto merged = c4_flow();
  merged.add(0, {0, 1, 2}, 0.25);
  CHECK(merged.support_size() == 2);
}

TEST_CASE("rounding examples") {
  const auto g = c4();
  const auto flow = c4_flow();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = round_to_integral(flow, seed);
    CHECK(r.is_integral());
    CHECK(r.is_unit());
    CHECK(congestion_norm(vertex_congestion(g, r), 2) == doctest::Approx(std::sqrt(3.0)));
  }
  const auto fixed = round_to_integral(p3_flow(), 5);
  CHECK(fixed.support(0).front().path == std::vector<Vertex>{0, 1, 2});

  auto bad = c4_flow();
  bad.scale(0.9);
  CHECK(code_of([&] { round_to_integral(bad, 1); }) == ErrorCode::MassNotNormalized);

  const auto report = verify_rounding_inequality(g, flow, 1000, 3);
  CHECK(report.con1 == doctest::Approx(3.0));
  CHECK(report.con2 * report.con2 == doctest::Approx(2.5));
  CHECK(report.exact_expectation == doctest::Approx(3.0));
  CHECK(report.sample_mean == doctest::Approx(3.0));
  CHECK(report.expectation_ok);
  CHECK(report.existence_ok);

  const auto same = verify_rounding_inequality(path_graph(3), p3_flow(), 50, 3);
  CHECK(same.best_sample_con2 == doctest::Approx(same.con2));
}

TEST_CASE("exact rounding expectation matches enumeration") {
  const auto g = parallel_paths();
  auto f = BoundaryFlow::complete_demand(g);
  for (Vertex mid : {1, 2, 3}) f.add(0, {0, mid, 4}, 1.0 / 3.0);
  const auto outcomes = enumerate_rounding_outcomes(g, f);
  REQUIRE(outcomes.size() == 3);
  double mean = 0.0, total = 0.0;
  for (const auto& o : outcomes) {
    mean += o.probability * o.con2_squared;
    total += o.probability;
    CHECK(o.con2_squared == doctest::Approx(3.0));
  }
  CHECK(total == doctest::Approx(1.0));
  CHECK(expected_rounded_con2_squared(g, f) == doctest::Approx(mean).epsilon(1e-14));
  // con1 = 3, con2^2 = 1 + 1 + 3 / 9
  const double con2 = congestion_norm(vertex_congestion(g, f), 2);
  CHECK(con2 * con2 == doctest::Approx(2.0 + 1.0 / 3.0));
  CHECK(mean <= 3.0 + con2 * con2);
}

TEST_CASE("lambda_s examples") {
  CHECK(lambda_s(path_graph(3), WeightFunction({1, 1, 1})) == doctest::Approx(std::sqrt(3.0)));
  CHECK(lambda_s(c4(), WeightFunction({2, 1, 2, 1})) == doctest::Approx(std::sqrt(2.5)));
  CHECK(code_of([] { lambda_s(path_graph(3), WeightFunction({0, 0, 0})); }) == ErrorCode::ZeroWeights);
  const auto split = validate({4, {{0, 1}, {2, 3}}, {0, 2}, {}});
  CHECK(code_of([&] { lambda_s(split, WeightFunction({1, 1, 1, 1})); }) == ErrorCode::DisconnectedBoundary);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = testing::random_connected_graph(seed, {3, 10});
    Rng rng(seed);
    std::vector<double> s(g.num_vertices());
    for (double& x : s) x = rng.uniform() + 0.01;
    auto scaled = s;
    for (double& x : scaled) x *= 7.25;
    CHECK(lambda_s(g, WeightFunction(s)) == doctest::Approx(lambda_s(g, WeightFunction(scaled))).epsilon(1e-13));
  }
}

TEST_CASE("min congestion examples") {
  auto r = min_congestion_flow(path_graph(3));
  CHECK(r.converged);
  CHECK(r.con2 == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

  r = min_congestion_flow(c4());
  CHECK(r.converged);
  CHECK(std::abs(r.con2 - std::sqrt(2.5)) < 1e-4);

  r = min_congestion_flow(star_graph(3));
  CHECK(r.converged);
  CHECK(r.con2 == doctest::Approx(std::sqrt(21.0)).epsilon(1e-12));
  CHECK(r.congestion == std::vector<double>{3, 2, 2, 2});
}

TEST_CASE("Frank-Wolfe iterates stay feasible and the objective never increases") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto g = testing::random_connected_graph(seed, {3, 10, 0.3, 2, 4});
    const auto r = min_congestion_flow(g, {400, 1e-6});
    CHECK(r.flow.is_unit());
    CHECK_NOTHROW(r.flow.check_paths(g));
    for (std::size_t i = 1; i < r.objective.size(); ++i) CHECK(r.objective[i] <= r.objective[i - 1] + 1e-12);
    const double max_c = *std::max_element(r.congestion.begin(), r.congestion.end());
    CHECK(r.con2 >= max_c - 1e-12);

    // Weak duality, sample-wise.
    Rng rng(seed + 77);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> s(g.num_vertices());
      for (double& x : s) x = rng.uniform();
      CHECK(lambda_s(g, WeightFunction(s)) <= r.con2 + 1e-9);
    }
  }
}

TEST_CASE("max lambda and duality examples") {
  auto m = max_lambda(path_graph(3));
  CHECK(m.lambda == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
  for (double x : m.s) CHECK(x == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-6));

  m = max_lambda(c4());
  CHECK(std::abs(m.lambda - std::sqrt(2.5)) < 1e-3);

  auto d = duality_gap(path_graph(3));
  CHECK(std::abs(d.gap) <= 1e-9);
  CHECK(d.weak_duality_ok);
  d = duality_gap(c4());
  CHECK(std::abs(d.gap) <= 1e-3);
  d = duality_gap(star_graph(3));
  CHECK(std::abs(d.gap) <= 1e-3);
  CHECK(d.con2_star == doctest::Approx(std::sqrt(21.0)));
  CHECK(lambda_s(star_graph(3), WeightFunction({3, 2, 2, 2})) == doctest::Approx(std::sqrt(21.0)).epsilon(1e-14));
}
