#include <doctest.h>

#include <sstream>

#include "steklov/cli.hpp"
#include "steklov/report.hpp"

using namespace steklov;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("spectrum command") {
  const auto r = run({"spectrum", "--generate", "k2dvee:3", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("\n2,2.2\n") != std::string::npos);

  const auto p = run({"spectrum", "--generate", "path:3", "--boundary", "ends", "--penalized", "--format", "csv"});
  CHECK(p.code == kExitOk);
  CHECK(p.out.find("# section: penalized") != std::string::npos);
  CHECK(p.out.find("# section: penalized_divergence") != std::string::npos);
}

TEST_CASE("bounds command flags the refuted probes") {
  const auto r = run({"bounds", "--generate", "k2dvee:7", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("VIOLATED-IF-ASSUMED") != std::string::npos);
  CHECK(r.out.find("min_boundary_degree_plain") != std::string::npos);
}

TEST_CASE("duality command") {
  const auto r = run({"duality", "--generate", "cycle:4", "--boundary", "0,2", "--format", "json"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("\"con2_star\"") != std::string::npos);

  const auto capped = run({"duality", "--generate", "grid:3,3", "--boundary", "border", "--max-iters", "1"});
  CHECK(capped.code == kExitNotConverged);
}

TEST_CASE("sweep command") {
  const auto r = run({"sweep", "--family", "k2dvee", "--range", "3..10", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("10,k2dvee:10,") != std::string::npos);
}

TEST_CASE("input errors exit with code 1") {
  CHECK(run({"spectrum", "--generate", "nope:3"}).code == kExitInputError);
  CHECK(run({"spectrum"}).code == kExitInputError);
  CHECK(run({"spectrum", "--in", "/nonexistent/graph.json"}).code == kExitInputError);
  CHECK(run({"spectrum", "--generate", "path:3", "--boundary", "0"}).code == kExitInputError);
  CHECK(run({"spectrum", "--generate", "path:3", "--format", "xml"}).code == kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"duality", "--generate", "grid:3,3", "--boundary", "0,2,6", "--format", "json",
                                      "--seed", "4"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("number formatting") {
  CHECK(format_number(2.2, 6) == "2.2");
  CHECK(format_number(-0.0, 6) == "0");
  CHECK(format_number(1.0 / 3.0, 12) == "0.333333333333");
  CHECK(parse_output_format("csv") == OutputFormat::Csv);
}
