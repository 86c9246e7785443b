import math

import numpy as np
import pytest

import steklov_graph as sg


def test_path_spectrum_and_dtn():
    g = sg.Graph(3, [(0, 1), (1, 2)], [0, 2])
    np.testing.assert_allclose(sg.dtn_matrix(g), [[0.5, -0.5], [-0.5, 0.5]], atol=1e-14)
    np.testing.assert_allclose(sg.steklov_spectrum(g), [0.0, 1.0], atol=1e-14)
    assert sg.harmonic_extension(g, [1.0, 0.0]) == pytest.approx([1.0, 0.5, 0.0])
    assert sg.rayleigh_quotient(g, [1.0, 0.0, -1.0]) == pytest.approx(1.0)
    assert math.isinf(sg.rayleigh_quotient(g, [0.0, 1.0, 0.0]))


def test_modified_bipartite_family():
    for delta in range(3, 11):
        sigma = sg.steklov_spectrum(sg.Graph.generate(f"k2dvee:{delta}"))
        assert abs(sigma[1] - (delta - 0.8)) < 1e-8


def test_bounds_table():
    table = sg.evaluate_bounds(sg.Graph.generate("k2dvee:3"))
    by_name = {(r["bound"], r["k"]): r for r in table["reports"]}
    assert by_name[("min_boundary_degree", 2)]["value"] == pytest.approx(4.0)
    assert all(r["satisfied"] for r in table["reports"])
    assert any(p["violated"] for p in table["probes"])


def test_flows_and_duality():
    c4 = sg.Graph.generate("cycle:4", "0,2")
    assert sg.lambda_s(c4, [2, 1, 2, 1]) == pytest.approx(math.sqrt(2.5))
    assert sg.node_weighted_distance(c4, [1, 2, 1, 5], 0, 2) == 4.0
    report = sg.duality_gap(c4)
    assert report["converged"]
    assert abs(report["gap"]) <= 1e-3
    assert sg.min_congestion(sg.Graph.generate("star:4"))["con2"] == pytest.approx(math.sqrt(21))


def test_errors_are_raised():
    with pytest.raises(sg.SteklovError, match="BoundaryTooSmall"):
        sg.Graph(2, [(0, 1)], [0])
    with pytest.raises(ValueError):
        sg.Graph.generate("nope:3")


def test_json_round_trip():
    g = sg.Graph.generate("complete:5", "all")
    h = sg.Graph.from_json(g.to_json())
    assert h.edges == g.edges
    assert h.boundary == list(range(5))


def test_cli_entry_point():
    code, out, _ = sg.run_cli(["spectrum", "--generate", "k2dvee:3", "--format", "csv"])
    assert code == 0
    assert "\n2,2.2\n" in out
