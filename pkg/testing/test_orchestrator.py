import pytest

from recoloureur.colouring.colouring_base import Colouring
from recoloureur.config import Settings
from recoloureur.errors import Disconnected, NotChordal, NotInClass, UnknownName
from recoloureur.families.families_basic import cycle_graph, path_graph
from recoloureur.graph.graph_base import build_graph
from recoloureur.orchestrator import Orchestrator
from recoloureur.recolour.recolour_path import apply_and_validate


@pytest.fixture
def orc():
    return Orchestrator()


def _accepted(orc, g):
    return [name for _, name, ok in orc.get_applicable(g) if ok]


def test_applicable_table(orc, graph_file):
    assert _accepted(orc, graph_file("split_star.txt")) == ["p3p1", "two_k2_c4", "chordal", "p5c4"]
    assert _accepted(orc, graph_file("c5_apex_tail.txt")) == ["p5c4"]
    assert _accepted(orc, graph_file("c8.txt")) == []
    assert orc.get_applicable(path_graph(5), ["chordal"]) == [("chordal", "chordal", True)]


def test_auto_order(orc, graph_file):
    assert orc.select(graph_file("split_star.txt")).algorithm_name == "p3p1"
    assert orc.select(path_graph(5)).algorithm_name == "chordal"
    assert orc.select(graph_file("c5_apex_tail.txt")).algorithm_name == "p5c4"


def test_no_supported_class(orc, graph_file):
    with pytest.raises(NotInClass) as err:
        orc.select(graph_file("c8.txt"))
    assert err.value.witness_name == "P5"
    c5_plus_k2 = build_graph(7, cycle_graph(5).edges() + [(5, 6)])
    with pytest.raises(Disconnected):
        orc.select(c5_plus_k2)


def test_recolour_auto(orc, graph_file):
    g = graph_file("c5_apex_tail.txt")
    a = Colouring.of([1, 2, 1, 2, 3, 4, 1, 2], 5)
    b = Colouring.of([2, 3, 2, 3, 1, 4, 1, 2], 5)
    name, path = orc.recolour(g, 5, a, b)
    assert name == "p5c4"
    final, ok, _ = apply_and_validate(g, path)
    assert ok and final == b


def test_recolour_named(orc):
    c4 = cycle_graph(4)
    a, b = Colouring.of([1, 2, 1, 2], 3), Colouring.of([2, 1, 2, 1], 3)
    assert orc.recolour(c4, 3, a, b, "renaming")[0] == "renaming"
    with pytest.raises(NotChordal):
        orc.recolour(c4, 3, a, b, "chordal")
    with pytest.raises(UnknownName):
        orc.recolour(c4, 3, a, b, "greedy")


def test_detailed_report(orc, graph_file):
    g = graph_file("c5_apex.txt")
    a = Colouring.of([1, 2, 1, 2, 3, 4], 5)
    b = Colouring.of([2, 3, 2, 3, 1, 5], 5)
    report = orc.get_detailed_report(g, 5, a, b)
    assert report["algorithm"] == "p3p1"
    assert report["vertices"] == 6 and report["palette"] == 5
    summary = report["summary"]
    assert summary["valid"]
    assert summary["length"] == len(report["path"])
    assert summary["length_per_vertex"] == summary["length"] / 6


def test_failing_check_is_logged(orc, caplog, monkeypatch):
    def boom(g):
        raise RuntimeError("boom")

    monkeypatch.setattr(orc.p3p1, "accepts", boom)
    with caplog.at_level("WARNING"):
        table = orc.get_applicable(path_graph(3))
    assert table[0] == ("(P3+P1)-free", "p3p1", False)
    assert "boom" in caplog.text


def test_report_respects_exact_bound(graph_file):
    g = graph_file("c5_apex.txt")
    a = Colouring.of([1, 2, 1, 2, 3, 4], 5)
    b = Colouring.of([2, 3, 2, 3, 1, 5], 5)
    assert Orchestrator().get_detailed_report(g, 5, a, b)["chromatic_number"] == 4
    small = Orchestrator(Settings(exact_chromatic_bound=5))
    report = small.get_detailed_report(g, 5, a, b)
    assert report["chromatic_number"] is None
    assert report["summary"]["valid"]
