import pytest

from recoloureur.colouring.colouring_base import Colouring
from recoloureur.errors import InternalInvariantViolation, MalformedInput
from recoloureur.graph.graph_base import build_graph
from recoloureur.recolour.recolour_path import (
    PathBuilder,
    RecolourPath,
    RecolourStep,
    apply_and_validate,
    concat_paths,
    format_path,
    parse_path,
    read_path,
    reverse_path,
    write_path,
)

K2 = build_graph(2, [(0, 1)])


def _path(start, steps, palette=3):
    return RecolourPath(Colouring.of(start, palette), tuple(RecolourStep(v, c) for v, c in steps))


def test_empty_path_on_proper_start():
    final, ok, failing = apply_and_validate(K2, _path([1, 2], []))
    assert ok and failing is None and final.colours == (1, 2)


def test_monochromatic_step_fails():
    final, ok, failing = apply_and_validate(K2, _path([1, 2], [(0, 2)]))
    assert not ok and failing == 0


def test_swap_through_spare_colour():
    p = _path([1, 2], [(0, 3), (1, 1), (0, 2)])
    final, ok, _ = apply_and_validate(K2, p)
    assert ok and final.colours == (2, 1)
    assert p.per_vertex_counts == {0: 2, 1: 1}
    assert len(p) == sum(p.per_vertex_counts.values())


def test_improper_start_and_idle_step():
    assert apply_and_validate(K2, _path([1, 1], [])) == (Colouring.of([1, 1], 3), False, None)
    assert apply_and_validate(K2, _path([1, 2], [(0, 1)])).failing_step == 0


def test_reverse_and_concat():
    p = _path([1, 2], [(0, 3), (1, 1), (0, 2)])
    back = reverse_path(p)
    assert back.start.colours == (2, 1)
    assert back.final().colours == (1, 2)
    assert apply_and_validate(K2, back).ok
    loop = concat_paths(p, back)
    assert loop.final() == p.start and len(loop) == 6


def test_builder_rejects_clashes():
    builder = PathBuilder(K2, Colouring.of([1, 2], 3))
    builder.recolour(0, 1)
    assert builder.steps == []
    with pytest.raises(InternalInvariantViolation):
        builder.recolour(0, 2)
    with builder.phase("spare"):
        builder.recolour(0, 3)
    assert builder.build().phases == {"spare": 1}


def test_path_file_round_trip(tmp_path):
    p = _path([1, 2], [(0, 3), (1, 1), (0, 2)])
    write_path(tmp_path / "p.path", p)
    assert read_path(tmp_path / "p.path") == p
    assert format_path(parse_path(format_path(p))) == format_path(p)
    with pytest.raises(MalformedInput):
        parse_path("palette 3\n1 2\n0\n")
