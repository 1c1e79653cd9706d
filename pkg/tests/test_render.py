from paintedlie.diagram_core import build_affine, build_finite, compute_marks
from paintedlie.painted import RealFormName, all_catalog_names, construct
from paintedlie.render import ascii_diagram, to_dot


def _token(diagram, v):
    head = "#" if diagram.color_of(v) == "black" else "o"
    return f"{head}{v}["


def test_every_catalog_diagram_renders_all_nodes():
    for name in all_catalog_names(8):
        diagram = construct(name)
        art = ascii_diagram(diagram.scheme, diagram.color, diagram.marks)
        for v in diagram.scheme.nodes:
            assert _token(diagram, v) in art, (str(name), v)


def test_cycle_note_and_branches():
    diagram = construct(RealFormName.parse("su(3,2)"))
    art = ascii_diagram(diagram.scheme, diagram.color, diagram.marks)
    assert "cycle closes:" in art

    deep = construct(RealFormName.parse("e6(-14)"))
    art = ascii_diagram(deep.scheme, deep.color, deep.marks)
    assert "branch at 4:" in art
    assert "#0[1]" in art  # second node of the short leg


def test_arrow_points_at_short_root():
    scheme = build_finite("B", 3)  # node 3 short
    art = ascii_diagram(scheme)
    assert "=2=> o3" in art or "o3 <=2=" in art


def test_dot_parallel_edges_and_marks():
    scheme = build_affine("G", 2, 1)
    dot = to_dot(scheme)
    assert dot.count("->") == 3 + 1  # triple bond as parallel edges, one single bond
    assert 'label="1 (a=3)"' in dot
    assert dot == to_dot(scheme)  # deterministic
