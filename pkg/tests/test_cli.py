import json

from paintedlie.cli import main
from paintedlie.diagram_core import CartanScheme
from paintedlie.painted import PaintedDiagram


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_su31(capsys):
    code, out, _ = run(capsys, "info", "su(3,1)")
    assert code == 0
    assert "Out: Z2 (order 2)" in out


def test_info_su22(capsys):
    code, out, _ = run(capsys, "info", "su(2,2)")
    assert code == 0
    assert "Out: Z2 × Z2 (order 4)" in out


def test_info_compact(capsys):
    code, out, _ = run(capsys, "info", "compact(D4)")
    assert code == 0
    assert "Out: S3 (order 6)" in out


def test_info_deterministic(capsys):
    _, first, _ = run(capsys, "info", "sl(4,R)")
    _, second, _ = run(capsys, "info", "sl(4,R)")
    assert first == second


def test_info_json_round_trips(capsys):
    from paintedlie.autgroup import PermGroup
    from paintedlie.outer import OuterGroupDesc

    code, out, _ = run(capsys, "info", "sl(3,R)", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    diagram = PaintedDiagram.from_dict(payload["diagram"])
    assert diagram.r == 2
    assert PermGroup.from_dict(diagram.scheme, payload["aut"]).order == 1
    assert OuterGroupDesc.from_dict(payload["out"]).order == 2


def test_enumerate_text(capsys):
    code, out, _ = run(capsys, "enumerate", "A", "3", "1")
    assert code == 0
    assert "su(3,1)" in out and "su(2,2)" in out
    assert "2 painting class(es)" in out


def test_enumerate_json_round_trips(capsys):
    code, out, _ = run(capsys, "enumerate", "D", "4", "2")
    assert code == 0
    code, out, _ = run(capsys, "enumerate", "D", "4", "2", "--format", "json")
    payload = json.loads(out)
    CartanScheme.from_dict(payload["scheme"])
    assert sorted(row["name"] for row in payload["classes"]) == ["so(1,7)", "so(3,5)"]


def test_out_command(capsys):
    code, out, _ = run(capsys, "out", "sl(3,C) + su(2,1) + su(2,1)")
    assert code == 0
    assert "(order 32)" in out
    assert "gamma order: 2" in out


def test_out_json(capsys):
    code, out, _ = run(capsys, "out", "su(2,2) + su(2,2)", "--format", "json")
    payload = json.loads(out)
    assert payload["order"] == 32
    assert payload["factors"]["gamma_order"] == 2


def test_classify_file(tmp_path, capsys):
    path = tmp_path / "marking.json"
    path.write_text(
        json.dumps({"form": "sl(3,R)", "d": [0, 1], "t": ["0", "1/2"]}),
        encoding="utf-8",
    )
    code, out, _ = run(capsys, "classify", str(path))
    assert code == 0
    assert out.startswith("outer")
    assert "sign: -1" in out

    path.write_text(
        json.dumps({"form": "sl(3,R)", "d": [0, 1], "t": ["1/2", "0"]}),
        encoding="utf-8",
    )
    code, out, _ = run(capsys, "classify", str(path), "--format", "json")
    payload = json.loads(out)
    assert payload["inner"] is True


def test_classify_not_admissible_exits_one(tmp_path, capsys):
    path = tmp_path / "marking.json"
    path.write_text(
        json.dumps({"form": "sl(3,R)", "d": [0, 1], "t": ["0", "1/4"]}),
        encoding="utf-8",
    )
    code, _, err = run(capsys, "classify", str(path))
    assert code == 1
    assert "NotAdmissible" in err


def test_domain_error_exits_one(capsys):
    code, _, err = run(capsys, "info", "so(2,4)")
    assert code == 1
    assert "InvalidParameters" in err
    assert "su(2,2)" in err


def test_parse_error_exits_two(capsys):
    code, _, err = run(capsys, "info", "nonsense")
    assert code == 2
    assert "ParseError" in err


def test_usage_error_exits_two(capsys):
    assert run(capsys, "enumerate", "A")[0] == 2
    assert run(capsys, "no-such-command")[0] == 2


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export", "su(2,1)", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")
    assert out.count("fillcolor=black") == 2


def test_export_json_round_trips(capsys):
    code, out, _ = run(capsys, "export", "so(4,4)", "--format", "json")
    assert code == 0
    diagram = PaintedDiagram.from_dict(json.loads(out))
    assert diagram.black_nodes == (2,)


def test_verify_small_rank(capsys):
    code, out, _ = run(capsys, "verify", "--max-rank", "4")
    assert code == 0
    assert out.count("PASS") == 8
