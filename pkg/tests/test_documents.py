import json
from importlib import resources

import pytest

from latuni import (
    TCONORM,
    construct,
    export_dot,
    parse_binop,
    parse_lattice,
    parse_operator,
    render_table,
    serialize_binop,
    serialize_lattice,
    serialize_operator,
)
from latuni.cli import cli_main
from latuni.errors import ParseError, ReferenceToUnknownElement

DATA = resources.files("latuni") / "data"


def data_path(name: str) -> str:
    return str(DATA / name)


def data_text(name: str) -> str:
    return (DATA / name).read_text()


# -- round trips -------------------------------------------------------------

def test_lattice_round_trip(fx_l1):
    lat = fx_l1.lattice
    assert parse_lattice(serialize_lattice(lat)) == lat


def test_bundled_lattice_documents_match_fixtures(fx_l1, fx_l2, fx_l3):
    for fx in (fx_l1, fx_l2, fx_l3):
        assert parse_lattice(data_text(f"{fx.name}.lattice.json")) == fx.lattice


def test_operator_round_trip(fx_l1):
    for op in (fx_l1.cl1, fx_l1.cl2):
        assert parse_operator(serialize_operator(op), fx_l1.lattice) == op


def test_partial_binop_round_trip(fx_l1):
    s = fx_l1.tconorm
    back = parse_binop(serialize_binop(s), fx_l1.lattice, role=TCONORM)
    assert back == s


def test_full_binop_round_trip(fx_l1):
    u = construct(fx_l1.spec())
    assert parse_binop(serialize_binop(u), fx_l1.lattice) == u


# -- parse errors ------------------------------------------------------------

def test_malformed_json_reports_position():
    with pytest.raises(ParseError) as err:
        parse_lattice("{\n  broken\n}")
    assert err.value.line == 2


def test_missing_key_is_a_parse_error():
    with pytest.raises(ParseError):
        parse_lattice('{"elements": ["0", "1"]}')


def test_cover_with_unknown_element(fx_l1):
    doc = json.loads(serialize_lattice(fx_l1.lattice))
    doc["covers"].append(["0", "zz"])
    with pytest.raises(ReferenceToUnknownElement):
        parse_lattice(json.dumps(doc))


def test_operator_presets(fx_l2):
    lat = fx_l2.lattice
    op = parse_operator('{"kind": "closure", "preset": "join-with:k"}', lat)
    assert op == fx_l2.cl2
    ident = parse_operator('{"kind": "closure", "preset": "identity"}', lat)
    assert ident == fx_l2.cl1
    with pytest.raises(ParseError):
        parse_operator('{"kind": "closure", "preset": "nonsense"}', lat)
    with pytest.raises(ReferenceToUnknownElement):
        parse_operator('{"kind": "closure", "preset": "join-with:zz"}', lat)


def test_operator_map_missing_element(fx_l1):
    doc = json.loads(serialize_operator(fx_l1.cl1))
    del doc["map"]["a"]
    with pytest.raises(ParseError) as err:
        parse_operator(json.dumps(doc), fx_l1.lattice)
    assert "'a'" in str(err.value)


def test_binop_missing_cell_names_the_cell(fx_l1):
    doc = json.loads(serialize_binop(construct(fx_l1.spec())))
    del doc["table"]["j"]["a"]
    with pytest.raises(ParseError) as err:
        parse_binop(json.dumps(doc), fx_l1.lattice)
    assert "'j'" in str(err.value) and "'a'" in str(err.value)


def test_binop_unknown_value(fx_l1):
    doc = json.loads(serialize_binop(construct(fx_l1.spec())))
    doc["table"]["j"]["a"] = "zz"
    with pytest.raises(ReferenceToUnknownElement):
        parse_binop(json.dumps(doc), fx_l1.lattice)


# -- rendering and export ----------------------------------------------------

@pytest.mark.parametrize("name", ["l1", "l2", "l3"])
def test_render_matches_bundled_golden(name, request):
    fx = request.getfixturevalue(f"fx_{name}")
    assert render_table(construct(fx.spec())) == data_text(f"{name}.table.txt")


def test_render_layout(fx_l1):
    text = render_table(construct(fx_l1.spec()))
    lines = text.splitlines()
    assert lines[0].split() == ["U"] + list(fx_l1.lattice.elements)
    assert set(lines[1]) == {"-"}
    assert len(lines) == len(fx_l1.lattice.elements) + 2


def test_export_dot_edges(fx_l1):
    dot = export_dot(fx_l1.lattice)
    assert dot.startswith("digraph hasse {")
    edges = [line for line in dot.splitlines() if "->" in line]
    assert len(edges) == len(fx_l1.lattice.covers) == 11
    assert '  "e" -> "j";' in edges


def test_export_dot_dual_reverses_edges(fx_l1):
    edges = {
        line.strip() for line in export_dot(fx_l1.lattice).splitlines() if "->" in line
    }
    dual_edges = {
        line.strip()
        for line in export_dot(fx_l1.lattice.dual()).splitlines()
        if "->" in line
    }
    assert dual_edges == {
        f'"{b}" -> "{a}";'
        for e in edges
        for a, b in [e.rstrip(";").replace('"', "").split(" -> ")]
    }


# -- CLI ---------------------------------------------------------------------

def test_cli_validate_lattice(capsys):
    assert cli_main(["validate", "--lattice", data_path("l1.lattice.json")]) == 0
    assert "valid bounded lattice" in capsys.readouterr().out


def test_cli_validate_operator_json(capsys):
    rc = cli_main(
        [
            "--json",
            "validate",
            "--lattice",
            data_path("l1.lattice.json"),
            "--operator",
            data_path("l1.cl1.op.json"),
        ]
    )
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"valid": True, "kind": "closure"}


def test_cli_missing_file_is_exit_2(capsys):
    assert cli_main(["validate", "--lattice", "/nonexistent.json"]) == 2


def test_cli_bad_usage_is_exit_2(capsys):
    assert cli_main(["no-such-command"]) == 2


def test_cli_construct_matches_library(fx_l1, capsys):
    rc = cli_main(
        [
            "construct",
            "--family",
            "clo2",
            "--lattice",
            data_path("l1.lattice.json"),
            "--e",
            "e",
            "--boundary",
            data_path("l1.tconorm.json"),
            "--op-low",
            data_path("l1.cl1.op.json"),
            "--op-inc",
            data_path("l1.cl2.op.json"),
        ]
    )
    out = capsys.readouterr().out
    assert rc == 0
    assert parse_binop(out, fx_l1.lattice) == construct(fx_l1.spec())


def test_cli_construct_km_preset_needs_no_operators(capsys):
    rc = cli_main(
        [
            "construct",
            "--family",
            "km-s",
            "--lattice",
            data_path("l1.lattice.json"),
            "--e",
            "e",
            "--boundary",
            data_path("l1.tconorm.json"),
        ]
    )
    assert rc == 0


def test_cli_construct_force(tmp_path, capsys, fx_l1):
    bad_op = tmp_path / "bad.op.json"
    bad_op.write_text('{"kind": "closure", "preset": "join-with:e"}\n')
    argv = [
        "construct",
        "--family",
        "clo2",
        "--lattice",
        data_path("l1.lattice.json"),
        "--e",
        "e",
        "--boundary",
        data_path("l1.tconorm.json"),
        "--op-low",
        str(bad_op),
        "--op-inc",
        str(bad_op),
    ]
    assert cli_main(argv) == 1
    assert "FAIL" in capsys.readouterr().out
    assert cli_main(argv + ["--force"]) == 0
    forced = parse_binop(capsys.readouterr().out, fx_l1.lattice)
    # the forced table must then fail verification
    from latuni import validate_uninorm

    assert not validate_uninorm(forced).ok


def test_cli_verify_exit_codes(tmp_path, capsys, fx_l1):
    good = tmp_path / "good.json"
    good.write_text(serialize_binop(construct(fx_l1.spec())))
    rc = cli_main(
        ["verify", "--lattice", data_path("l1.lattice.json"), "--binop", str(good)]
    )
    assert rc == 0 and "associative: pass" in capsys.readouterr().out

    doc = json.loads(good.read_text())
    doc["table"]["a"]["j"] = "j"
    doc["table"]["j"]["a"] = "j"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    rc = cli_main(
        ["verify", "--lattice", data_path("l1.lattice.json"), "--binop", str(bad)]
    )
    assert rc == 1 and "FAIL" in capsys.readouterr().out


def test_cli_classify_json(tmp_path, capsys, fx_l2):
    table = tmp_path / "u.json"
    table.write_text(serialize_binop(construct(fx_l2.spec())))
    rc = cli_main(
        [
            "--json",
            "classify",
            "--lattice",
            data_path("l2.lattice.json"),
            "--binop",
            str(table),
        ]
    )
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["u_min_star"]["member"] is True
    assert payload["u_min"]["member"] is False


def test_cli_search_closures(tmp_path, capsys):
    lattice = tmp_path / "m2.json"
    lattice.write_text(
        json.dumps(
            {
                "elements": ["0", "a", "b", "1"],
                "covers": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]],
                "bottom": "0",
                "top": "1",
            }
        )
    )
    assert cli_main(["search-closures", "--lattice", str(lattice)]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 7
    assert all(json.loads(line)["kind"] == "closure" for line in lines)


def test_cli_search_pairs(tmp_path, capsys):
    lattice = tmp_path / "m2.json"
    lattice.write_text(
        json.dumps(
            {
                "elements": ["0", "a", "b", "1"],
                "covers": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]],
                "bottom": "0",
                "top": "1",
            }
        )
    )
    boundary = tmp_path / "s.json"
    boundary.write_text(
        json.dumps(
            {
                "neutral": "a",
                "domain": {"low": "a", "high": "1"},
                "table": {"a": {"a": "a", "1": "1"}, "1": {"a": "1", "1": "1"}},
            }
        )
    )
    rc = cli_main(
        [
            "search-pairs",
            "--lattice",
            str(lattice),
            "--family",
            "clo2",
            "--e",
            "a",
            "--boundary",
            str(boundary),
        ]
    )
    assert rc == 0
    lines = [json.loads(l) for l in capsys.readouterr().out.strip().splitlines()]
    assert lines and all(isinstance(l["characteristic_pass"], bool) for l in lines)


def test_cli_search_tconorms(tmp_path, capsys):
    lattice = tmp_path / "chain3.json"
    lattice.write_text(
        json.dumps(
            {
                "elements": ["c0", "c1", "c2"],
                "covers": [["c0", "c1"], ["c1", "c2"]],
                "bottom": "c0",
                "top": "c2",
            }
        )
    )
    rc = cli_main(
        ["search-tconorms", "--lattice", str(lattice), "--low", "c0", "--high", "c2"]
    )
    assert rc == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 2


@pytest.mark.parametrize("name", ["l1", "l2", "l3"])
def test_cli_reproduce_matches_golden(name, capsys):
    assert cli_main(["reproduce", name]) == 0
    assert capsys.readouterr().out == data_text(f"{name}.table.txt")


def test_cli_export_dot(capsys):
    assert cli_main(["export-dot", "--lattice", data_path("l1.lattice.json")]) == 0
    assert capsys.readouterr().out.count("->") == 11
