import json

import pytest

from monoideal.cli import (
    main,
    parse_cnf_file,
    parse_monomial_file,
    parse_nae_file,
)
from monoideal.core import Monomial, ParseError, format_monomial


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


EXAMPLE = "letters: a b c\norder: b a c\na b^2 c\na^3 b\n"


def test_parse_monomial_file():
    alphabet, monomials, ordering = parse_monomial_file(EXAMPLE)
    assert alphabet.names == ("a", "b", "c")
    assert monomials == (Monomial((1, 2, 1)), Monomial((3, 1, 0)))
    assert ordering.sequence() == (1, 0, 2)


def test_parse_auto_letters_and_vectors():
    alphabet, monomials, ordering = parse_monomial_file("x y\ny z\n")
    assert alphabet.names == ("x", "y", "z")
    assert monomials == (Monomial((1, 1, 0)), Monomial((0, 1, 1)))
    assert ordering is None

    alphabet, monomials, _ = parse_monomial_file("[2,0]\n[0,2]\n")
    assert alphabet.names == ("x1", "x2")
    assert monomials == (Monomial((2, 0)), Monomial((0, 2)))

    alphabet, monomials, _ = parse_monomial_file("letters: x y\n[1, 2]\nx\n")
    assert monomials == (Monomial((1, 2)), Monomial((1, 0)))


def test_parse_round_trip():
    alphabet, monomials, _ = parse_monomial_file(EXAMPLE)
    text = "letters: " + " ".join(alphabet.names) + "\n"
    text += "\n".join(format_monomial(m, alphabet) for m in monomials)
    _, again, _ = parse_monomial_file(text)
    assert set(again) == set(monomials)


@pytest.mark.parametrize(
    "bad",
    [
        "a^\n",
        "a^-1\n",
        "letters: a a\n",
        "letters: a b\nletters: c\n",
        "letters: a b\n[1,2,3]\n",
        "letters: a b\norder: a\na\n",
        "",
    ],
)
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_monomial_file(bad)


def test_parse_nae_and_cnf():
    inst = parse_nae_file("p nae 3 2\n1 2 3\n-1 2 -3 0\n")
    assert inst.variable_count == 3 and len(inst.clauses) == 2
    cnf = parse_cnf_file("c comment\np cnf 3 2\n1 -2 0\n3 0\n")
    assert cnf.variable_count == 3 and cnf.clauses == ((1, -2), (3,))
    with pytest.raises(ParseError):
        parse_nae_file("1 2\n")


def test_cli_check_fg(tmp_path, capsys):
    f = tmp_path / "m.mon"
    f.write_text(EXAMPLE)
    code, payload = run(capsys, "check-fg", str(f))
    assert code == 0 and payload == {"verdict": True}

    code, payload = run(capsys, "check-fg", str(f), "--order", "a b c")
    assert code == 1
    assert payload["verdict"] is False
    assert payload["witness"] == {"monomial": "a b^2 c", "letter": "b"}

    code, payload = run(capsys, "check-fg", str(f), "--order", "a c b")
    assert code == 1
    assert payload["witness"] == {"monomial": "a^3 b", "letter": "c"}


def test_cli_generators_and_lift(tmp_path, capsys):
    f = tmp_path / "m.mon"
    f.write_text(EXAMPLE)
    code, payload = run(capsys, "generators", str(f))
    assert code == 0
    assert payload["generators"] == ["b a^3", "b^2 a c", "b^2 a^2 c"]

    code, payload = run(capsys, "gb-lift", str(f))
    assert code == 0
    assert set(payload["leading_words"]) == {
        "a b", "c b", "c a", "b a^3", "b^2 a c", "b^2 a^2 c"
    }


def test_cli_cool_commands(tmp_path, capsys):
    f = tmp_path / "m.mon"
    f.write_text("letters: a b c\na b^2 c\na^3 b\n")
    code, payload = run(capsys, "find-cool", str(f))
    assert code == 0 and payload["found"] is True
    assert "nodes_explored" in payload

    # quadratic set whose graph is a five-cycle: no cool ordering exists
    g = tmp_path / "c5.mon"
    g.write_text(
        "letters: v w x y z\nv x\nv y\nw y\nw z\nx z\n"
    )
    code, payload = run(capsys, "find-cool", str(g))
    assert code == 1 and payload["found"] is False

    code, payload = run(capsys, "is-cool", str(f), "--order", "b a c")
    assert code == 0 and payload == {"cool": True}

    code, payload = run(capsys, "all-cool", str(f))
    assert code == 1 and payload == {"all_cool": False}


def test_cli_reduce_and_preimage(tmp_path, capsys):
    f = tmp_path / "m.mon"
    f.write_text("letters: a b\na\na b\nb^2\n")
    code, payload = run(capsys, "reduce", str(f))
    assert code == 0 and payload == {"monomials": ["b^2", "a"]}

    g = tmp_path / "p.mon"
    g.write_text("letters: x y\nx^2\n")
    code, payload = run(capsys, "preimage-fg", str(g))
    assert code == 1
    assert payload["witness"] == {"monomial": "x^2", "letter": "y"}
    assert payload["degree_bounds"] == [2, 0]


def test_cli_oracle(tmp_path, capsys):
    f = tmp_path / "m.mon"
    f.write_text("letters: x y\nx^2\n")
    code, payload = run(capsys, "oracle", str(f), "--target", "preimage", "--cap", "6")
    assert code == 0
    assert payload["minimal_generators"] == [
        "x^2", "x y x", "x y^2 x", "x y^3 x", "x y^4 x"
    ]
    assert payload["saturated"] is False


def test_cli_graph_pipeline(tmp_path, capsys):
    code, payload = run(capsys, "gen-tophat")
    assert code == 0 and payload["vertex_count"] == 7
    graph_file = tmp_path / "hat.tg"
    graph_file.write_text(payload["text"])
    code, payload = run(capsys, "torient", str(graph_file))
    assert code == 0 and payload["found"] is True

    code, payload = run(capsys, "gen-gadget")
    assert code == 0 and payload["vertex_count"] == 15

    nae = tmp_path / "inst.nae"
    nae.write_text("1 1 1\n")
    code, payload = run(capsys, "reduce-nae", str(nae))
    assert code == 0 and payload["vertex_count"] == 16
    graph_file.write_text(payload["text"])
    code, payload = run(capsys, "torient", str(graph_file))
    assert code == 1 and payload == {"found": False}


def test_cli_poly_commands(tmp_path, capsys):
    sys_file = tmp_path / "s.json"
    sys_file.write_text(json.dumps({"A": [[1, 1]], "W": [[3]]}))
    code, payload = run(capsys, "poly-member", str(sys_file), "--vector", "[1,2]")
    assert code == 0 and payload == {"member": True}
    code, payload = run(capsys, "poly-member", str(sys_file), "--vector", "[1,1]")
    assert code == 1

    code, payload = run(capsys, "poly-mingens", str(sys_file))
    assert code == 0 and len(payload["minimal_generators"]) == 4

    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps({"A": [[1, 0]], "W": [[2]]}))
    b.write_text(json.dumps({"A": [[0, 1]], "W": [[2]]}))
    code, payload = run(capsys, "poly-union", str(a), str(b))
    assert code == 0
    assert payload["A"] == [[1, 0], [0, 1]]
    assert payload["W"] == [[2, 0], [0, 2]]

    cert = tmp_path / "c.json"
    cert.write_text(json.dumps({"kind": "support3", "generator": [1, 1, 1]}))
    sys3 = tmp_path / "s3.json"
    sys3.write_text(json.dumps({"A": [[1, 1, 1]], "W": [[3]]}))
    code, payload = run(capsys, "verify-cert", str(sys3), str(cert))
    assert code == 0 and payload == {"valid": True}


def test_cli_reduce_sat_and_convexity(tmp_path, capsys):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 3 1\n1 2 3 0\n")
    code, payload = run(capsys, "reduce-sat", str(cnf), "--target", "mdois")
    assert code == 0 and len(payload["A"][0]) == 6

    mon = tmp_path / "m.mon"
    mon.write_text("[2,0]\n[0,2]\n")
    code, payload = run(capsys, "convexity", str(mon))
    assert code == 1 and payload == {"convex": False}


def test_cli_input_errors(tmp_path, capsys):
    f = tmp_path / "bad.mon"
    f.write_text("a^\n")
    code, payload = run(capsys, "reduce", str(f))
    assert code == 2 and "error" in payload

    code, payload = run(capsys, "check-fg", str(tmp_path / "missing.mon"))
    assert code == 2

    f.write_text("letters: a b c\na b^2 c\n")
    code, payload = run(capsys, "check-fg", str(f))  # no ordering anywhere
    assert code == 2


def test_cli_budget_exceeded(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("MONOIDEAL_BUDGET", "10")
    f = tmp_path / "m.mon"
    f.write_text("letters: x y\nx^2\n")
    code, payload = run(capsys, "oracle", str(f), "--target", "preimage", "--cap", "9")
    assert code == 3 and "error" in payload


def test_cli_crosscheck_small(capsys):
    code, payload = run(
        capsys,
        "crosscheck",
        "--letters", "2",
        "--max-degree", "2",
        "--quadratic-letters", "3",
        "--nae-variables", "1",
        "--nae-clauses", "1",
        "--sat-variables", "3",
        "--sat-clauses", "1",
    )
    assert code == 0 and payload["ok"] is True


def test_cli_pretty(tmp_path, capsys):
    f = tmp_path / "m.mon"
    f.write_text(EXAMPLE)
    code = main(["--pretty", "check-fg", str(f)])
    out = capsys.readouterr().out
    assert code == 0 and "\n  " in out
