import json
from fractions import Fraction

import pytest

from jordannil import cli, tables
from jordannil.algebra import Algebra
from jordannil.field import GF, QQ
from jordannil.files import AlgebraFileError, parse_algebra_file, render_algebra


def test_round_trip_catalog(all_catalog_entries):
    for case, entry in all_catalog_entries:
        a = entry.algebra(tables.entry_field(case))
        assert parse_algebra_file(render_algebra(a)) == a


def test_round_trip_fractions():
    a = Algebra(QQ, 2, {(1, 1, 2): Fraction(7, 2), (2, 2, 1): -3})
    text = render_algebra(a)
    assert "2:7/2" in text
    assert parse_algebra_file(text) == a


def test_parse_examples():
    a = parse_algebra_file("field F 3\ndim 4\n1 1 : 2:1\n1 2 : 4:1\n")
    assert a.field == GF(3) and a.dim == 4
    assert a.constants == {(1, 1, 2): 1, (1, 2, 4): 1}
    # comments and reversed index order are fine
    b = parse_algebra_file("# c\nfield Q\ndim 2\n2 1 : 2:1  # ba\n")
    assert b.constants == {(1, 2, 2): Fraction(1)}


def test_parse_errors():
    with pytest.raises(AlgebraFileError, match="line 3"):
        parse_algebra_file("field Q\ndim 1\n1 1 : 2:1\n")
    with pytest.raises(AlgebraFileError, match="not prime"):
        parse_algebra_file("field F 4\ndim 1\n")
    with pytest.raises(AlgebraFileError, match="duplicate"):
        parse_algebra_file("field Q\ndim 2\n1 1 : 2:1\n1 1 : 2:2\n")
    with pytest.raises(AlgebraFileError, match="duplicate"):
        parse_algebra_file("field Q\ndim 2\n1 2 : 2:1\n2 1 : 2:2\n")
    with pytest.raises(AlgebraFileError):
        parse_algebra_file("dim 2\nfield Q\n")
    with pytest.raises(AlgebraFileError):
        parse_algebra_file("")
    with pytest.raises(AlgebraFileError, match="twice"):
        parse_algebra_file("field Q\ndim 2\n1 1 : 2:1 2:1\n")


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def entry_file(tmp_path, case, entry_id, fld=None):
    entry = [e for e in tables.catalog(case) if e.entry_id == entry_id][0]
    a = entry.algebra(fld if fld is not None else tables.entry_field(case))
    safe = entry_id.replace("{", "").replace("}", "").replace(",", "_")
    return write(tmp_path, f"{safe}.alg", render_algebra(a))


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_cli_check(tmp_path, capsys):
    path = entry_file(tmp_path, "closed", "J_{4,11}")
    code, out = run_cli(capsys, "check", path)
    assert code == 0
    assert out == "Jordan: yes; nilpotent: yes (nilindex 5)\n"
    bad = write(tmp_path, "idem.alg", "field Q\ndim 2\n1 1 : 1:1\n")
    code, out = run_cli(capsys, "check", bad)
    assert code == 1
    assert out == "Jordan: yes; nilpotent: no\n"


def test_cli_input_error_exit_2(tmp_path, capsys):
    bad = write(tmp_path, "bad.alg", "field F 4\ndim 1\n")
    assert cli.main(["check", bad]) == 2
    assert cli.main(["iso", bad, bad]) == 2
    capsys.readouterr()


def test_cli_iso_expect(tmp_path, capsys):
    j46 = entry_file(tmp_path, "closed", "J_{4,6}")
    j47 = entry_file(tmp_path, "closed", "J_{4,7}")
    code, out = run_cli(capsys, "iso", j46, j47, "--expect", "noniso")
    assert code == 0
    assert "distinguished" in out
    code, _ = run_cli(capsys, "iso", j46, j47, "--expect", "iso")
    assert code == 1
    code, out = run_cli(capsys, "iso", j46, j46, "--expect", "iso")
    assert code == 0
    assert "witness" in out


def test_cli_iso_json(tmp_path, capsys):
    j12 = entry_file(tmp_path, "closed", "J_{4,12}")
    j13 = entry_file(tmp_path, "closed", "J_{4,13}")
    code, out = run_cli(capsys, "iso", j12, j13, "--json",
                        "--expect", "noniso")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "non_isomorphic_over_closure"
    assert payload["certificate"] == ["1"]


def test_cli_classify_and_determinism(capsys):
    code, out1 = run_cli(capsys, "classify", "--dim", "3", "--field", "F:3")
    assert code == 0
    assert "5 classes" in out1
    code, out2 = run_cli(capsys, "classify", "--dim", "3", "--field", "F:3")
    assert out1 == out2
    code, out = run_cli(capsys, "classify", "--dim", "2", "--field", "F:2",
                        "--json")
    assert json.loads(out)["count"] == 2


def test_cli_classify_dim4_runs(capsys):
    # finite-field dim-4 counts are findings, not assertions
    code, out = run_cli(capsys, "classify", "--dim", "4", "--field", "F:2")
    assert code == 0
    assert "classes" in out.splitlines()[0]


def test_cli_oracle(capsys):
    code, out = run_cli(capsys, "oracle", "--dim", "2", "--field", "F:3")
    assert code == 0
    assert "2 classes" in out
    assert cli.main(["oracle", "--dim", "3", "--field", "F:3"]) == 2
    capsys.readouterr()


def test_cli_cocycles_extend_orbits(tmp_path, capsys):
    j21 = write(tmp_path, "j21.alg", "field F 3\ndim 2\n")
    code, out = run_cli(capsys, "cocycles", j21)
    assert code == 0
    assert "Z2 dim 3" in out and "H2 dim 3" in out
    code, out = run_cli(capsys, "extend", j21, "--theta", "S(1,1)+S(2,2)")
    assert code == 0
    assert parse_algebra_file(out) == Algebra(GF(3), 3,
                                              {(1, 1, 3): 1, (2, 2, 3): 1})
    code, out = run_cli(capsys, "extend", j21, "--theta", "S(1,1); S(2,1)")
    assert parse_algebra_file(out) == Algebra(GF(3), 4,
                                              {(1, 1, 3): 1, (1, 2, 4): 1})
    code, out = run_cli(capsys, "extend", j21, "--theta",
                        "S(1,1)+S(2,2); S(2,1)")
    assert parse_algebra_file(out) == Algebra(
        GF(3), 4, {(1, 1, 3): 1, (2, 2, 3): 1, (1, 2, 4): 1})
    j22 = write(tmp_path, "j22.alg", "field F 3\ndim 2\n1 1 : 2:1\n")
    code, out = run_cli(capsys, "extend", j22, "--theta", "S(2,2)")
    assert code == 2
    code, out = run_cli(capsys, "orbits", j21, "--r", "1")
    assert code == 0
    assert "allowable 9" in out and "orbits 2" in out


def test_cli_gb(tmp_path, capsys):
    path = write(tmp_path, "sys.gb",
                 "field Q\nvars x y\nx^2 - y\ny^2 - x\n")
    code, out = run_cli(capsys, "gb", path, "--order", "lex")
    assert code == 0
    assert "y^4 - y" in out
    path2 = write(tmp_path, "hard.gb",
                  "field Q\nvars x y z\nx^2+y^2+z^2-1\nx*y+y*z+x*z\n"
                  "x^2*y-z^3+x\n")
    import os
    os.environ["JORDAN_LIMITS"] = "pairs=2"
    try:
        code = cli.main(["gb", path2])
    finally:
        del os.environ["JORDAN_LIMITS"]
    assert code == 3
    capsys.readouterr()


def test_cli_catalog(capsys):
    code, out = run_cli(capsys, "catalog", "list", "--case", "closed",
                        "--dim", "4")
    assert code == 0
    assert out.count("J_{4,") == 13
    code, out = run_cli(capsys, "catalog", "verify", "--case", "closed",
                        "--dim", "3")
    assert code == 0
    assert "OK" in out


def test_cli_invariants_json(tmp_path, capsys):
    path = entry_file(tmp_path, "closed", "J_{4,6}")
    code, out = run_cli(capsys, "invariants", path, "--json")
    payload = json.loads(out)
    assert payload["dims_lcs"] == [4, 2, 1, 0]
    assert payload["is_associative"] is False


def test_cli_catalog_files_pass_check(tmp_path, capsys, all_catalog_entries):
    for case, entry in all_catalog_entries:
        a = entry.algebra(tables.entry_field(case))
        path = write(tmp_path, "entry.alg", render_algebra(a))
        assert cli.main(["check", path]) == 0
        capsys.readouterr()


def test_cli_unknown_verb_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2
