import os
from pathlib import Path

import pytest

import cosetal

DATA = Path(os.environ.get("COSETAL_DATA", Path(__file__).resolve().parents[2] / "tests" / "data"))


def files(*names):
    return [str(DATA / n) for n in names]


def test_check_absorbing():
    ws = cosetal.Workspace.load(files("basics.txt", "absorbing.txt"))
    r = ws.check("absorbing")
    assert r["extension"] and r["cosetal"] and r["eq_weakly_schreier"]
    assert not r["special_schreier"]
    assert r["total"] == "Z2+inf"


def test_non_cosetal_diagram():
    ws = cosetal.Workspace.load(files("basics.txt", "chain.txt"))
    r = ws.check("chainext")
    assert not r["cosetal"]
    assert not r["extension"]


def test_cohomology_z2_and_z3():
    ws = cosetal.Workspace.load(files("basics.txt", "z3.txt"))
    z2 = ws.cohomology("z2", "z2")
    assert z2["order"] == 2
    assert z2["invariant_factors"] == [2]
    assert z2["carriers"] == ["Z2xZ2", "Z4"]
    z3 = ws.cohomology("z3", "z3")
    assert z3["order"] == 3
    assert z3["carriers"] == ["Z3xZ3", "Z9", "Z9"]


def test_class_of_extension():
    ws = cosetal.Workspace.load(files("basics.txt", "z4.txt"))
    assert ws.cohomology_of("z4ext")["class"] == 1
    assert ws.cohomology_of("v4ext")["class"] == 0


def test_describe_monoid():
    assert cosetal.describe_monoid([[0, 1], [1, 1]]) == "L2"
    assert cosetal.describe_monoid([[0]]) == "trivial"


def test_errors_carry_codes():
    with pytest.raises(cosetal.CosetalError) as info:
        cosetal.Workspace.parse("monoid m 2 0\n0 1\n1 x\n")
    assert info.value.code == "ParseError"
    assert info.value.witness == [3]
    with pytest.raises(cosetal.CosetalError) as info:
        cosetal.describe_monoid([[0, 1], [1, 0]], 1)
    assert info.value.code == "BadIdentity"


def test_run_cli():
    code, out, err = cosetal.run(["check", "absorbing", *files("basics.txt", "absorbing.txt")])
    assert code == 0, err
    assert "cosetal: yes" in out
    code, _, err = cosetal.run(["check", "absorbing", *files("basics.txt", "malformed.txt")])
    assert code == 2
    assert "malformed.txt:3" in err
