import ast
import pathlib

import pytest

from charkit.lie_core import FUNDAMENTAL_WEIGHTS, ZERO_WEIGHT, weyl_dim
from charkit.oracle import (
    OracleRefusal, dominant_representative, freudenthal, torus_check,
    weyl_orbit,
)

L = FUNDAMENTAL_WEIGHTS


def test_dominant_representative():
    assert dominant_representative((0, 0, 0, 0, 0, 0, 1)) == L[6]
    w = (-1, 0, 0, 0, 0, 0, 0)
    rep = dominant_representative(w)
    assert all(x >= 0 for x in rep)
    assert rep in weyl_orbit(w)


def test_freudenthal_minuscule_l7():
    ws = freudenthal(L[6])
    assert ws.dominant_mults == {L[6]: 1}
    assert ws.orbit_sizes[L[6]] == 56
    assert ws.total() == 56


def test_freudenthal_trivial():
    ws = freudenthal(ZERO_WEIGHT)
    assert ws.dominant_mults == {ZERO_WEIGHT: 1}
    assert ws.total() == 1


def test_freudenthal_adjoint():
    ws = freudenthal(L[0])
    assert ws.dominant_mults == {L[0]: 1, ZERO_WEIGHT: 7}
    assert ws.orbit_sizes[L[0]] == 126
    assert ws.total() == 126 + 7 == 133


@pytest.mark.parametrize("m", [L[1], L[5], (0, 0, 0, 0, 0, 0, 2),
                               (1, 0, 0, 0, 0, 0, 1)])
def test_freudenthal_totals_match_weyl_dim(m):
    assert freudenthal(m).total() == weyl_dim(m)


def test_oracle_refusal_on_ceiling():
    with pytest.raises(OracleRefusal):
        freudenthal(L[3], ceiling=1000)


def test_multiplicity_lookup_off_cone():
    ws = freudenthal(L[0])
    # any nonzero weight of the adjoint is a root, multiplicity 1
    assert ws.multiplicity((0, 0, 1, -1, 0, 0, 0)) in (0, 1)
    assert ws.multiplicity(ZERO_WEIGHT) == 7


def test_torus_identity_l7(table):
    dev = torus_check(L[6], table.character(L[6]), trials=3)
    assert dev <= 1e-8


def test_torus_second_order(table):
    dev = torus_check((0, 0, 0, 0, 0, 0, 2),
                      table.character((0, 0, 0, 0, 0, 0, 2)), trials=3)
    assert dev <= 1e-8


def test_torus_l1_plus_l7(table):
    m = (1, 0, 0, 0, 0, 0, 1)
    dev = torus_check(m, table.character(m), trials=3)
    assert dev <= 1e-8


def test_torus_detects_wrong_polynomial(table):
    from charkit.polyring import MultiPoly
    wrong = MultiPoly.monomial((0, 0, 0, 0, 0, 0, 2))
    dev = torus_check((0, 0, 0, 0, 0, 0, 2), wrong, trials=3)
    assert dev > 1e-3


def test_oracle_module_is_independent():
    # the verification channel must not read the operator or the solvers
    src = pathlib.Path(__file__).parent.parent / "src/charkit/oracle.py"
    tree = ast.parse(src.read_text())
    banned = {"charkit.csmodel", "charkit.charsolve", "charkit.tensor",
              ".csmodel", ".charsolve", ".tensor"}
    for node in ast.walk(tree):
        if isinstance(node, ast.ImportFrom):
            mod = ("." * node.level) + (node.module or "")
            assert mod not in banned, f"oracle imports {mod}"
        if isinstance(node, ast.Import):
            for alias in node.names:
                assert alias.name not in banned
