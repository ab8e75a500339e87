import pytest

from cyclic_metric.catalog import NAMES, UnknownCatalogEntry, heisenberg, make, remark_lorentz_metric, sl2_sum
from cyclic_metric.forms import cyclic_defect, cyclic_space, index_of
from cyclic_metric.lie import unit, validate
from cyclic_metric.linalg import signature
from cyclic_metric.reps import validate_rep

ENTRIES = ["sl2", "sl3", "so3", "so4", "su2", "gl2", "gl3", "heisenberg3", "heisenberg5", "abelian2", "r2",
           "remark_lorentz", "sl2_semidirect_F2", "gl2_semidirect_F2", "so3_semidirect_F3", "sl3_semidirect_F3"]


@pytest.mark.parametrize("name", ENTRIES)
def test_entries_validate(name):
    e = make(name)
    assert validate(e.algebra).ok
    e.check()
    for r in e.representations.values():
        assert validate_rep(r).ok


def test_parameterised_lookup():
    assert make("sl", 2).algebra == make("sl2").algebra
    assert make("heisenberg", 5).algebra.dim == 5
    with pytest.raises(UnknownCatalogEntry):
        make("e8")
    assert "remark_lorentz" in NAMES


def test_sl2_relations():
    g = make("sl", 2).algebra
    assert g.names == ("H", "X", "Y")
    assert g.bracket(unit(3, 0), unit(3, 1)) == (0, 2, 0)
    assert g.bracket(unit(3, 0), unit(3, 2)) == (0, 0, -2)
    assert g.bracket(unit(3, 1), unit(3, 2)) == (1, 0, 0)


def test_so3_relations():
    g = make("so", 3).algebra
    assert g.bracket(unit(3, 0), unit(3, 1)) == unit(3, 2)
    assert cyclic_space(g).dimension == 5


def test_sl2_semidirect_brackets():
    g = make("sl2_semidirect_F2").algebra
    idx = {nm: k for k, nm in enumerate(g.names)}
    n = g.dim

    def br(a, b):
        return g.bracket(unit(n, idx[a]), unit(n, idx[b]))

    assert br("H", "e1") == unit(n, idx["e1"])
    assert tuple(-x for x in br("H", "e2")) == unit(n, idx["e2"])
    assert br("X", "e2") == unit(n, idx["e1"])
    assert br("Y", "e1") == unit(n, idx["e2"])


def test_remark_lorentz_metric():
    ma = remark_lorentz_metric()
    assert not cyclic_defect(ma.algebra, ma.form)
    assert signature(ma.form.m) == (3, 1, 0)
    assert index_of(ma.form) == 1


def test_helpers():
    assert heisenberg(3).names == ("x", "y", "z")
    assert sl2_sum(2).dim == 6 and validate(sl2_sum(2)).ok
