from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclic_metric.catalog import heisenberg, r2, remark_lorentz_algebra, sl2, so3
from cyclic_metric.lie import (
    InvalidAlgebraError,
    LieAlgebra,
    Subspace,
    abelian,
    center,
    derived_series,
    direct_sum,
    is_ideal,
    is_subalgebra,
    lower_central_series,
    quotient,
    require_valid,
    restrict,
    unit,
    upper_central_series,
    validate,
)

from strategies import rationals

H, X, Y = (unit(3, i) for i in range(3))


def dims(series):
    return [s.dim for s in series]


def test_sl2_relations():
    g = sl2()
    assert validate(g).ok
    assert g.bracket(H, X) == (0, 2, 0)
    assert g.bracket(H, Y) == (0, 0, -2)
    assert g.bracket(X, Y) == (1, 0, 0)


def test_broken_sl2_reports_jacobi_triple():
    bad = LieAlgebra.from_brackets(["H", "X", "Y"], {
        ("H", "X"): {"X": 2}, ("H", "Y"): {"Y": -2}, ("X", "Y"): {"X": 1}})
    rep = validate(bad)
    assert not rep.ok
    assert ("jacobi", 0, 1, 2) in rep.failures
    with pytest.raises(InvalidAlgebraError):
        require_valid(bad)


def test_so3_bracket():
    g = so3()
    assert g.bracket(unit(3, 0), unit(3, 1)) == unit(3, 2)
    assert g.bracket(unit(3, 1), unit(3, 2)) == unit(3, 0)


@given(st.lists(rationals, min_size=3, max_size=3))
def test_bracket_self_vanishes(v):
    assert not any(sl2().bracket(v, v))


def test_abelian_is_valid():
    for n in range(5):
        g = abelian(n)
        assert validate(g).ok and g.is_abelian()
        assert center(g).dim == n
        assert dims(derived_series(g)) == ([n, 0] if n else [0])


def test_centres():
    assert center(sl2()).dim == 0
    z = center(heisenberg(3))
    assert z == Subspace.coordinate(3, [2])


def test_series():
    h = heisenberg(3)
    assert dims(lower_central_series(h)) == [3, 1, 0]
    assert dims(upper_central_series(h)) == [0, 1, 3]
    assert dims(derived_series(sl2())) == [3]
    assert dims(upper_central_series(sl2())) == [0]
    assert dims(upper_central_series(abelian(2))) == [0, 2]
    assert dims(lower_central_series(abelian(2))) == [2, 0]


def test_ideal_and_subalgebra():
    h = heisenberg(3)
    assert is_ideal(h, Subspace.coordinate(3, [2]))
    span_h = Subspace.coordinate(3, [0])
    assert is_subalgebra(sl2(), span_h) and not is_ideal(sl2(), span_h)
    assert is_ideal(sl2(), Subspace.whole(3))


def test_quotients():
    q, proj = quotient(heisenberg(3), Subspace.coordinate(3, [2]))
    assert q.dim == 2 and q.is_abelian() and proj.shape == (2, 3)
    g = sl2()
    same, p = quotient(g, Subspace.zero(3))
    assert same == g and p.rows == 3
    zero, _ = quotient(g, Subspace.whole(3))
    assert zero.dim == 0


def test_direct_sums():
    assert direct_sum(abelian(1), abelian(1)) == abelian(2)
    s = direct_sum(sl2(), sl2())
    assert s.dim == 6 and validate(s).ok
    assert direct_sum(r2(), r2()).c == remark_lorentz_algebra().c


def test_restrict_to_subalgebra():
    g = sl2()
    borel = Subspace.coordinate(3, [0, 1])
    b = restrict(g, borel)
    assert b.dim == 2 and validate(b).ok
    assert b.bracket(unit(2, 0), unit(2, 1)) == (0, 2)


@given(st.lists(st.lists(rationals, min_size=3, max_size=3), max_size=4))
def test_subspace_canonical(vs):
    s = Subspace.span(vs, 3)
    t = Subspace.span(list(reversed(vs)) + [[0, 0, 0]], 3)
    assert s == t
    for v in vs:
        assert s.contains(v)
        assert s.contains(tuple(Fraction(2) * x for x in v))


@given(st.lists(st.lists(rationals, min_size=4, max_size=4), max_size=3),
       st.lists(st.lists(rationals, min_size=4, max_size=4), max_size=3))
def test_subspace_dimension_formula(a, b):
    s, t = Subspace.span(a, 4), Subspace.span(b, 4)
    assert (s + t).dim + s.intersect(t).dim == s.dim + t.dim


@given(st.lists(rationals, min_size=3, max_size=3), st.lists(rationals, min_size=3, max_size=3),
       st.lists(rationals, min_size=3, max_size=3))
def test_jacobi_on_vectors(u, v, w):
    g = sl2()
    total = [a + b + c for a, b, c in zip(g.bracket(u, g.bracket(v, w)), g.bracket(v, g.bracket(w, u)),
                                          g.bracket(w, g.bracket(u, v)))]
    assert not any(total)
