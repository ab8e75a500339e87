from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclic_metric.catalog import heisenberg, make, remark_lorentz_metric, sl, sl2, so3
from cyclic_metric.forms import (
    BilinearForm,
    DegenerateFormError,
    check_abc,
    cyclic_defect,
    cyclic_residual,
    cyclic_space,
    cyclic_system,
    form_radical,
    index_of,
    invariant_space,
    is_cyclic,
    is_invariant,
    is_isotropic,
    killing_form,
    orthogonal_complement,
    split_along_ideal,
)
from cyclic_metric.lie import Subspace, abelian, bracket_space, center, direct_sum, unit
from cyclic_metric.linalg import Matrix, rank

from strategies import rationals, symmetric_matrices


def F(rows):
    m = Matrix.from_rows(rows)
    return BilinearForm(m.rows, m)


def test_sl2_one_constraint_family():
    # B(H,H) = -4, B(X,Y) = 1 satisfies 4B(X,Y) + B(H,H) = 0
    b = F([[-4, 0, 0], [0, 0, 1], [0, 1, 0]])
    assert is_cyclic(sl2(), b)
    assert not is_cyclic(sl2(), F([[1, 0, 0], [0, 0, 1], [0, 1, 0]]))


def test_killing_form_of_sl2():
    k = killing_form(sl2())
    assert k.m == Matrix.from_rows([[8, 0, 0], [0, 0, 4], [0, 4, 0]])
    assert cyclic_residual(sl2(), k, unit(3, 0), unit(3, 1), unit(3, 2)) == 24
    assert cyclic_defect(sl2(), k) == [(0, 1, 2, 24)]


def test_killing_form_vanishes_on_nilpotent():
    assert killing_form(abelian(3)).m.is_zero()
    assert killing_form(heisenberg(3)).m.is_zero()


@given(symmetric_matrices(st.just(3)))
def test_every_form_on_abelian_is_cyclic(m):
    assert is_cyclic(abelian(3), BilinearForm(3, m))


def test_solution_space_dimensions():
    assert cyclic_space(sl2()).dimension == 5
    assert cyclic_space(so3()).dimension == 5
    assert cyclic_space(sl(3)).dimension == 0
    assert cyclic_space(make("so3_semidirect_F3").algebra).dimension == 10
    for b in cyclic_space(sl2()):
        assert is_cyclic(sl2(), b)


def test_cyclic_system_has_one_equation_on_sl2():
    rows = cyclic_system(sl2())
    assert rank(Matrix.from_rows(rows)) == 1 and len(rows[0]) == 6


def test_invariant_spaces():
    inv = invariant_space(sl2())
    assert inv.dimension == 1
    k = killing_form(sl2())
    assert is_invariant(sl2(), k)
    assert rank(Matrix.from_rows([list(inv[0].m.entries), list(k.m.entries)])) == 1
    assert invariant_space(abelian(3)).dimension == 6


def test_heisenberg_invariant_space_is_three():
    # B(z, .) vanishes: B(z, z) = B([x,y], z) = -B(y, [x,z]) = 0, similarly B(z,x) = B(z,y) = 0;
    # the remaining free entries are B(x,x), B(x,y), B(y,y)
    sp = invariant_space(heisenberg(3))
    assert sp.dimension == 3
    z = unit(3, 2)
    for b in sp:
        assert not any(b.m.apply(z))


def test_radicals_and_complements():
    assert form_radical(sl2(), F([[1, 0, 0], [0, 1, 0], [0, 0, 1]])).dim == 0
    assert form_radical(sl2(), BilinearForm.zero(3)).dim == 3
    e = make("sl2_semidirect_F2")
    f2 = e.annotations["abelian_ideal"]
    for b in cyclic_space(e.algebra):
        assert form_radical(e.algebra, b).contains_space(f2)
    ident = BilinearForm(3, Matrix.identity(3))
    assert orthogonal_complement(abelian(3), ident, Subspace.zero(3)).dim == 3
    assert orthogonal_complement(abelian(3), ident, Subspace.coordinate(3, [0])) == Subspace.coordinate(3, [1, 2])


def test_lorentz_example():
    ma = remark_lorentz_metric()
    g, b = ma.algebra, ma.form
    assert ma.is_cyclic()
    assert index_of(b) == 1
    assert b(unit(4, 0), unit(4, 2)) == 1 and b(unit(4, 1), unit(4, 1)) == 1
    ys = Subspace.coordinate(4, [1, 3])
    xs = Subspace.coordinate(4, [0, 2])
    assert orthogonal_complement(g, b, ys) == xs
    assert tuple(check_abc(g, b, xs, ys)) == (True, True, True)
    g1, pi = split_along_ideal(g, b, ys)
    assert g1 == xs
    assert pi.ops[0] == Matrix.diag([1, 0]) and pi.ops[1] == Matrix.diag([0, 1])


def test_index_examples():
    assert index_of(BilinearForm(3, Matrix.identity(3))) == 0
    assert index_of(BilinearForm.zero(4)) == 4
    assert index_of(F([[0, 1], [1, 0]])) == 1


def test_isotropy():
    hyp = F([[0, 1], [1, 0]])
    assert is_isotropic(abelian(2), hyp, Subspace.coordinate(2, [0]))
    assert is_isotropic(abelian(2), hyp, Subspace.zero(2))
    assert not is_isotropic(abelian(2), hyp, Subspace.whole(2))


def test_check_abc_killing_on_reductive_sum():
    g = direct_sum(sl2(), abelian(1))
    k = killing_form(g)
    rep = check_abc(g, k, Subspace.coordinate(4, [0, 1, 2]), Subspace.coordinate(4, [3]))
    assert not rep.a_ok


def test_split_with_orthogonal_direct_product():
    g = direct_sum(sl2(), abelian(2))
    b = F([[-4, 0, 0, 0, 0], [0, 0, 1, 0, 0], [0, 1, 0, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 3]])
    g1, pi = split_along_ideal(g, b, Subspace.coordinate(5, [3, 4]))
    assert g1 == Subspace.coordinate(5, [0, 1, 2])
    assert all(op.is_zero() for op in pi.ops)
    whole, _ = split_along_ideal(g, b, Subspace.whole(5))
    assert whole.dim == 0


def test_split_requires_nondegenerate_ideal():
    b = F([[-4, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 0]])
    g = direct_sum(sl2(), abelian(1))
    with pytest.raises(DegenerateFormError) as err:
        split_along_ideal(g, b, Subspace.coordinate(4, [3]))
    assert err.value.radical == Subspace.coordinate(4, [3])


@given(st.lists(rationals, min_size=5, max_size=5))
def test_sl2_cyclic_family_members_are_cyclic(coeffs):
    g = sl2()
    m = Matrix.zeros(3, 3)
    for c, b in zip(coeffs, cyclic_space(g)):
        m = m + b.m.scale(c)
    b = BilinearForm(3, m)
    assert is_cyclic(g, b)
    assert 4 * b.m[1, 2] + b.m[0, 0] == 0


def test_centre_of_heisenberg_isotropic_in_ambient():
    # heisenberg(3) sits inside the oscillator-type 4-dim extension
    from cyclic_metric.constructions import Cocycle2, MetricAlgebra, central_double_extension_1d

    h = MetricAlgebra(abelian(2), BilinearForm(2, Matrix.identity(2)))
    g = central_double_extension_1d(h, Cocycle2.from_upper(2, 1, {(0, 1): (Fraction(1),)}))
    heis = Subspace.coordinate(4, [1, 2, 3])
    zc = bracket_space(g.algebra, heis, heis).intersect(center(g.algebra))
    assert zc.dim == 1
    assert is_isotropic(g.algebra, g.form, zc)


def test_so4_is_two_commuting_so3_ideals_with_ten_cyclic_forms():
    # so(4) = span(A12+A34, A13-A24, A14+A23) ⊕ span(A12-A34, A13+A24, A14-A23)
    from cyclic_metric.catalog import so
    from cyclic_metric.lie import is_ideal, restrict

    g = so(4)
    plus = Subspace.span([(1, 0, 0, 0, 0, 1), (0, 1, 0, 0, -1, 0), (0, 0, 1, 1, 0, 0)], 6)
    minus = Subspace.span([(1, 0, 0, 0, 0, -1), (0, 1, 0, 0, 1, 0), (0, 0, 1, -1, 0, 0)], 6)
    assert is_ideal(g, plus) and is_ideal(g, minus)
    assert (plus + minus).dim == 6
    assert bracket_space(g, plus, minus).dim == 0
    for half in (plus, minus):
        assert cyclic_space(restrict(g, half)).dimension == 5
    assert cyclic_space(g).dimension == 10
