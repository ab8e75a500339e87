"""Hypothesis strategies producing exact rational objects."""

from fractions import Fraction

from hypothesis import strategies as st

from cyclic_metric.linalg import Matrix

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def matrices(rows=st.integers(1, 5), cols=st.integers(1, 5)):
    @st.composite
    def build(draw):
        r, c = draw(rows), draw(cols)
        data = draw(st.lists(st.lists(rationals, min_size=c, max_size=c), min_size=r, max_size=r))
        return Matrix.from_rows(data, cols=c)

    return build()


@st.composite
def square(draw, n=st.integers(1, 5)):
    k = draw(n)
    return draw(matrices(st.just(k), st.just(k)))


@st.composite
def symmetric_matrices(draw, n=st.integers(1, 5)):
    m = draw(square(n))
    k = m.rows
    return Matrix.from_rows([[m[min(i, j), max(i, j)] for j in range(k)] for i in range(k)])


@st.composite
def invertible(draw, n):
    # unit lower-triangular times upper-triangular with nonzero diagonal, then a row permutation
    low = [[draw(rationals) if j < i else Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    up = [[draw(rationals.filter(bool)) if i == j else (draw(rationals) if j > i else Fraction(0))
           for j in range(n)] for i in range(n)]
    perm = draw(st.permutations(range(n)))
    p = Matrix.from_rows([[Fraction(int(perm[i] == j)) for j in range(n)] for i in range(n)])
    return p @ Matrix.from_rows(low) @ Matrix.from_rows(up)
