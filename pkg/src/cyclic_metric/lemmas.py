"""Structural lemmas about cyclic metrics as executable checks.

Each check takes a cyclic metric Lie algebra together with families of
subalgebras, ideals or splittings and returns the list of violations; an
empty list means the lemma held on every instance supplied.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .forms import (
    BilinearForm,
    check_abc,
    cyclic_defect,
    is_isotropic,
    orthogonal_complement,
    pairing_vanishes,
)
from .lie import (
    LieAlgebra,
    Subspace,
    bracket_space,
    center,
    centralizer,
    derived_series,
    is_ideal,
    is_subalgebra,
    lower_central_series,
    restrict,
    unit,
    upper_central_series,
)


@dataclass
class Violation:
    lemma: str
    detail: tuple


@dataclass
class LemmaFamilies:
    subalgebras: list = field(default_factory=list)
    ideals: list = field(default_factory=list)
    splits: list = field(default_factory=list)


def lie_closure(g: LieAlgebra, vectors) -> Subspace:
    """Smallest subalgebra containing ``vectors``."""
    s = Subspace.span(vectors, g.dim)
    while True:
        nxt = s + bracket_space(g, s, s)
        if nxt == s:
            return s
        s = nxt


def _unique(spaces):
    out = []
    for s in spaces:
        if s not in out:
            out.append(s)
    return out


def families(g: LieAlgebra, annotations: dict | None = None, rng: random.Random | None = None,
             random_subalgebras: int = 4) -> LemmaFamilies:
    """Subalgebras, ideals and subalgebra ⊕ ideal splits worth testing on ``g``."""
    n = g.dim
    whole, zero = Subspace.whole(n), Subspace.zero(n)
    ideals = [whole, zero, center(g)]
    ideals += derived_series(g) + lower_central_series(g) + upper_central_series(g)
    for s in (annotations or {}).values():
        if is_ideal(g, s):
            ideals.append(s)
    ideals = _unique(ideals)

    subs = list(ideals)
    subs += [Subspace.span([unit(n, k)], n) for k in range(n)]
    subs += [lie_closure(g, [unit(n, a), unit(n, b)]) for a in range(n) for b in range(a + 1, n)]
    subs += list((annotations or {}).values())
    if rng is not None:
        for _ in range(random_subalgebras):
            vs = [tuple(rng.randint(-2, 2) for _ in range(n)) for _ in range(rng.randint(1, 2))]
            subs.append(lie_closure(g, vs))
    subs = [s for s in _unique(subs) if is_subalgebra(g, s)]
    ideals = _unique(ideals + [s for s in subs if is_ideal(g, s)])

    splits = []
    for i in ideals:
        for h in subs:
            if h.dim + i.dim == n and (h + i).dim == n:
                splits.append((h, i))
    return LemmaFamilies(subs, ideals, splits)


def restriction_violations(g, b: BilinearForm, subalgebras) -> list[Violation]:
    """A subalgebra inherits a cyclic metric by restriction."""
    out = []
    for s in subalgebras:
        if s.dim and cyclic_defect(restrict(g, s), b.restricted(s)):
            out.append(Violation("restriction", (s,)))
    return out


def centralizer_violations(g, b: BilinearForm, subalgebras) -> list[Violation]:
    """B([h,h], V) = 0 whenever [h, V] = 0; V is taken as the full centralizer of h."""
    out = []
    for h in subalgebras:
        v = centralizer(g, h)
        if not pairing_vanishes(b, bracket_space(g, h, h), v):
            out.append(Violation("centralizer", (h, v)))
    return out


def perp_violations(g, b: BilinearForm, ideals) -> list[Violation]:
    """The orthogonal of an ideal is a subalgebra."""
    return [Violation("perp", (i,)) for i in ideals if not is_subalgebra(g, orthogonal_complement(g, b, i))]


def centre_isotropy_violations(g, b: BilinearForm, subalgebras) -> list[Violation]:
    """C(h) ∩ [h, h] is isotropic for every subalgebra h (h = g included)."""
    out = []
    for h in [Subspace.whole(g.dim)] + list(subalgebras):
        if not h.dim:
            continue
        sub = restrict(g, h)
        ch = center(sub)
        # map the centre of the restricted algebra back into g
        cvecs = [tuple(sum(c * v[k] for c, v in zip(row, h.vectors)) for k in range(g.dim)) for row in ch.vectors]
        meet = Subspace.span(cvecs, g.dim).intersect(bracket_space(g, h, h))
        if not is_isotropic(g, b, meet):
            out.append(Violation("centre_isotropy", (h, meet)))
    return out


def abc_violations(g, b: BilinearForm, splits) -> list[Violation]:
    """For a cyclic b every subalgebra ⊕ ideal split satisfies (a), (b) and (c)."""
    out = []
    for h, i in splits:
        rep = check_abc(g, b, h, i)
        if not rep.all_ok:
            out.append(Violation("abc", (h, i, tuple(rep))))
    return out


LEMMAS = ("restriction", "centralizer", "perp", "centre_isotropy", "abc")


def all_violations(g, b: BilinearForm, fam: LemmaFamilies) -> list[Violation]:
    if cyclic_defect(g, b):
        raise ValueError("lemma checks need a cyclic form")
    return (restriction_violations(g, b, fam.subalgebras) + centralizer_violations(g, b, fam.subalgebras)
            + perp_violations(g, b, fam.ideals) + centre_isotropy_violations(g, b, fam.subalgebras)
            + abc_violations(g, b, fam.splits))
