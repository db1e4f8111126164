"""Syzygy relations of a Groebner basis and their Schreyer-order Groebner basis.

For a certified basis ``f_1..f_m`` of a submodule of ``F`` we work in a fresh
free module ``L`` with basis ``g_1..g_m``.  Each S_R-element and each
annihilator element has a standard expression ``sum q_l f_l`` from the
division algorithm; moving it to the left gives a relation

    r_ab = u_ab g_a - u_ba g_b - sum q_l g_l,     r_aa = ann(lc f_a) g_a - sum q_l g_l.

These relations generate ``syz(f_1..f_m)`` and are a Groebner basis under the
Schreyer order induced by the ``f``'s.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .division import divide, reduces_to_zero
from .exceptions import ConsistencyError, StructuralError
from .groebner import GroebnerBasis, ann_element, criterion_check, pair_data
from .order import SchreyerOrder
from .poly import FreeModule, ModuleElement, substitute


@dataclass
class SyzygyRelation:
    kind: str  # "pair", "ann" or "collapsed"
    indices: tuple  # 1-based generator indices
    element: ModuleElement
    quotients: Optional[list] = None

    @property
    def leading(self):
        return self.element.leading()

    def __str__(self):
        return str(self.element)


def schreyer_module(basis: Sequence[ModuleElement]) -> FreeModule:
    """The free module ``L = S^m`` carrying the Schreyer order of ``basis``."""
    order = SchreyerOrder.from_generators(list(basis))
    ambient = basis[0].module
    return FreeModule(ambient.ring, ambient.variables, len(basis), order)


def syzygy_basis(gb: GroebnerBasis, verify: bool = True):
    """Relations ``r_ab`` (pairs) and ``r_aa`` (annihilators) of a certified basis.

    Returns ``(relations, L)`` where ``L`` is the Schreyer-ordered module the
    relations live in.  Relations are ordered by ``a``: the pairs ``(a, b)``
    with ``b > a`` first, then ``r_aa``; zero relations are dropped.
    """
    if not gb.certified:
        raise StructuralError("syzygy_basis needs a certified Groebner basis")
    elements = list(gb.elements)
    L = schreyer_module(elements)
    scal = L.scalars()
    m = len(elements)
    relations: list[SyzygyRelation] = []

    def relation(head: ModuleElement, value: ModuleElement):
        result = divide(value, elements, trace=False) if value.terms else None
        if result is not None and result.remainder.terms:
            raise StructuralError("critical element does not reduce: basis is not Groebner")
        quotients = result.quotients if result else [scal.zero()] * m
        rel = head
        for l, q in enumerate(quotients, start=1):
            for e, _, c in q.terms:
                rel = rel - L.term(c, e, l)
        return rel, quotients

    for a in range(m):
        for b in range(a + 1, m):
            pd = pair_data(elements[a], elements[b])
            if pd is None:
                continue
            head = L.term(pd.left, pd.left_exps, a + 1) - L.term(pd.right, pd.right_exps, b + 1)
            value = (elements[a].term_mul(pd.left, pd.left_exps)
                     - elements[b].term_mul(pd.right, pd.right_exps))
            rel, qs = relation(head, value)
            if rel.terms:
                relations.append(SyzygyRelation("pair", (a + 1, b + 1), rel, qs))
        ann = elements[a].ring.annihilator(elements[a].lc)
        if not elements[a].ring.is_zero(ann):
            head = L.term(ann, L.one_exps(), a + 1)
            rel, qs = relation(head, ann_element(elements[a]))
            if rel.terms:
                relations.append(SyzygyRelation("ann", (a + 1, a + 1), rel, qs))

    if verify:
        for r in relations:
            if substitute(r.element, elements).terms:
                raise ConsistencyError(f"relation {r} does not vanish")
        if relations and not criterion_check([r.element for r in relations], stop_early=True):
            raise ConsistencyError("syzygy relations fail Buchberger's criterion")
    return relations, L


def collapse_same_lm(relations: Sequence[SyzygyRelation], verify: bool = True) -> list:
    """Merge relations sharing a leading module monomial via a Bezout combination.

    Each group is replaced by ``sum m_j r_j`` with ``sum m_j lc(r_j) = gcd``;
    the result keeps the leading-term module and hence generates the same
    syzygy module.
    """
    if not relations:
        return []
    groups: dict = {}
    order = []
    for r in relations:
        key = r.element.LM
        if key not in groups:
            groups[key] = []
            order.append(key)
        groups[key].append(r)
    out = []
    for key in order:
        group = groups[key]
        if len(group) == 1:
            out.append(group[0])
            continue
        ring = group[0].element.ring
        _, mults = ring.bezout_combine([r.element.lc for r in group])
        combo = group[0].element.module.zero()
        for mlt, r in zip(mults, group):
            combo = combo + r.element.scalar_mul(mlt)
        idx = tuple(i for r in group for i in r.indices)
        out.append(SyzygyRelation("collapsed", idx, combo))
    if verify:
        old = [r.element for r in relations]
        new = [r.element for r in out]
        ok = all(reduces_to_zero(f, new) for f in old) and all(
            reduces_to_zero(f, old) for f in new
        )
        if not ok or not criterion_check(new, stop_early=True):
            raise ConsistencyError("collapsed relations do not generate the syzygy module")
    return out


def as_basis(relations: Sequence[SyzygyRelation], L: FreeModule) -> GroebnerBasis:
    """Relations viewed as a certified Groebner basis of the syzygy module."""
    return GroebnerBasis([r.element for r in relations], L, certified=True)
