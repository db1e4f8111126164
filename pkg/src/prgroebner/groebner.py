"""S_R-elements, annihilator elements, Buchberger's criterion and algorithm.

Over ``R = prod Z/N_i`` a set ``G`` is a Groebner basis exactly when every
defined S_R-element of a pair and every annihilator element
``ann(lc(f)) * f`` reduces to zero modulo ``G``.  :func:`buchberger` completes
a generating set by appending nonzero remainders of those critical elements.
"""

from __future__ import annotations

import logging
from collections import deque
from math import gcd
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .coeff import RingSpec
from .division import COLEX, divide, term_reducible
from .exceptions import ConsistencyError, IterationLimitError, StructuralError
from .order import mono_div, mono_lcm
from .poly import FreeModule, ModuleElement

logger = logging.getLogger(__name__)

DEFAULT_MAX_CRITICAL = 20000


def sr_coefficients(ring: RingSpec, a, b):
    """Cofactors ``(l, r)`` with ``l*a == r*b`` an lcm of ``a`` and ``b``.

    The lcm is taken to carry the unit of ``a``, so ``l = lcm(d_a, d_b)/d_a``
    on divisor parts and ``r`` absorbs the unit ratio; ``a == b`` gives
    ``(1, 1)``.  A component where ``a`` or ``b`` vanishes yields zero on both
    sides.
    """
    fa = ring.unit_divisor_form(a)
    fb = ring.unit_divisor_form(b)
    left, right = [], []
    for x, y, ua, da, ub, db, n in zip(
        a, b, fa.unit, fa.divisor, fb.unit, fb.divisor, ring.moduli
    ):
        if x == 0 or y == 0:
            left.append(0)
            right.append(0)
            continue
        lcm = da * db // gcd(da, db)
        left.append(lcm // da)
        if n:
            right.append((lcm // db) * ua * pow(ub, -1, n) % n)
        else:
            right.append((lcm // db) * ua * ub)
    return tuple(left), tuple(right)


@dataclass(frozen=True)
class PairData:
    """The cofactor terms of an S_R-element ``u_left*f - u_right*g``."""

    left: tuple
    left_exps: tuple
    right: tuple
    right_exps: tuple


def pair_data(f: ModuleElement, g: ModuleElement) -> Optional[PairData]:
    if not f.terms or not g.terms:
        raise StructuralError("S_R-elements need nonzero arguments")
    if f.basis != g.basis:
        return None
    left, right = sr_coefficients(f.ring, f.lc, g.lc)
    lcm = mono_lcm(f.lm, g.lm)
    return PairData(left, mono_div(lcm, f.lm), right, mono_div(lcm, g.lm))


def s_r_element(f: ModuleElement, g: ModuleElement) -> Optional[ModuleElement]:
    """The S_R-element of ``f`` and ``g``; ``None`` when their leading terms
    sit on different basis vectors (undefined)."""
    f.module.check_same(g.module)
    pd = pair_data(f, g)
    if pd is None:
        return None
    return f.term_mul(pd.left, pd.left_exps) - g.term_mul(pd.right, pd.right_exps)


def ann_element(f: ModuleElement) -> ModuleElement:
    """``ann(lc(f)) * f``; zero when ``lc(f)`` is a nonzero divisor."""
    if not f.terms:
        raise StructuralError("annihilator element of zero")
    return f.scalar_mul(f.ring.annihilator(f.lc))


@dataclass(frozen=True)
class CriticalElement:
    kind: str  # "pair" or "ann"
    indices: tuple
    value: ModuleElement


def critical_elements(elements: Sequence[ModuleElement]):
    """All defined critical elements, pairs ``(a, b)`` then ann for each index.

    Order: for each ``b``, pairs ``(a, b)`` with ``a < b`` followed by ``ann(b)``.
    """
    for b, fb in enumerate(elements):
        for a in range(b):
            s = s_r_element(elements[a], fb)
            if s is not None:
                yield CriticalElement("pair", (a, b), s)
        yield CriticalElement("ann", (b,), ann_element(fb))


@dataclass
class CriterionResult:
    passed: bool
    witnesses: list = field(default_factory=list)

    def __bool__(self):
        return self.passed


def criterion_check(candidate: Sequence[ModuleElement], stop_early: bool = False) -> CriterionResult:
    """Buchberger's criterion for ``candidate`` exactly as given.

    Witnesses are ``(CriticalElement, remainder)`` pairs that fail to reduce.
    """
    elements = [g for g in candidate if g.terms]
    witnesses = []
    for crit in critical_elements(elements):
        if crit.value.is_zero():
            continue
        rem = divide(crit.value, elements, trace=False).remainder
        if rem.terms:
            witnesses.append((crit, rem))
            if stop_early:
                break
    return CriterionResult(not witnesses, witnesses)


@dataclass
class GroebnerBasis:
    elements: list
    module: FreeModule
    certified: bool = False
    transcript: Optional[list] = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def reduce(self, f: ModuleElement):
        return divide(f, self.elements)

    def contains(self, f: ModuleElement) -> bool:
        if f.is_zero():
            return True
        return divide(f, self.elements, trace=False).remainder.is_zero()

    def leading_terms(self) -> list:
        return [(g.lc, g.lm, g.basis) for g in self.elements]


class _Tracker:
    """Expresses every element of ``H`` as a combination of the inputs."""

    def __init__(self, module: FreeModule, count: int):
        from .order import TermOrder

        self.space = FreeModule(module.ring, module.variables, count,
                                TermOrder(module.order.induced(), "pot"))
        self.rows = [self.space.gen(i + 1) for i in range(count)]

    def add_critical(self, crit: CriticalElement, elements, quotients):
        if crit.kind == "pair":
            a, b = crit.indices
            pd = pair_data(elements[a], elements[b])
            row = (self.rows[a].term_mul(pd.left, pd.left_exps)
                   - self.rows[b].term_mul(pd.right, pd.right_exps))
        else:
            (a,) = crit.indices
            row = self.rows[a].scalar_mul(elements[a].ring.annihilator(elements[a].lc))
        for q, r in zip(quotients, self.rows):
            row = row - r.mul_poly(q)
        self.rows.append(row)


def buchberger(
    gens: Sequence[ModuleElement],
    max_critical: int = DEFAULT_MAX_CRITICAL,
    track: bool = False,
    normalize_units: bool = True,
    rule: str = COLEX,
) -> GroebnerBasis:
    """Complete ``gens`` to a Groebner basis of the submodule they generate.

    Critical elements are processed first in, first out.  When an element
    ``q`` enters ``H`` it queues, for every earlier ``p``, the pair
    ``(p, q)`` followed by the annihilator elements of ``p`` and ``q``.
    After the queue drains, every critical element is re-divided; any
    nonzero remainder restarts the loop.

    Remainders are taken with the ``rule`` indicator choice.  The default
    ``"colex"`` reduces by the earliest possible elements of ``H``; with
    ``"lex"`` the newest (and over ``Z`` typically largest) elements are
    used first, which can make integer coefficients explode.
    """
    gens = [g for g in gens if g.terms]
    if not gens:
        raise StructuralError("buchberger needs at least one nonzero generator")
    module = gens[0].module
    for g in gens:
        module.check_same(g.module)
    H: list[ModuleElement] = []
    queue: deque = deque()
    tracker = _Tracker(module, len(gens)) if track else None
    processed = 0

    def enqueue(idx):
        if idx == 0:
            queue.append(("ann", (0,)))
        for a in range(idx):
            queue.append(("pair", (a, idx)))
            queue.append(("ann", (a,)))
            queue.append(("ann", (idx,)))

    def materialize(kind, idx):
        if kind == "pair":
            s = s_r_element(H[idx[0]], H[idx[1]])
            return None if s is None else CriticalElement(kind, idx, s)
        return CriticalElement(kind, idx, ann_element(H[idx[0]]))

    def absorb(crit: CriticalElement):
        result = divide(crit.value, H, trace=False, rule=rule)
        if result.remainder.terms:
            if tracker is not None:
                tracker.add_critical(crit, H, result.quotients)
            H.append(result.remainder)
            enqueue(len(H) - 1)
            logger.debug("added element %d from %s%s", len(H), crit.kind, crit.indices)
            return True
        return False

    for g in gens:
        H.append(g)
        enqueue(len(H) - 1)

    while True:
        while queue:
            processed += 1
            if processed > max_critical:
                raise IterationLimitError(
                    f"buchberger exceeded {max_critical} critical elements "
                    f"(basis size {len(H)})"
                )
            kind, idx = queue.popleft()
            crit = materialize(kind, idx)
            if crit is None or crit.value.is_zero():
                continue
            absorb(crit)
        # final sweep: all remainders must vanish before we stop
        changed = False
        for crit in critical_elements(H):
            if crit.value.is_zero():
                continue
            if absorb(crit):
                changed = True
                break
        if not changed:
            break

    elements = list(H)
    rows = tracker.rows if tracker else None
    if normalize_units:
        elements, rows = _normalize_units(elements, rows)
    return GroebnerBasis(elements, module, certified=True, transcript=rows)


def _normalize_units(elements, rows):
    """Scale each element so the unit part of its lc is 1 in every component."""
    out, out_rows = [], [] if rows is not None else None
    for i, g in enumerate(elements):
        ring = g.ring
        u = ring.unit_divisor_form(g.lc).unit
        inv = ring.unit_inverse(u)
        out.append(g.scalar_mul(inv))
        if rows is not None:
            out_rows.append(rows[i].scalar_mul(inv))
    return out, out_rows


def lt_generated(f: ModuleElement, others: Sequence[ModuleElement]) -> bool:
    """Does ``LT(f)`` lie in the module generated by ``LT(others)``?"""
    if not f.terms:
        return True
    return term_reducible(f.lm, f.basis, f.lc, [g for g in others if g.terms])


def same_leading_module(a: Sequence[ModuleElement], b: Sequence[ModuleElement]) -> bool:
    """Mutual membership of leading terms: equal leading-term modules."""
    return all(lt_generated(f, b) for f in a) and all(lt_generated(g, a) for g in b)


def minimize(basis: GroebnerBasis, verify: bool = True) -> GroebnerBasis:
    """Drop elements whose leading term is generated by the others' leading terms.

    Elements are examined from last to first, so later (derived) elements are
    dropped in favour of earlier ones when leading terms coincide up to unit.
    """
    if not basis.certified:
        raise StructuralError("minimize expects a certified basis")
    keep = list(range(len(basis.elements)))
    for i in reversed(range(len(basis.elements))):
        others = [basis.elements[k] for k in keep if k != i]
        if others and lt_generated(basis.elements[i], others):
            keep.remove(i)
    elements = [basis.elements[k] for k in keep]
    rows = [basis.transcript[k] for k in keep] if basis.transcript is not None else None
    if verify:
        check = criterion_check(elements, stop_early=True)
        if not check:
            raise ConsistencyError("minimized basis failed Buchberger's criterion")
    return GroebnerBasis(elements, basis.module, certified=True, transcript=rows)


def groebner_basis(gens: Sequence[ModuleElement], minimal: bool = True, **kwargs) -> GroebnerBasis:
    gb = buchberger(gens, **kwargs)
    return minimize(gb) if minimal else gb


def certify(elements: Sequence[ModuleElement]) -> GroebnerBasis:
    """Wrap an explicit list as a basis after running the criterion on it."""
    elements = [g for g in elements if g.terms]
    if not elements:
        raise StructuralError("cannot certify an empty list")
    result = criterion_check(elements)
    return GroebnerBasis(list(elements), elements[0].module, certified=result.passed)
