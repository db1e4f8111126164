"""Deterministic division of module elements by an ordered tuple.

At every step the leading term ``c*u*e_i`` of the running element ``g`` is
tested against the leading terms of the divisors whose leading monomial
divides ``u*e_i``.  If ``c`` lies in the ideal of their leading coefficients,
the lexicographically smallest 0/1 indicator tuple selecting a sufficient
subset is chosen and the matching multiples are subtracted; otherwise the
leading term moves to the remainder.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .exceptions import ConsistencyError, StructuralError
from .order import mono_div, mono_divides, mono_mul
from .poly import ModuleElement


@dataclass
class DivisionResult:
    quotients: list
    remainder: ModuleElement
    trace: list = field(default_factory=list)

    def reconstruct(self, divisors: Sequence[ModuleElement]) -> ModuleElement:
        acc = self.remainder
        for q, f in zip(self.quotients, divisors):
            acc = acc + f.mul_poly(q)
        return acc


def _candidates(lt_exps, lt_basis, divisors) -> list:
    return [
        j
        for j, f in enumerate(divisors)
        if f.terms and f.basis == lt_basis and mono_divides(f.lm, lt_exps)
    ]


LEX = "lex"
COLEX = "colex"


def smallest_indicator(ring, c, lcs: Sequence, dividing: Sequence[int], m: int, rule: str = LEX):
    """Least 0/1 tuple whose selected ``lcs`` generate ``c``.

    ``rule="lex"`` compares tuples from the first position, so later divisors
    are preferred; ``rule="colex"`` compares from the last position and
    prefers earlier divisors.  Returns ``None`` when even the full set of
    ``dividing`` indices fails.  Feasibility only grows as indices are
    switched on, so deciding positions greedily in comparison order gives the
    least tuple.
    """
    if rule not in (LEX, COLEX):
        raise StructuralError(f"unknown indicator rule {rule!r}")
    if not ring.is_member(c, [lcs[k] for k in dividing]):
        return None
    allowed = set(dividing)
    chosen = [0] * m
    positions = range(m) if rule == LEX else reversed(range(m))
    decided = set()
    for j in positions:
        decided.add(j)
        if j not in allowed:
            continue
        rest = [k for k in dividing if k not in decided or chosen[k]]
        if rest and ring.is_member(c, [lcs[k] for k in rest]):
            continue
        chosen[j] = 1
    return tuple(chosen)


def term_reducible(exps, basis, coeff, divisors: Sequence[ModuleElement]) -> bool:
    """Is ``coeff*x^exps*e_basis`` in the module generated by the leading terms?"""
    if not divisors:
        return False
    ring = divisors[0].ring
    dividing = _candidates(exps, basis, divisors)
    return bool(dividing) and ring.is_member(coeff, [divisors[j].lc for j in dividing])


def divide(
    f: ModuleElement,
    divisors: Sequence[ModuleElement],
    trace: bool = True,
    rule: str = LEX,
) -> DivisionResult:
    """Divide ``f`` by the ordered tuple ``divisors``.

    ``rule`` picks the indicator tuple at each step (see
    :func:`smallest_indicator`); the default is the lexicographic one.

    Guarantees ``f == sum(q_j * f_j) + r``, ``LM(f) >= lm(q_j) * LM(f_j)`` and
    that no term of ``r`` lies in the module of the divisors' leading terms.
    """
    if not divisors:
        raise StructuralError("division needs at least one divisor")
    module = f.module
    for d in divisors:
        module.check_same(d.module)
    ring = module.ring
    scal = module.scalars()
    m = len(divisors)
    lcs = [d.lc for d in divisors]
    quotients: list[dict] = [dict() for _ in range(m)]
    remainder: list = []
    steps: list = []
    g = f
    step = 0
    while g.terms:
        exps, basis, c = g.terms[0]
        dividing = _candidates(exps, basis, divisors)
        chosen = smallest_indicator(ring, c, lcs, dividing, m, rule) if dividing else None
        if chosen is None:
            remainder.append(g.terms[0])
            g = ModuleElement(module, g.terms[1:])
            continue
        selected = [j for j in range(m) if chosen[j]]
        mults = ring.solve_membership(c, [lcs[j] for j in selected])
        for j, r in zip(selected, mults):
            if ring.is_zero(r):
                continue
            h = mono_div(exps, divisors[j].lm)
            key = (h, 1)
            q = quotients[j]
            v = ring.add(q[key], r) if key in q else r
            if ring.is_zero(v):
                q.pop(key, None)
            else:
                q[key] = v
            g = g - divisors[j].term_mul(r, h)
        if g.terms and g.terms[0][:2] == (exps, basis):
            raise ConsistencyError("division step failed to cancel the leading term")
        if trace:
            steps.append((step, chosen))
        step += 1
    rem = ModuleElement(module, tuple(remainder))
    return DivisionResult([scal.from_dict(q) for q in quotients], rem, steps)


def remainder(f: ModuleElement, divisors: Sequence[ModuleElement], rule: str = LEX) -> ModuleElement:
    return divide(f, divisors, trace=False, rule=rule).remainder


def reduces_to_zero(f: ModuleElement, divisors: Sequence[ModuleElement], rule: str = LEX) -> bool:
    if f.is_zero():
        return True
    if not divisors:
        return False
    return remainder(f, divisors, rule).is_zero()


def check_division(f, divisors, result: DivisionResult) -> list:
    """Return the list of violated contract clauses (empty when sound)."""
    problems = []
    if result.reconstruct(divisors) != f:
        problems.append("reconstruction")
    if f.terms:
        top = f.module.order.key(*f.LM)
        for q, d in zip(result.quotients, divisors):
            if q.terms and d.terms:
                k = f.module.order.key(mono_mul(q.lm, d.lm), d.basis)
                if k > top:
                    problems.append("degree bound")
                    break
    elif any(q.terms for q in result.quotients):
        problems.append("degree bound")
    for e, b, c in result.remainder.terms:
        if term_reducible(e, b, c, divisors):
            problems.append("remainder term reducible")
            break
    return problems
