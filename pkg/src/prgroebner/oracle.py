"""Brute-force membership and syzygy sampling by linear algebra.

The unknowns are the coefficients of every multiplier monomial of total
degree at most ``bound``; membership becomes a linear system over each ring
component, solved by column echelon reduction over ``Z`` or ``Z/N``.  Nothing
here touches the division or completion code, which is what makes it a useful
cross-check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .coeff import xgcd
from .exceptions import OracleRefusal, StructuralError
from .order import TermOrder
from .poly import FreeModule, ModuleElement, substitute

MAX_UNKNOWNS = 4000


def monomials_up_to(nvars: int, degree: int) -> list:
    """All exponent tuples of total degree <= degree, in a fixed order."""
    if nvars == 0:
        return [()]
    out = [e for e in product(range(degree + 1), repeat=nvars) if sum(e) <= degree]
    out.sort(key=lambda e: (sum(e), e))
    return out


def _solve_component(columns: list, rhs: list, n: int):
    """Column echelon solve of ``A x = b`` over ``Z`` (n == 0) or ``Z/n``.

    ``columns`` are the columns of ``A`` as integer lists.  Returns
    ``(solution or None, kernel_vectors)``.
    """
    rows = len(rhs)
    ncols = len(columns)

    def red(v):
        return [x % n for x in v] if n else list(v)

    pool = []
    for j, col in enumerate(columns):
        t = [0] * ncols
        t[j] = 1
        pool.append((red(col), t))
    pivots = []
    for i in range(rows):
        active = [c for c in pool if c[0][i]]
        rest = [c for c in pool if not c[0][i]]
        if not active:
            continue
        piv = active[0]
        for other in active[1:]:
            a, b = piv[0][i], other[0][i]
            g, s, t = xgcd(a, b)
            if n and g == 0:
                continue
            pa, pb = b // g, a // g
            new_piv = (
                red([s * x + t * y for x, y in zip(piv[0], other[0])]),
                [s * x + t * y for x, y in zip(piv[1], other[1])],
            )
            zeroed = (
                red([pa * x - pb * y for x, y in zip(piv[0], other[0])]),
                [pa * x - pb * y for x, y in zip(piv[1], other[1])],
            )
            if n:
                new_piv = (new_piv[0], [x % n for x in new_piv[1]])
                zeroed = (zeroed[0], [x % n for x in zeroed[1]])
            piv = new_piv
            rest.append(zeroed)
        if n:
            g = _gcd(piv[0][i], n)
            k = n // g
            ann = (red([k * x for x in piv[0]]), [(k * x) % n for x in piv[1]])
            rest.append(ann)
        if piv[0][i]:
            pivots.append((i, piv))
        else:
            rest.append(piv)
        pool = rest
    kernel = [t for v, t in pool if not any(v)]

    residual = red(rhs)
    x = [0] * ncols
    pivot_at = {i: p for i, p in pivots}
    for i in range(rows):
        if not residual[i]:
            continue
        if i not in pivot_at:
            return None, kernel
        v, t = pivot_at[i]
        p, r = v[i], residual[i]
        if n:
            g = _gcd(p, n)
            if r % g:
                return None, kernel
            m = n // g
            coef = (r // g) * pow((p // g) % m, -1, m) % m if m > 1 else 0
        else:
            if r % p:
                return None, kernel
            coef = r // p
        residual = red([a - coef * b for a, b in zip(residual, v)])
        x = [a + coef * b for a, b in zip(x, t)]
        if n:
            x = [a % n for a in x]
    if any(residual):
        return None, kernel
    return x, kernel


def _gcd(a, b):
    return xgcd(a, b)[0]


@dataclass
class OracleVerdict:
    member: bool
    witness: Optional[list] = None  # scalar polynomials, one per generator
    bound: int = 0

    def __bool__(self):
        return self.member


class _System:
    """The linear map ``(multiplier coefficients) -> sum p_j f_j``."""

    def __init__(self, gens: Sequence[ModuleElement], bound: int, max_unknowns: int):
        if not gens:
            raise StructuralError("oracle needs generators")
        self.module = gens[0].module
        self.ring = self.module.ring
        self.gens = list(gens)
        self.monos = monomials_up_to(self.module.nvars, bound)
        self.unknowns = [(j, u) for j in range(len(gens)) for u in self.monos]
        if len(self.unknowns) > max_unknowns:
            raise OracleRefusal(
                f"{len(self.unknowns)} unknowns exceed the oracle ceiling {max_unknowns}"
            )
        self.row_index: dict = {}
        self.entries = []  # per unknown: {row: coeff tuple}
        for j, u in self.unknowns:
            col = {}
            for e, b, c in gens[j].terms:
                key = (tuple(a + d for a, d in zip(e, u)), b)
                col[self._row(key)] = c
            self.entries.append(col)

    def _row(self, key):
        if key not in self.row_index:
            self.row_index[key] = len(self.row_index)
        return self.row_index[key]

    def component_columns(self, k: int, nrows: int):
        cols = []
        for col in self.entries:
            v = [0] * nrows
            for r, c in col.items():
                v[r] = c[k]
            cols.append(v)
        return cols

    def witness(self, solution_by_component: list) -> list:
        scal = self.module.scalars()
        polys = [dict() for _ in self.gens]
        for idx, (j, u) in enumerate(self.unknowns):
            coeff = self.ring.normalize([sol[idx] for sol in solution_by_component])
            if any(coeff):
                polys[j][(u, 1)] = coeff
        return [scal.from_dict(p) for p in polys]


def member_bruteforce(
    f: ModuleElement,
    gens: Sequence[ModuleElement],
    bound: int,
    max_unknowns: int = MAX_UNKNOWNS,
) -> OracleVerdict:
    """Search for ``f = sum p_j gens_j`` with ``deg p_j <= bound``."""
    if bound < 0:
        raise StructuralError("degree bound must be non-negative")
    system = _System(gens, bound, max_unknowns)
    rhs_keys = [(e, b) for e, b, _ in f.terms]
    for key in rhs_keys:
        system._row(key)
    nrows = len(system.row_index)
    solutions = []
    for k, n in enumerate(system.ring.moduli):
        rhs = [0] * nrows
        for e, b, c in f.terms:
            rhs[system.row_index[(e, b)]] = c[k]
        x, _ = _solve_component(system.component_columns(k, nrows), rhs, n)
        if x is None:
            return OracleVerdict(False, None, bound)
        solutions.append(x)
    witness = system.witness(solutions)
    acc = f.module.zero()
    for p, g in zip(witness, gens):
        acc = acc + g.mul_poly(p)
    if acc != f:
        raise AssertionError("oracle witness failed to recombine")
    return OracleVerdict(True, witness, bound)


def syzygy_space(gens: Sequence[ModuleElement]) -> FreeModule:
    """Default module ``L = S^m`` for oracle syzygies (POT on the base order)."""
    m = gens[0].module
    return FreeModule(m.ring, m.variables, len(gens), TermOrder(m.order.induced(), "pot"))


def random_syzygy(
    gens: Sequence[ModuleElement],
    bound: int,
    seed: int,
    module: Optional[FreeModule] = None,
    max_unknowns: int = MAX_UNKNOWNS,
    spread: int = 3,
) -> ModuleElement:
    """A random relation ``sum p_j g_j = 0`` with ``deg p_j <= bound``."""
    system = _System(gens, bound, max_unknowns)
    L = module or syzygy_space(gens)
    rng = random.Random(seed)
    nrows = max(len(system.row_index), 1)
    per_component = []
    for k, n in enumerate(system.ring.moduli):
        _, kernel = _solve_component(system.component_columns(k, nrows), [0] * nrows, n)
        vec = [0] * len(system.unknowns)
        for t in kernel:
            c = rng.randint(-spread, spread)
            vec = [a + c * b for a, b in zip(vec, t)]
        per_component.append(vec)
    data = {}
    for idx, (j, u) in enumerate(system.unknowns):
        coeff = system.ring.normalize([vec[idx] for vec in per_component])
        if any(coeff):
            data[(u, j + 1)] = coeff
    rel = L.from_dict(data)
    if substitute(rel, gens).terms:
        raise AssertionError("oracle syzygy does not vanish")
    return rel
