"""Free resolutions by iterated Schreyer syzygies."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .exceptions import StructuralError
from .groebner import GroebnerBasis, buchberger, minimize as minimize_basis
from .poly import FreeModule, ModuleElement, substitute
from .syzygy import as_basis, collapse_same_lm, syzygy_basis

logger = logging.getLogger(__name__)

FINITE = "finite"
TRUNCATED = "truncated"
PERIODIC = "periodic"


@dataclass
class Resolution:
    """``... -> F_2 -> F_1 -> F_0 -> U -> 0`` for a submodule ``U`` of ``F``.

    ``differentials[0]`` lists the images of the basis of ``F_0`` in ``F``
    (a Groebner basis of ``U``); ``differentials[k]`` lists the images of the
    basis of ``F_k`` in ``F_{k-1}``.  Each column is a module element, so the
    matrix of ``d_k`` has ``ranks[k-1]`` rows and ``ranks[k]`` columns.
    """

    ranks: list
    differentials: list
    modules: list
    status: str
    period_start: Optional[int] = None
    period_length: Optional[int] = None
    bases: list = field(default_factory=list)

    @property
    def length(self) -> int:
        """Index of the last free module ``F_k`` computed."""
        return len(self.ranks) - 1

    @property
    def quotient_length(self) -> int:
        """Length of the induced resolution of ``M = F/U`` (``F`` prepended)."""
        return len(self.ranks)

    @property
    def nonzero_divisor_leads(self) -> bool:
        """Every leading coefficient of the Groebner basis is a nonzero divisor."""
        gb = self.differentials[0]
        return all(g.ring.is_nonzero_divisor(g.lc) for g in gb)

    @property
    def length_bound_ok(self) -> Optional[bool]:
        """``quotient_length <= n + 1`` for finite resolutions with
        nonzero-divisor leading coefficients; ``None`` when the bound does not
        apply."""
        if self.status != FINITE or not self.nonzero_divisor_leads:
            return None
        return self.quotient_length <= self.modules[0].nvars + 1

    def composition_defects(self) -> list:
        """Indices ``k`` where ``d_{k-1} o d_k`` is not exactly zero."""
        bad = []
        for k in range(1, len(self.differentials)):
            images = self.differentials[k - 1]
            for col in self.differentials[k]:
                if substitute(col, images).terms:
                    bad.append(k)
                    break
        return bad

    def matrix(self, k: int) -> list:
        """Rows of scalar polynomials for ``d_k``."""
        cols = [c.components() for c in self.differentials[k]]
        rows = len(cols[0]) if cols else 0
        return [[cols[j][i] for j in range(len(cols))] for i in range(rows)]


def leading_signature(elements: Sequence[ModuleElement]) -> tuple:
    """Multiset of (leading exponent, leading coefficient) pairs."""
    return tuple(sorted((g.lm, g.lc) for g in elements))


def arrange(elements: Sequence[ModuleElement], var: int) -> list:
    """Stable sort by decreasing exponent of variable ``var`` in the leading monomial.

    With this arrangement the syzygies' leading terms avoid ``var`` (and keep
    avoiding every variable already eliminated), so after ``n`` steps only
    constant leading terms remain.
    """
    if var >= len(elements[0].module.variables):
        return list(elements)
    return sorted(elements, key=lambda g: -g.lm[var])


def resolve(
    gens: Sequence[ModuleElement],
    max_length: int,
    collapse: bool = False,
    minimize: bool = True,
    schreyer_arrangement: bool = True,
    **buchberger_kwargs,
) -> Resolution:
    """Build a free resolution of the submodule generated by ``gens``.

    Stops when a syzygy module vanishes (finite), when ``F_max_length`` has
    been produced and more syzygies remain (truncated), or when two
    consecutive steps share ranks and leading data while some leading
    coefficient is a zero divisor (periodic).

    ``minimize`` drops redundant elements at every step.  With
    ``schreyer_arrangement`` the basis at step ``k`` is reordered by
    :func:`arrange` on variable ``k`` before its syzygies are taken; combined
    with ``collapse`` this bounds the length by ``n + 1`` when every leading
    coefficient is a nonzero divisor.
    """
    if max_length < 1:
        raise StructuralError("max_length must be at least 1")
    gb = buchberger(gens, **buchberger_kwargs)
    if minimize:
        gb = minimize_basis(gb)
    if schreyer_arrangement:
        gb = GroebnerBasis(arrange(gb.elements, 0), gb.module, certified=True)
    ring = gb.module.ring
    ranks = [len(gb)]
    differentials = [list(gb.elements)]
    modules: list[FreeModule] = [gb.module]
    bases: list[GroebnerBasis] = [gb]
    current = gb
    status = FINITE
    period = (None, None)
    while True:
        relations, L = syzygy_basis(current)
        if collapse:
            relations = collapse_same_lm(relations)
        if not relations:
            status = FINITE
            break
        if len(ranks) > max_length:
            status = TRUNCATED
            break
        step = as_basis(relations, L)
        if minimize:
            step = minimize_basis(step)
        if schreyer_arrangement:
            step = GroebnerBasis(arrange(step.elements, len(ranks)), L, certified=True)
        ranks.append(len(step))
        differentials.append(list(step.elements))
        modules.append(L)
        bases.append(step)
        logger.debug("F_%d has rank %d", len(ranks) - 1, len(step))
        prev = current.elements
        if (
            len(prev) == len(step)
            and any(not ring.is_nonzero_divisor(g.lc) for g in step.elements)
            and leading_signature(prev) == leading_signature(step.elements)
        ):
            status = PERIODIC
            period = (len(ranks) - 2, 1)
            break
        current = step
    res = Resolution(ranks, differentials, modules, status, period[0], period[1], bases)
    if res.length_bound_ok is False:
        logger.warning("resolution of length %d exceeds n + 1 = %d",
                       res.quotient_length, gb.module.nvars + 1)
    return res
