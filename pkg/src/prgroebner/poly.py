"""Sparse elements of free modules ``F = S^r`` over ``S = R[x_1..x_n]``.

A :class:`ModuleElement` stores its terms as a tuple of
``(exps, basis, coeff)`` triples sorted strictly descending under the order of
its :class:`FreeModule`, so the leading term is always ``terms[0]``.  Scalar
polynomials of ``S`` are simply elements of the rank-1 module
``FreeModule.scalars()``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .coeff import RingSpec
from .exceptions import StructuralError
from .order import ModuleOrder, TermOrder, mono_div, mono_lcm, mono_mul  # noqa: F401


class FreeModule:
    """The ambient ``S^rank`` with a fixed ring, variable list and order."""

    def __init__(
        self,
        ring: RingSpec,
        variables: Sequence[str] | int,
        rank: int = 1,
        order: ModuleOrder | None = None,
    ):
        if isinstance(variables, int):
            variables = tuple(f"x{i + 1}" for i in range(variables))
        self.ring = ring
        self.variables = tuple(variables)
        self.nvars = len(self.variables)
        if rank < 1:
            raise StructuralError("module rank must be positive")
        self.rank = int(rank)
        self.order = order if order is not None else TermOrder("lex", "pot")
        self._scalars: Optional[FreeModule] = None

    def __eq__(self, other):
        return (
            isinstance(other, FreeModule)
            and self.ring == other.ring
            and self.variables == other.variables
            and self.rank == other.rank
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.ring, self.variables, self.rank, self.order))

    def __repr__(self):
        return (
            f"FreeModule({self.ring}, vars={list(self.variables)}, "
            f"rank={self.rank}, order={self.order!r})"
        )

    def scalars(self) -> "FreeModule":
        """Rank-1 module holding scalar polynomials under the induced order."""
        if self._scalars is None:
            self._scalars = FreeModule(
                self.ring, self.variables, 1, TermOrder(self.order.induced(), "pot")
            )
        return self._scalars

    def with_order(self, order: ModuleOrder, rank: int | None = None) -> "FreeModule":
        return FreeModule(self.ring, self.variables, rank or self.rank, order)

    # -- constructors -----------------------------------------------------

    def zero(self) -> "ModuleElement":
        return ModuleElement(self, ())

    def one_exps(self) -> tuple:
        return (0,) * self.nvars

    def gen(self, i: int) -> "ModuleElement":
        """The basis vector ``e_i`` (1-based)."""
        return self.term(self.ring.one, self.one_exps(), i)

    def term(self, coeff, exps: Sequence[int], basis: int = 1) -> "ModuleElement":
        return self.from_dict({(tuple(exps), basis): self.ring.normalize(coeff)})

    def constant(self, coeff, basis: int = 1) -> "ModuleElement":
        return self.term(coeff, self.one_exps(), basis)

    def from_dict(self, data: Mapping) -> "ModuleElement":
        """Build from ``{(exps, basis): coeff}``; drops zeros, sorts."""
        ring = self.ring
        items = []
        for (exps, basis), c in data.items():
            exps = tuple(exps)
            if len(exps) != self.nvars:
                raise StructuralError(
                    f"monomial {exps} has {len(exps)} exponents, expected {self.nvars}"
                )
            if not 1 <= basis <= self.rank:
                raise StructuralError(f"basis index {basis} outside 1..{self.rank}")
            if any(e < 0 for e in exps):
                raise StructuralError(f"negative exponent in {exps}")
            c = ring.normalize(c)
            if not ring.is_zero(c):
                items.append((exps, basis, c))
        return ModuleElement._sorted(self, items)

    def from_terms(self, terms: Iterable[tuple]) -> "ModuleElement":
        """Build from ``(coeff, exps, basis)`` triples, summing duplicates."""
        acc: dict = {}
        ring = self.ring
        for coeff, exps, basis in terms:
            k = (tuple(exps), basis)
            c = ring.normalize(coeff)
            acc[k] = ring.add(acc[k], c) if k in acc else c
        return self.from_dict(acc)

    def check_same(self, other: "FreeModule"):
        if self is not other and self != other:
            raise StructuralError(f"incompatible modules: {self!r} vs {other!r}")


@dataclass(frozen=True)
class LeadingData:
    coeff: tuple
    exps: tuple
    basis: int

    @property
    def LM(self) -> tuple:
        return (self.exps, self.basis)


class ModuleElement:
    """Immutable sparse module element; ``terms`` descend under the order."""

    __slots__ = ("module", "terms", "_map")

    def __init__(self, module: FreeModule, terms: tuple):
        self.module = module
        self.terms = terms
        self._map = None

    @staticmethod
    def _sorted(module: FreeModule, items: list) -> "ModuleElement":
        key = module.order.key
        items.sort(key=lambda t: key(t[0], t[1]), reverse=True)
        return ModuleElement(module, tuple(items))

    # -- inspection -------------------------------------------------------

    @property
    def ring(self) -> RingSpec:
        return self.module.ring

    def as_dict(self) -> dict:
        if self._map is None:
            self._map = {(e, b): c for e, b, c in self.terms}
        return self._map

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self.module == other.module and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def leading(self) -> Optional[LeadingData]:
        """Leading data, or ``None`` for the zero element (``LT(0) = 0``)."""
        if not self.terms:
            return None
        e, b, c = self.terms[0]
        return LeadingData(c, e, b)

    @property
    def lc(self):
        return self.terms[0][2] if self.terms else self.ring.zero

    @property
    def lm(self) -> tuple:
        return self.terms[0][0]

    @property
    def basis(self) -> int:
        return self.terms[0][1]

    @property
    def LM(self) -> tuple:
        return (self.terms[0][0], self.terms[0][1])

    def leading_term(self) -> "ModuleElement":
        if not self.terms:
            return self
        return ModuleElement(self.module, self.terms[:1])

    def coefficient(self, exps, basis=1):
        return self.as_dict().get((tuple(exps), basis), self.ring.zero)

    def max_degree(self) -> int:
        return max((sum(e) for e, _, _ in self.terms), default=0)

    # -- arithmetic -------------------------------------------------------

    def _combine(self, other: "ModuleElement", sign: int) -> "ModuleElement":
        self.module.check_same(other.module)
        if not other.terms:
            return self
        if not self.terms and sign > 0:
            return other
        ring = self.module.ring
        acc = dict(self.as_dict())
        op = ring.add if sign > 0 else ring.sub
        zero = ring.zero
        for e, b, c in other.terms:
            k = (e, b)
            v = op(acc.get(k, zero), c)
            if ring.is_zero(v):
                acc.pop(k, None)
            else:
                acc[k] = v
        return ModuleElement._sorted(self.module, [(e, b, c) for (e, b), c in acc.items()])

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        ring = self.ring
        return ModuleElement(self.module, tuple((e, b, ring.neg(c)) for e, b, c in self.terms))

    def scalar_mul(self, c) -> "ModuleElement":
        return self.term_mul(c, self.module.one_exps())

    def term_mul(self, c, exps: tuple) -> "ModuleElement":
        """Multiply by the scalar term ``c * x^exps``.

        Multiplying by a fixed monomial preserves the order, so the result only
        needs zero coefficients (from zero divisors) filtered out.
        """
        ring = self.ring
        c = ring.normalize(c)
        if ring.is_zero(c):
            return self.module.zero()
        out = []
        shift = any(exps)
        for e, b, a in self.terms:
            v = ring.mul(c, a)
            if not ring.is_zero(v):
                out.append((mono_mul(e, exps) if shift else e, b, v))
        return ModuleElement(self.module, tuple(out))

    def mul_poly(self, p: "ModuleElement") -> "ModuleElement":
        """Multiply by a scalar polynomial (an element of ``scalars()``)."""
        acc = self.module.zero()
        for e, _, c in p.terms:
            acc = acc + self.term_mul(c, e)
        return acc

    def __mul__(self, other):
        if isinstance(other, ModuleElement):
            if other.module.rank == 1 and self.module.rank == 1:
                return self.mul_poly(other)
            raise StructuralError("module elements multiply only by scalars")
        return self.scalar_mul(self.ring.from_int(other) if isinstance(other, int) else other)

    __rmul__ = __mul__

    def components(self) -> list:
        """Split into ``rank`` scalar polynomials (the column of a matrix)."""
        scal = self.module.scalars()
        parts: list[dict] = [dict() for _ in range(self.module.rank)]
        for e, b, c in self.terms:
            parts[b - 1][(e, 1)] = c
        return [scal.from_dict(p) for p in parts]

    def normalized(self) -> "ModuleElement":
        """Re-run normalization; the identity on stored elements."""
        return self.module.from_dict(self.as_dict())

    # -- display ----------------------------------------------------------

    def __repr__(self):
        from .render import format_element

        return f"<{format_element(self)}>"

    def __str__(self):
        from .render import format_element

        return format_element(self)


def substitute(element: ModuleElement, images: Sequence[ModuleElement]) -> ModuleElement:
    """Apply ``g_l -> images[l-1]`` to an element of ``S^m``."""
    if not images:
        raise StructuralError("substitution needs target images")
    target = images[0].module
    acc = target.zero()
    for e, b, c in element.terms:
        acc = acc + images[b - 1].term_mul(c, e)
    return acc


def from_components(module: FreeModule, parts: Sequence[ModuleElement]) -> ModuleElement:
    """Inverse of :meth:`ModuleElement.components`."""
    data = {}
    for i, p in enumerate(parts, start=1):
        for e, _, c in p.terms:
            data[(e, i)] = c
    return module.from_dict(data)

