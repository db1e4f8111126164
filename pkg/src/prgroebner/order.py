"""Monomial orders on ``S = R[x_1..x_n]`` and on free modules ``S^r``.

Every order exposes ``key(exps, basis)`` returning a tuple; Python tuple
comparison of keys is the order (bigger key = bigger monomial).  Variables are
ranked by position, so ``x_1 > x_2 > ...`` in the declared sequence.
"""

from __future__ import annotations

from typing import Sequence

from .exceptions import NotDivisible, StructuralError

BASE_ORDERS = ("lex", "grlex", "grevlex")
MODULE_RULES = ("pot", "top")


class MonomialOrder:
    """A term order on monomials of ``S`` given by exponent tuples."""

    def __init__(self, name: str = "lex"):
        if name not in BASE_ORDERS:
            raise StructuralError(f"unknown monomial order {name!r}")
        self.name = name

    def key(self, exps: tuple) -> tuple:
        if self.name == "lex":
            return exps
        if self.name == "grlex":
            return (sum(exps), exps)
        return (sum(exps), tuple(-e for e in reversed(exps)))

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.name == self.name

    def __hash__(self):
        return hash(("MonomialOrder", self.name))

    def __repr__(self):
        return f"MonomialOrder({self.name!r})"


class ModuleOrder:
    """Base class for orders on module monomials ``x^a e_i`` (``i`` 1-based)."""

    base: MonomialOrder

    def __init__(self):
        self._cache: dict = {}

    def key(self, exps: tuple, basis: int) -> tuple:
        k = (exps, basis)
        try:
            return self._cache[k]
        except KeyError:
            v = self._cache[k] = self._key(exps, basis)
            return v

    def _key(self, exps, basis):
        raise NotImplementedError

    def compare(self, a, b) -> int:
        """Three-way comparison of ``(exps, basis)`` pairs."""
        ka, kb = self.key(*a), self.key(*b)
        return (ka > kb) - (ka < kb)

    def induced(self) -> MonomialOrder:
        """The order this module order induces on ``S``."""
        return self.base


class TermOrder(ModuleOrder):
    """Base order on ``S`` extended position-over-term or term-over-position.

    Both rules rank ``e_1 > e_2 > ... > e_r``.
    """

    def __init__(self, base: MonomialOrder | str = "lex", rule: str = "pot"):
        super().__init__()
        self.base = base if isinstance(base, MonomialOrder) else MonomialOrder(base)
        if rule not in MODULE_RULES:
            raise StructuralError(f"unknown module order rule {rule!r}")
        self.rule = rule

    def _key(self, exps, basis):
        if self.rule == "pot":
            return (-basis, self.base.key(exps))
        return (self.base.key(exps), -basis)

    def __eq__(self, other):
        return (
            isinstance(other, TermOrder)
            and other.base == self.base
            and other.rule == self.rule
        )

    def __hash__(self):
        return hash(("TermOrder", self.base, self.rule))

    def __repr__(self):
        return f"TermOrder({self.base.name!r}, {self.rule!r})"


class SchreyerOrder(ModuleOrder):
    """Order on ``L = S^m`` induced by ``f_1..f_m`` and the order of their module.

    ``u g_i < v g_j`` iff ``u LM(f_i) < v LM(f_j)``, ties going to the smaller
    generator index (``u g_i < v g_j`` when the images agree and ``j < i``).
    """

    def __init__(self, parent: ModuleOrder, leading: Sequence[tuple], generators=None):
        super().__init__()
        self.parent = parent
        self.base = parent.base
        self.leading = tuple((tuple(e), int(b)) for e, b in leading)
        self.generators = tuple(generators) if generators is not None else None

    @classmethod
    def from_generators(cls, generators) -> "SchreyerOrder":
        if not generators:
            raise StructuralError("a Schreyer order needs at least one generator")
        parent = generators[0].module.order
        lead = []
        for g in generators:
            if g.is_zero():
                raise StructuralError("Schreyer order generators must be nonzero")
            lead.append((g.lm, g.basis))
        return cls(parent, lead, generators)

    def _key(self, exps, basis):
        lm, lb = self.leading[basis - 1]
        image = tuple(a + b for a, b in zip(exps, lm))
        return (self.parent.key(image, lb), -basis)

    def __eq__(self, other):
        return (
            isinstance(other, SchreyerOrder)
            and other.parent == self.parent
            and other.leading == self.leading
        )

    def __hash__(self):
        return hash(("SchreyerOrder", self.parent, self.leading))

    def __repr__(self):
        return f"SchreyerOrder(rank={len(self.leading)}, parent={self.parent!r})"


def compare(a, b, order: ModuleOrder) -> int:
    return order.compare(a, b)


def mono_lcm(u: tuple, v: tuple) -> tuple:
    return tuple(max(a, b) for a, b in zip(u, v))


def mono_divides(v: tuple, u: tuple) -> bool:
    """True when ``v`` divides ``u``."""
    return all(b <= a for a, b in zip(u, v))


def mono_div(u: tuple, v: tuple) -> tuple:
    """``u / v``; raises :class:`NotDivisible` when ``v`` does not divide ``u``."""
    out = tuple(a - b for a, b in zip(u, v))
    if any(e < 0 for e in out):
        raise NotDivisible(f"monomial {v} does not divide {u}")
    return out


def mono_mul(u: tuple, v: tuple) -> tuple:
    return tuple(a + b for a, b in zip(u, v))
