"""Arithmetic in finite products of integer and residue rings.

A coefficient ring is ``R = Z/N_1 x ... x Z/N_p`` where ``N_i = 0`` stands for
the integers.  Elements are plain tuples of Python ints, one entry per
component, kept canonical (reduced into ``[0, N_i)`` for residue components).
All the ring-level operations live on :class:`RingSpec`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Optional, Sequence

from .exceptions import NotDivisible, StructuralError

RingElement = tuple

_COMPONENT_RE = re.compile(r"^\s*(?:ZZ|Z)\s*(?:/\s*(\d+))?\s*$")


def _lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // gcd(a, b)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1 != 0:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    return r0, s0, t0


def xgcd_list(values: Sequence[int]) -> tuple[int, list[int]]:
    """Extended gcd of a list: ``sum(c*v) == g``, ``g >= 0``."""
    g = 0
    coeffs: list[int] = []
    for v in values:
        g2, s, t = xgcd(g, v)
        coeffs = [s * c for c in coeffs] + [t]
        g = g2
    return g, coeffs


@dataclass(frozen=True)
class UnitDivisorForm:
    unit: RingElement
    divisor: RingElement


@dataclass(frozen=True)
class RingSpec:
    """The coefficient ring ``prod Z/N_i``; ``N_i == 0`` means ``Z``."""

    moduli: tuple

    def __post_init__(self):
        moduli = tuple(int(n) for n in self.moduli)
        if not moduli:
            raise StructuralError("a ring needs at least one component")
        for n in moduli:
            if n < 0 or n == 1:
                raise StructuralError(f"invalid modulus {n}: use 0 for ZZ or N >= 2")
        object.__setattr__(self, "moduli", moduli)

    @classmethod
    def parse(cls, text: str) -> "RingSpec":
        """Parse ``ZZ x ZZ/4 x ZZ/8`` style descriptions."""
        moduli = []
        for part in re.split(r"\s+x\s+|\s*×\s*", text.strip()):
            m = _COMPONENT_RE.match(part)
            if not m:
                raise StructuralError(f"cannot parse ring component {part!r}")
            moduli.append(int(m.group(1)) if m.group(1) else 0)
        return cls(tuple(moduli))

    def __str__(self) -> str:
        return " x ".join("ZZ" if n == 0 else f"ZZ/{n}" for n in self.moduli)

    def __len__(self) -> int:
        return len(self.moduli)

    @property
    def is_finite(self) -> bool:
        return all(n != 0 for n in self.moduli)

    # -- construction -----------------------------------------------------

    def normalize(self, raw: Sequence[int]) -> RingElement:
        if len(raw) != len(self.moduli):
            raise StructuralError(
                f"element has {len(raw)} components, ring {self} has {len(self.moduli)}"
            )
        return tuple(int(c) % n if n else int(c) for c, n in zip(raw, self.moduli))

    def from_int(self, c: int) -> RingElement:
        return self.normalize([c] * len(self.moduli))

    @property
    def zero(self) -> RingElement:
        return (0,) * len(self.moduli)

    @property
    def one(self) -> RingElement:
        return self.from_int(1)

    # -- ring operations --------------------------------------------------

    def add(self, a, b):
        return tuple((x + y) % n if n else x + y for x, y, n in zip(a, b, self.moduli))

    def sub(self, a, b):
        return tuple((x - y) % n if n else x - y for x, y, n in zip(a, b, self.moduli))

    def neg(self, a):
        return tuple(-x % n if n else -x for x, n in zip(a, self.moduli))

    def mul(self, a, b):
        return tuple((x * y) % n if n else x * y for x, y, n in zip(a, b, self.moduli))

    @staticmethod
    def is_zero(a) -> bool:
        return not any(a)

    def is_unit(self, a) -> bool:
        return all(
            (gcd(x, n) == 1) if n else (x in (1, -1)) for x, n in zip(a, self.moduli)
        )

    def is_nonzero_divisor(self, a) -> bool:
        """True when no component of ``a`` is a zero divisor."""
        return all((gcd(x, n) == 1) if n else x != 0 for x, n in zip(a, self.moduli))

    # -- divisibility -----------------------------------------------------

    def unit_divisor_form(self, a) -> UnitDivisorForm:
        """Write ``a = unit * divisor`` with a canonical, deterministic unit.

        In ``Z/N`` the divisor is ``gcd(a, N)`` and the unit is the smallest
        positive integer congruent to ``a/d`` modulo ``N/d`` that is coprime to
        ``N``.  In ``Z`` the divisor is ``|a|`` and the unit the sign.
        """
        units, divisors = [], []
        for x, n in zip(a, self.moduli):
            if n == 0:
                divisors.append(abs(x))
                units.append(-1 if x < 0 else 1)
                continue
            d = gcd(x, n)
            step = n // d
            u = (x // d) % step if step > 1 else 1
            if u == 0:
                u = step
            while gcd(u, n) != 1:
                u += step
            units.append(u)
            divisors.append(d)
        return UnitDivisorForm(tuple(units), tuple(divisors))

    def unit_inverse(self, u):
        return tuple(pow(x, -1, n) if n else x for x, n in zip(u, self.moduli))

    def gcd(self, a, b):
        da = self.unit_divisor_form(a).divisor
        db = self.unit_divisor_form(b).divisor
        return self.normalize([gcd(x, y) for x, y in zip(da, db)])

    def lcm(self, a, b):
        da = self.unit_divisor_form(a).divisor
        db = self.unit_divisor_form(b).divisor
        return self.normalize([_lcm(x, y) for x, y in zip(da, db)])

    def divide_exact(self, b, a):
        """Return ``q`` with ``q * a == b``; raise :class:`NotDivisible`."""
        fa = self.unit_divisor_form(a)
        fb = self.unit_divisor_form(b)
        out = []
        for ua, da, ub, db, n in zip(fa.unit, fa.divisor, fb.unit, fb.divisor, self.moduli):
            if da == 0:
                if db != 0:
                    raise NotDivisible(f"{b} is not divisible by {a}")
                out.append(0)
                continue
            if db % da:
                raise NotDivisible(f"{b} is not divisible by {a}")
            if n:
                out.append((db // da) * ub * pow(ua, -1, n) % n)
            else:
                out.append((db // da) * ub * ua)
        return tuple(out)

    def divides(self, a, b) -> bool:
        try:
            self.divide_exact(b, a)
        except NotDivisible:
            return False
        return True

    def annihilator(self, a):
        """Generator of ``{b : b*a == 0}``: ``N/gcd(a, N)`` or 0/1 over ``Z``."""
        out = []
        for x, n in zip(a, self.moduli):
            if n:
                out.append((n // gcd(x, n)) % n)
            else:
                out.append(0 if x else 1)
        return tuple(out)

    # -- linear membership ------------------------------------------------

    def _component_combination(self, k: int, values: Sequence[int]):
        """Per-component Bezout data: ``(g, multipliers)``.

        Zero entries get multiplier 1 (any value works for them); the
        nonzero entries, together with the modulus, go through extended gcd.
        """
        n = self.moduli[k]
        nonzero = [i for i, v in enumerate(values) if v]
        pool = [values[i] for i in nonzero] + ([n] if n else [])
        g, co = xgcd_list(pool)
        mult = [1] * len(values)
        for i, c in zip(nonzero, co):
            mult[i] = c
        return g, mult, nonzero

    def solve_membership(self, c, gens: Sequence) -> Optional[list]:
        """Coefficients ``b`` with ``sum(b_j * gens_j) == c``, or ``None``."""
        if not gens:
            raise StructuralError("membership needs at least one generator")
        columns = [[] for _ in gens]
        for k, n in enumerate(self.moduli):
            values = [g[k] for g in gens]
            g, mult, nonzero = self._component_combination(k, values)
            target = c[k]
            if g == 0:
                if target != 0:
                    return None
                scale = 0
            else:
                if target % g:
                    return None
                scale = target // g
            for j in range(len(gens)):
                v = mult[j] * scale if j in nonzero else mult[j]
                columns[j].append(v)
        out = [self.normalize(col) for col in columns]
        # zero-entry multipliers are free; make sure we still hit c exactly
        assert self._combine(out, gens) == self.normalize(c)
        return out

    def is_member(self, c, gens: Sequence) -> bool:
        """Is ``c`` in the ideal generated by ``gens``?  Componentwise gcd test."""
        if not gens:
            return self.is_zero(c)
        for k, n in enumerate(self.moduli):
            g = gcd(n, *(v[k] for v in gens))
            if (c[k] % g if g else c[k]):
                return False
        return True

    def bezout_combine(self, coeffs: Sequence):
        """Return ``(gcd, multipliers)`` with ``sum(m_j * coeffs_j) == gcd``."""
        if not coeffs:
            raise StructuralError("bezout_combine needs a non-empty list")
        g = reduce(self.gcd, coeffs)
        mults = self.solve_membership(g, coeffs)
        assert mults is not None
        return g, mults

    def _combine(self, mults, gens):
        acc = self.zero
        for m, g in zip(mults, gens):
            acc = self.add(acc, self.mul(m, g))
        return acc


def normalize(raw: Sequence[int], spec: RingSpec) -> RingElement:
    return spec.normalize(raw)
