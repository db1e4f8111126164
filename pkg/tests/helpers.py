"""Shared fixtures data and random instance generators for the test suite."""

from __future__ import annotations

import random
from pathlib import Path

from prgroebner import FreeModule, RingSpec, TermOrder
from prgroebner.parse import parse, parse_element

GOLDEN = Path(__file__).parent / "golden"

EX1 = """\
ring ZZ/2 x ZZ/4 x ZZ/8
vars X Y
order lex
gen (0,2,2)*X^2 + (1,1,0)
gen (1,2,4)*Y + (0,3,0)
gen (1,0,0)
"""

EX2 = """\
ring ZZ/2 x ZZ/4 x ZZ/8
vars X Y
order lex
rank 2
module_order pot
gen (0,2,1)*X*Y^2*e2 + (0,1,0)*e2
gen (1,2,2)*X^2*Y*e1 + (0,1,4)*X*e2
gen (1,0,1)*e2
"""

EX3 = """\
ring ZZ x ZZ
vars x y
order lex
gen (2,0)*x^2*y + (1,2)
gen (0,3)*x*y^2 + (1,1)*y
gen (3,4)*x
"""


def problem(text):
    return parse(text)


def elements(module, *texts):
    return [parse_element(t, module) for t in texts]


def random_coeff(rng: random.Random, ring: RingSpec, bound: int = 5):
    raw = [rng.randint(0, n - 1) if n else rng.randint(-bound, bound) for n in ring.moduli]
    return ring.normalize(raw)


def random_element(rng, module: FreeModule, max_terms=3, max_deg=3, bound=5):
    n = module.nvars
    data = {}
    for _ in range(rng.randint(1, max_terms)):
        deg = rng.randint(0, max_deg)
        exps = [0] * n
        for _ in range(deg):
            if n:
                exps[rng.randrange(n)] += 1
        basis = rng.randint(1, module.rank)
        c = random_coeff(rng, module.ring, bound)
        data[(tuple(exps), basis)] = c
    return module.from_dict(data)


def random_generators(rng, module, count=None, **kw):
    count = count or rng.randint(1, 3)
    gens = []
    while len(gens) < count:
        g = random_element(rng, module, **kw)
        if g.terms:
            gens.append(g)
    return gens


def ring_module(ring_text: str, variables, order="lex", rank=1, module_order="pot"):
    return FreeModule(RingSpec.parse(ring_text), tuple(variables), rank,
                      TermOrder(order, module_order))


def unit_equivalent(ring, a, b) -> bool:
    """``a`` and ``b`` generate the same principal ideal of ``ring``."""
    return ring.divides(a, b) and ring.divides(b, a)


def same_leading_terms_up_to_unit(ring, got, expected) -> bool:
    """Match (coeff, exps, basis) triples as multisets, coefficients up to unit."""
    pool = list(expected)
    for c, e, b in got:
        for i, (c2, e2, b2) in enumerate(pool):
            if e == e2 and b == b2 and unit_equivalent(ring, c, c2):
                pool.pop(i)
                break
        else:
            return False
    return not pool
