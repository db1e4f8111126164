import random

import pytest

from prgroebner import OracleRefusal, StructuralError, buchberger, divide, member_bruteforce, random_syzygy
from prgroebner.oracle import _solve_component, monomials_up_to
from prgroebner.parse import parse_element

from helpers import EX1, EX3, elements, problem, random_element, random_generators, ring_module


def test_example1_member():
    p = problem(EX1)
    (target,) = elements(p.module, "(0,3,0)")
    verdict = member_bruteforce(target, p.generators, 2)
    assert verdict.member
    assert len(verdict.witness) == 3


def test_self_membership():
    p = problem(EX1)
    f = p.generators[0]
    verdict = member_bruteforce(f, [f], 0)
    assert verdict.member
    assert verdict.witness[0].coefficient((0, 0)) == (1, 1, 1)


def test_parity_obstruction():
    M = problem(EX1).module
    a, b = elements(M, "(0,1,0)", "(0,2,0)")
    assert not member_bruteforce(a, [b], 3)


def test_refusal_above_ceiling():
    M = ring_module("ZZ/6", "xyz")
    with pytest.raises(OracleRefusal):
        member_bruteforce(M.gen(1), [M.gen(1)] * 3, 8, max_unknowns=100)
    with pytest.raises(StructuralError):
        member_bruteforce(M.gen(1), [M.gen(1)], -1)


def test_monomial_enumeration():
    assert len(monomials_up_to(2, 3)) == 10
    assert monomials_up_to(0, 3) == [()]


def test_solver_integer_and_modular():
    # 4a + 6b = 2 over Z, kernel spanned by (3, -2)
    x, kernel = _solve_component([[4], [6]], [2], 0)
    assert 4 * x[0] + 6 * x[1] == 2
    assert kernel and all(4 * k[0] + 6 * k[1] == 0 for k in kernel)
    x, _ = _solve_component([[4], [6]], [3], 0)
    assert x is None
    # 2a = 1 has no solution mod 4, 2a = 2 does
    assert _solve_component([[2]], [1], 4)[0] is None
    x, kernel = _solve_component([[2]], [2], 4)
    assert (2 * x[0]) % 4 == 2
    assert kernel and all((2 * k[0]) % 4 == 0 for k in kernel)


def test_random_syzygy_example3_reduces():
    p = problem(EX3)
    from prgroebner import certify, syzygy_basis

    basis = certify(elements(p.module, "(0,3)*x*y^2 + (1,1)*y", "(0,2)", "(1,0)"))
    relations, L = syzygy_basis(basis)
    rel = random_syzygy(basis.elements, 2, seed=5, module=L)
    assert divide(rel, [r.element for r in relations]).remainder.is_zero()


def test_trivial_kernel():
    M = ring_module("ZZ", "x")
    (f,) = elements(M, "x + 1")
    assert random_syzygy([f], 0, seed=1).is_zero()


def test_random_syzygies_substitute_to_zero():
    rng = random.Random(2)
    from prgroebner import substitute

    M = ring_module("ZZ/4 x ZZ/9", "xy")
    for seed in range(10):
        gens = random_generators(rng, M, count=2, max_deg=2)
        rel = random_syzygy(gens, 1, seed=seed)
        assert substitute(rel, gens).is_zero()


def test_agrees_with_engine_on_members():
    rng = random.Random(9)
    M = ring_module("ZZ/6", "x")
    for _ in range(15):
        gens = random_generators(rng, M, count=2, max_deg=2)
        mults = [random_element(rng, M.scalars(), max_deg=1) for _ in gens]
        f = M.zero()
        for m, g in zip(mults, gens):
            f = f + g.mul_poly(m)
        assert member_bruteforce(f, gens, 1).member
        assert buchberger(gens).contains(f)
