import pytest
from hypothesis import given, settings, strategies as st

from prgroebner import FreeModule, MonomialOrder, NotDivisible, SchreyerOrder, StructuralError, TermOrder
from prgroebner.order import compare, mono_div, mono_lcm
from prgroebner.parse import parse_element

from helpers import EX1, elements, problem, ring_module


def test_scalar_mul_clears_terms():
    M = problem(EX1).module
    (f2,) = elements(M, "(1,2,4)*Y + (0,3,0)")
    assert str(f2.scalar_mul((0, 2, 2))) == "(0,2,0)"


def test_add_negation_is_zero():
    M = problem(EX1).module
    (f,) = elements(M, "(0,2,2)*X^2 + (1,1,0)")
    assert (f + f.scalar_mul(M.ring.from_int(-1))).is_zero()
    assert (f - f).is_zero()


def test_term_mul():
    M = ring_module("ZZ x ZZ", "xy")
    assert str(M.constant((1, 0)).term_mul((1, 1), (0, 1))) == "(1,0)*y"


def test_monomial_helpers():
    assert mono_lcm((2, 0), (0, 1)) == (2, 1)
    assert mono_div((2, 1), (2, 1)) == (0, 0)
    with pytest.raises(NotDivisible):
        mono_div((1, 0), (0, 1))


def test_terms_canonical():
    M = ring_module("ZZ/4", "xy")
    f = M.from_terms([((1,), (1, 0), 1), ((3,), (1, 0), 1), ((2,), (0, 1), 1)])
    # 1 + 3 = 0 mod 4 cancels
    assert str(f) == "2*y"
    with pytest.raises(StructuralError):
        M.term((1,), (1,), 1)


def test_module_mismatch():
    a = ring_module("ZZ", "x").gen(1)
    b = ring_module("ZZ/3", "x").gen(1)
    with pytest.raises(StructuralError):
        a + b


def test_lex_compare():
    order = TermOrder("lex", "pot")
    assert compare(((2, 0), 1), ((1, 1), 1), order) == 1


def test_pot_priority():
    order = TermOrder("lex", "pot")
    assert compare(((0, 0), 1), ((5, 5), 2), order) == 1
    top = TermOrder("lex", "top")
    assert compare(((0, 0), 1), ((5, 5), 2), top) == -1
    assert compare(((1, 0), 2), ((1, 0), 1), top) == -1


def test_grlex_grevlex():
    grlex = MonomialOrder("grlex")
    grevlex = MonomialOrder("grevlex")
    # x*z^2 vs y^3 (degree ties)
    assert grlex.key((1, 0, 2)) > grlex.key((0, 3, 0))
    # grevlex: the smaller last exponent wins
    assert grevlex.key((1, 2, 0)) > grevlex.key((2, 0, 1))
    assert grlex.key((0, 0, 2)) > grlex.key((1, 0, 0))


def test_schreyer_tie_breaks_on_index():
    M = ring_module("ZZ x ZZ", "xy")
    basis = elements(M, "(0,3)*x*y^2 + y", "(0,2)", "(1,0)")
    order = SchreyerOrder.from_generators(basis)
    # 1*g1 and x*y^2*g2 both map to x*y^2; g1 wins
    assert order.compare(((0, 0), 1), ((1, 2), 2)) == 1


def test_leading_term_examples():
    M = FreeModule(ring_module("ZZ", "abc").ring, ("x1", "x2", "x3"), 3, TermOrder("lex", "pot"))
    f = parse_element("5*x1^3*x2*e1 - x1^4*x2*x3*e3", M)
    assert f.lc == (5,) and f.lm == (3, 1, 0) and f.basis == 1
    M2 = problem(EX1).module.with_order(TermOrder("lex", "pot"), rank=2)
    g = parse_element("(0,2,1)*X*Y^2*e2 + (0,1,0)*e2", M2)
    assert g.LM == ((1, 2), 2) and g.lc == (0, 2, 1)
    assert M2.zero().leading() is None


exps = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))


@pytest.mark.parametrize("name", ["lex", "grlex", "grevlex"])
@settings(max_examples=150, deadline=None)
@given(u=exps, v=exps, w=exps)
def test_order_multiplicative(name, u, v, w):
    order = MonomialOrder(name)
    ku, kv = order.key(u), order.key(v)
    wu = tuple(a + b for a, b in zip(u, w))
    wv = tuple(a + b for a, b in zip(v, w))
    if ku < kv:
        assert order.key(wu) < order.key(wv)
    # total: distinct monomials never tie
    assert (ku == kv) == (u == v)
    # 1 is the minimum
    assert order.key((0, 0, 0)) <= ku
