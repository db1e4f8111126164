import random

import pytest

from prgroebner import (
    IterationLimitError,
    StructuralError,
    ann_element,
    buchberger,
    certify,
    criterion_check,
    minimize,
    reduces_to_zero,
    s_r_element,
)
from prgroebner.groebner import same_leading_module, sr_coefficients

from helpers import (
    EX1, EX2, EX3, elements, problem, random_generators, ring_module,
    same_leading_terms_up_to_unit,
)


def test_sr_coefficients():
    from prgroebner import RingSpec

    assert sr_coefficients(RingSpec((0, 0)), (0, 3), (0, 2)) == ((0, 2), (0, 3))
    assert sr_coefficients(RingSpec((2, 4, 8)), (0, 2, 1), (0, 2, 0)) == ((0, 1, 0), (0, 1, 0))
    assert sr_coefficients(RingSpec((8,)), (3,), (3,)) == ((1,), (1,))


def test_s_r_examples():
    p = problem(EX2)
    f1 = p.generators[0]
    f4 = ann_element(f1)
    assert str(f4) == "(0,2,0)*e2"
    assert str(s_r_element(f1, f4)) == "(0,1,0)*e2"
    assert s_r_element(f1, f1).is_zero()

    M3 = problem(EX3).module
    g1, g3 = elements(M3, "(0,3)*x*y^2 + y", "(1,0)")
    assert s_r_element(g1, g3).is_zero()


def test_s_r_undefined_across_basis():
    p = problem(EX2)
    assert s_r_element(p.generators[1], p.generators[2]) is None


def test_ann_element_examples():
    p = problem(EX1)
    assert str(ann_element(p.generators[1])) == "(0,2,0)"
    assert ann_element(p.generators[2]).scalar_mul((1, 1, 1)) == ann_element(p.generators[2])
    M = ring_module("ZZ/8", "x")
    (u,) = elements(M, "3*x + 2")
    assert ann_element(u).is_zero()


def test_example1_basis():
    p = problem(EX1)
    gb = buchberger(p.generators)
    assert gb.certified and criterion_check(gb.elements)
    m = minimize(gb)
    assert len(m) == 4
    expected = elements(p.module, "(0,2,2)*X^2", "(1,2,4)*Y", "(1,0,0)", "(0,3,0)")
    assert same_leading_module(m.elements, expected)
    assert m.contains(elements(p.module, "(0,3,0)")[0])
    # the derived element corresponding to the printed f4 has leading term X^2
    assert any(str(g) == "(0,1,0)*X^2 + (0,1,0)*Y" for g in gb)


def test_example1_raw_inputs_fail_criterion():
    p = problem(EX1)
    res = criterion_check(p.generators)
    assert not res
    kinds = [(c.kind, c.indices) for c, _ in res.witnesses]
    assert ("ann", (1,)) in kinds
    crit, rem = next(w for w in res.witnesses if w[0].indices == (1,))
    assert str(rem) == "(0,2,0)"


def test_example2_basis():
    p = problem(EX2)
    m = minimize(buchberger(p.generators))
    assert len(m) == 3
    got = [(g.lc, g.lm, g.basis) for g in m]
    want = [((1, 2, 2), (2, 1), 1), ((1, 0, 1), (0, 0), 2), ((0, 1, 0), (0, 0), 2)]
    assert same_leading_terms_up_to_unit(p.module.ring, got, want)
    for f in p.generators:
        assert reduces_to_zero(f, m.elements)


def test_example2_published_basis_passes_criterion():
    p = problem(EX2)
    f2, f3 = p.generators[1:]
    (f5,) = elements(p.module, "(0,1,0)*e2")
    assert criterion_check([f2, f3, f5])


def test_example3_basis():
    p = problem(EX3)
    m = minimize(buchberger(p.generators))
    assert [str(g) for g in m] == ["(0,3)*x*y^2 + y", "(0,2)", "(1,0)"]


def test_unit_singleton():
    M = ring_module("ZZ/6", "x")
    (f,) = elements(M, "x + 2")
    gb = buchberger([f])
    assert gb.elements == [f]
    assert criterion_check([M.constant((5,))])


def test_minimize_keeps_minimal():
    p = problem(EX3)
    m = minimize(buchberger(p.generators))
    assert minimize(m).elements == m.elements


def test_transcript_expresses_elements():
    p = problem(EX1)
    gb = buchberger(p.generators, track=True)
    from prgroebner import substitute

    for g, row in zip(gb.elements, gb.transcript):
        assert substitute(row, p.generators) == g


def test_iteration_ceiling():
    p = problem(EX1)
    with pytest.raises(IterationLimitError):
        buchberger(p.generators, max_critical=2)


def test_errors():
    with pytest.raises(StructuralError):
        buchberger([])
    p = problem(EX1)
    with pytest.raises(StructuralError):
        minimize(certify(p.generators))


@pytest.mark.parametrize("ring,vars_", [("ZZ/6", "x"), ("ZZ/4 x ZZ/9", "xy"), ("ZZ x ZZ/8", "xy")])
def test_random_bases_certify(ring, vars_):
    rng = random.Random(f"gb-{ring}")
    M = ring_module(ring, vars_)
    for _ in range(15):
        gens = random_generators(rng, M)
        gb = buchberger(gens)
        assert criterion_check(gb.elements)
        assert all(reduces_to_zero(f, gb.elements) for f in gens)
        m = minimize(gb)
        assert same_leading_module(m.elements, gb.elements)


def test_grevlex_and_top_orders():
    rng = random.Random(3)
    for order, rule in (("grevlex", "top"), ("grlex", "pot")):
        M = ring_module("ZZ/4 x ZZ", "xyz", order=order, rank=2, module_order=rule)
        for _ in range(8):
            gens = random_generators(rng, M, max_deg=2)
            gb = buchberger(gens)
            assert criterion_check(gb.elements)
            assert all(reduces_to_zero(f, gb.elements) for f in gens)


def test_lex_rule_completion_agrees_on_examples():
    from prgroebner.division import LEX

    for text in (EX1, EX2, EX3):
        gens = problem(text).generators
        a = minimize(buchberger(gens, rule=LEX))
        b = minimize(buchberger(gens))
        assert a.certified and same_leading_module(a.elements, b.elements)
