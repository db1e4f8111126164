"""Text and JSON renderings of ring and module elements."""

from __future__ import annotations


def format_coeff(c: tuple) -> str:
    if len(c) == 1:
        return str(c[0])
    return "(" + ",".join(str(x) for x in c) + ")"


def format_monomial(exps: tuple, names) -> str:
    parts = []
    for e, name in zip(exps, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_term(coeff, exps, basis, module, signed: bool = False) -> str:
    ring = module.ring
    factors = []
    mono = format_monomial(exps, module.variables)
    neg = False
    if signed and any(c < 0 for c in coeff) and all(
        c <= 0 and (n == 0 or c == 0) for c, n in zip(coeff, ring.moduli)
    ):
        neg = True
        coeff = tuple(-c for c in coeff)
    if coeff != ring.one or (not mono and module.rank == 1):
        factors.append(format_coeff(coeff))
    if mono:
        factors.append(mono)
    if module.rank > 1:
        factors.append(f"e{basis}")
    if not factors:
        factors.append(format_coeff(coeff))
    text = "*".join(factors)
    return ("-" if neg else "") + text


def format_element(f) -> str:
    if not f.terms:
        return "0"
    out = []
    for i, (e, b, c) in enumerate(f.terms):
        t = format_term(c, e, b, f.module, signed=True)
        if i == 0:
            out.append(t)
        elif t.startswith("-"):
            out.append("- " + t[1:])
        else:
            out.append("+ " + t)
    return " ".join(out)


def element_to_json(f) -> dict:
    """JSON form; integers are emitted as decimal strings."""
    return {
        "text": format_element(f),
        "terms": [
            {
                "coeff": [str(x) for x in c],
                "exponents": [str(x) for x in e],
                "basis": str(b),
            }
            for e, b, c in f.terms
        ],
    }


def leading_to_json(f) -> dict:
    if not f.terms:
        return {"coeff": None, "exponents": None, "basis": None}
    e, b, c = f.terms[0]
    return {
        "coeff": [str(x) for x in c],
        "exponents": [str(x) for x in e],
        "basis": str(b),
    }
