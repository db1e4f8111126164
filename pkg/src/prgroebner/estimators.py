"""Estimator-style wrappers around the algebra.

``fit`` takes a list of generators (module elements or strings parsed against
a ``ProblemFile`` header), ``transform`` maps elements to their remainders and
``predict`` gives membership verdicts.  Hyper-parameters follow the sklearn
conventions so ``get_params``/``set_params``/``clone`` work unchanged.
"""

from __future__ import annotations

from typing import Optional, Sequence

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .division import divide
from .exceptions import StructuralError
from .groebner import buchberger, minimize
from .parse import ProblemFile, parse, parse_element
from .poly import FreeModule, ModuleElement
from .resolution import resolve
from .syzygy import collapse_same_lm, syzygy_basis


def check_elements(X, module: Optional[FreeModule] = None) -> list:
    """Validate ``X`` into a non-empty list of elements of one module.

    Accepts a ``ProblemFile``, its text, or a sequence of ``ModuleElement``
    and/or strings; strings need ``module``.
    """
    if isinstance(X, ProblemFile):
        return list(X.generators)
    if isinstance(X, str):
        if module is not None and not X.lstrip().startswith(("ring", "#")):
            return [parse_element(X, module)]
        return list(parse(X).generators)
    if isinstance(X, ModuleElement):
        X = [X]
    try:
        items = list(X)
    except TypeError:
        raise StructuralError(f"expected generators, got {type(X).__name__}") from None
    out = []
    for item in items:
        if isinstance(item, str):
            if module is None:
                raise StructuralError("string elements need a module to parse against")
            item = parse_element(item, module)
        if not isinstance(item, ModuleElement):
            raise StructuralError(f"not a module element: {item!r}")
        if module is None:
            module = item.module
        module.check_same(item.module)
        out.append(item)
    if not out:
        raise StructuralError("no elements given")
    return out


class GroebnerEstimator(TransformerMixin, BaseEstimator):
    """Fit a Groebner basis; transform to remainders; predict membership."""

    def __init__(self, minimal: bool = True, max_critical: int = 20000):
        self.minimal = minimal
        self.max_critical = max_critical

    def fit(self, X, y=None):
        gens = check_elements(X)
        gb = buchberger(gens, max_critical=self.max_critical)
        self.basis_ = minimize(gb) if self.minimal else gb
        self.module_ = gb.module
        self.n_generators_in_ = len(gens)
        return self

    def _check(self, X):
        check_is_fitted(self, "basis_")
        return check_elements(X, self.module_)

    def transform(self, X) -> list:
        return [divide(f, self.basis_.elements, trace=False).remainder for f in self._check(X)]

    def predict(self, X) -> list:
        return [r.is_zero() for r in self.transform(X)]

    def score(self, X, y) -> float:
        pred = self.predict(X)
        y = list(y)
        return sum(p == bool(t) for p, t in zip(pred, y)) / max(len(y), 1)


class SyzygyEstimator(BaseEstimator):
    """Relations among a minimized Groebner basis of the fitted generators."""

    def __init__(self, collapse: bool = False):
        self.collapse = collapse

    def fit(self, X, y=None):
        gb = minimize(buchberger(check_elements(X)))
        relations, L = syzygy_basis(gb)
        if self.collapse:
            relations = collapse_same_lm(relations)
        self.basis_ = gb
        self.relations_ = relations
        self.syzygy_module_ = L
        return self

    def transform(self, X=None) -> list:
        check_is_fitted(self, "relations_")
        return [r.element for r in self.relations_]


class FreeResolution(BaseEstimator):
    """Iterated syzygies; ``ranks_`` and ``status_`` summarize the result."""

    def __init__(self, max_length: int = 4, collapse: bool = False, minimal: bool = True):
        self.max_length = max_length
        self.collapse = collapse
        self.minimal = minimal

    def fit(self, X, y=None):
        res = resolve(check_elements(X), self.max_length,
                      collapse=self.collapse, minimize=self.minimal)
        self.resolution_ = res
        self.ranks_ = list(res.ranks)
        self.status_ = res.status
        return self

    def transform(self, X=None) -> list:
        check_is_fitted(self, "resolution_")
        return self.resolution_.differentials
