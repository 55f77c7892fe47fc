"""Shared fixtures: the standard small-algebra corpus.

Built once at module load so the library's internal caches are shared
across the whole run.
"""

from __future__ import annotations

import pytest

import superharrison as sh

CORPUS: dict[str, sh.SuperAlgebra] = {
    "exterior1": sh.exterior_algebra(1),
    "exterior2": sh.exterior_algebra(2),
    "truncpoly2": sh.truncated_polynomial(2),
    "truncpoly3": sh.truncated_polynomial(3),
    "mixed": sh.tensor_product(sh.truncated_polynomial(2), sh.exterior_algebra(1)),
}

EVEN_CORPUS = ("truncpoly2", "truncpoly3")


@pytest.fixture(params=sorted(CORPUS))
def corpus_algebra(request) -> sh.SuperAlgebra:
    return CORPUS[request.param]


@pytest.fixture(params=sorted(CORPUS))
def corpus_named(request) -> tuple[str, sh.SuperAlgebra]:
    return request.param, CORPUS[request.param]
