"""Principal one-sided ideals and annihilators.

On finite carriers the sets are materialized by enumeration (as frozensets
of element indices, see ``FiniteCarrier``). On the field-matrix carriers
containments are decided with subspaces instead:

* xR <= yR   iff  col(x) <= col(y)
* Rx <= Ry   iff  row(x) <= row(y)
* °p <= °q   iff  col(q) <= col(p)
* p° <= q°   iff  row(q) <= row(p)
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import linalg
from .starring import Element, finite_carrier


def _rows_zero(x: np.ndarray) -> np.ndarray:
    return ~x.reshape(x.shape[0], -1).any(axis=1)


@lru_cache(maxsize=1 << 14)
def right_ideal(a: Element) -> frozenset:
    """Indices of aR."""
    fc = finite_carrier(a.spec)
    return frozenset(fc.encode(fc.matmul(a.to_array(), fc.stack)).tolist())


@lru_cache(maxsize=1 << 14)
def left_ideal(a: Element) -> frozenset:
    """Indices of Ra."""
    fc = finite_carrier(a.spec)
    return frozenset(fc.encode(fc.matmul(fc.stack, a.to_array())).tolist())


@lru_cache(maxsize=1 << 14)
def left_annihilator_indices(a: Element) -> frozenset:
    """Indices of {x : xa = 0}."""
    fc = finite_carrier(a.spec)
    return frozenset(np.flatnonzero(_rows_zero(fc.matmul(fc.stack, a.to_array()))).tolist())


@lru_cache(maxsize=1 << 14)
def right_annihilator_indices(a: Element) -> frozenset:
    """Indices of {x : ax = 0}."""
    fc = finite_carrier(a.spec)
    return frozenset(np.flatnonzero(_rows_zero(fc.matmul(a.to_array(), fc.stack))).tolist())


def right_ideal_subset(x: Element, y: Element) -> bool:
    """xR is contained in yR."""
    if x.spec.is_finite:
        # yR is a right ideal containing x*1, so membership of x suffices;
        # the enumerated sets are compared to stay literal to the definition.
        return right_ideal(x) <= right_ideal(y)
    return linalg.col_space_contains(linalg.to_matrix(y), linalg.to_matrix(x))


def left_ideal_subset(x: Element, y: Element) -> bool:
    """Rx is contained in Ry."""
    if x.spec.is_finite:
        return left_ideal(x) <= left_ideal(y)
    return linalg.row_space_contains(linalg.to_matrix(y), linalg.to_matrix(x))


def left_ann_subset(p: Element, q: Element) -> bool:
    """°p is contained in °q."""
    if p.spec.is_finite:
        return left_annihilator_indices(p) <= left_annihilator_indices(q)
    return linalg.col_space_contains(linalg.to_matrix(p), linalg.to_matrix(q))


def right_ann_subset(p: Element, q: Element) -> bool:
    """p° is contained in q°."""
    if p.spec.is_finite:
        return right_annihilator_indices(p) <= right_annihilator_indices(q)
    return linalg.row_space_contains(linalg.to_matrix(p), linalg.to_matrix(q))
