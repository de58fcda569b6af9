"""Annihilators and the annihilator-based results about the core inverse.

Set-valued annihilators exist only on finite carriers. Quantified checks
("for all b, c") run exhaustively when the carrier has at most
``EXHAUSTIVE_BOUND`` elements and on a seeded random sample otherwise; the
verdict notes which mode was used.

Containment written with a strict-looking symbol in the idempotent lemma is
read as inclusive containment. With a = b the right-hand set is the whole
ring, so a strict reading would make the biconditional fail for trivial
inputs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from . import errors, geninv, ideals
from .starring import Element, finite_carrier, is_idempotent, one, same_carrier
from .verdict import Check, Equivalence, LawVerdict, equivalence, implication

EXHAUSTIVE_BOUND = 4096
SAMPLE_SIZE = 512
INCLUSIVE_NOTE = "containment read as inclusive (subset-or-equal)"


@dataclass(frozen=True)
class AnnihilatorSet:
    side: str
    anchor: Element
    members: frozenset

    def __contains__(self, x: Element) -> bool:
        return x in self.members

    def __len__(self):
        return len(self.members)


def _require_finite(a: Element) -> None:
    if not a.spec.is_finite:
        raise errors.InfiniteCarrier(
            f"annihilator sets over {a.spec.label()} are infinite; use the pointwise checks"
        )


def left_annihilator(a: Element) -> AnnihilatorSet:
    """°(a) = {x : xa = 0}."""
    _require_finite(a)
    fc = finite_carrier(a.spec)
    members = frozenset(fc.element_at(i) for i in ideals.left_annihilator_indices(a))
    return AnnihilatorSet("left", a, members)


def right_annihilator(a: Element) -> AnnihilatorSet:
    """(a)° = {x : ax = 0}."""
    _require_finite(a)
    fc = finite_carrier(a.spec)
    members = frozenset(fc.element_at(i) for i in ideals.right_annihilator_indices(a))
    return AnnihilatorSet("right", a, members)


def _left_eq(p, q):
    return ideals.left_ann_subset(p, q) and ideals.left_ann_subset(q, p)


def _right_eq(p, q):
    return ideals.right_ann_subset(p, q) and ideals.right_ann_subset(q, p)


def _quantifier_domain(a: Element, bound: int, samples: int, seed: int):
    """Indices of the b's to quantify over, and a mode label."""
    fc = finite_carrier(a.spec)
    if fc.size <= bound:
        return np.arange(fc.size), "exhaustive"
    rng = random.Random(seed)
    idx = np.array([rng.randrange(fc.size) for _ in range(samples)], dtype=np.int64)
    return idx, f"sampled(n={samples}, seed={seed})"


def _same_partition(f: np.ndarray, g: np.ndarray):
    """Check f[i] == f[j] <=> g[i] == g[j] for all i, j.

    Returns None when it holds, else one offending pair of positions.
    """
    f, g = f.tolist(), g.tolist()
    first_f, first_g = {}, {}
    for i, (u, v) in enumerate(zip(f, g)):
        j = first_f.setdefault(u, i)
        if g[j] != v:
            return (j, i)
        j = first_g.setdefault(v, i)
        if f[j] != u:
            return (j, i)
    return None


def check_lemma31(a: Element, bound: int = EXHAUSTIVE_BOUND, samples: int = SAMPLE_SIZE,
                  seed: int = 0, strict: bool = True) -> LawVerdict:
    """Annihilator and cancellation identities of a core-invertible a:

    (i)   (a*)° = (a^core)°
    (ii)  °[(a^core)*] = °(a) = °(a^core)
    (iii) a^core b = a^core c  <=>  a* b = a* c       for all b, c
    (iv)  b a^core = c a^core  <=>  b a = c a         for all b, c
    (v)   °(b (a^core)*) = °(b a)                     for all b
    """
    _require_finite(a)
    c = geninv.core(a)
    hyp = [Check("a_core", c is not None)]
    if c is None:
        if strict:
            raise errors.NotCoreInvertible(f"{a!r} is not core invertible", "no core inverse")
        return implication("lemma31", (a,), hyp, [])

    fc = finite_carrier(a.spec)
    s = a.star()
    cs = c.star()
    idx, mode = _quantifier_domain(a, bound, samples, seed)
    B = fc.stack[idx]
    mm = fc.matmul
    A, C, S, CS = a.to_array(), c.to_array(), s.to_array(), cs.to_array()

    item1 = _right_eq(s, c)
    item2 = _left_eq(cs, a) and _left_eq(a, c)

    bad3 = _same_partition(fc.encode(mm(C, B)), fc.encode(mm(S, B)))
    bad4 = _same_partition(fc.encode(mm(B, C)), fc.encode(mm(B, A)))

    bad5 = None
    BCs = mm(B, CS)
    BA = mm(B, A)
    for pos in range(len(idx)):
        p = fc.from_array(BCs[pos])
        q = fc.from_array(BA[pos])
        if ideals.left_annihilator_indices(p) != ideals.left_annihilator_indices(q):
            bad5 = (pos,)
            break

    cex = []
    for label, bad in (("iii", bad3), ("iv", bad4), ("v", bad5)):
        if bad is not None:
            cex.append((label, *[fc.element_at(int(idx[p])).flat() for p in bad]))
    rows = [
        Check("(i) (a*)° = (a^core)°", item1),
        Check("(ii) °[(a^core)*] = °(a) = °(a^core)", item2),
        Check("(iii) a^core b = a^core c <=> a*b = a*c", bad3 is None),
        Check("(iv) b a^core = c a^core <=> ba = ca", bad4 is None),
        Check("(v) °(b (a^core)*) = °(ba)", bad5 is None),
    ]
    return implication("lemma31", (a,), hyp, rows, notes=(f"quantifier: {mode}",),
                       counterexamples=cex)


def check_lemma31_pointwise(a: Element, b: Element, c: Element) -> LawVerdict:
    """The same annihilator identities on any carrier, with the quantified items
    evaluated only at the given b and c. Items (i), (ii) and (v) use the
    subspace form of annihilator equality on field carriers."""
    same_carrier((a, b, c))
    x = geninv.core(a)
    if x is None:
        raise errors.NotCoreInvertible(f"{a!r} is not core invertible", "no core inverse")
    s = a.star()
    xs = x.star()
    rows = [
        Check("(i) (a*)° = (a^core)°", _right_eq(s, x)),
        Check("(ii) °[(a^core)*] = °(a) = °(a^core)", _left_eq(xs, a) and _left_eq(a, x)),
        Check("(iii) a^core b = a^core c <=> a*b = a*c", (x * b == x * c) == (s * b == s * c)),
        Check("(iv) b a^core = c a^core <=> ba = ca", (b * x == c * x) == (b * a == c * a)),
        Check("(v) °(b (a^core)*) = °(ba)", _left_eq(b * xs, b * a)),
    ]
    return implication("lemma31", (a, b, c), [Check("a_core", True)], rows,
                       notes=("quantifier: pointwise",))


def check_idempotent_lemma(a: Element, b: Element, x: Element, y: Element) -> LawVerdict:
    """For idempotent x, y:

    (i)  (1 - x) a = b  <=>  x b = 0 and °(x) ⊆ °(a - b)
    (ii) a (1 - y) = b  <=>  b y = 0 and (y)° ⊆ (a - b)°
    """
    same_carrier((a, b, x, y))
    _require_finite(a)
    for name, e in (("x", x), ("y", y)):
        if not is_idempotent(e):
            raise errors.NotIdempotent(f"{name} = {e!r} is not idempotent")
    u = one(a.spec)
    d = a - b
    eq1 = Equivalence(
        "(i) (1-x)a = b <=> xb = 0 and °(x) ⊆ °(a-b)",
        (u - x) * a == b,
        (x * b).is_zero() and ideals.left_ann_subset(x, d),
    )
    eq2 = Equivalence(
        "(ii) a(1-y) = b <=> by = 0 and (y)° ⊆ (a-b)°",
        a * (u - y) == b,
        (b * y).is_zero() and ideals.right_ann_subset(y, d),
    )
    pre = [Check("x_idempotent", True), Check("y_idempotent", True)]
    return equivalence("idempotent_lemma", (a, b, x, y), pre, [eq1, eq2], notes=(INCLUSIVE_NOTE,))


def check_remark_bbcore(a: Element, b: Element, strict: bool = True) -> LawVerdict:
    """If ab = b b^core a b then °(b b^core) ⊆ °(ab)."""
    same_carrier((a, b))
    _require_finite(a)
    bc = geninv.core(b)
    if bc is None:
        if strict:
            raise errors.NotCoreInvertible(f"{b!r} is not core invertible", "no core inverse")
        return implication("remark_bbcore", (a, b),
                           [Check("b_core", False), Check("ab = b b^core a b", None)],
                           [Check("°(b b^core) ⊆ °(ab)", None)], notes=(INCLUSIVE_NOTE,))
    p = b * bc
    hyps = [Check("b_core", True), Check("ab = b b^core a b", a * b == p * a * b)]
    rows = [Check("°(b b^core) ⊆ °(ab)", ideals.left_ann_subset(p, a * b))]
    return implication("remark_bbcore", (a, b), hyps, rows, notes=(INCLUSIVE_NOTE,))
