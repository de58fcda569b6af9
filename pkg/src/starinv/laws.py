"""One checker per forward-order law for the core inverse.

Every checker evaluates all of its hypotheses (no short-circuit), then the
conclusion, and reports the implication or equivalence status. Statements
that mention an inverse which does not exist evaluate to ``None`` and count
as not satisfied.

With ``strict=True`` (the default for direct calls) an input that violates
a stated precondition, such as a not being core invertible where the
theorem assumes it, raises. With ``strict=False`` (used by the miner) the
same input is reported as ``VacuouslyTrue``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import errors, geninv, ideals
from .annihil import check_lemma31, check_remark_bbcore
from .starring import Element, one, same_carrier
from .verdict import Check, Equivalence, LawVerdict, Status, equivalence, implication

__all__ = [
    "LAWS", "LawSpec", "LawVerdict", "Status", "lemma_commute", "law_thm32", "law_thm33",
    "law_thm34_equiv", "law_thm35", "law_remark36", "law_thm39_iff_star", "law_iff_star",
    "law_weighted",
    "hybrid_mp_core", "check_law",
]


def _eq(x: Optional[Element], y: Optional[Element]) -> Optional[bool]:
    if x is None or y is None:
        return None
    return x == y


def _mul(*xs: Optional[Element]) -> Optional[Element]:
    if any(x is None for x in xs):
        return None
    out = xs[0]
    for x in xs[1:]:
        out = out * x
    return out


def _require_core(strict: bool, **named) -> dict:
    """core inverses of the named elements; raises in strict mode if one is missing."""
    out = {k: geninv.core(v) for k, v in named.items()}
    if strict:
        missing = [k for k, v in out.items() if v is None]
        if missing:
            raise errors.NotCoreInvertible(
                f"not core invertible: {', '.join(missing)}", f"not core invertible: {', '.join(missing)}"
            )
    return out


# -- implication laws --------------------------------------------------------

def lemma_commute(a: Element, x: Element, strict: bool = True) -> LawVerdict:
    """xa = ax, xa* = a*x and a core invertible  =>  x a^core = a^core x."""
    same_carrier((a, x))
    c = geninv.core(a)
    s = a.star()
    hyps = [
        Check("xa = ax", x * a == a * x),
        Check("xa* = a*x", x * s == s * x),
        Check("a_core", c is not None),
    ]
    rows = [Check("x core(a) = core(a) x", _eq(_mul(x, c), _mul(c, x)))]
    return implication("lemma21", (a, x), hyps, rows)


def _product_law_rows(a, b, ca, cb, cab):
    prod = _mul(ca, cb)
    return [
        Check("ab core invertible", cab is not None),
        Check("core(ab) = core(a) core(b)", _eq(cab, prod)),
    ]


def law_thm32(a: Element, b: Element, strict: bool = True) -> LawVerdict:
    """a, b core invertible, aba = ba^2 = a^2 b, ab core(a) = a core(a) b and
    ab core(b) = b core(b) a  =>  core(ab) = core(a) core(b)."""
    same_carrier((a, b))
    cores = _require_core(strict, a=a, b=b)
    ca, cb = cores["a"], cores["b"]
    ab = a * b
    a2 = a * a
    hyps = [
        Check("a_core", ca is not None),
        Check("b_core", cb is not None),
        Check("aba = ba^2", ab * a == b * a2),
        Check("ba^2 = a^2b", b * a2 == a2 * b),
        Check("ab core(a) = a core(a) b", _eq(_mul(ab, ca), _mul(a, ca, b))),
        Check("ab core(b) = b core(b) a", _eq(_mul(ab, cb), _mul(b, cb, a))),
    ]
    return implication("thm32", (a, b), hyps, _product_law_rows(a, b, ca, cb, geninv.core(ab)))


def law_thm33(a: Element, b: Element, strict: bool = True) -> LawVerdict:
    """a, b, ab core invertible, a*b = a*a core(ab) b^2 and
    core(b) b a = a b core(b)  =>  core(ab) = core(a) core(b)."""
    same_carrier((a, b))
    ab = a * b
    cores = _require_core(strict, a=a, b=b, ab=ab)
    ca, cb, cab = cores["a"], cores["b"], cores["ab"]
    s = a.star()
    hyps = [
        Check("a_core", ca is not None),
        Check("b_core", cb is not None),
        Check("ab_core", cab is not None),
        Check("a*b = a*a core(ab) b^2", _eq(s * b, _mul(s, a, cab, b, b))),
        Check("core(b) ba = ab core(b)", _eq(_mul(cb, b, a), _mul(ab, cb))),
    ]
    notes = () if cab is not None else ("ab is not core invertible; first hypothesis not evaluable",)
    rows = [Check("core(ab) = core(a) core(b)", _eq(cab, _mul(ca, cb)))]
    return implication("thm33", (a, b), hyps, rows, notes=notes)


def _thm35_hypotheses(a, b, ca, cb):
    s = a.star()
    return [
        Check("a* core(b) = core(b) a*", _eq(_mul(s, cb), _mul(cb, s))),
        Check("bab = ab^2", b * a * b == a * b * b),
        Check("a core(b) = core(b) a", _eq(_mul(a, cb), _mul(cb, a))),
        Check("core(a) b = b core(a)", _eq(_mul(ca, b), _mul(b, ca))),
    ]


def _commuting_conclusion(a, b, ca, cb):
    cab = geninv.core(a * b)
    return [
        Check("ab core invertible", cab is not None),
        Check("core(ab) = core(a) core(b)", _eq(cab, _mul(ca, cb))),
        Check("core(a) core(b) = core(b) core(a)", _eq(_mul(ca, cb), _mul(cb, ca))),
    ]


def law_thm35(a: Element, b: Element, strict: bool = True) -> LawVerdict:
    """a* core(b) = core(b) a*, bab = ab^2, a core(b) = core(b) a and
    core(a) b = b core(a)  =>  core(ab) = core(a) core(b) = core(b) core(a)."""
    same_carrier((a, b))
    cores = _require_core(strict, a=a, b=b)
    ca, cb = cores["a"], cores["b"]
    hyps = [Check("a_core", ca is not None), Check("b_core", cb is not None)]
    hyps += _thm35_hypotheses(a, b, ca, cb)
    return implication("thm35", (a, b), hyps, _commuting_conclusion(a, b, ca, cb))


def law_remark36(a: Element, b: Element, strict: bool = True) -> LawVerdict:
    """ab = ba and ab* = b*a  =>  core(ab) = core(a) core(b) = core(b) core(a).

    An extra conclusion row checks that the two hypotheses imply the four
    hypotheses of ``law_thm35``.
    """
    same_carrier((a, b))
    cores = _require_core(strict, a=a, b=b)
    ca, cb = cores["a"], cores["b"]
    bs = b.star()
    hyps = [
        Check("a_core", ca is not None),
        Check("b_core", cb is not None),
        Check("ab = ba", a * b == b * a),
        Check("ab* = b*a", a * bs == bs * a),
    ]
    bridge = all(h.ok for h in _thm35_hypotheses(a, b, ca, cb))
    rows = _commuting_conclusion(a, b, ca, cb) + [Check("thm35 hypotheses hold", bridge)]
    return implication("remark36", (a, b), hyps, rows)


def law_weighted(a: Element, b: Element, e: Element, strict: bool = True) -> LawVerdict:
    """For a Hermitian unit e and e-weighted core invertible a, b with ab = b^2:

    (i)  ab is e-weighted core invertible and w(ab) = w(a) w(b);
    (ii) a w(a) w(b) (b a w(a))^2 = b a w(a),
         e b a w(a) (a w(a) w(b))^2 = e w(b),
         (e b a w(a) w(b))* = e b a w(a) w(b),
    where w(.) is the e-weighted core inverse.
    """
    same_carrier((a, b, e))
    geninv.check_weight(e)
    wa, wb = geninv.weighted_core(a, e), geninv.weighted_core(b, e)
    if strict and (wa is None or wb is None):
        missing = [n for n, w in (("a", wa), ("b", wb)) if w is None]
        raise errors.NotWeightedCoreInvertible(
            f"not e-weighted core invertible: {', '.join(missing)}", "not weighted core invertible"
        )
    hyps = [
        Check("a_wcore", wa is not None),
        Check("b_wcore", wb is not None),
        Check("ab = b^2", a * b == b * b),
    ]
    wab = geninv.weighted_core(a * b, e)
    baw = _mul(b, a, wa)
    aww = _mul(a, wa, wb)
    ebaww = _mul(e, b, a, wa, wb)
    rows = [
        Check("(i) ab weighted-core invertible", wab is not None),
        Check("(i) w(ab) = w(a) w(b)", _eq(wab, _mul(wa, wb))),
        Check("(ii) a w(a) w(b) (b a w(a))^2 = b a w(a)", _eq(_mul(aww, baw, baw), baw)),
        Check("(ii) e b a w(a) (a w(a) w(b))^2 = e w(b)", _eq(_mul(e, baw, aww, aww), _mul(e, wb))),
        Check("(ii) (e b a w(a) w(b))* = e b a w(a) w(b)",
              None if ebaww is None else ebaww.star() == ebaww),
    ]
    return implication("weighted", (a, b, e), hyps, rows)


# -- equivalence laws --------------------------------------------------------

def law_thm34_equiv(a: Element, b: Element, strict: bool = True) -> LawVerdict:
    """For core invertible a, b with b core(b) a = a b core(b):

    (i)  ab core invertible and core(ab) = core(a) core(b)
    (ii) ab group invertible, a core(b) R ⊆ core(a) core(b) R and
         a* core(b) (1 - (ab core(a) core(b))*) b = 0.
    """
    same_carrier((a, b))
    cores = _require_core(strict, a=a, b=b)
    ca, cb = cores["a"], cores["b"]
    ab = a * b
    pre = [
        Check("a_core", ca is not None),
        Check("b_core", cb is not None),
        Check("b core(b) a = a b core(b)", _eq(_mul(b, cb, a), _mul(ab, cb))),
    ]
    cab = geninv.core(ab)
    x = _mul(ca, cb)
    left = cab is not None and cab == x
    group = geninv.is_group_invertible(ab)
    incl = None if x is None else ideals.right_ideal_subset(a * cb, x)
    if x is None:
        ann = None
    else:
        u = one(a.spec)
        ann = (a.star() * cb * (u - (ab * x).star()) * b).is_zero()
    rows = [
        Check("ab core invertible", cab is not None),
        Check("core(ab) = core(a) core(b)", _eq(cab, x)),
        Check("ab group invertible", group),
        Check("a core(b) R ⊆ core(a) core(b) R", incl),
        Check("a* core(b) (1 - (ab core(a) core(b))*) b = 0", ann),
    ]
    right = bool(group and incl and ann)
    eqs = [Equivalence("(i) <=> (ii)", left, right)]
    return equivalence("thm34", (a, b), pre, eqs, rows)


def law_thm39_iff_star(a: Element, b: Element, strict: bool = True) -> LawVerdict:
    """For core invertible a, b, ab: core(ab) = core(a) core(b) iff
    a*a core(ab) = a* core(b)."""
    same_carrier((a, b))
    ab = a * b
    cores = _require_core(strict, a=a, b=b, ab=ab)
    ca, cb, cab = cores["a"], cores["b"], cores["ab"]
    pre = [
        Check("a_core", ca is not None),
        Check("b_core", cb is not None),
        Check("ab_core", cab is not None),
    ]
    s = a.star()
    left = _eq(cab, _mul(ca, cb))
    right = _eq(_mul(s, a, cab), _mul(s, cb))
    eqs = [Equivalence("core(ab) = core(a) core(b) <=> a*a core(ab) = a* core(b)", left, right)]
    return equivalence("thm39", (a, b), pre, eqs)


def hybrid_mp_core(a: Element, b: Element, strict: bool = True) -> LawVerdict:
    """For core invertible a, b with ab Moore-Penrose invertible:

    (i)  (ab)^+ = core(a) core(b)  iff  abR ⊆ bR and core(a) b = (ab)^+ b^2
    (ii) (ab)^+ = core(a) core(b)  iff  Rab ⊆ Ra* and a* core(b) = a*a (ab)^+
    """
    same_carrier((a, b))
    cores = _require_core(strict, a=a, b=b)
    ca, cb = cores["a"], cores["b"]
    ab = a * b
    d = geninv.mp(ab)
    if strict and d is None:
        raise errors.NotMPInvertible("ab is not Moore-Penrose invertible", "ab not MP invertible")
    pre = [
        Check("a_core", ca is not None),
        Check("b_core", cb is not None),
        Check("ab_mp", d is not None),
    ]
    s = a.star()
    left = _eq(d, _mul(ca, cb))
    in1 = ideals.right_ideal_subset(ab, b)
    eq1 = _eq(_mul(ca, b), _mul(d, b, b))
    in2 = ideals.left_ideal_subset(ab, s)
    eq2 = _eq(_mul(s, cb), _mul(s, a, d))
    rows = [
        Check("(ab)^+ = core(a) core(b)", left),
        Check("abR ⊆ bR", in1),
        Check("core(a) b = (ab)^+ b^2", eq1),
        Check("Rab ⊆ Ra*", in2),
        Check("a* core(b) = a*a (ab)^+", eq2),
    ]
    eqs = [
        Equivalence("(i)", left, bool(in1 and eq1)),
        Equivalence("(ii)", left, bool(in2 and eq2)),
    ]
    return equivalence("hybrid", (a, b), pre, eqs, rows)


# -- registry ----------------------------------------------------------------

law_iff_star = law_thm39_iff_star


@dataclass(frozen=True)
class LawSpec:
    law_id: str
    tag: str
    checker: Callable
    arity: int
    equivalence: bool
    weighted: bool = False


def _lemma31(a, strict=True):
    return check_lemma31(a, strict=strict)


LAWS = {
    spec.law_id: spec
    for spec in (
        LawSpec("lemma21", "Lemma21Commute", lemma_commute, 2, False),
        LawSpec("thm32", "Thm32", law_thm32, 2, False),
        LawSpec("thm33", "Thm33", law_thm33, 2, False),
        LawSpec("thm34", "Thm34Equiv", law_thm34_equiv, 2, True),
        LawSpec("thm35", "Thm35", law_thm35, 2, False),
        LawSpec("remark36", "Remark36", law_remark36, 2, False),
        LawSpec("thm39", "Thm39IffStar", law_thm39_iff_star, 2, True),
        LawSpec("weighted", "Thm310Weighted", law_weighted, 3, False, weighted=True),
        LawSpec("hybrid", "Thm311Hybrid", hybrid_mp_core, 2, True),
        LawSpec("lemma31", "Lemma31Annihilators", _lemma31, 1, False),
        LawSpec("remark_bbcore", "RemarkBBCore", check_remark_bbcore, 2, False),
    )
}

_ALIASES = {spec.tag.lower(): spec.law_id for spec in LAWS.values()}


def get_law(law_id: str) -> LawSpec:
    key = law_id.strip().lower()
    key = _ALIASES.get(key, key)
    try:
        return LAWS[key]
    except KeyError:
        raise KeyError(f"unknown law {law_id!r}; choose from {', '.join(LAWS)}") from None


def check_law(law_id: str, *inputs: Element, strict: bool = True) -> LawVerdict:
    spec = get_law(law_id)
    if len(inputs) != spec.arity:
        raise TypeError(f"{spec.law_id} takes {spec.arity} elements, got {len(inputs)}")
    return spec.checker(*inputs, strict=strict)
