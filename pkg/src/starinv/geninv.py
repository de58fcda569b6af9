"""Generalized inverses in rings with involution.

Six kinds are supported: Moore-Penrose, {1,3}, group, Drazin, core and
e-weighted core. Every computed inverse is checked against its defining
equations before it is returned.

Three solution paths exist:

``factor``
    Field-matrix carriers (Q, QI). Full-rank factorization a = F G gives
    closed forms: a^+ = G*(F* a G*)^-1 F*, a^# = F (GF)^-2 G and
    a^core = F (GF)^-1 (F*F)^-1 F*. Drazin inverses use Cline's repeated
    factorization.
``scan``
    Finite carriers up to ``SCAN_LIMIT`` elements. All candidates are tested
    at once with numpy integer arithmetic; every solution is collected so
    uniqueness is checked, not assumed.
``linear``
    Any carrier. Uses equation systems that are linear in the unknown:
    a^(1,3) from {axa = a, (ax)* = ax}, a^(1,4) likewise, and
    a^# = v a u from a^2 u = a = v a^2. Then a^+ = a^(1,4) a a^(1,3) and
    a^core = a^# a a^(1,3).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

import numpy as np

from . import errors, ideals, linalg
from .starring import Element, finite_carrier, is_hermitian, one, zero

SCAN_LIMIT = 16 ** 4


class Kind(str, enum.Enum):
    MP = "mp"
    ONE_THREE = "one-three"
    GROUP = "group"
    DRAZIN = "drazin"
    CORE = "core"
    WEIGHTED_CORE = "weighted-core"


_KIND_ALIASES = {
    "moorepenrose": Kind.MP, "moore-penrose": Kind.MP, "mp": Kind.MP,
    "onethree": Kind.ONE_THREE, "one-three": Kind.ONE_THREE, "1,3": Kind.ONE_THREE,
    "group": Kind.GROUP, "drazin": Kind.DRAZIN, "core": Kind.CORE,
    "weightedcore": Kind.WEIGHTED_CORE, "weighted-core": Kind.WEIGHTED_CORE,
}


def parse_kind(tag) -> Kind:
    if isinstance(tag, Kind):
        return tag
    try:
        return _KIND_ALIASES[str(tag).strip().lower()]
    except KeyError:
        raise ValueError(f"unknown inverse kind {tag!r}") from None


@dataclass(frozen=True)
class InverseKind:
    tag: Kind
    weight: Optional[Element] = None

    def __post_init__(self):
        object.__setattr__(self, "tag", parse_kind(self.tag))
        if self.tag is Kind.WEIGHTED_CORE:
            if self.weight is None:
                raise errors.InvalidWeight("weighted core inverse needs a weight e")
            check_weight(self.weight)
        elif self.weight is not None:
            raise errors.InvalidWeight(f"{self.tag.value} inverse takes no weight")


def check_weight(e: Element) -> None:
    if not is_hermitian(e):
        raise errors.InvalidWeight("weight e must be Hermitian (e* = e)")
    if unit_inverse(e) is None:
        raise errors.InvalidWeight("weight e must be a unit")


@dataclass(frozen=True)
class TraceRow:
    label: str
    lhs: Element
    rhs: Element

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class VerificationTrace:
    rows: tuple

    @property
    def passed(self) -> bool:
        return all(r.equal for r in self.rows)

    def failures(self) -> list:
        return [r.label for r in self.rows if not r.equal]

    def to_json_obj(self) -> list:
        return [
            {"equation": r.label, "lhs": r.lhs.flat(), "rhs": r.rhs.flat(), "equal": r.equal}
            for r in self.rows
        ]


@dataclass(frozen=True)
class InverseResult:
    kind: InverseKind
    value: Element
    trace: VerificationTrace
    index: Optional[int] = None
    method: str = ""

    def to_json_obj(self) -> dict:
        out = {
            "kind": self.kind.tag.value,
            "value": self.value.to_json_obj(),
            "trace": self.trace.to_json_obj(),
            "verified": self.trace.passed,
            "method": self.method,
        }
        if self.index is not None:
            out["index"] = self.index
        if self.kind.weight is not None:
            out["weight"] = self.kind.weight.to_json_obj()
        return out


# -- verification ------------------------------------------------------------

def verify_inverse(a: Element, x: Element, kind, index: Optional[int] = None) -> VerificationTrace:
    """Evaluate every defining equation of ``kind`` at (a, x)."""
    if not isinstance(kind, InverseKind):
        kind = InverseKind(parse_kind(kind))
    if x.spec != a.spec:
        raise errors.SpecMismatch(f"{a.spec.label()} vs {x.spec.label()}")
    t = kind.tag
    ax = a * x
    xa = x * a
    if t is Kind.MP:
        rows = [
            TraceRow("axa = a", ax * a, a),
            TraceRow("xax = x", xa * x, x),
            TraceRow("(ax)* = ax", ax.star(), ax),
            TraceRow("(xa)* = xa", xa.star(), xa),
        ]
    elif t is Kind.ONE_THREE:
        rows = [TraceRow("axa = a", ax * a, a), TraceRow("(ax)* = ax", ax.star(), ax)]
    elif t in (Kind.GROUP, Kind.DRAZIN):
        k = 1 if t is Kind.GROUP else index
        if k is None or k < 1:
            raise ValueError("Drazin verification needs the claimed index k >= 1")
        rows = [
            TraceRow(f"x a^{k + 1} = a^{k}", x * a ** (k + 1), a ** k),
            TraceRow("ax = xa", ax, xa),
            TraceRow("a x^2 = x", ax * x, x),
        ]
    elif t is Kind.CORE:
        rows = [
            TraceRow("(ax)* = ax", ax.star(), ax),
            TraceRow("a x^2 = x", ax * x, x),
            TraceRow("x a^2 = a", xa * a, a),
        ]
    else:
        e = kind.weight
        if e.spec != a.spec:
            raise errors.SpecMismatch("weight lives in a different carrier")
        eax = e * ax
        rows = [
            TraceRow("a x^2 = x", ax * x, x),
            TraceRow("x a^2 = a", xa * a, a),
            TraceRow("(eax)* = eax", eax.star(), eax),
        ]
    return VerificationTrace(tuple(rows))


# -- units -------------------------------------------------------------------

@lru_cache(maxsize=1 << 14)
def unit_inverse(a: Element) -> Optional[Element]:
    """Two-sided inverse of a, or None."""
    if a.spec.is_field:
        inv = linalg.inverse(linalg.to_matrix(a))
        return None if inv is None else linalg.from_matrix(a.spec, inv)
    u = one(a.spec)
    x = linalg.solve_linear(lambda t: (a * t,), (u,))
    if x is None or x * a != u:
        return None
    return x


def is_unit(a: Element) -> bool:
    return unit_inverse(a) is not None


# -- exhaustive scans --------------------------------------------------------

def _allrows(x: np.ndarray) -> np.ndarray:
    return x.reshape(x.shape[0], -1).all(axis=1)


def _power_chain(a: Element) -> list:
    """[a^1, a^2, ..., a^m] with a^m the first power equal to an earlier one."""
    seen = {}
    powers = []
    p = a
    while p not in seen:
        seen[p] = len(powers)
        powers.append(p)
        p = p * a
    powers.append(p)
    return powers


def exhaustive_solutions(a: Element, kind, weight: Optional[Element] = None) -> list:
    """Every element of the (finite) carrier satisfying the defining
    equations of ``kind`` for a, in enumeration order.

    For Drazin the returned list holds (x, index) pairs.
    """
    tag = parse_kind(kind)
    fc = finite_carrier(a.spec)
    X = fc.stack
    A = a.to_array()
    mm = fc.matmul
    AX = mm(A, X)
    if tag in (Kind.MP, Kind.ONE_THREE):
        mask = _allrows(mm(AX, A) == A) & _allrows(fc.star_stack(AX) == AX)
        if tag is Kind.MP:
            XA = mm(X, A)
            mask &= _allrows(mm(XA, X) == X) & _allrows(fc.star_stack(XA) == XA)
    elif tag is Kind.CORE:
        A2 = mm(A, A)
        mask = (
            _allrows(fc.star_stack(AX) == AX)
            & _allrows(mm(AX, X) == X)
            & _allrows(mm(X, A2) == A)
        )
    elif tag is Kind.WEIGHTED_CORE:
        if weight is None:
            raise errors.InvalidWeight("weighted core inverse needs a weight e")
        A2 = mm(A, A)
        EAX = mm(weight.to_array(), AX)
        mask = (
            _allrows(mm(AX, X) == X)
            & _allrows(mm(X, A2) == A)
            & _allrows(fc.star_stack(EAX) == EAX)
        )
    elif tag in (Kind.GROUP, Kind.DRAZIN):
        XA = mm(X, A)
        mask = _allrows(AX == XA) & _allrows(mm(AX, X) == X)
        powers = [p.to_array() for p in _power_chain(a)]
        out = []
        for i in np.flatnonzero(mask):
            xi = X[i]
            k = next(
                (k for k in range(1, len(powers)) if np.array_equal(mm(xi, powers[k]), powers[k - 1])),
                None,
            )
            if k is None:
                continue
            if tag is Kind.GROUP and k > 1:
                continue
            out.append((fc.element_at(int(i)), k))
        return [x for x, _ in out] if tag is Kind.GROUP else out
    else:
        raise ValueError(tag)
    return [fc.element_at(int(i)) for i in np.flatnonzero(mask)]


# -- linear path -------------------------------------------------------------

def _one_three_linear(a: Element, weight: Optional[Element] = None) -> Optional[Element]:
    w = weight if weight is not None else one(a.spec)
    z = zero(a.spec)

    def system(x):
        wax = w * a * x
        return (a * x * a, wax.star() - wax)

    return linalg.solve_linear(system, (a, z))


def _one_four_linear(a: Element) -> Optional[Element]:
    z = zero(a.spec)

    def system(x):
        xa = x * a
        return (a * x * a, xa.star() - xa)

    return linalg.solve_linear(system, (a, z))


def _group_linear(a: Element) -> Optional[Element]:
    a2 = a * a
    u = linalg.solve_linear(lambda t: (a2 * t,), (a,))
    if u is None:
        return None
    v = linalg.solve_linear(lambda t: (t * a2,), (a,))
    if v is None:
        return None
    x = v * a * u
    if not verify_inverse(a, x, InverseKind(Kind.GROUP)).passed:
        return None
    return x


def _drazin_linear(a: Element) -> tuple:
    top = a.spec.dim + 1 if a.spec.is_field else len(_power_chain(a)) - 1
    for k in range(1, top + 1):
        ak = a ** k
        g = _group_linear(ak)
        if g is None:
            continue
        x = (a ** (k - 1)) * g
        return x, _drazin_index(a, x)
    raise errors.NotDrazinInvertible("no power of a is group invertible", "no power group invertible")


def _drazin_index(a: Element, x: Element) -> int:
    """Smallest k >= 1 with x a^(k+1) = a^k."""
    limit = a.spec.dim + 1 if a.spec.is_field else len(_power_chain(a))
    ak = a
    for k in range(1, limit + 1):
        ak1 = ak * a
        if x * ak1 == ak:
            return k
        ak = ak1
    raise errors.NotDrazinInvertible("x a^(k+1) = a^k fails for every k", "index search failed")


# -- factorization path (fields) ---------------------------------------------

def _frf(a: Element):
    return linalg.full_rank_factorization(linalg.to_matrix(a))


def _mp_factor(a: Element) -> Element:
    spec = a.spec
    F, G, r = _frf(a)
    if r == 0:
        return zero(spec)
    Fs = linalg.star_matrix(spec, F, r)
    Gs = linalg.star_matrix(spec, G)
    mid = linalg.matmul(linalg.matmul(Fs, linalg.to_matrix(a)), Gs)
    inv = linalg.inverse(mid)
    if inv is None:
        raise errors.NotMPInvertible("F* a G* is singular", "F* a G* singular")
    return linalg.from_matrix(spec, linalg.matmul(linalg.matmul(Gs, inv), Fs))


def _gf_inverse(a: Element):
    F, G, r = _frf(a)
    if r == 0:
        return F, G, r, None
    inv = linalg.inverse(linalg.matmul(G, F))
    if inv is None:
        raise errors.NotGroupInvertible("index > 1", "index > 1")
    return F, G, r, inv


def _group_factor(a: Element) -> Element:
    F, G, r, inv = _gf_inverse(a)
    if r == 0:
        return zero(a.spec)
    return linalg.from_matrix(a.spec, linalg.matmul(linalg.matmul(F, linalg.matmul(inv, inv)), G))


def _core_factor(a: Element) -> Element:
    spec = a.spec
    try:
        F, G, r, inv = _gf_inverse(a)
    except errors.NotGroupInvertible:
        raise errors.NotCoreInvertible("index > 1", "index > 1") from None
    if r == 0:
        return zero(spec)
    Fs = linalg.star_matrix(spec, F, r)
    gram = linalg.inverse(linalg.matmul(Fs, F))
    if gram is None:
        raise errors.NotCoreInvertible("F* F is singular", "F* F singular")
    return linalg.from_matrix(spec, linalg.matmul(linalg.matmul(F, linalg.matmul(inv, gram)), Fs))


def _drazin_factor(a: Element) -> tuple:
    spec = a.spec
    F, G, r = _frf(a)
    if r == 0:
        return zero(spec), 1
    Bs, Cs = [F], [G]
    while True:
        P = linalg.matmul(Cs[-1], Bs[-1])
        inv = linalg.inverse(P)
        if inv is not None:
            break
        F2, G2, r2 = linalg.full_rank_factorization(P)
        if r2 == 0:
            return zero(spec), _field_index(a)
        Bs.append(F2)
        Cs.append(G2)
    k = len(Bs)
    core = inv
    for _ in range(k):
        core = linalg.matmul(core, inv)
    left = Bs[0]
    for B in Bs[1:]:
        left = linalg.matmul(left, B)
    right = Cs[-1]
    for C in reversed(Cs[:-1]):
        right = linalg.matmul(right, C)
    x = linalg.from_matrix(spec, linalg.matmul(linalg.matmul(left, core), right))
    return x, _field_index(a)


def _field_index(a: Element) -> int:
    """Smallest k >= 1 with rank(a^k) = rank(a^(k+1))."""
    k = 1
    p = a
    r = linalg.rank(linalg.to_matrix(p))
    while True:
        q = p * a
        rq = linalg.rank(linalg.to_matrix(q))
        if rq == r:
            return k
        k += 1
        p, r = q, rq


# -- dispatch ----------------------------------------------------------------

_NOT = {
    Kind.MP: errors.NotMPInvertible,
    Kind.ONE_THREE: errors.NoOneThreeInverse,
    Kind.GROUP: errors.NotGroupInvertible,
    Kind.DRAZIN: errors.NotDrazinInvertible,
    Kind.CORE: errors.NotCoreInvertible,
    Kind.WEIGHTED_CORE: errors.NotWeightedCoreInvertible,
}


def resolve_method(a: Element, method: str = "auto", scan_limit: int = SCAN_LIMIT) -> str:
    if method == "auto":
        if a.spec.is_field:
            return "factor"
        return "scan" if a.spec.size <= scan_limit else "linear"
    if method == "scan" and not a.spec.is_finite:
        raise errors.InfiniteCarrier("exhaustive scan needs a finite carrier")
    if method == "factor" and not a.spec.is_field:
        raise ValueError("factorization path needs a field-matrix carrier")
    if method not in ("scan", "linear", "factor"):
        raise ValueError(f"unknown method {method!r}")
    return method


def _unique(a, tag, sols, weight=None):
    if len(sols) > 1:
        raise errors.UniquenessViolation(
            f"{len(sols)} solutions of the {tag.value} equations for {a!r}"
        )
    return sols[0] if sols else None


def _solve(tag: Kind, a: Element, weight: Optional[Element], method: str):
    """Return (value, index) or (None, reason)."""
    if method == "scan":
        if tag is Kind.ONE_THREE:
            sols = exhaustive_solutions(a, tag)
            return (sols[0], None) if sols else (None, "no solution in carrier")
        if tag is Kind.DRAZIN:
            sols = exhaustive_solutions(a, tag)
            if len(sols) > 1:
                raise errors.UniquenessViolation(f"{len(sols)} Drazin inverses for {a!r}")
            return sols[0] if sols else (None, "no solution in carrier")
        x = _unique(a, tag, exhaustive_solutions(a, tag, weight))
        if x is None:
            return None, "no solution in carrier"
        return x, (1 if tag is Kind.GROUP else None)

    if method == "factor":
        try:
            if tag in (Kind.MP, Kind.ONE_THREE):
                return _mp_factor(a), None
            if tag is Kind.GROUP:
                return _group_factor(a), 1
            if tag is Kind.DRAZIN:
                return _drazin_factor(a)
            if tag is Kind.CORE:
                return _core_factor(a), None
        except errors.NotInvertible as exc:
            return None, exc.reason
        # weighted core over a field: a^# a a^(1,3),e
        try:
            g = _group_factor(a)
        except errors.NotGroupInvertible:
            return None, "index > 1"
        x13 = _one_three_linear(a, weight)
        if x13 is None:
            return None, "no weighted {1,3}-inverse"
        return g * a * x13, None

    # linear
    if tag is Kind.ONE_THREE:
        x = _one_three_linear(a)
        return (x, None) if x is not None else (None, "axa = a, (ax)* = ax has no solution")
    if tag is Kind.MP:
        x13 = _one_three_linear(a)
        x14 = _one_four_linear(a)
        if x13 is None or x14 is None:
            return None, "no {1,3}- or {1,4}-inverse"
        return x14 * a * x13, None
    if tag is Kind.GROUP:
        g = _group_linear(a)
        return (g, 1) if g is not None else (None, "a not in a^2 R and R a^2")
    if tag is Kind.DRAZIN:
        try:
            return _drazin_linear(a)
        except errors.NotDrazinInvertible as exc:
            return None, exc.reason
    g = _group_linear(a)
    if g is None:
        return None, "not group invertible"
    x13 = _one_three_linear(a, weight if tag is Kind.WEIGHTED_CORE else None)
    if x13 is None:
        return None, "no {1,3}-inverse" if tag is Kind.CORE else "no weighted {1,3}-inverse"
    return g * a * x13, None


@lru_cache(maxsize=1 << 16)
def _compute_cached(tag: Kind, a: Element, weight: Optional[Element], method: str):
    value, extra = _solve(tag, a, weight, method)
    if value is None:
        return None, extra
    kind = InverseKind(tag, weight)
    index = extra if isinstance(extra, int) else None
    trace = verify_inverse(a, value, kind, index=index)
    if not trace.passed:
        # A closed form or linear candidate that fails its own equations
        # means no inverse of this kind exists.
        return None, f"candidate fails {', '.join(trace.failures())}"
    return InverseResult(kind, value, trace, index, method), None


def compute(a: Element, kind, weight: Optional[Element] = None, method: str = "auto",
            scan_limit: int = SCAN_LIMIT) -> InverseResult:
    tag = parse_kind(kind)
    if tag is Kind.WEIGHTED_CORE:
        if weight is None:
            raise errors.InvalidWeight("weighted core inverse needs a weight e")
        if weight.spec != a.spec:
            raise errors.SpecMismatch("weight lives in a different carrier")
        check_weight(weight)
    else:
        weight = None
    method = resolve_method(a, method, scan_limit)
    result, reason = _compute_cached(tag, a, weight, method)
    if result is None:
        raise _NOT[tag](f"no {tag.value} inverse for {a!r}: {reason}", reason)
    return result


def compute_core(a: Element, method: str = "auto", scan_limit: int = SCAN_LIMIT) -> InverseResult:
    """Core inverse: the unique x with (ax)* = ax, ax^2 = x, xa^2 = a."""
    return compute(a, Kind.CORE, method=method, scan_limit=scan_limit)


def compute_mp(a: Element, method: str = "auto", scan_limit: int = SCAN_LIMIT) -> InverseResult:
    return compute(a, Kind.MP, method=method, scan_limit=scan_limit)


def compute_one_three(a: Element, method: str = "auto", scan_limit: int = SCAN_LIMIT) -> InverseResult:
    """A {1,3}-inverse. The field path returns a^+; the scan path returns the
    first solution in enumeration order."""
    return compute(a, Kind.ONE_THREE, method=method, scan_limit=scan_limit)


def compute_group(a: Element, method: str = "auto", scan_limit: int = SCAN_LIMIT) -> InverseResult:
    return compute(a, Kind.GROUP, method=method, scan_limit=scan_limit)


def compute_drazin(a: Element, method: str = "auto", scan_limit: int = SCAN_LIMIT) -> InverseResult:
    """Drazin inverse together with the index i(a) (smallest k >= 1)."""
    return compute(a, Kind.DRAZIN, method=method, scan_limit=scan_limit)


def compute_weighted_core(a: Element, e: Element, method: str = "auto",
                          scan_limit: int = SCAN_LIMIT) -> InverseResult:
    return compute(a, Kind.WEIGHTED_CORE, weight=e, method=method, scan_limit=scan_limit)


def try_compute(a: Element, kind, weight: Optional[Element] = None, **kw) -> Optional[Element]:
    """Inverse value or None; never raises NotInvertible."""
    try:
        return compute(a, kind, weight, **kw).value
    except errors.NotInvertible:
        return None


def core(a: Element) -> Optional[Element]:
    return try_compute(a, Kind.CORE)


def mp(a: Element) -> Optional[Element]:
    return try_compute(a, Kind.MP)


def weighted_core(a: Element, e: Element) -> Optional[Element]:
    return try_compute(a, Kind.WEIGHTED_CORE, e)


def is_group_invertible(a: Element) -> bool:
    return try_compute(a, Kind.GROUP) is not None


# -- characterizations of the core inverse -----------------------------------

CLAUSES = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii")


def core_clauses(a: Element, x: Element, group_invertible: Optional[bool] = None) -> dict:
    """Truth of the eight equivalent characterizations of "x is the core
    inverse of a", evaluated at the pair (a, x)."""
    if group_invertible is None:
        group_invertible = is_group_invertible(a)
    ax = a * x
    xa = x * a
    axa = ax * a == a
    xax = xa * x == x
    herm = ax.star() == ax
    s = a.star()
    xR_in_aR = ideals.right_ideal_subset(x, a)
    aR_in_xR = ideals.right_ideal_subset(a, x)
    Rx_in_Ras = ideals.left_ideal_subset(x, s)
    Ras_in_Rx = ideals.left_ideal_subset(s, x)
    ann_eq = ideals.left_ann_subset(x, a) and ideals.left_ann_subset(a, x)
    xu = verify_inverse(a, x, InverseKind(Kind.CORE)).passed
    return {
        "i": xu,
        "ii": axa and xR_in_aR and aR_in_xR and Rx_in_Ras,
        "iii": axa and ann_eq and ideals.right_ann_subset(s, x),
        "iv": xax and xR_in_aR and aR_in_xR and Rx_in_Ras and Ras_in_Rx,
        "v": xax and xR_in_aR and aR_in_xR and Ras_in_Rx,
        "vi": xax and ann_eq and ideals.right_ann_subset(x, s),
        "vii": group_invertible and axa and herm and xR_in_aR,
        "viii": group_invertible and xax and herm and aR_in_xR,
    }


@dataclass
class CoreCharacterization:
    element: Element
    flags: dict
    solutions: dict = field(default_factory=dict)
    core: Optional[Element] = None
    mode: str = "enumerated"
    disagreements: list = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return len(set(self.flags.values())) == 1 and not self.disagreements

    @property
    def consistent(self) -> bool:
        """Flags agree and every satisfied clause is satisfied by exactly the
        core inverse."""
        if not self.agree:
            return False
        if not self.flags["i"]:
            return self.core is None
        return all(sols == [self.core] for sols in self.solutions.values())

    def to_json_obj(self) -> dict:
        return {
            "element": self.element.to_json_obj(),
            "flags": dict(self.flags),
            "agree": self.agree,
            "consistent": self.consistent,
            "mode": self.mode,
            "core": None if self.core is None else self.core.flat(),
            "solutions": {k: [s.flat() for s in v] for k, v in self.solutions.items()},
        }


def characterize_core(a: Element) -> CoreCharacterization:
    """Evaluate the eight characterizations of the core inverse.

    Finite carriers: every candidate x is tested; a clause's flag is true iff
    some x satisfies it, and the per-x truth values must agree across
    clauses. Field carriers: the clauses are evaluated at the single
    candidate x = core(a) when it exists and x = a^+ otherwise.
    """
    g = is_group_invertible(a)
    c = core(a)
    if a.spec.is_finite:
        fc = finite_carrier(a.spec)
        sols = {k: [] for k in CLAUSES}
        bad = []
        for x in fc:
            row = core_clauses(a, x, g)
            if len(set(row.values())) != 1:
                bad.append((x, row))
            for k, v in row.items():
                if v:
                    sols[k].append(x)
        flags = {k: bool(v) for k, v in sols.items()}
        return CoreCharacterization(a, flags, sols, c, "enumerated", bad)
    probe = c if c is not None else compute_mp(a).value
    row = core_clauses(a, probe, g)
    sols = {k: [probe] for k, v in row.items() if v}
    return CoreCharacterization(a, row, sols, c, "pointwise")


# -- classification ----------------------------------------------------------

@dataclass(frozen=True)
class ElementClass:
    hermitian: bool
    idempotent: bool
    unit: bool
    nilpotent: bool
    mp_invertible: bool
    group_invertible: bool
    drazin_index: Optional[int]
    core_invertible: bool

    def to_json_obj(self) -> dict:
        return dict(self.__dict__)


def is_nilpotent(a: Element) -> bool:
    if a.spec.is_field:
        return (a ** a.spec.dim).is_zero()
    return any(p.is_zero() for p in _power_chain(a))


def classify_element(a: Element) -> ElementClass:
    try:
        index = compute_drazin(a).index
    except errors.NotDrazinInvertible:
        index = None
    return ElementClass(
        hermitian=is_hermitian(a),
        idempotent=a * a == a,
        unit=is_unit(a),
        nilpotent=is_nilpotent(a),
        mp_invertible=mp(a) is not None,
        group_invertible=is_group_invertible(a),
        drazin_index=index,
        core_invertible=core(a) is not None,
    )
