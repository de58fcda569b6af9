"""Concrete rings with involution.

Four carrier families are supported, all with exact arithmetic:

* ``Q``  -- square matrices over the rationals (``fractions.Fraction``),
* ``QI`` -- square matrices over the Gaussian rationals,
* ``ZN`` -- square matrices over the integers modulo ``n``.

A ``dim == 1`` carrier is the scalar ring itself, stored as 1x1 matrices so
that scalars and matrices share one code path.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    InfiniteCarrier,
    InvalidCarrier,
    ModulusOutOfRange,
    NonCanonicalScalar,
    SpecMismatch,
)
from .gaussian import GaussianRational

DOMAINS = ("Q", "QI", "ZN")
INVOLUTIONS = ("conjugate-transpose", "transpose", "identity")

_DOMAIN_ALIASES = {
    "q": "Q", "exact-rational": "Q", "rational": "Q",
    "qi": "QI", "gaussian-rational": "QI", "gaussian": "QI",
    "zn": "ZN", "integers-mod-n": "ZN", "z": "ZN",
}


def normalize_domain(name: str) -> str:
    key = name.strip()
    if key in DOMAINS:
        return key
    try:
        return _DOMAIN_ALIASES[key.lower()]
    except KeyError:
        raise InvalidCarrier(f"unknown scalar domain {name!r}") from None


@dataclass(frozen=True)
class CarrierSpec:
    """Scalar domain, matrix side length and involution of a *-ring."""

    domain: str
    dim: int
    modulus: Optional[int] = None
    involution: Optional[str] = None

    def __post_init__(self):
        domain = normalize_domain(self.domain)
        object.__setattr__(self, "domain", domain)
        if not isinstance(self.dim, int) or self.dim < 1:
            raise InvalidCarrier(f"dim must be a positive integer, got {self.dim!r}")
        if domain == "ZN":
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise ModulusOutOfRange(f"modulus must be an integer >= 2, got {self.modulus!r}")
        elif self.modulus is not None:
            raise InvalidCarrier("modulus is only meaningful for the ZN domain")

        inv = self.involution
        if inv is None:
            if domain == "QI":
                inv = "conjugate-transpose"
            else:
                inv = "identity" if self.dim == 1 else "transpose"
            object.__setattr__(self, "involution", inv)
        if inv not in INVOLUTIONS:
            raise InvalidCarrier(f"unknown involution {inv!r}")
        if inv == "identity" and self.dim != 1:
            raise InvalidCarrier("identity involution is only an involution on commutative (dim 1) carriers")
        if inv == "transpose" and domain == "QI":
            raise InvalidCarrier("transpose over Gaussian rationals is not supported; use conjugate-transpose")
        if inv == "conjugate-transpose" and domain == "ZN":
            raise InvalidCarrier("conjugate-transpose needs a conjugation; ZN has none, use transpose")

    @property
    def is_finite(self) -> bool:
        return self.domain == "ZN"

    @property
    def is_field(self) -> bool:
        """True when the scalars form a field (Q or Q(i))."""
        return self.domain in ("Q", "QI")

    @property
    def size(self) -> Optional[int]:
        if not self.is_finite:
            return None
        return self.modulus ** (self.dim * self.dim)

    def label(self) -> str:
        if self.domain == "ZN":
            base = f"Z_{self.modulus}"
        else:
            base = self.domain
        if self.dim == 1:
            return f"{base} ({self.involution})"
        return f"M_{self.dim}({base}) ({self.involution})"

    def to_json_obj(self) -> dict:
        return {
            "domain": self.domain,
            "dim": self.dim,
            "modulus": self.modulus,
            "involution": self.involution,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "CarrierSpec":
        return cls(obj["domain"], int(obj["dim"]), obj.get("modulus"), obj.get("involution"))


# -- scalars -----------------------------------------------------------------

def parse_scalar(spec: CarrierSpec, value):
    """Convert ``value`` to the canonical scalar of ``spec``'s domain."""
    try:
        if spec.domain == "ZN":
            if isinstance(value, bool):
                value = int(value)
            if isinstance(value, str):
                value = Fraction(value.strip())
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise NonCanonicalScalar(f"{value} is not an integer residue")
                value = value.numerator
            if isinstance(value, (int, np.integer)):
                return int(value) % spec.modulus
            raise NonCanonicalScalar(f"cannot read {value!r} as a residue mod {spec.modulus}")
        if spec.domain == "Q":
            if isinstance(value, GaussianRational):
                if value.im:
                    raise NonCanonicalScalar(f"{value} is not rational")
                return value.re
            if isinstance(value, str):
                return Fraction(value.strip())
            if isinstance(value, (int, np.integer, Fraction)):
                return Fraction(int(value)) if isinstance(value, np.integer) else Fraction(value)
            raise NonCanonicalScalar(f"cannot read {value!r} as a rational")
        if isinstance(value, str):
            return GaussianRational.parse(value)
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        if isinstance(value, complex):
            raise NonCanonicalScalar("floating-point complex numbers are not exact")
        raise NonCanonicalScalar(f"cannot read {value!r} as a Gaussian rational")
    except ZeroDivisionError:
        raise NonCanonicalScalar(f"zero denominator in {value!r}") from None
    except ValueError as exc:
        raise NonCanonicalScalar(str(exc)) from None


def _fmt_scalar(spec: CarrierSpec, s) -> str:
    return str(s)


def _json_scalar(spec: CarrierSpec, s):
    if spec.domain == "ZN":
        return s
    return str(s)


# -- elements ----------------------------------------------------------------

class Element:
    """An immutable element of a carrier: a dim x dim matrix of exact scalars.

    Supports ``+ - *`` (ring product), unary ``-``, ``**`` with a non-negative
    integer exponent and integers as the embedded multiples of unity.
    """

    __slots__ = ("spec", "entries", "_hash")

    def __init__(self, spec: CarrierSpec, entries):
        # Trusted constructor: entries must already be canonical.
        self.spec = spec
        self.entries = entries
        self._hash = None

    # construction helpers
    @classmethod
    def _from_rows(cls, spec, rows) -> "Element":
        if spec.domain == "ZN":
            n = spec.modulus
            return cls(spec, tuple(tuple(x % n for x in row) for row in rows))
        return cls(spec, tuple(tuple(row) for row in rows))

    def _check(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if other.spec != self.spec:
            raise SpecMismatch(f"{self.spec.label()} vs {other.spec.label()}")

    def _lift(self, other):
        if isinstance(other, (int, np.integer)):
            return scalar(self.spec, int(other))
        return other

    def __add__(self, other):
        other = self._lift(other)
        self._check(other)
        return Element._from_rows(
            self.spec,
            ([x + y for x, y in zip(r, s)] for r, s in zip(self.entries, other.entries)),
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        self._check(other)
        return Element._from_rows(
            self.spec,
            ([x - y for x, y in zip(r, s)] for r, s in zip(self.entries, other.entries)),
        )

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return Element._from_rows(self.spec, ([-x for x in r] for r in self.entries))

    def __mul__(self, other):
        other = self._lift(other)
        self._check(other)
        cols = list(zip(*other.entries))
        rows = []
        for r in self.entries:
            row = []
            for c in cols:
                acc = r[0] * c[0]
                for x, y in zip(r[1:], c[1:]):
                    acc = acc + x * y
                row.append(acc)
            rows.append(row)
        return Element._from_rows(self.spec, rows)

    def __rmul__(self, other):
        return self._lift(other) * self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are defined")
        result = one(self.spec)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def star(self) -> "Element":
        """Apply the carrier's involution."""
        spec = self.spec
        if spec.involution == "identity":
            return self
        rows = zip(*self.entries)
        if spec.domain == "QI":
            rows = ([x.conjugate() for x in r] for r in rows)
        return Element(spec, tuple(tuple(r) for r in rows))

    def is_zero(self) -> bool:
        return not any(x for r in self.entries for x in r)

    def is_one(self) -> bool:
        return self == one(self.spec)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.spec == other.spec and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.spec, self.entries))
        return self._hash

    def __repr__(self):
        if self.spec.dim == 1:
            return f"Element({self.entries[0][0]} in {self.spec.label()})"
        rows = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.entries)
        return f"Element([{rows}] in {self.spec.label()})"

    def to_array(self) -> np.ndarray:
        """int64 array of residues; ZN carriers only."""
        if self.spec.domain != "ZN":
            raise InfiniteCarrier("numpy view is only available for ZN carriers")
        return np.array(self.entries, dtype=np.int64)

    def to_json_obj(self) -> dict:
        return {
            "spec": self.spec.to_json_obj(),
            "entries": [[_json_scalar(self.spec, x) for x in r] for r in self.entries],
        }

    def flat(self) -> list:
        """Entries in row-major order, as JSON-friendly scalars."""
        return [_json_scalar(self.spec, x) for r in self.entries for x in r]


RingElement = Element


def make_element(spec: CarrierSpec, entries) -> Element:
    """Build a canonical element from a flat or nested sequence of scalars."""
    d = spec.dim
    flat = _flatten(entries, d)
    if len(flat) != d * d:
        raise DimensionMismatch(f"expected {d * d} entries for dim {d}, got {len(flat)}")
    vals = [parse_scalar(spec, v) for v in flat]
    return Element(spec, tuple(tuple(vals[i * d:(i + 1) * d]) for i in range(d)))


def _flatten(entries, d):
    if isinstance(entries, (str, bytes)) or not isinstance(entries, Iterable):
        return [entries]
    items = list(entries)
    if items and all(isinstance(r, (list, tuple, np.ndarray)) for r in items):
        if len(items) != d or any(len(r) != d for r in items):
            raise DimensionMismatch(f"expected a {d}x{d} array")
        return [x for r in items for x in r]
    return items


def scalar(spec: CarrierSpec, k) -> Element:
    """The element k*1."""
    k = parse_scalar(spec, k)
    z = parse_scalar(spec, 0)
    d = spec.dim
    return Element(spec, tuple(tuple(k if i == j else z for j in range(d)) for i in range(d)))


def zero(spec: CarrierSpec) -> Element:
    return scalar(spec, 0)


def one(spec: CarrierSpec) -> Element:
    return scalar(spec, 1)


def is_hermitian(a: Element) -> bool:
    return a.star() == a


def is_idempotent(a: Element) -> bool:
    return a * a == a


# -- finite carriers ---------------------------------------------------------

class FiniteCarrier:
    """Indexed view of every element of a ZN carrier.

    Element ``i`` has the base-n digits of ``i`` as its row-major entries,
    most significant digit first; so index order is the row-major,
    ascending-residue enumeration order used everywhere in the package.
    """

    def __init__(self, spec: CarrierSpec):
        if not spec.is_finite:
            raise InfiniteCarrier(f"{spec.label()} is infinite")
        self.spec = spec
        self.n = spec.modulus
        self.dim = spec.dim
        self.size = spec.size
        self._stack = None
        self._elements = None
        self._weights = self.n ** np.arange(self.dim * self.dim - 1, -1, -1, dtype=np.int64)

    @property
    def stack(self) -> np.ndarray:
        """All elements as an int64 array of shape (size, dim, dim)."""
        if self._stack is None:
            idx = np.arange(self.size, dtype=np.int64)
            digits = (idx[:, None] // self._weights[None, :]) % self.n
            self._stack = digits.reshape(self.size, self.dim, self.dim)
            self._stack.setflags(write=False)
        return self._stack

    def element_at(self, i: int) -> Element:
        if self._elements is not None:
            return self._elements[i]
        d, n = self.dim, self.n
        digits = []
        for _ in range(d * d):
            digits.append(i % n)
            i //= n
        digits.reverse()
        return Element(self.spec, tuple(tuple(digits[r * d:(r + 1) * d]) for r in range(d)))

    def elements(self) -> list:
        if self._elements is None:
            self._elements = [self.element_at(i) for i in range(self.size)]
        return self._elements

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements())

    def __len__(self):
        return self.size

    def index_of(self, a: Element) -> int:
        i = 0
        for x in (x for r in a.entries for x in r):
            i = i * self.n + x
        return i

    def encode(self, arrays: np.ndarray) -> np.ndarray:
        """Indices of a (k, dim, dim) array of residues."""
        flat = arrays.reshape(arrays.shape[0], -1) % self.n
        return flat @ self._weights

    def from_array(self, arr: np.ndarray) -> Element:
        return Element._from_rows(self.spec, arr.tolist())

    def matmul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.matmul(x, y) % self.n

    def star_stack(self, x: np.ndarray) -> np.ndarray:
        """Involution applied to a stack (or a single matrix)."""
        if self.spec.involution == "identity":
            return x
        return np.swapaxes(x, -1, -2)


@lru_cache(maxsize=64)
def finite_carrier(spec: CarrierSpec) -> FiniteCarrier:
    return FiniteCarrier(spec)


def is_proper_witness(spec: CarrierSpec, budget: int = 4096, seed: int = 0) -> Optional[Element]:
    """Look for a nonzero a with a*a = 0.

    Finite carriers are scanned in enumeration order (at most ``budget``
    elements); for the rational carriers, ``budget`` random elements with
    small entries are drawn from a generator seeded with ``seed``.
    Returns the first witness found, or None.
    """
    if spec.is_finite:
        fc = finite_carrier(spec)
        limit = min(budget, fc.size)
        if limit <= 0:
            return None
        X = fc.stack[:limit]
        prod = fc.matmul(fc.star_stack(X), X)
        hits = np.flatnonzero(~prod.reshape(limit, -1).any(axis=1) & X.reshape(limit, -1).any(axis=1))
        return fc.element_at(int(hits[0])) if hits.size else None
    rng = random.Random(seed)
    for _ in range(budget):
        a = random_element(spec, rng)
        if not a.is_zero() and (a.star() * a).is_zero():
            return a
    return None


def random_element(spec: CarrierSpec, rng: random.Random, bound: int = 3) -> Element:
    """Random element; rationals use numerators in [-bound, bound] and
    denominators in [1, bound]."""
    d = spec.dim
    vals = []
    for _ in range(d * d):
        if spec.domain == "ZN":
            vals.append(rng.randrange(spec.modulus))
        elif spec.domain == "Q":
            vals.append(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))
        else:
            vals.append(GaussianRational(
                Fraction(rng.randint(-bound, bound), rng.randint(1, bound)),
                Fraction(rng.randint(-bound, bound), rng.randint(1, bound)),
            ))
    return make_element(spec, vals)


# -- text and JSON formats ---------------------------------------------------

def parse_element(text: str, involution: Optional[str] = None) -> Element:
    """Read the text matrix format.

    Header ``<domain> <dim> [modulus]`` (domain in Q, QI, ZN), then dim*dim
    scalars. Square brackets around the header, ``/`` row separators and
    newlines are all optional, so ``"[Q 2] 1 1 / 0 0"`` and the multi-line
    form are both accepted. An optional ``involution=<name>`` token may
    follow the header.
    """
    tokens = text.replace("[", " ").replace("]", " ").split()
    tokens = [t for t in tokens if t != "/"]
    if len(tokens) < 2:
        raise NonCanonicalScalar("missing header '<domain> <dim> [modulus]'")
    domain = normalize_domain(tokens[0])
    try:
        dim = int(tokens[1])
    except ValueError:
        raise DimensionMismatch(f"bad dimension {tokens[1]!r}") from None
    pos = 2
    modulus = None
    if domain == "ZN":
        if len(tokens) < 3:
            raise ModulusOutOfRange("ZN header needs a modulus")
        try:
            modulus = int(tokens[2])
        except ValueError:
            raise ModulusOutOfRange(f"bad modulus {tokens[2]!r}") from None
        pos = 3
    if pos < len(tokens) and tokens[pos].startswith("involution="):
        involution = tokens[pos].split("=", 1)[1]
        pos += 1
    spec = CarrierSpec(domain, dim, modulus, involution)
    return make_element(spec, tokens[pos:])


def format_element(a: Element) -> str:
    spec = a.spec
    head = f"{spec.domain} {spec.dim}"
    if spec.modulus is not None:
        head += f" {spec.modulus}"
    if spec.involution != CarrierSpec(spec.domain, spec.dim, spec.modulus).involution:
        head += f" involution={spec.involution}"
    rows = [" ".join(_fmt_scalar(spec, x) for x in r) for r in a.entries]
    return "\n".join([head, *rows]) + "\n"


def element_from_json_obj(obj: dict) -> Element:
    spec = CarrierSpec.from_json_obj(obj["spec"])
    return make_element(spec, obj["entries"])


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing LF."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def element_to_json(a: Element) -> str:
    return dumps(a.to_json_obj())


def element_from_json(text: str) -> Element:
    return element_from_json_obj(json.loads(text))


def same_carrier(elements: Sequence[Element]) -> CarrierSpec:
    spec = elements[0].spec
    for e in elements[1:]:
        if e.spec != spec:
            raise SpecMismatch(f"{spec.label()} vs {e.spec.label()}")
    return spec
