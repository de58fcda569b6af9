"""Bulk law checking and counterexample mining over finite carriers.

Inputs of a law with arity k are the tuples of carrier elements in
mixed-radix order (first component most significant), each component in
the carrier's row-major ascending-residue order. The weighted law's third
component ranges over the Hermitian units of the carrier only.

Random mode draws each component independently with
``random.Random(seed).randrange`` (Python's Mersenne Twister), component
by component, sample by sample.

The scan can be split into contiguous position ranges handled by worker
processes; results are merged in range order, so the report does not depend
on the worker count.
"""

from __future__ import annotations

import csv
import io
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

from . import errors, geninv, laws
from .starring import CarrierSpec, Element, dumps, finite_carrier, is_hermitian
from .verdict import Status

ENUMERATION_BOUND = 6561
WITNESS_LIMIT = 32
COUNTEREXAMPLE_LIMIT = 1024


def enumerate_carrier(spec: CarrierSpec, bound: int = ENUMERATION_BOUND) -> Iterator[Element]:
    """Every element of a finite carrier, in enumeration order."""
    if not spec.is_finite:
        raise errors.InfiniteCarrier(f"{spec.label()} is infinite")
    if spec.size > bound:
        raise errors.CarrierTooLarge(f"{spec.label()} has {spec.size} elements > bound {bound}")
    return iter(finite_carrier(spec).elements())


def hermitian_units(spec: CarrierSpec, bound: int = ENUMERATION_BOUND) -> list:
    return [e for e in enumerate_carrier(spec, bound) if is_hermitian(e) and geninv.is_unit(e)]


@dataclass(frozen=True)
class MiningJob:
    carrier: CarrierSpec
    law: Optional[str] = None  # None: classify only
    mode: str = "exhaustive"
    seed: Optional[int] = None
    samples: int = 0
    mask: frozenset = frozenset()
    max_inputs: Optional[int] = None
    time_limit: Optional[float] = None
    start: int = 0
    enumeration_bound: int = ENUMERATION_BOUND
    witness_limit: int = WITNESS_LIMIT
    counterexample_limit: int = COUNTEREXAMPLE_LIMIT

    def __post_init__(self):
        object.__setattr__(self, "mask", frozenset(self.mask))
        if self.law is not None:
            object.__setattr__(self, "law", laws.get_law(self.law).law_id)
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"mode must be 'exhaustive' or 'random', got {self.mode!r}")
        if self.mode == "random":
            if self.seed is None:
                raise ValueError("random mode needs an explicit seed")
            if self.samples <= 0:
                raise ValueError("random mode needs a positive sample count")

    def to_json_obj(self) -> dict:
        return {
            "carrier": self.carrier.to_json_obj(),
            "law": self.law,
            "mode": self.mode,
            "seed": self.seed,
            "samples": self.samples,
            "mask": sorted(self.mask),
            "max_inputs": self.max_inputs,
            "time_limit": self.time_limit,
            "start": self.start,
            "enumeration_bound": self.enumeration_bound,
            "witness_limit": self.witness_limit,
            "counterexample_limit": self.counterexample_limit,
        }


@dataclass
class MiningReport:
    job: MiningJob
    totals: dict = field(default_factory=dict)
    hypothesis_counts: dict = field(default_factory=dict)
    row_counts: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    classification: Optional[dict] = None
    partial: bool = False
    cursor: Optional[int] = None
    elapsed: float = 0.0

    @property
    def counterexample_count(self) -> int:
        return self.totals.get("counterexamples", 0)

    def to_json_obj(self, timing: bool = True) -> dict:
        out = {
            "job": self.job.to_json_obj(),
            "totals": dict(self.totals),
            "hypothesis_counts": dict(self.hypothesis_counts),
            "row_counts": dict(self.row_counts),
            "witnesses": self.witnesses,
            "counterexamples": self.counterexamples,
            "partial": self.partial,
            "cursor": self.cursor,
        }
        if self.classification is not None:
            out["classification"] = self.classification
        if timing:
            out["elapsed_seconds"] = round(self.elapsed, 6)
        return out

    def to_json(self, timing: bool = True) -> str:
        return dumps(self.to_json_obj(timing))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        c = self.job.carrier
        t = self.totals
        w.writerow([
            self.job.law or "classify", c.domain, c.modulus or "", c.dim, c.involution,
            self.job.mode, self.job.seed if self.job.seed is not None else "",
            ";".join(sorted(self.job.mask)),
            *(t.get(k, 0) for k in _TOTAL_KEYS), int(self.partial),
        ])
        return buf.getvalue()


_TOTAL_KEYS = (
    "inputs", "nonvacuous", "vacuous", "conclusion_true", "counterexamples",
    "equivalence_holds", "equivalence_fails", "both_true", "both_false",
)
CSV_COLUMNS = ("law", "domain", "modulus", "dim", "involution", "mode", "seed", "mask",
               *_TOTAL_KEYS, "partial")


# -- input space -------------------------------------------------------------

def _domains(job: MiningJob) -> list:
    els = list(enumerate_carrier(job.carrier, job.enumeration_bound)) if job.mode == "exhaustive" \
        else None
    spec = laws.get_law(job.law)
    fc = finite_carrier(job.carrier)
    if els is None:
        els = _LazyElements(fc)
    doms = [els] * spec.arity
    if spec.weighted:
        doms[-1] = hermitian_units(job.carrier, max(job.enumeration_bound, fc.size))
    return doms


class _LazyElements:
    """Index-addressable view of a carrier too big to materialize."""

    def __init__(self, fc):
        self.fc = fc

    def __len__(self):
        return self.fc.size

    def __getitem__(self, i):
        return self.fc.element_at(i)


def _total_positions(job: MiningJob, doms: list) -> int:
    if job.mode == "random":
        return job.samples
    total = 1
    for d in doms:
        total *= len(d)
    return total


def _decode(pos: int, doms: list) -> tuple:
    idx = []
    for d in reversed(doms):
        pos, r = divmod(pos, len(d))
        idx.append(r)
    return tuple(reversed(idx))


def _random_indices(job: MiningJob, doms: list) -> list:
    rng = random.Random(job.seed)
    return [tuple(rng.randrange(len(d)) for d in doms) for _ in range(job.samples)]


# -- scanning ----------------------------------------------------------------

@dataclass
class _Chunk:
    counts: Counter = field(default_factory=Counter)
    hyp: Counter = field(default_factory=Counter)
    rows: Counter = field(default_factory=Counter)
    witnesses: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    stopped_at: Optional[int] = None


def _scan(job: MiningJob, lo: int, hi: int, deadline: Optional[float]) -> _Chunk:
    spec = laws.get_law(job.law)
    doms = _domains(job)
    sample = _random_indices(job, doms) if job.mode == "random" else None
    out = _Chunk()
    for pos in range(lo, hi):
        if deadline is not None and time.monotonic() > deadline:
            out.stopped_at = pos
            break
        idx = sample[pos] if sample is not None else _decode(pos, doms)
        inputs = tuple(d[i] for d, i in zip(doms, idx))
        v = spec.checker(*inputs, strict=False)
        if job.mask:
            v = v.masked(job.mask)
        _tally(out, v, pos, job)
    return out


def _tally(out: _Chunk, v, pos: int, job: MiningJob) -> None:
    c = out.counts
    c["inputs"] += 1
    for h in v.hypotheses:
        if h.ok:
            out.hyp[h.name] += 1
    if v.status is Status.VACUOUS:
        c["vacuous"] += 1
        return
    c["nonvacuous"] += 1
    for r in v.rows:
        if r.ok:
            out.rows[r.name] += 1
    if v.is_equivalence:
        lefts = [bool(e.left) for e in v.equivalences]
        rights = [bool(e.right) for e in v.equivalences]
        if all(lefts) and all(rights):
            c["both_true"] += 1
        if not any(lefts) and not any(rights):
            c["both_false"] += 1
    entry = {"position": pos, "inputs": [e.flat() for e in v.inputs]}
    if v.status is Status.COUNTEREXAMPLE or v.status is Status.EQUIVALENCE_FAILS:
        c["counterexamples"] += 1
        if v.status is Status.EQUIVALENCE_FAILS:
            c["equivalence_fails"] += 1
            entry["failed"] = [e.name for e in v.equivalences if not e.holds]
        else:
            entry["failed"] = [r.name for r in v.rows if not r.ok]
        if len(out.counterexamples) < job.counterexample_limit:
            out.counterexamples.append(entry)
        return
    c["conclusion_true"] += 1
    if v.status is Status.EQUIVALENCE_HOLDS:
        c["equivalence_holds"] += 1
    if len(out.witnesses) < job.witness_limit:
        if v.is_equivalence:
            entry["sides"] = [[e.left, e.right] for e in v.equivalences]
        out.witnesses.append(entry)


def _scan_star(args):
    return _scan(*args)


def _split(lo: int, hi: int, parts: int) -> list:
    parts = max(1, min(parts, hi - lo)) if hi > lo else 1
    step, extra = divmod(hi - lo, parts)
    out = []
    start = lo
    for i in range(parts):
        end = start + step + (1 if i < extra else 0)
        out.append((start, end))
        start = end
    return out


def mine(job: MiningJob, workers: int = 1) -> MiningReport:
    """Run a mining job. Budget overruns return a report flagged partial
    whose ``cursor`` is the first unprocessed position (set ``start`` to
    resume)."""
    t0 = time.perf_counter()
    if not job.carrier.is_finite:
        raise errors.InfiniteCarrier(f"{job.carrier.label()} is infinite")
    if job.law is None:
        report = MiningReport(job, classification=classify_carrier(job.carrier, job.enumeration_bound))
        report.totals = {"inputs": job.carrier.size}
        report.elapsed = time.perf_counter() - t0
        return report

    doms = _domains(job)
    total = _total_positions(job, doms)
    lo = min(job.start, total)
    hi = total
    partial = False
    if job.max_inputs is not None and hi - lo > job.max_inputs:
        hi = lo + job.max_inputs
        partial = True
    deadline = None if job.time_limit is None else time.monotonic() + job.time_limit

    ranges = _split(lo, hi, workers)
    if workers > 1 and len(ranges) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_scan_star, [(job, a, b, deadline) for a, b in ranges]))
    else:
        chunks = [_scan(job, a, b, deadline) for a, b in ranges]

    merged = _Chunk()
    cursor = hi if partial else None
    for (a, b), ch in zip(ranges, chunks):
        merged.counts.update(ch.counts)
        merged.hyp.update(ch.hyp)
        merged.rows.update(ch.rows)
        merged.witnesses.extend(ch.witnesses)
        merged.counterexamples.extend(ch.counterexamples)
        if ch.stopped_at is not None:
            # keep a clean prefix: later ranges are discarded
            partial = True
            cursor = ch.stopped_at
            break

    report = MiningReport(job)
    report.totals = {k: merged.counts.get(k, 0) for k in _TOTAL_KEYS}
    report.hypothesis_counts = dict(sorted(merged.hyp.items()))
    report.row_counts = dict(sorted(merged.rows.items()))
    report.witnesses = merged.witnesses[: job.witness_limit]
    report.counterexamples = merged.counterexamples[: job.counterexample_limit]
    report.partial = partial
    report.cursor = cursor
    report.elapsed = time.perf_counter() - t0
    return report


def replay(job: MiningJob, entry: dict):
    """Re-check one report entry (witness or counterexample) through the
    law checkers and return the verdict."""
    spec = laws.get_law(job.law)
    inputs = [_element(job.carrier, flat) for flat in entry["inputs"]]
    v = spec.checker(*inputs, strict=False)
    return v.masked(job.mask) if job.mask else v


def _element(spec: CarrierSpec, flat) -> Element:
    from .starring import make_element

    return make_element(spec, flat)


# -- classification ----------------------------------------------------------

def classify_carrier(spec: CarrierSpec, bound: int = ENUMERATION_BOUND) -> dict:
    """Counts of element classes over a whole finite carrier."""
    counts = Counter()
    hist = Counter()
    for a in enumerate_carrier(spec, bound):
        cls = geninv.classify_element(a)
        for flag in ("hermitian", "idempotent", "unit", "nilpotent",
                     "mp_invertible", "group_invertible", "core_invertible"):
            counts[flag] += bool(getattr(cls, flag))
        hist[str(cls.drazin_index)] += 1
    out = {flag: counts[flag] for flag in ("hermitian", "idempotent", "unit", "nilpotent",
                                            "mp_invertible", "group_invertible", "core_invertible")}
    out["size"] = spec.size
    out["drazin_index_histogram"] = dict(sorted(hist.items()))
    return out
