"""Command-line driver: ``starinv {compute,verify,classify,law,mine}``.

Exit codes
  0  success (law holds, vacuous, or equivalence holds; mining found nothing)
  1  bad input: parse errors, carrier mismatch, invalid weight, carrier
     too large or infinite, bad flags
  2  the requested inverse does not exist
  3  a law fails (COUNTEREXAMPLE / EquivalenceFails), a mining run found
     counterexamples, or ``verify`` rejected the candidate
  4  mining budget exhausted; the partial report is still written

Element sources are a file path, ``-`` for stdin, or inline text such as
``"[Q 2] 1 1 / 0 0"``. Files may hold the text format or element JSON.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

from . import errors, geninv, laws, search
from .starring import (CarrierSpec, dumps, element_from_json_obj, format_element,
                       parse_element, same_carrier)
from .verdict import Status

EXIT_OK, EXIT_INPUT, EXIT_NOT_INVERTIBLE, EXIT_LAW_FAILS, EXIT_PARTIAL = 0, 1, 2, 3, 4


@dataclass(frozen=True)
class CliConfig:
    enumeration_bound: int = search.ENUMERATION_BOUND
    worker_count: int = 1
    output_format: str = "json"
    seed: Optional[int] = None
    report_paths: tuple = ()

    def __post_init__(self):
        if self.worker_count < 1:
            raise ValueError("worker count must be at least 1")
        if self.enumeration_bound < 1:
            raise ValueError("enumeration bound must be at least 1")
        if self.output_format not in ("json", "csv", "text"):
            raise ValueError(f"unknown output format {self.output_format!r}")


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors, which would collide with "not invertible"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def read_source(src: str, stdin=None) -> str:
    if src == "-":
        return (stdin or sys.stdin).read()
    if os.path.isfile(src):
        with open(src, encoding="utf-8") as fh:
            return fh.read()
    return src


def load_element(src: str, involution: Optional[str] = None, stdin=None):
    text = read_source(src, stdin)
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise errors.NonCanonicalScalar(f"bad element JSON: {exc}") from None
        return element_from_json_obj(obj)
    return parse_element(text, involution)


def _emit(text: str, path: Optional[str] = None, out=None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        (out or sys.stdout).write(text)


# -- subcommands -------------------------------------------------------------

def cmd_compute(args, out) -> int:
    a = load_element(args.input, args.involution, args._stdin)
    w = load_element(args.weight, args.involution, args._stdin) if args.weight else None
    try:
        res = geninv.compute(a, args.kind, weight=w, method=args.method)
    except errors.NotInvertible as exc:
        _emit(dumps({"status": "NotInvertible", "error": type(exc).__name__,
                     "kind": geninv.parse_kind(args.kind).value, "reason": exc.reason}),
              args.output, out)
        return EXIT_NOT_INVERTIBLE
    if args.format == "text":
        lines = [format_element(res.value).rstrip("\n")]
        if res.index is not None:
            lines.append(f"index {res.index}")
        for r in res.trace.rows:
            lines.append(f"{'ok  ' if r.equal else 'FAIL'} {r.label}")
        _emit("\n".join(lines) + "\n", args.output, out)
    else:
        _emit(dumps({"status": "ok", **res.to_json_obj()}), args.output, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    a = load_element(args.input, args.involution, args._stdin)
    x = load_element(args.candidate, args.involution, args._stdin)
    w = load_element(args.weight, args.involution, args._stdin) if args.weight else None
    same_carrier([a, x] + ([w] if w is not None else []))
    tag = geninv.parse_kind(args.kind)
    if tag is geninv.Kind.WEIGHTED_CORE and w is None:
        raise errors.InvalidWeight("weighted core verification needs --weight")
    kind = geninv.InverseKind(tag, w if tag is geninv.Kind.WEIGHTED_CORE else None)
    trace = geninv.verify_inverse(a, x, kind, index=args.index)
    _emit(dumps({"kind": tag.value, "passed": trace.passed, "trace": trace.to_json_obj()}),
          args.output, out)
    return EXIT_OK if trace.passed else EXIT_LAW_FAILS


def _carrier_from_args(args) -> Optional[CarrierSpec]:
    if args.domain is None:
        return None
    if args.dim is None:
        raise errors.DimensionMismatch("--dim is required with --domain")
    return CarrierSpec(args.domain, args.dim, args.modulus, args.involution)


def cmd_classify(args, out) -> int:
    spec = _carrier_from_args(args)
    if spec is not None:
        if args.input:
            raise ValueError("give either an element or carrier flags, not both")
        obj = {"carrier": spec.to_json_obj(),
               "classification": search.classify_carrier(spec, args.bound)}
    elif args.input:
        a = load_element(args.input, args.involution, args._stdin)
        obj = {"element": a.to_json_obj(), **geninv.classify_element(a).to_json_obj()}
    else:
        raise ValueError("classify needs an element or --domain/--dim")
    _emit(dumps(obj), args.output, out)
    return EXIT_OK


def cmd_law(args, out) -> int:
    spec = laws.get_law(args.id)
    elems = [load_element(s, args.involution, args._stdin) for s in args.inputs]
    if len(elems) != spec.arity:
        raise ValueError(f"law {spec.law_id} takes {spec.arity} inputs, got {len(elems)}")
    same_carrier(elems)
    v = spec.checker(*elems, strict=False)
    if args.mask:
        v = v.masked(args.mask)
    _emit(dumps(v.to_json_obj()), args.output, out)
    if v.status in (Status.COUNTEREXAMPLE, Status.EQUIVALENCE_FAILS):
        return EXIT_LAW_FAILS
    return EXIT_OK


def cmd_mine(args, out) -> int:
    cfg = CliConfig(enumeration_bound=args.bound, worker_count=args.workers,
                    output_format=args.format, seed=args.seed,
                    report_paths=tuple(p for p in (args.output, args.csv) if p))
    spec = _carrier_from_args(args)
    if spec is None:
        raise ValueError("mine needs --domain and --dim")
    job = search.MiningJob(
        carrier=spec, law=args.law, mode=args.mode, seed=cfg.seed,
        samples=args.samples or 0, mask=frozenset(args.mask or ()),
        max_inputs=args.max_inputs, time_limit=args.time_limit, start=args.start,
        enumeration_bound=cfg.enumeration_bound,
    )
    report = search.mine(job, workers=cfg.worker_count)
    if cfg.output_format == "csv" and not args.output:
        _emit(report.to_csv(), None, out)
    else:
        _emit(report.to_json(), args.output, out)
    if args.csv:
        _emit(report.to_csv(), args.csv, out)
    if report.counterexample_count:
        return EXIT_LAW_FAILS
    if report.partial:
        return EXIT_PARTIAL
    return EXIT_OK


# -- argument parsing --------------------------------------------------------

_KINDS = [k.value for k in geninv.Kind]

# option defaults, applied after any --config file
_DEFAULTS = {
    "method": "auto", "format": "json", "bound": search.ENUMERATION_BOUND, "workers": 1,
    "mode": "exhaustive", "start": 0,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="starinv", description="Generalized inverses and reverse-order laws "
                "for core inverses in rings with involution.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--config", help="JSON file of option defaults; flags override it")
        sp.add_argument("--involution", default=None,
                        choices=["conjugate-transpose", "transpose", "identity"])
        sp.add_argument("--output", "-o", default=None, help="write the report here")
        sp.add_argument("--format", choices=["json", "text", "csv"], default=None)

    def carrier(sp):
        sp.add_argument("--domain", default=None, help="Q, QI or ZN")
        sp.add_argument("--dim", type=int, default=None)
        sp.add_argument("--modulus", type=int, default=None)
        sp.add_argument("--bound", type=int, default=None, help="enumeration bound")

    c = sub.add_parser("compute", help="compute a generalized inverse")
    common(c)
    c.add_argument("--kind", required=True, choices=_KINDS)
    c.add_argument("--weight", help="weight element e for the weighted core inverse")
    c.add_argument("--method", choices=["auto", "scan", "linear", "factor"], default=None)
    c.add_argument("input")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="check a candidate inverse against its defining equations")
    common(v)
    v.add_argument("--kind", required=True, choices=_KINDS)
    v.add_argument("--weight")
    v.add_argument("--index", type=int, default=None, help="Drazin index k")
    v.add_argument("input")
    v.add_argument("candidate")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("classify", help="classify an element, or a whole finite carrier")
    common(k)
    carrier(k)
    k.add_argument("input", nargs="?")
    k.set_defaults(func=cmd_classify)

    law = sub.add_parser("law", help="check one law on concrete inputs")
    common(law)
    law.add_argument("--id", required=True, help=f"one of {', '.join(laws.LAWS)}")
    law.add_argument("--mask", action="append", default=None,
                     help="hypothesis name to ignore (repeatable)")
    law.add_argument("inputs", nargs="+")
    law.set_defaults(func=cmd_law)

    m = sub.add_parser("mine", help="check a law over every input tuple of a finite carrier")
    common(m)
    carrier(m)
    m.add_argument("--law", default=None, help="law id; omit to classify the carrier")
    m.add_argument("--mode", choices=["exhaustive", "random"], default=None)
    m.add_argument("--seed", type=int, default=None)
    m.add_argument("--samples", type=int, default=None)
    m.add_argument("--mask", action="append", default=None)
    m.add_argument("--max-inputs", type=int, default=None)
    m.add_argument("--time-limit", type=float, default=None, help="seconds")
    m.add_argument("--start", type=int, default=None, help="resume from this cursor")
    m.add_argument("--workers", type=int, default=None)
    m.add_argument("--csv", default=None, help="also write a one-row CSV summary here")
    m.set_defaults(func=cmd_mine)
    return p


def _apply_config(args) -> None:
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as fh:
            cfg = json.load(fh)
        if not isinstance(cfg, dict):
            raise ValueError("config file must hold a JSON object")
        for key, value in cfg.items():
            dest = key.replace("-", "_")
            if not hasattr(args, dest):
                raise ValueError(f"unknown config key {key!r} for {args.command}")
            if getattr(args, dest) is None:
                setattr(args, dest, value)
    for dest, value in _DEFAULTS.items():
        if hasattr(args, dest) and getattr(args, dest) is None:
            setattr(args, dest, value)


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args._stdin = stdin
    try:
        _apply_config(args)
        return args.func(args, stdout)
    except errors.NotInvertible as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_NOT_INVERTIBLE
    except (errors.StarRingError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        stderr.write(f"error: {type(exc).__name__}: {msg}\n")
        return EXIT_INPUT


def main_exit() -> None:
    sys.exit(main())
