"""Batch JSON command line.

Every invocation runs one job and prints a single JSON document.  Exit
codes: 0 on success, 1 on input or usage errors, 2 when a mathematical
cross-check disagrees (pairing routes, oracle comparison, selftest).

Payloads are JSON, passed with --payload or on stdin (use ``--payload -``
or pipe; anything over a few KiB should come through stdin).  Output is
canonical: keys sorted, no whitespace, one trailing newline, so identical
jobs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

import jsonschema

from . import selftest
from .cft import lang_kernel_census, pi1_truncated, witt_group_structure_brute
from .duality import FormalWittElement, cartier_pair, geometric_pair
from .errors import WittError
from .ptypical import artin_hasse_exp
from .ring import CoeffRing
from .series import TruncatedSeries
from .witt import (
    WittCoordinates,
    WittElement,
    decompose,
    from_coordinates,
    witt_add,
    witt_coordinates,
    witt_mul,
    witt_neg,
)

SCHEMA_VERSION = "1"

RING_SCHEMA = {
    "type": "object",
    "properties": {
        "p": {"type": "integer", "minimum": 2},
        "e": {"type": "integer", "minimum": 1},
        "modulus": {"type": "array", "items": {"type": "integer"}},
        "nil": {"type": "integer", "minimum": 1},
    },
    "required": ["p", "e", "modulus"],
    "additionalProperties": False,
}

JOB_SCHEMA = {
    "type": "object",
    "properties": {
        "command": {
            "enum": [
                "add",
                "neg",
                "mul",
                "coords",
                "from-coords",
                "decompose",
                "ah-exp",
                "pair",
                "pi1",
                "lang-census",
                "selftest",
            ]
        },
        "ring": RING_SCHEMA,
        "n": {"type": "integer", "minimum": 1},
        "d": {"type": "integer", "minimum": 1},
        "m": {"type": "integer", "minimum": 1},
        "q": {"type": "integer", "minimum": 2},
        "s": {"type": "integer", "minimum": 1},
        "seed": {"type": "integer"},
        "mode": {"enum": ["algebraic", "geometric", "both"]},
        "oracle": {"type": "boolean"},
        "suite": {"type": "string"},
        "payload": {"type": "object"},
    },
    "required": ["command"],
    "additionalProperties": False,
}


@dataclass
class JobSpec:
    command: str
    ring: dict | None = None
    n: int | None = None
    d: int | None = None
    m: int | None = None
    q: int | None = None
    s: int | None = None
    seed: int = 0
    mode: str = "both"
    oracle: bool = False
    suite: str = "all"
    payload: dict = field(default_factory=dict)

    def to_dict(self):
        out = {"command": self.command, "seed": self.seed, "payload": self.payload}
        for key in ("ring", "n", "d", "m", "q", "s"):
            v = getattr(self, key)
            if v is not None:
                out[key] = v
        if self.command == "pair":
            out["mode"] = self.mode
        if self.command == "pi1":
            out["oracle"] = self.oracle
        if self.command == "selftest":
            out["suite"] = self.suite
        return out


def _need(job: JobSpec, *names):
    for name in names:
        if getattr(job, name) is None:
            raise ValueError(f"command {job.command!r} needs --{name}")


def _ring(job: JobSpec) -> CoeffRing:
    if job.ring is None:
        raise ValueError(f"command {job.command!r} needs --ring")
    return CoeffRing.from_json_dict(job.ring)


def _series_in(ring: CoeffRing, payload, key) -> WittElement:
    if key not in payload:
        raise ValueError(f"payload needs {key!r}")
    return WittElement.from_json_dict(ring, payload[key])


def run(job: JobSpec):
    """Execute one job; returns (exit_code, result_dict)."""
    jsonschema.validate(job.to_dict(), JOB_SCHEMA)
    cmd = job.command

    if cmd in ("add", "mul"):
        ring = _ring(job)
        a = _series_in(ring, job.payload, "a")
        b = _series_in(ring, job.payload, "b")
        out = witt_add(a, b) if cmd == "add" else witt_mul(a, b)
        return 0, {"result": out.to_json_dict()}

    if cmd == "neg":
        ring = _ring(job)
        a = _series_in(ring, job.payload, "a")
        return 0, {"result": witt_neg(a).to_json_dict()}

    if cmd == "coords":
        ring = _ring(job)
        a = _series_in(ring, job.payload, "a")
        return 0, {"result": witt_coordinates(a).to_json_dict()}

    if cmd == "from-coords":
        ring = _ring(job)
        _need(job, "n", "d")
        coords = WittCoordinates.from_json_dict(ring, job.n, job.d, job.payload)
        return 0, {"result": from_coordinates(coords).to_json_dict()}

    if cmd == "decompose":
        ring = _ring(job)
        a = _series_in(ring, job.payload, "a")
        fam = decompose(a)
        comps = [
            {"nu": list(nu), "series": fam.components[nu].to_json_dict()}
            for nu in sorted(fam.components)
        ]
        return 0, {"components": comps}

    if cmd == "ah-exp":
        ring = _ring(job)
        _need(job, "d")
        if "x" not in job.payload:
            raise ValueError("payload needs 'x'")
        x = ring.element(job.payload["x"])
        j = int(job.payload.get("j", 1))
        return 0, {"result": artin_hasse_exp(x, j, job.d).to_json_dict()}

    if cmd == "pair":
        ring = _ring(job)
        if "f" not in job.payload or "g" not in job.payload:
            raise ValueError("payload needs 'f' and 'g'")
        f = FormalWittElement(TruncatedSeries.from_json_dict(ring, job.payload["f"]))
        base = CoeffRing(ring.field, 1)
        g = WittElement.from_json_dict(base, job.payload["g"])
        result = {}
        if job.mode in ("algebraic", "both"):
            va = cartier_pair(f, g, job.d)
            result["algebraic"] = ring.raw_to_coords(va.raw)
        if job.mode in ("geometric", "both"):
            m = job.m if job.m is not None else g.d - 1
            vg = geometric_pair(f, g, m)
            result["geometric"] = ring.raw_to_coords(vg.raw)
        if job.mode == "both":
            result["agree"] = result["algebraic"] == result["geometric"]
            if not result["agree"]:
                return 2, result
        return 0, result

    if cmd == "pi1":
        _need(job, "n", "q", "d")
        structure = pi1_truncated(job.n, job.q, job.d)
        result = structure.to_json_dict()
        if job.oracle:
            oracle = witt_group_structure_brute(CoeffRing.make(job.q), job.n, job.d)
            result["oracle_factors"] = list(oracle.invariant_factors)
            if oracle.invariant_factors != structure.invariant_factors:
                result["agree"] = False
                return 2, result
            result["agree"] = True
        return 0, result

    if cmd == "lang-census":
        _need(job, "n", "q", "s", "d")
        census = lang_kernel_census(job.n, job.q, job.s, job.d, seed=job.seed)
        return (0 if census.matches else 2), census.to_json_dict()

    if cmd == "selftest":
        summary = selftest.run_suite(job.suite, seed=job.seed)
        return (0 if summary["failed"] == 0 else 2), summary

    raise ValueError(f"unknown command {cmd!r}")


def _read_payload(value: str | None) -> dict:
    if value is None:
        return {}
    text = sys.stdin.read().strip() if value == "-" else value
    if not text:
        return {}
    doc = json.loads(text)
    if not isinstance(doc, dict):
        raise ValueError("payload must be a JSON object")
    return doc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multiwitt", description="truncated multivariable Witt vector calculator"
    )
    parser.add_argument(
        "--version", action="version", version=f"multiwitt 0.1.0 (schema {SCHEMA_VERSION})"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, ring=False, shape=()):
        if ring:
            sp.add_argument("--ring", help="ring descriptor JSON")
        for name in shape:
            sp.add_argument(f"--{name}", type=int)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--payload", help="payload JSON ('-' for stdin)")

    for name in ("add", "neg", "mul", "coords", "decompose"):
        common(sub.add_parser(name), ring=True)
    common(sub.add_parser("from-coords"), ring=True, shape=("n", "d"))
    common(sub.add_parser("ah-exp"), ring=True, shape=("d",))

    pair = sub.add_parser("pair")
    common(pair, ring=True, shape=("d", "m"))
    mode = pair.add_mutually_exclusive_group()
    mode.add_argument("--algebraic", action="store_const", const="algebraic", dest="mode")
    mode.add_argument("--geometric", action="store_const", const="geometric", dest="mode")
    mode.add_argument("--both", action="store_const", const="both", dest="mode")
    pair.set_defaults(mode="both")

    pi1 = sub.add_parser("pi1")
    common(pi1, shape=("n", "q", "d"))
    pi1.add_argument("--oracle", action="store_true")

    common(sub.add_parser("lang-census"), shape=("n", "q", "s", "d"))

    st = sub.add_parser("selftest")
    st.add_argument("--suite", default="all")
    st.add_argument("--seed", type=int, default=0)
    return parser


def job_from_args(args) -> JobSpec:
    payload = _read_payload(getattr(args, "payload", None))
    ring = json.loads(args.ring) if getattr(args, "ring", None) else None
    return JobSpec(
        command=args.command,
        ring=ring,
        n=getattr(args, "n", None),
        d=getattr(args, "d", None),
        m=getattr(args, "m", None),
        q=getattr(args, "q", None),
        s=getattr(args, "s", None),
        seed=getattr(args, "seed", 0),
        mode=getattr(args, "mode", "both"),
        oracle=getattr(args, "oracle", False),
        suite=getattr(args, "suite", "all"),
        payload=payload,
    )


def emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        job = job_from_args(args)
        code, result = run(job)
    except (WittError, ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        emit({"error": {"kind": type(exc).__name__, "detail": str(exc)}})
        return 1
    except jsonschema.ValidationError as exc:
        emit({"error": {"kind": "SchemaError", "detail": exc.message}})
        return 1
    emit(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
