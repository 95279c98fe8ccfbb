"""Command line interface.

Three verbs:

  verify NAME   run a named verification suite, exit 0 iff it passes
  search KIND   identity survey, counterexample hunt, or witness search
  dump WHAT     serialize a model, monoid, orbit, or Hasse diagram

Reports are deterministic for fixed flags.  Wall-clock facts go on
comment lines starting with "# " so byte comparison after dropping
that header is stable across runs and across --workers settings.
Exit codes: 0 pass, 1 check failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Optional

from . import idlab, models
from . import monoid as monoid_mod
from .opalg import complement_table, elements_of
from .suites import SUITES, SuiteReport

OUT_DIR_ENV = "CLOSURELAB_OUT"


@dataclass
class RunConfig:
    """Validated run parameters, one instance per invocation."""

    command: str
    n: Optional[int] = None
    m: Optional[int] = None
    M: Optional[int] = None
    n_max: Optional[int] = None
    cap: Optional[int] = None
    seed: int = idlab.DEFAULT_SEED
    out: Optional[str] = None
    format: str = "text"
    workers: int = 1


def _resolve_out(path: Optional[str]) -> Optional[str]:
    if path is None:
        return None
    base = os.environ.get(OUT_DIR_ENV)
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _emit(text: str, out: Optional[str]) -> None:
    target = _resolve_out(out)
    if target is None:
        sys.stdout.write(text)
    else:
        with open(target, "w") as fh:
            fh.write(text)


def _meta_header(argv_echo: str, elapsed: float) -> str:
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return (
        f"# closurelab {argv_echo}\n"
        f"# generated: {stamp} elapsed: {elapsed:.3f}s\n"
    )


def _render_suite(report: SuiteReport, fmt: str, argv_echo: str, elapsed: float) -> str:
    if fmt == "json":
        return json.dumps(report.data, sort_keys=True, indent=2) + "\n"
    body = "\n".join(report.lines) + "\n"
    return _meta_header(argv_echo, elapsed) + body


# ---------------------------------------------------------------------------
# verify


_SUITE_DEFAULTS = {
    "theorem1": {"n": 2},
    "kuratowski14": {"n": 4},
    "theorem2": {"n": 3},
    "fixtures": {"n": 3},
    "section4": {"m": 4},
    "example3": {"M": 10},
    "lemma6": {},
    "interior": {"n": 3},
    "pq-closure": {"n": 3},
    "remark-involution": {"n": 3},
}


def cmd_verify(args) -> int:
    name = args.name
    kwargs = dict(_SUITE_DEFAULTS[name])
    if "n" in kwargs and args.n is not None:
        kwargs["n"] = args.n
    if "m" in kwargs and args.m is not None:
        kwargs["m"] = args.m
    if "M" in kwargs and args.M is not None:
        kwargs["M"] = args.M
    if name == "theorem2":
        kwargs["samples"] = args.samples
        kwargs["seed"] = args.seed
    kwargs["workers"] = args.workers

    if args.format not in ("text", "json"):
        print("verify supports --format text or json", file=sys.stderr)
        return 2

    started = time.perf_counter()
    try:
        report = SUITES[name](**kwargs)
    except ValueError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 2
    except RuntimeError as err:
        print(f"check failed: {err}", file=sys.stderr)
        return 1
    elapsed = time.perf_counter() - started
    echo = f"verify {name}"
    _emit(_render_suite(report, args.format, echo, elapsed), args.out)
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------
# search


def cmd_search(args) -> int:
    if args.kind == "identities":
        equations, scope_desc, examined = idlab.search_identities(
            args.maxlen, n=args.n, limit=args.limit
        )
        if args.format == "json":
            payload = [
                {"lhs": lhs, "rhs": rhs, "scope": scope_desc, "status": "holds"}
                for lhs, rhs in equations
            ]
            _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
        else:
            lines = [
                f"search identities maxlen={args.maxlen} scope={scope_desc}",
                f"words examined: {examined}",
                f"equations found: {len(equations)}",
            ]
            lines += [f"{lhs or '1'} = {rhs or '1'}" for lhs, rhs in equations]
            _emit("\n".join(lines) + "\n", args.out)
        return 0

    if args.kind == "counterexample":
        if not args.eq or "=" not in args.eq:
            print("--eq LHS=RHS is required for counterexample search", file=sys.stderr)
            return 2
        lhs, rhs = (side.strip() for side in args.eq.split("=", 1))
        try:
            cert = idlab.search_counterexample(lhs, rhs, max_n=args.n, commuting=False)
        except ValueError as err:
            print(f"usage error: {err}", file=sys.stderr)
            return 2
        if args.format == "json":
            _emit(json.dumps(cert.to_json(), sort_keys=True, indent=2) + "\n", args.out)
        else:
            _emit(f"search counterexample {lhs} = {rhs}\n{cert.summary()}\n", args.out)
        return 0 if not cert.holds else 1

    if args.kind == "witness14":
        try:
            n, fixed, seed = idlab.find_kuratowski_witness()
        except RuntimeError as err:
            print(f"check failed: {err}", file=sys.stderr)
            return 1
        payload = {
            "ground_size": n,
            "fixed_points": [elements_of(m) for m in fixed],
            "seed": elements_of(seed),
        }
        if args.format == "json":
            _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
        else:
            lines = [
                "search witness14",
                f"ground size: {n}",
                "fixed points: "
                + " ".join("{" + ",".join(map(str, f)) + "}" for f in payload["fixed_points"]),
                "seed: {" + ",".join(map(str, payload["seed"])) + "}",
            ]
            _emit("\n".join(lines) + "\n", args.out)
        return 0

    print(f"unknown search kind {args.kind}", file=sys.stderr)
    return 2


# ---------------------------------------------------------------------------
# dump


def _model_from_flags(name: str, args):
    if name in ("example3-literal", "example3-repaired", "example3"):
        M = args.M if args.M is not None else 10
        variant = "literal" if name == "example3-literal" else "repaired"
        return models.example3(M, variant=variant)
    if name == "section4":
        m = args.m if args.m is not None else 4
        return models.section4_model(m)
    if name.startswith("pij(") and name.endswith(")"):
        inner = name[4:-1].split(",")
        if len(inner) != 2:
            raise ValueError(f"bad pij name {name!r}, expected pij(i,j)")
        i, j = (int(part) for part in inner)
        m = args.m if args.m is not None else 4
        return models.pij_pair(i, j, models.WindowSpec("cycle", m))
    raise ValueError(f"unknown model name {name!r}")


def _named_generators(model_name: str, args) -> dict:
    """Letter -> operator table for monoid and hasse dumps."""
    if model_name == "witness14":
        k, _seed = models.kuratowski_witness()
        return {"k": k, "c": complement_table(k.ground_size)}
    model = _model_from_flags(model_name, args)
    return {
        "p": model.p,
        "q": model.q,
        "c": complement_table(model.ground_size),
    }


def cmd_dump(args) -> int:
    try:
        if args.what == "model":
            if not args.name:
                print("dump model requires --name", file=sys.stderr)
                return 2
            model = _model_from_flags(args.name, args)
            _emit(json.dumps(model.to_json(), sort_keys=True, indent=2) + "\n", args.out)
            return 0

        if args.what in ("monoid", "hasse"):
            if not args.model:
                print(f"dump {args.what} requires --model", file=sys.stderr)
                return 2
            named = _named_generators(args.model, args)
            letters = [part.strip() for part in args.gens.split(",") if part.strip()]
            missing = [g for g in letters if g not in named]
            if missing:
                print(
                    f"generators {missing} not available for model {args.model} "
                    f"(available: {sorted(named)})",
                    file=sys.stderr,
                )
                return 2
            mon = monoid_mod.generate_monoid(
                [named[g] for g in letters],
                cap=args.cap,
                names=tuple(letters),
            )
            if args.what == "monoid":
                _emit(json.dumps(mon.to_json(), sort_keys=True, indent=2) + "\n", args.out)
                return 0
            edges = monoid_mod.hasse(mon)
            nodes = [w or "1" for w in mon.witnesses]
            payload = {
                "nodes": nodes,
                "edges": [[nodes[lo], nodes[hi]] for lo, hi in edges],
            }
            _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
            return 0

        if args.what == "orbit":
            if not (args.model and args.word and args.start):
                print("dump orbit requires --model, --word, --start", file=sys.stderr)
                return 2
            model = _model_from_flags(args.model, args)
            start = model.mask_of_names(args.start)
            rep = monoid_mod.orbit(args.word, model, start, max_iter=args.iters)
            if args.format == "json":
                payload = {
                    "word": rep.word,
                    "start": model.format_mask(rep.start),
                    "images": [model.format_mask(a) for a in rep.images],
                    "cycle_entry": rep.cycle_entry,
                    "truncated": rep.truncated,
                }
                _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
            else:
                buf = io.StringIO()
                writer = csv.writer(buf)
                writer.writerow(["step", "image"])
                for i, a in enumerate(rep.images):
                    writer.writerow([i, model.format_mask(a)])
                _emit(buf.getvalue(), args.out)
            return 0
    except (ValueError, models.ModelConstructionError) as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 2
    except RuntimeError as err:
        print(f"check failed: {err}", file=sys.stderr)
        return 1

    print(f"unknown dump target {args.what}", file=sys.stderr)
    return 2


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="closurelab",
        description="verification and search workbench for complement "
        "plus closure operator algebras on finite ground sets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", default=None, help="write output to this path")
        p.add_argument(
            "--format", default=None, choices=["text", "json", "csv"],
            help="output format (default depends on the verb)",
        )
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--seed", type=int, default=idlab.DEFAULT_SEED)

    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument("name", choices=sorted(SUITES))
    v.add_argument("--n", type=int, default=None, help="ground size scope")
    v.add_argument("--m", type=int, default=None, help="cycle half-length")
    v.add_argument("--M", type=int, default=None, help="segment endpoint")
    v.add_argument("--samples", type=int, default=25,
                   help="sampled pairs per size for theorem2")
    common(v)

    s = sub.add_parser("search", help="identity survey or counterexample hunt")
    s.add_argument("kind", choices=["identities", "counterexample", "witness14"])
    s.add_argument("--n", type=int, default=2, help="exhaustive scope bound")
    s.add_argument("--maxlen", type=int, default=13)
    s.add_argument("--limit", type=int, default=None)
    s.add_argument("--eq", default=None, help='equation "LHS=RHS" to refute')
    common(s)

    d = sub.add_parser("dump", help="serialize models and derived artifacts")
    d.add_argument("what", choices=["model", "monoid", "orbit", "hasse"])
    d.add_argument("--name", default=None, help="model name for dump model")
    d.add_argument("--model", default=None, help="model name for monoid/orbit/hasse")
    d.add_argument("--gens", default="c,k", help="comma list of generator letters")
    d.add_argument("--word", default=None)
    d.add_argument("--start", default=None, help="comma list of element names")
    d.add_argument("--iters", type=int, default=10)
    d.add_argument("--cap", type=int, default=monoid_mod.DEFAULT_CAP)
    d.add_argument("--n", type=int, default=None)
    d.add_argument("--m", type=int, default=None)
    d.add_argument("--M", type=int, default=None)
    common(d)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.format is None:
        args.format = "csv" if (args.command, getattr(args, "what", "")) == ("dump", "orbit") else "text"
        if args.command == "dump" and args.what in ("model", "monoid", "hasse"):
            args.format = "json"
    if args.command == "verify":
        return cmd_verify(args)
    if args.command == "search":
        return cmd_search(args)
    if args.command == "dump":
        return cmd_dump(args)
    return 2


if __name__ == "__main__":
    sys.exit(main())
