"""
Command line entry point.

Exit codes: 0 success, 1 internal inconsistency or classifier disagreement,
2 bad input or an exceeded desk-scale guard.
"""

from __future__ import annotations

import argparse
import itertools
import json
import logging
import os
import sys
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterator

from .admissible import (
    adm_set, classify_by_criteria, classify_closed_form, s_adm_circ, s_adm_circ_cox,
)
from .alcove import BasicClass, is_dominant
from .emptiness import GuardError, explain_nonempty
from .reduction import InconsistencyError, SearchDepthExceeded, export_dot, graph_json, reduction_graph
from .weyl import WeylError, format_element, parse_element

log = logging.getLogger("awlab")

SWEEP_MAX_N = 6
SWEEP_MAX_BOUND = 6


class UsageError(Exception):
    pass


@dataclass
class SweepConfig:
    n: int
    entry_bound: int
    central_normalize: bool = True
    parallelism: int = 1
    output: str | None = None
    plot: str | None = None

    def __post_init__(self):
        max_n = int(os.environ.get("AWLAB_MAX_N", SWEEP_MAX_N))
        if not 1 <= self.n <= max_n:
            raise GuardError(f"sweep rank must be in 1..{max_n}")
        if not 0 <= self.entry_bound <= SWEEP_MAX_BOUND:
            raise GuardError(f"entry bound must be in 0..{SWEEP_MAX_BOUND}")
        if self.parallelism < 1:
            raise UsageError("--jobs must be positive")


def _parse_lambda(text: str, n: int) -> tuple[int, ...]:
    try:
        lam = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse cocharacter {text!r}")
    if len(lam) != n:
        raise UsageError(f"cocharacter {lam} does not have length n={n}")
    return lam


def _parse_element(text: str, n: int):
    w = parse_element(text)
    if w.n != n:
        raise UsageError(f"element has rank {w.n}, expected n={n}")
    return w


def _dominant(lam):
    if not is_dominant(lam):
        raise UsageError(f"{lam} is not dominant")
    return lam


def classify_record(lam: tuple[int, ...]) -> dict:
    crit = classify_by_criteria(lam)
    closed = classify_closed_form(lam)
    return {
        "n": len(lam),
        "lambda": list(lam),
        "by_criteria": crit.is_finite_coxeter,
        "closed_form": closed.is_finite_coxeter,
        "matched_form": closed.matched_form,
        "params": closed.params,
        "agree": crit.is_finite_coxeter == closed.is_finite_coxeter,
        "witnesses": crit.as_json()["witnesses"],
    }


def sweep_grid(n: int, bound: int, central_normalize: bool = True) -> Iterator[tuple[int, ...]]:
    """Dominant cocharacters with entries in [-bound, bound], lexicographic order."""
    seen = set()
    out = []
    for lam in itertools.product(range(-bound, bound + 1), repeat=n):
        if not is_dominant(lam):
            continue
        if central_normalize:
            lam = tuple(x - lam[-1] for x in lam)
            if lam in seen:
                continue
            seen.add(lam)
        out.append(lam)
    return iter(sorted(out))


def run_sweep(cfg: SweepConfig, stream) -> dict:
    grid = list(sweep_grid(cfg.n, cfg.entry_bound, cfg.central_normalize))
    if cfg.parallelism > 1:
        with Pool(cfg.parallelism) as pool:
            records = list(pool.imap(classify_record, grid, chunksize=4))
    else:
        records = [classify_record(lam) for lam in grid]
    for rec in records:
        stream.write(json.dumps(rec) + "\n")
    summary = {
        "summary": True,
        "n": cfg.n,
        "bound": cfg.entry_bound,
        "count": len(records),
        "finite_coxeter": sum(r["closed_form"] for r in records),
        "disagreements": [r["lambda"] for r in records if not r["agree"]],
    }
    stream.write(json.dumps(summary) + "\n")
    if cfg.plot:
        from .plotting import sweep_figure
        sweep_figure(records, cfg.plot, title=f"n={cfg.n}, entries in [-{cfg.entry_bound}, {cfg.entry_bound}]")
    return summary


def cmd_classify(args) -> int:
    lam = _dominant(_parse_lambda(args.lam, args.n))
    rec = classify_record(lam)
    rec["value"] = rec["closed_form"]
    print(json.dumps(rec))
    return 0 if rec["agree"] else 1


def cmd_sweep(args) -> int:
    cfg = SweepConfig(args.n, args.bound, not args.no_normalize, args.jobs, args.out, args.plot)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            summary = run_sweep(cfg, fh)
        print(json.dumps(summary))
    else:
        summary = run_sweep(cfg, sys.stdout)
    return 1 if summary["disagreements"] else 0


def cmd_nonempty(args) -> int:
    w = _parse_element(args.element, args.n)
    print(json.dumps(explain_nonempty(w, BasicClass(args.n, args.kappa)).as_json()))
    return 0


def cmd_adm(args) -> int:
    lam = _dominant(_parse_lambda(args.lam, args.n))
    if args.coxeter_only:
        elts = s_adm_circ_cox(lam)
        if not args.min_coset:
            log.info("--coxeter-only implies --min-coset")
    elif args.min_coset:
        elts = s_adm_circ(lam)
    else:
        elts = sorted(adm_set(lam), key=lambda w: (w.transl, w.finite.images))
    print(json.dumps({"n": args.n, "lambda": list(lam), "count": len(elts),
                      "elements": [format_element(w) for w in elts]}))
    return 0


def cmd_reduce(args) -> int:
    w = _parse_element(args.element, args.n)
    g = reduction_graph(w, BasicClass(args.n, args.kappa), depth=args.depth)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(export_dot(g))
    print(json.dumps(graph_json(g)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="awlab", description=__doc__.strip().splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="finite Coxeter type verdict for one cocharacter")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--lambda", dest="lam", required=True, help="comma-separated integers")
    c.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("sweep", help="compare both classifiers over a grid")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--bound", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--no-normalize", action="store_true", help="keep central translates apart")
    s.add_argument("--out", help="write JSON lines here instead of stdout")
    s.add_argument("--plot", help="render a summary figure to this path")
    s.set_defaults(func=cmd_sweep)

    e = sub.add_parser("nonempty", help="P-alcove verdict for X_w(b), b basic")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--element", required=True, help="t[l1,..,ln]*p[u1,..,un]")
    e.add_argument("--kappa", type=int, required=True)
    e.set_defaults(func=cmd_nonempty)

    a = sub.add_parser("adm", help="admissible set and its minimal coset part")
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--lambda", dest="lam", required=True)
    a.add_argument("--min-coset", action="store_true", help="only SAdm(lambda)°")
    a.add_argument("--coxeter-only", action="store_true", help="only elements with Coxeter finite part")
    a.set_defaults(func=cmd_adm)

    r = sub.add_parser("reduce", help="Deligne-Lusztig reduction graph")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--element", required=True)
    r.add_argument("--kappa", type=int, required=True)
    r.add_argument("--depth", type=int, default=None)
    r.add_argument("--dot", help="write the graph in DOT format here")
    r.set_defaults(func=cmd_reduce)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, WeylError, GuardError, SearchDepthExceeded) as exc:
        print(f"awlab: error: {exc}", file=sys.stderr)
        return 2
    except (InconsistencyError, ArithmeticError) as exc:
        print(f"awlab: internal inconsistency: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
