"""Command-line front end.

Subcommands: ``roots``, ``paths``, ``count``, ``enumerate``, ``verify``,
``reproduce``, ``sweep``.  Exit codes: 0 success / all checks pass, 1 a
verification check failed, 2 usage error.  JSON output is the stable
interface; tables are for humans.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
from typing import Optional, Sequence

import numpy as np

from . import __version__, dyck, verify
from .lattice import BudgetExceeded, LatticeSet, count_points, enumerate_points
from .minkowski import check_rectangular_decomposition, minkowski_step
from .roots import RootSystem, Weight, build_root_system, hasse_covers, radical_roots
from .systems import InequalitySystem, Instance, b3_system, g2_system, rectangular_system
from .weyl import weyl_dimension

CACHE_ENV = "PBWPOLY_CACHE_DIR"


class UsageError(Exception):
    """Bad flags or flag combinations; maps to exit code 2."""


def _parse_lambda(text: str, rank: int) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != rank:
        raise UsageError(f"--lambda needs {rank} comma-separated integers, got {text!r}")
    try:
        vals = tuple(int(p) for p in parts)
    except ValueError:
        raise UsageError(f"--lambda must be integers, got {text!r}") from None
    return vals


def _build_system(args) -> tuple[RootSystem, InequalitySystem, Weight]:
    """Resolve the family from flags: G2, rectangular (--i/--m), or general B_3."""
    if args.type == "g2":
        rs = build_root_system("G2", 2)
        if args.m is not None or args.i is not None:
            raise UsageError("--i/--m do not apply to g2; use --lambda m1,m2")
        if args.lam is None:
            raise UsageError("g2 needs --lambda m1,m2")
        return rs, g2_system(), rs.weight(*_parse_lambda(args.lam, 2))
    n = args.n
    if n is None:
        raise UsageError("--n is required for type b")
    rs = build_root_system("B", n)
    if args.i is not None or args.m is not None:
        if args.i is None or args.m is None:
            raise UsageError("rectangular weights need both --i and --m")
        if args.lam is not None:
            raise UsageError("give either --lambda or --i/--m, not both")
        return rs, rectangular_system(rs, args.i), args.m * rs.fundamental_weight(args.i)
    if n != 3:
        raise UsageError("general weights are only available for --n 3; use --i/--m")
    if args.lam is None:
        raise UsageError("--lambda m1,m2,m3 is required")
    return rs, b3_system(), rs.weight(*_parse_lambda(args.lam, 3))


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- caching -------------------------------------------------------------------


def _cache_dir(args) -> Optional[str]:
    if getattr(args, "no_cache", False):
        return None
    path = getattr(args, "cache_dir", None) or os.environ.get(CACHE_ENV) or None
    if path:
        try:
            os.makedirs(path, exist_ok=True)
            if not os.access(path, os.W_OK):
                raise OSError("not writable")
        except OSError as exc:
            sys.stderr.write(f"warning: cache disabled ({path}: {exc})\n")
            return None
    return path


def _instance_key(instance: Instance) -> str:
    payload = json.dumps({
        "version": __version__,
        "system": instance.system.to_json(),
        "lambda": list(instance.weight.fund),
    }, sort_keys=True)
    return hashlib.sha256(payload.encode()).hexdigest()[:32]


def _cached_enumerate(instance: Instance, args) -> LatticeSet:
    cache = _cache_dir(args)
    if cache:
        path = os.path.join(cache, _instance_key(instance) + ".json")
        if os.path.exists(path):
            with open(path) as fh:
                obj = json.load(fh)
            pts = np.array(obj["points"], dtype=np.int64).reshape(-1, len(instance.ambient))
            return LatticeSet(instance.ambient, pts,
                              {"system": instance.system.name, "lambda": instance.weight.fund})
    result = enumerate_points(instance, workers=args.workers,
                              budget_points=args.budget_points)
    if cache:
        with open(path, "w") as fh:
            json.dump(result.to_json(include_points=True), fh)
    return result


# -- subcommands ---------------------------------------------------------------


def cmd_roots(args) -> int:
    kind = "G2" if args.type == "g2" else "B"
    rank = 2 if kind == "G2" else args.n
    if rank is None:
        raise UsageError("--n is required for type b")
    rs = build_root_system(kind, rank)
    roots = list(rs.positive_roots)
    if args.i is not None:
        roots = radical_roots(rs, args.i)
    covers = hasse_covers(roots)
    if args.format == "json":
        obj = {
            "kind": kind, "rank": rank, "column": args.i,
            "roots": [{"name": r.name, "simple": list(r.simple),
                       "eps_x2": list(r.eps_x2) if r.eps_x2 else None} for r in roots],
            "covers": [[a.name, b.name] for a, b in covers],
            "highest_root": rs.highest_root.name,
        }
        _emit(json.dumps(obj, indent=2) + "\n", args.out)
    else:
        lines = [f"{'root':8s} {'simple':16s} {'eps_x2'}"]
        for r in roots:
            eps = str(list(r.eps_x2)) if r.eps_x2 else "-"
            lines.append(f"{r.name:8s} {str(list(r.simple)):16s} {eps}")
        lines.append(f"{len(roots)} roots; highest root {rs.highest_root.name}")
        lines.append("covers: " + ", ".join(f"{a.name}<{b.name}" for a, b in covers))
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_paths(args) -> int:
    rs = build_root_system("B", args.n)
    t1 = dyck.type1_paths(rs, args.i)
    t2 = dyck.type2_paths(rs, args.i)
    if args.format == "json":
        obj = {"n": args.n, "i": args.i,
               "type1_count": len(t1), "type2_count": len(t2),
               "paths": [p.to_json() for p in t1 + t2]}
        _emit(json.dumps(obj, indent=2) + "\n", args.out)
    else:
        lines = [f"B_{args.n}, column {args.i}: {len(t1)} single walks, {len(t2)} double walks"]
        for p in t1 + t2:
            lines.append(f"  [{p.kind}] " + " ".join(p.root_names()))
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _lattice_to_csv(ls: LatticeSet) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow([r.name for r in ls.ambient])
    writer.writerows(ls.points.tolist())
    return buf.getvalue()


def cmd_count(args) -> int:
    rs, system, lam = _build_system(args)
    n = count_points(system.at(lam), workers=args.workers)
    if args.format == "json":
        obj = {"system": system.name, "lambda": list(lam.fund), "count": n}
        _emit(json.dumps(obj) + "\n", args.out)
    else:
        _emit(f"{n}\n", args.out)
    return 0


def cmd_enumerate(args) -> int:
    rs, system, lam = _build_system(args)
    ls = _cached_enumerate(system.at(lam), args)
    if args.format == "csv":
        _emit(_lattice_to_csv(ls), args.out)
    elif args.format == "json":
        _emit(json.dumps(ls.to_json(include_points=not args.count_only)) + "\n", args.out)
    else:
        header = f"{system.name} at lambda={list(lam.fund)}: {len(ls)} points"
        if args.count_only:
            _emit(header + "\n", args.out)
        else:
            body = "\n".join(" ".join(f"{v:2d}" for v in row) for row in ls.points.tolist())
            _emit(header + "\n" + body + "\n", args.out)
    return 0


def _print_results(results, fmt: str, out: Optional[str]) -> int:
    ok = all(r.passed for r in results)
    if fmt == "json":
        _emit(json.dumps({"passed": ok, "checks": [r.to_json() for r in results]},
                         indent=2) + "\n", out)
    else:
        lines = []
        for r in results:
            lines.append(f"{'PASS' if r.passed else 'FAIL':4s}  {r.name:26s} {r.summary}  [{r.seconds:.2f}s]")
            for d in r.details[:10]:
                lines.append(f"        {d}")
        lines.append(f"{'all checks passed' if ok else 'FAILURES PRESENT'}")
        _emit("\n".join(lines) + "\n", out)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    name = args.check
    if name in verify.VERIFY_ALIASES:
        names = verify.VERIFY_ALIASES[name]
    elif name in verify.CHECKS:
        names = (name,)
    else:
        known = sorted(set(verify.VERIFY_ALIASES) | set(verify.CHECKS))
        sys.stderr.write(f"error: unknown check {name!r}; known: {', '.join(known)}\n")
        return 2
    results = verify.run_checks(names, max_sum=args.max_sum, degree=args.d,
                                pairs_per_family=args.pairs, workers=args.workers)
    return _print_results(results, args.format, args.out)


def cmd_reproduce(args) -> int:
    targets = args.checks
    if targets == ["list"]:
        for name in verify.CHECKS:
            sys.stdout.write(name + "\n")
        return 0
    if targets == ["all"] or not targets:
        names = list(verify.CHECKS)
    else:
        unknown = [t for t in targets if t not in verify.CHECKS]
        if unknown:
            sys.stderr.write(f"error: unknown checks {unknown}; try 'reproduce list'\n")
            return 2
        names = targets
    kwargs = {"workers": args.workers}
    if args.extended:
        kwargs["max_sum"] = 9
    results = verify.run_checks(names, **kwargs)
    return _print_results(results, args.format, args.out)


def cmd_sweep(args) -> int:
    """Exploratory sweeps beyond the proven range; reports, never gates."""
    rs = build_root_system("B", args.n)
    system = rectangular_system(rs, args.i)
    rows = []
    eps = minkowski_step(args.i)
    for m in range(1, args.max_m + 1):
        lam = m * rs.fundamental_weight(args.i)
        entry = {"n": args.n, "i": args.i, "m": m}
        if args.check == "dimension":
            entry["count"] = count_points(system.at(lam), workers=args.workers)
            entry["dim"] = weyl_dimension(rs, lam)
            entry["equal"] = entry["count"] == entry["dim"]
        else:
            if m < eps:
                continue
            rep = check_rectangular_decomposition(args.n, args.i, m)
            entry["equal"] = rep.equal
            entry["card_sum"] = rep.card_sum
            entry["card_target"] = rep.card_target
        rows.append(entry)
    if args.format == "json":
        _emit(json.dumps({"check": args.check, "rows": rows}, indent=2) + "\n", args.out)
    else:
        lines = [f"exploratory {args.check} sweep for B_{args.n}, column {args.i}"]
        for e in rows:
            lines.append("  " + " ".join(f"{k}={v}" for k, v in e.items()))
        _emit("\n".join(lines) + "\n", args.out)
    return 0


# -- parser ----------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, fmt_default: str = "table") -> None:
    p.add_argument("--format", choices=["json", "csv", "table"], default=fmt_default)
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget-points", type=int, default=50_000_000)
    p.add_argument("--budget-pairs", type=int, default=2_000_000_000)
    p.add_argument("--cache-dir", help=f"lattice-set cache directory (default ${CACHE_ENV})")
    p.add_argument("--no-cache", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pbwpoly",
                                 description="build the polytopes, enumerate lattice points, "
                                             "and verify the combinatorial identities")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="list positive roots and Hasse cover edges")
    p.add_argument("--type", choices=["b", "g2"], default="b")
    p.add_argument("--n", type=int)
    p.add_argument("--i", type=int, help="restrict to the column-i radical subset")
    _add_common(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("paths", help="list the Dyck paths for a column")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_paths)

    for name, fn, helptext in (("count", cmd_count, "count lattice points"),
                               ("enumerate", cmd_enumerate, "enumerate lattice points")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--type", choices=["b", "g2"], default="b")
        p.add_argument("--n", type=int)
        p.add_argument("--i", type=int)
        p.add_argument("--m", type=int)
        p.add_argument("--lambda", dest="lam", help="comma-separated fundamental coefficients")
        p.add_argument("--count-only", action="store_true")
        _add_common(p, fmt_default="json" if name == "enumerate" else "table")
        p.set_defaults(func=fn)

    p = sub.add_parser("verify", help="run a named verification check")
    p.add_argument("check")
    p.add_argument("--max-sum", type=int, default=None,
                   help="simplex bound for the dimension sweeps")
    p.add_argument("--d", type=int, default=None, help="degree bound for b3-simplex")
    p.add_argument("--pairs", type=int, default=None,
                   help="random pairs per family for containment-random")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reproduce", help="run the acceptance checks ('all', 'list', or names)")
    p.add_argument("checks", nargs="*", default=["all"])
    p.add_argument("--extended", action="store_true",
                   help="raise the B_3 sweep to the full degree-9 simplex")
    _add_common(p)
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("sweep", help="exploratory sweeps beyond the proven range (never gates)")
    p.add_argument("--check", choices=["dimension", "minkowski"], default="dimension")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--max-m", type=int, default=3)
    _add_common(p)
    p.set_defaults(func=cmd_sweep)

    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        for flag in ("workers", "budget_points", "budget_pairs"):
            if getattr(args, flag, 1) <= 0:
                raise UsageError(f"--{flag.replace('_', '-')} must be positive")
        return args.func(args)
    except BudgetExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (UsageError, ValueError, OverflowError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
