"""Command-line front end: ``bicirc-forest <command> [options]``.

Commands
  count      forest count f(2n) from the exact route, optionally cross-checked
  sweep      counts over a range of n
  verify     square structure f(2n) = constant * root^2 over a range of n
  asymptote  growth constant by both Mahler routes and convergence ratios
  examples   reproduce the six reference families
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from fractions import Fraction

from .arithmetic import rows_to_csv, theorem4_constants, verify_square_structure
from .ball import make_context
from .errors import BicirculantError, FalsificationError, InvalidSpec
from .exact import ORACLE_MAX_VERTICES, forest_count_oracle
from .families import FAMILIES, Family
from .graph import BicirculantSpec, GammaClass, canonical_json, classify, spec_from_json
from .laurent import build_P, cheb_transform, forest_count_formula
from .numeric import (
    MAX_PRECISION,
    class_polynomial,
    convergence_report,
    find_transform_roots,
    forest_count_chebyshev,
    mahler_integral,
    mahler_roots,
    report_record,
)

CONSTANT_LETTER = {GammaClass.G1: "A", GammaClass.G2: "B", GammaClass.G3: "C", GammaClass.G4: "D"}


class ForestCache:
    """Plain-file store of exact counts keyed by canonical spec JSON and n."""

    def __init__(self, directory: str | Path):
        self.dir = Path(directory)
        self.dir.mkdir(parents=True, exist_ok=True)

    def _path(self, spec: BicirculantSpec, n: int) -> Path:
        key = hashlib.sha256(f"{canonical_json(spec)}|{n}".encode()).hexdigest()[:32]
        return self.dir / f"{key}.json"

    def get(self, spec: BicirculantSpec, n: int) -> int | None:
        path = self._path(spec, n)
        if not path.exists():
            return None
        record = json.loads(path.read_text())
        return int(record["count"])

    def put(self, spec: BicirculantSpec, n: int, count: int) -> None:
        record = {"spec": json.loads(canonical_json(spec)), "n": n, "count": str(count)}
        self._path(spec, n).write_text(json.dumps(record, sort_keys=True) + "\n")


def exact_count(spec: BicirculantSpec, n: int, cache: ForestCache | None = None) -> int:
    if cache is not None:
        hit = cache.get(spec, n)
        if hit is not None:
            return hit
    value = forest_count_formula(spec, n)
    if cache is not None:
        cache.put(spec, n, value)
    return value


def _parse_range(text: str) -> range:
    try:
        a, b = text.split("..")
        return range(int(a), int(b) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None


def _load_spec(args) -> BicirculantSpec:
    if args.spec and args.spec_file:
        raise InvalidSpec("give either --spec or --spec-file, not both")
    if args.spec:
        return spec_from_json(args.spec)
    if args.spec_file:
        return spec_from_json(Path(args.spec_file).read_text())
    raise InvalidSpec("a graph spec is required (--spec or --spec-file)")


def _orders(args, spec: BicirculantSpec, default: Sequence[int]) -> list[int]:
    if args.n_range is not None:
        ns = list(args.n_range)
    elif args.n is not None:
        ns = [args.n]
    else:
        ns = list(default)
    if classify(spec).has_half:
        ns = [n for n in ns if n % 2 == 0]
    return ns


def _graph_at(spec: BicirculantSpec, n: int) -> BicirculantSpec | None:
    """The simple graph with this half-set data at order n, if there is one."""
    try:
        return spec.at(n)
    except InvalidSpec:
        return None


class Failure(Exception):
    pass


def _checked_count(spec: BicirculantSpec, n: int, args, cache) -> tuple[int, dict[str, str]]:
    f = exact_count(spec, n, cache)
    checks: dict[str, str] = {}
    if args.check_oracle:
        graph = _graph_at(spec, n)
        if graph is None:
            checks["oracle"] = "skipped (not a simple graph at this n)"
        elif 2 * n > ORACLE_MAX_VERTICES:
            checks["oracle"] = f"skipped (2n > {ORACLE_MAX_VERTICES})"
        else:
            oracle = forest_count_oracle(graph)
            if oracle != f:
                raise Failure(f"n={n}: formula {f} != oracle {oracle}")
            checks["oracle"] = "ok"
    if args.check_cheb:
        cheb = forest_count_chebyshev(spec, n=n, max_precision=args.precision)
        if cheb != f:
            raise Failure(f"n={n}: formula {f} != chebyshev {cheb}")
        checks["chebyshev"] = "ok"
    return f, checks


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_count(args) -> int:
    spec = _load_spec(args)
    n = spec.n if args.n is None else args.n
    if not spec.S:
        print("note: S is empty, the graph is disconnected", file=sys.stderr)
    cache = ForestCache(args.cache) if args.cache else None
    f, checks = _checked_count(spec, n, args, cache)
    if args.format == "json":
        out = json.dumps({"spec": json.loads(canonical_json(spec)), "n": n, "count": str(f),
                          "checks": checks}, indent=2) + "\n"
    elif args.format == "csv":
        out = f"n,count\n{n},{f}\n"
    else:
        tail = ", ".join(f"{k}: {v}" for k, v in checks.items())
        out = f"{f} ({tail})\n" if tail else f"{f}\n"
    _emit(args, out)
    return 0


def cmd_sweep(args) -> int:
    spec = _load_spec(args)
    cache = ForestCache(args.cache) if args.cache else None
    rows = []
    for n in _orders(args, spec, [spec.n]):
        f, checks = _checked_count(spec, n, args, cache)
        rows.append({"n": n, "count": str(f), "checks": checks})
    if args.format == "json":
        out = json.dumps(rows, indent=2) + "\n"
    elif args.format == "csv":
        out = "n,count\n" + "".join(f"{r['n']},{r['count']}\n" for r in rows)
    else:
        out = "".join(f"{r['n']}\t{r['count']}\n" for r in rows)
    _emit(args, out)
    return 0


def cmd_verify(args) -> int:
    spec = _load_spec(args)
    cache = ForestCache(args.cache) if args.cache else None
    structure = theorem4_constants(spec)
    rows = []
    for n in _orders(args, spec, [spec.n]):
        if n < 1:
            continue
        f = exact_count(spec, n, cache)
        constant, root = verify_square_structure(spec, n, f)
        rows.append((n, f, constant, root))
    if args.format == "json":
        out = json.dumps({"odd_constant": structure.odd, "even_constant": structure.even,
                          "rows": [{"n": n, "f": str(f), "constant": c, "root": str(r)}
                                   for n, f, c, r in rows]}, indent=2) + "\n"
    elif args.format == "csv":
        from .arithmetic import SequenceRow
        out = rows_to_csv(SequenceRow(*row) for row in rows)
    else:
        out = "".join(f"n={n}\tf={f}\t= {c} * {r}^2\n" for n, f, c, r in rows)
    _emit(args, out)
    return 0


def _constant_routes(spec: BicirculantSpec, precision: int):
    poly = class_polynomial(spec)
    by_roots = mahler_roots(poly, precision)
    by_integral = mahler_integral(poly, 1e-12)
    gap = abs(float(by_roots.mid) - float(by_integral.mid))
    agree = gap <= float(by_roots.rad) + float(by_integral.rad) + 1e-9
    return by_roots, by_integral, agree


def cmd_asymptote(args) -> int:
    spec = _load_spec(args)
    gamma_class = classify(spec)
    precision = min(args.precision, 1024)
    by_roots, by_integral, agree = _constant_routes(spec, precision)
    rows = convergence_report(spec, _orders(args, spec, [10, 20, 30, 40]), precision=precision)
    letter = CONSTANT_LETTER[gamma_class]
    if args.format == "json":
        out = json.dumps({
            "class": gamma_class.name,
            "constant_name": letter,
            "constant": by_roots.to_json(),
            "constant_integral": by_integral.to_json(),
            "routes_agree": agree,
            "rows": [report_record(r) for r in rows],
        }, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "count", "ratio_mid", "ratio_rad"])
        for r in rows:
            rec = report_record(r)
            w.writerow([r.n, rec["count"], rec["ratio"]["mid"], rec["ratio"]["rad"]])
        out = buf.getvalue()
    else:
        status = "routes agree" if agree else "ROUTES DISAGREE"
        lines = [
            f"{letter} ≈ {by_roots.ctx.nstr(by_roots.mid, 10)} ({status})",
            f"  roots:    {by_roots.format(25)}",
            f"  integral: {by_integral.format(25)}",
            "  (decimal midpoints rounded to the digits shown; radius is a bound on the error)",
        ]
        exponent = "n" if gamma_class is GammaClass.G1 else "(n/2)"
        for r in rows:
            lines.append(f"  n={r.n}\tf/{letter}^{exponent} = {r.ratio.format(20)}")
        out = "\n".join(lines) + "\n"
    _emit(args, out)
    if not agree:
        print(f"roots route {by_roots.format(25)} vs integral route {by_integral.format(25)}",
              file=sys.stderr)
        return 1
    return 0


def run_family(fam: Family, upto: int = 30, precision: int = 256) -> dict[str, object]:
    """Golden checks for one reference family; returns per-check results and diffs."""
    checks: dict[str, bool] = {}
    diffs: list[str] = []

    def check(name: str, ok: bool, diff: str = "") -> None:
        checks[name] = checks.get(name, True) and ok
        if not ok:
            diffs.append(f"{name}: {diff}")

    template = fam.spec()
    structure = theorem4_constants(template)
    check("square_free_constants", (structure.odd, structure.even) == (fam.odd_constant, fam.even_constant),
          f"got {(structure.odd, structure.even)}, published {(fam.odd_constant, fam.even_constant)}")

    for n in fam.valid_orders(upto):
        f = forest_count_formula(template, n)
        graph = fam.spec(n)
        oracle = forest_count_oracle(graph)
        check("oracle", oracle == f, f"n={n}: formula {f}, oracle {oracle}")
        cheb = forest_count_chebyshev(graph)
        check("chebyshev", cheb == f, f"n={n}: formula {f}, chebyshev {cheb}")

    step = 2 if fam.has_half else 1
    for n in range(step, upto + 1, step):
        f = forest_count_formula(template, n)
        try:
            verify_square_structure(template, n, f)
            check("square_structure", True)
        except FalsificationError as exc:
            check("square_structure", False, str(exc))

    pack = build_P(template)
    ctx = make_context(precision)
    for name, published in fam.transform_roots:
        poly = pack.P[int(name[1]) - 1]
        roots = find_transform_roots(cheb_transform(poly), precision)
        found = all(any(disc.contains(Fraction(w)) for disc in roots.roots) for w in published)
        check("transform_roots", found and len(roots.roots) == len(published),
              f"{name}: discs {roots.roots} vs published {published}")

    by_roots, by_integral, agree = _constant_routes(template, precision)
    check("mahler_routes", agree and abs(by_roots.mid - by_integral.mid) < 1e-9,
          f"roots {by_roots.format(20)} vs integral {by_integral.format(20)}")
    closed = fam.closed_form(ctx)
    check("closed_form", abs(by_roots.mid - closed) < 1e-9,
          f"computed {by_roots.format(20)} vs {fam.closed_form_text} = {ctx.nstr(closed, 20)}")
    return {"family": fam.index, "label": fam.label, "checks": checks,
            "passed": all(checks.values()), "diffs": diffs}


def cmd_examples(args) -> int:
    chosen = [f for f in FAMILIES if args.only is None or f.index == args.only]
    if not chosen:
        raise InvalidSpec(f"no reference family {args.only}")
    results = []
    for fam in chosen:
        res = run_family(fam)
        results.append(res)
        if not res["passed"] and not args.json:
            break
    passed = sum(1 for r in results if r["passed"])
    if args.json:
        out = json.dumps(results, indent=2) + "\n"
    else:
        lines = []
        for r in results:
            mark = "ok" if r["passed"] else "FAILED"
            lines.append(f"({r['family']}) {r['label']}: {mark}")
            lines.extend(f"    {d}" for d in r["diffs"])
        lines.append(f"{passed}/{len(chosen)} families verified")
        out = "\n".join(lines) + "\n"
    _emit(args, out)
    return 0 if passed == len(chosen) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bicirc-forest",
        description="Rooted spanning forests of bicirculant graphs BC(Z_n; R, T, S).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--spec", help='inline JSON, e.g. \'{"n":3,"R":[1,2],"T":[],"S":[0]}\'')
        p.add_argument("--spec-file", help="path to a JSON graph spec")
        p.add_argument("--n", type=int, help="group order (default: the spec's n)")
        p.add_argument("--n-range", type=_parse_range, help="inclusive range A..B of orders")
        p.add_argument("--check-oracle", action="store_true", help="compare with det(I+L)")
        p.add_argument("--check-cheb", action="store_true", help="compare with the certified Chebyshev route")
        p.add_argument("--precision", type=int, default=MAX_PRECISION, help="precision ceiling in bits")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--out", help="write output to this file")
        p.add_argument("--cache", help="directory for cached exact counts")

    for name, fn in (("count", cmd_count), ("sweep", cmd_sweep), ("verify", cmd_verify),
                     ("asymptote", cmd_asymptote)):
        p = sub.add_parser(name, help=(fn.__doc__ or name))
        common(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("examples", help="reproduce the reference families")
    p.add_argument("--only", type=int, choices=range(1, 7), help="run a single family")
    p.add_argument("--json", action="store_true", help="machine-readable records")
    p.add_argument("--out", help="write output to this file")
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Failure as exc:
        print(f"route disagreement: {exc}", file=sys.stderr)
        return 1
    except FalsificationError as exc:
        print(f"square structure violated: {exc}", file=sys.stderr)
        return 1
    except BicirculantError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
