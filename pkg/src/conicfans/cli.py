"""Command-line front end: table reproduction, verification, exports.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import chevalley, conicatlas, fixtures, lunavust, verify
from .rootcore import InvalidTypeError, UnsupportedAlgebraError, build_root_datum

TABLES = ("satake", "chow", "hilb", "planes", "cosets", "colors")


def _labels_for(arg: str | None, max_rank: int) -> list[str]:
    labels = fixtures.supported_labels(max_rank)
    if arg is None:
        return labels
    if arg not in labels:
        raise UnsupportedAlgebraError(f"{arg} is not in the supported set")
    return [arg]


def _table_rows(name: str, labels: list[str]) -> tuple[list[str], list[list[str]]]:
    rows = []
    if name == "satake":
        header = ["g", "fixed_subalgebra", "black", "arrows", "restricted", "lambda"]
        for label in labels:
            e = conicatlas.build_entry(label)
            series, rank = e.series, e.rank
            from .symdata import g_fixed_subalgebra_components
            gs = "+".join(f"{s}{r}" for s, r in
                          g_fixed_subalgebra_components(series, rank))
            lam = "; ".join(
                f"l{i}=" + ",".join(f"a{w}" for w in e.rrd.reps_of(i))
                for i in range(1, e.rrd.restricted.rank + 1))
            rows.append([label, gs,
                         ",".join(map(str, sorted(e.sd.black))) or "-",
                         ";".join(f"{a}<->{b}" for a, b in e.sd.arrows) or "-",
                         e.rrd.restricted.label, lam])
    elif name in ("chow", "hilb"):
        header = ["g", "cone", "rays", "colors"]
        for label in labels:
            e = conicatlas.build_entry(label)
            fan = e.chow_fan if name == "chow" else e.hilb_fan
            maxc = lunavust.maximal_cones(fan, e.rrd)
            for k, c in enumerate(sorted(maxc, key=lambda c: c.key())):
                rays = " ".join("(" + ",".join(map(str, r)) + ")"
                                for r in lunavust.extremal_rays(c.cone))
                rows.append([label, str(k), rays,
                             ",".join(f"D{i}" for i in sorted(c.colors))])
    elif name == "planes":
        header = ["g", "beta", "in_variety", "stabilizer"]
        for label in labels:
            e = conicatlas.build_entry(label)
            for p in conicatlas.b_stable_planes(e.ad):
                rows.append([label, f"a{p.beta}", "yes" if p.in_z else "no",
                             ",".join(f"a{i}" for i in sorted(p.stabilizer.missing))])
    elif name == "cosets":
        # one row per family; per-rank agreement is enforced by the check suite
        header = ["g", "double_cosets"]
        display = {"Br": ("B_r (r>=4)", "B4"), "B3": ("B3", "B3"),
                   "Dr": ("D_r (r>=6)", "D6"), "D5": ("D5", "D5"),
                   "D4": ("D4", "D4"), "E6": ("E6", "E6"), "E7": ("E7", "E7"),
                   "E8": ("E8", "E8"), "F4": ("F4", "F4"), "G2": ("G2", "G2")}
        wanted_keys = []
        for label in labels:
            key = fixtures.family_key(*conicatlas.parse_label(label))
            if key not in wanted_keys:
                wanted_keys.append(key)
        for key in fixtures.FAMILY_KEYS:
            if key not in wanted_keys:
                continue
            name_str, rep = display[key]
            rows.append([name_str, str(conicatlas.build_entry(rep).double_cosets)])
    elif name == "colors":
        header = ["g", "color", "type", "a", "spherical_root"]
        for label in labels:
            e = conicatlas.build_entry(label)
            from .symdata import color_table
            for c in color_table(e.rrd):
                sph = "+".join(f"{v}a{k+1}" for k, v in enumerate(c.spherical_root) if v)
                rows.append([label, f"D{c.index}", c.color_type, str(c.a_coeff), sph])
    else:
        raise ValueError(name)
    return header, rows


def _emit_table(header, rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows],
                          indent=1, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    for r in rows:
        lines.append("  ".join(x.ljust(w) for x, w in zip(r, widths)))
    return "\n".join(lines) + "\n"


def cmd_table(args) -> int:
    if args.name not in TABLES:
        print(f"unknown table {args.name!r}; choose from {', '.join(TABLES)}",
              file=sys.stderr)
        return 2
    try:
        labels = _labels_for(args.g, args.max_rank)
    except (UnsupportedAlgebraError, InvalidTypeError) as exc:
        print(str(exc), file=sys.stderr)
        return 2
    header, rows = _table_rows(args.name, labels)
    sys.stdout.write(_emit_table(header, rows, args.format))
    return 0


def cmd_verify(args) -> int:
    if args.bless:
        payload = verify.golden_payload(args.max_rank)
        target = verify.golden_dir()
        try:
            old = verify.load_golden(target)
        except FileNotFoundError:
            old = {}
        for name in verify.GOLDEN_FILES:
            before = json.dumps(old.get(name, {}), sort_keys=True)
            after = json.dumps(payload[name], sort_keys=True)
            status = "unchanged" if before == after else "REWRITTEN"
            print(f"bless {name}.json: {status}")
        verify.write_golden(payload, target)
        return 0
    try:
        golden = verify.load_golden()
    except FileNotFoundError as exc:
        print(f"missing golden data: {exc}", file=sys.stderr)
        return 1
    jobs = args.jobs
    if jobs is None:
        import os
        jobs = min(4, os.cpu_count() or 1)
    results = verify.run_checks(scope=args.scope, max_rank=args.max_rank,
                                seed=args.seed, samples=args.samples,
                                golden=golden, jobs=jobs)
    failures = [r for r in results if not r.ok]
    report = {
        "scope": args.scope,
        "seed": args.seed,
        "checks": len(results),
        "failures": [r.to_json_dict() for r in failures],
        "results": [r.to_json_dict() for r in results],
    }
    if args.format == "json":
        sys.stdout.write(json.dumps(report, indent=1, sort_keys=True) + "\n")
    else:
        for r in results:
            mark = "ok  " if r.ok else "FAIL"
            line = f"{mark} {r.name}"
            if not r.ok and r.detail:
                line += f"  ({r.detail})"
            print(line)
        print(f"{len(results)} checks, {len(failures)} failures")
    return 0 if not failures else 1


def cmd_export(args) -> int:
    try:
        entry = conicatlas.build_entry(args.g)
    except (UnsupportedAlgebraError, InvalidTypeError) as exc:
        print(str(exc), file=sys.stderr)
        return 2
    if args.kind == "fan-json":
        fan = entry.chow_fan if args.which == "chow" else entry.hilb_fan
        text = json.dumps(lunavust.fan_to_json_dict(fan, entry.rrd.space_label),
                          indent=1, sort_keys=True) + "\n"
    elif args.kind == "hasse-dot":
        rep = conicatlas.orbit_report(entry, args.which)
        text = lunavust.poset_to_dot(rep.poset, labels=rep.types,
                                     name=f"{args.g}_{args.which}") + "\n"
    elif args.kind == "constants-csv":
        sc = chevalley.build_structure_constants(
            build_root_datum(entry.series, entry.rank), verify="none")
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["alpha", "beta", "n"])
        for a, b, n in chevalley.constants_csv_rows(sc):
            w.writerow([" ".join(map(str, a)), " ".join(map(str, b)), n])
        text = buf.getvalue()
    else:
        print(f"unknown export kind {args.kind!r}", file=sys.stderr)
        return 2
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_contact_eq(args) -> int:
    try:
        entry = conicatlas.build_entry(args.g)
    except (UnsupportedAlgebraError, InvalidTypeError) as exc:
        print(str(exc), file=sys.stderr)
        return 2
    rd = build_root_datum(entry.series, entry.rank)
    sc = chevalley.build_structure_constants(rd, verify="none")
    rho, j0 = entry.ad.rho, entry.ad.j0
    rep = chevalley.contact_implication_check(sc, rho, j0, args.samples, args.seed)
    mink = tuple(-1 if k == j0 - 1 else 0 for k in range(rd.rank))
    wit = tuple(-a - r for a, r in zip(mink, rho))
    line_cubic = chevalley.contact_cubic(
        sc, rho, j0, chevalley.LieElement.root_vector(rd.rank, mink))
    gen_cubic = chevalley.contact_cubic(
        sc, rho, j0, chevalley.LieElement.make(rd.rank, None, {mink: 1, wit: 1}))
    report = {
        "g": args.g,
        "seed": args.seed,
        "witnesses": {
            "line_direction_cubic_vanishes": line_cubic.is_zero(),
            "general_direction_cubic_vanishes": gen_cubic.is_zero(),
        },
        "violations": list(rep.violations),
        "counts": {
            "samples": rep.samples,
            "cubic_zero_hits": rep.cubic_zero_hits,
            "quadratic_zero_directions_checked": rep.easy_direction_checked,
        },
    }
    sys.stdout.write(json.dumps(report, indent=1, sort_keys=True) + "\n")
    return 0 if rep.clean else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="conicfans",
        description="Exact tables, colored fans, and conic orbit structure "
                    "for adjoint varieties outside types A and C.")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--max-rank", type=int, default=8,
                   help="rank cap for the B and D families")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for all sampled checks")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="print a reference table")
    t.add_argument("name")
    t.add_argument("g", nargs="?")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run the named check suite")
    v.add_argument("scope", nargs="?", default="all",
                   choices=("all", "rootcore", "symdata", "lunavust",
                            "conicatlas", "chevalley"))
    v.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    v.add_argument("--samples", type=int, default=100_000,
                   help="Jacobi sample count for rank > 4")
    v.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: up to 4)")
    v.add_argument("--bless", action="store_true",
                   help="rewrite the golden files from the reference tables")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", help="write fan JSON, Hasse DOT, or constants CSV")
    e.add_argument("kind", choices=("fan-json", "hasse-dot", "constants-csv"))
    e.add_argument("g")
    e.add_argument("--which", choices=("chow", "hilb"), default="hilb")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_export)

    c = sub.add_parser("contact-eq", help="tangent-direction equation report")
    c.add_argument("g")
    c.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    c.add_argument("--samples", type=int, default=10_000)
    c.set_defaults(func=cmd_contact_eq)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
