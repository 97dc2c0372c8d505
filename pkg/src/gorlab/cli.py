"""Command-line front end.

Subcommands:

* ``nakayama SERIES``  closed-form report for a Nakayama algebra given by
  its Kupisch series (dims table, resolution quiver, GP/GI/GPI sets).
* ``endo --fixture NAME``  invariants of an endomorphism-algebra fixture
  (dominant/Gorenstein dimensions, consistency cross-checks, theorem suite).
* ``module SPEC``  per-module report (four dimensions plus Gorenstein
  verdicts with certificates).
* ``scan N_MAX C_MAX``  one CSV row per valid cyclic Kupisch series up to
  the bounds, with bound-violation flags.
* ``suite``  run the named-theorem checks over fixtures.

Exit codes: 0 success, 1 input error, 2 theorem-suite failure,
3 scan violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import linalg, algebra as alg, nakayama as nak, modrep as mr
from . import invariants as inv
from . import fixtures as fx
from . import serialize as ser

__all__ = ["main", "RunConfig", "BudgetExceeded"]

SCAN_SCHEMA = "gorlab-scan-1"
SCAN_BUDGET = 20000   # maximum number of series a single scan may visit


class BudgetExceeded(RuntimeError):
    pass


class _CliError(ValueError):
    pass


@dataclass
class RunConfig:
    field: linalg.FieldSpec
    cutoff: int = inv.DEFAULT_BOUND
    seed: int = 0
    jobs: int = 1
    fmt: str = "text"

    def __post_init__(self):
        if self.cutoff < 1:
            raise _CliError("cutoff must be >= 1, got %d" % self.cutoff)
        if self.jobs < 1:
            raise _CliError("jobs must be >= 1, got %d" % self.jobs)


def parse_field(name: str) -> linalg.FieldSpec:
    name = name.strip().lower()
    if name in ("gf4", "f4", "4"):
        return linalg.GF4()
    try:
        p = int(name)
    except ValueError:
        raise _CliError("unknown field %r (use a prime or 'gf4')" % name)
    return linalg.PrimeField(p)


def _parse_series(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise _CliError("cannot parse Kupisch series %r" % text)


def _dim_str(d) -> str:
    if d is None:
        return "unknown"
    s = str(d)
    if d.kind == "infinite" and d.certificate is not None:
        s += " [%s]" % d.certificate
    elif d.kind == "infinite" and d.by_convention:
        s += " [%s]" % d.bound_reason
    elif d.kind == "atleast":
        s += " [%s]" % d.bound_reason
    return s


# ---------------------------------------------------------------------------
# nakayama


def _nakayama_report(series, cyclic, cfg: RunConfig) -> dict:
    a = nak.validate_kupisch(series, cyclic=cyclic)
    core = nak.algebra_invariants_nak(a)
    indecs = list(nak.indecomposables(a))
    per_module = {}
    table = {}
    for m in indecs:
        dims = nak.dims_nak(a, m)
        per_module[str(m)] = {k: ser.dim_to_json(v) for k, v in dims.items()}
        cell = table.setdefault((m.k % a.n, m.i), [])
        cell.append(str(dims["domdim"]))
    try:
        rq = nak.resolution_quiver(a)
    except nak.NotApplicable:
        rq = None
    ng = inv.nearly_gorenstein_check_nak(a) if cyclic else None
    return {
        "schema_version": ser.SCHEMA_VERSION,
        "seed": cfg.seed,
        "cutoff": cfg.cutoff,
        "series": list(series),
        "cyclic": cyclic,
        "domdim": ser.dim_to_json(core["domdim"]),
        "gordim_left": ser.dim_to_json(core["gordim_left"]),
        "gordim_right": ser.dim_to_json(core["gordim_right"]),
        "fdomdim": ser.dim_to_json(core["fdomdim"]),
        "is_gorenstein_dominant": bool(core["is_gorenstein_dominant"]),
        "cm_finite": bool(core["cm_finite"]),
        "nearly_gorenstein": None if ng is None else bool(ng),
        "gp": sorted([m.i, m.k] for m in nak.gp_indecs(a)),
        "gi": sorted([m.i, m.k] for m in nak.gi_indecs(a)),
        "gpi": sorted([m.i, m.k] for m in nak.gpi_indecs(a)),
        "resolution_quiver": None if rq is None else {
            "successor": {str(k): v for k, v in rq.successor.items()},
            "black": sorted(rq.black),
            "cyclically_black": sorted(rq.cyclically_black),
        },
        "domdim_table": {
            "rows": "k mod %d" % a.n,
            "columns": "vertex",
            "cells": {"%d,%d" % key: sorted(set(vals))
                      for key, vals in sorted(table.items())},
        },
        "modules": per_module,
    }


def _print_nakayama_text(rep: dict, out):
    print("Kupisch series: %s (%s)" %
          (",".join(str(c) for c in rep["series"]),
           "cyclic" if rep["cyclic"] else "linear"), file=out)
    for key in ("domdim", "gordim_left", "gordim_right", "fdomdim"):
        print("%-22s %s" % (key, _dim_str(ser.dim_from_json(rep[key]))), file=out)
    print("%-22s %s" % ("gorenstein-dominant", rep["is_gorenstein_dominant"]),
          file=out)
    print("%-22s %s" % ("cm-finite", rep["cm_finite"]), file=out)
    if rep["nearly_gorenstein"] is not None:
        print("%-22s %s" % ("nearly-gorenstein", rep["nearly_gorenstein"]),
              file=out)
    print("GP : %s" % rep["gp"], file=out)
    print("GI : %s" % rep["gi"], file=out)
    print("GPI: %s" % rep["gpi"], file=out)
    rq = rep["resolution_quiver"]
    if rq is not None:
        print("resolution quiver: %s  black=%s  cyclically-black=%s"
              % (rq["successor"], rq["black"], rq["cyclically_black"]),
              file=out)
    n = len(rep["series"])
    print("dominant-dimension table (rows: k mod %d, columns: vertex):" % n,
          file=out)
    cells = rep["domdim_table"]["cells"]
    for r in range(n):
        row = []
        for v in range(n):
            vals = cells.get("%d,%d" % (r, v), [])
            row.append("/".join(vals) if vals else "-")
        print("  k=%d | %s" % (r, "  ".join("%8s" % x for x in row)), file=out)
    print("seed=%d cutoff=%d" % (rep["seed"], rep["cutoff"]), file=out)


def cmd_nakayama(args, cfg: RunConfig, out) -> int:
    series = _parse_series(args.series)
    cyclic = not args.linear
    try:
        rep = _nakayama_report(series, cyclic, cfg)
    except nak.KupischViolation as e:
        print("invalid Kupisch series: %s" % e, file=sys.stderr)
        return 1
    if cfg.fmt == "json":
        print(ser.dump_json(rep), file=out)
    elif cfg.fmt == "csv":
        _print_dims_csv(rep, out)
    else:
        _print_nakayama_text(rep, out)
    return 0


def _print_dims_csv(rep: dict, out):
    w = csv.writer(out)
    w.writerow(["schema_version", "module", "projdim", "injdim",
                "domdim", "codomdim", "seed"])
    for label, dims in rep["modules"].items():
        w.writerow([SCAN_SCHEMA, label] +
                   [str(ser.dim_from_json(dims[k]))
                    for k in ("projdim", "injdim", "domdim", "codomdim")] +
                   [rep["seed"]])


# ---------------------------------------------------------------------------
# endo


def cmd_endo(args, cfg: RunConfig, out) -> int:
    f = _resolve_fixture(args.fixture, cfg)
    a = f.algebra
    dd = inv.algebra_domdim(a, cfg.cutoff, cfg.seed)
    left, right = inv.gorenstein_dims(a, cfg.cutoff, cfg.seed)
    gendo = inv.gendo_symmetric_check(a, cfg.cutoff, cfg.seed)
    mueller = chen = None
    if f.endo is not None and f.base_algebra is not None:
        gen = mr.direct_sum(list(f.endo.summands))[0]
        try:
            mueller = inv.mueller_domdim(f.base_algebra, gen, cfg.cutoff,
                                         cfg.seed)
            chen = inv.chen_koenig_injdim(f.base_algebra, gen, cfg.cutoff,
                                          cfg.seed, dd=mueller)
        except (inv.NotSymmetric, inv.NotGenerator) as e:
            mueller = None
            chen = {"note": "not applicable: %s" % e}
    fdom = None
    if f.pool:
        import warnings
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", inv.PoolIncomplete)
            fdom = inv.fdomdim_pool(f.pool, cfg.cutoff, cfg.seed,
                                    certified=f.pool_certified)
    checks = inv.theorem_suite(f, cfg.cutoff, cfg.seed)
    rep = {
        "schema_version": ser.SCHEMA_VERSION,
        "seed": cfg.seed,
        "cutoff": cfg.cutoff,
        "fixture": f.name,
        "algebra_dim": a.dim,
        "domdim": ser.dim_to_json(dd),
        "gordim_left": ser.dim_to_json(left),
        "gordim_right": ser.dim_to_json(right),
        "gorenstein": bool(left.kind == "finite" and right.kind == "finite"
                           and left.value == right.value),
        "gendo_symmetric": bool(gendo),
        "fdomdim_pool": None if fdom is None else ser.dim_to_json(fdom),
        "fdomdim_pool_certified": bool(f.pool_certified) if f.pool else None,
        "mueller_domdim": None if mueller is None else ser.dim_to_json(mueller),
        "mueller_consistent": (None if mueller is None
                               else str(mueller) == str(dd)),
        "chen_koenig": None if chen is None else {
            k: (ser.dim_to_json(v) if hasattr(v, "kind") else v)
            for k, v in chen.items()},
        "checks": [{"name": c.name, "status": c.status, "detail": c.detail}
                   for c in checks],
    }
    if cfg.fmt == "json":
        print(ser.dump_json(rep), file=out)
    else:
        print("fixture: %s (dim %d)" % (f.name, a.dim), file=out)
        print("%-22s %s" % ("domdim", _dim_str(dd)), file=out)
        print("%-22s %s / %s" % ("gordim (l/r)", _dim_str(left),
                                 _dim_str(right)), file=out)
        print("%-22s %s" % ("gorenstein", rep["gorenstein"]), file=out)
        print("%-22s %s" % ("gendo-symmetric", rep["gendo_symmetric"]),
              file=out)
        if fdom is not None:
            tag = "" if f.pool_certified else " (pool not exhaustive)"
            print("%-22s %s%s" % ("fdomdim (pool)", _dim_str(fdom), tag),
                  file=out)
        if mueller is not None:
            print("%-22s %s (consistent: %s)"
                  % ("mueller domdim", _dim_str(mueller),
                     rep["mueller_consistent"]), file=out)
        if chen is not None and "lhs" in chen:
            print("%-22s lhs=%s rhs=%s z=%s"
                  % ("chen-koenig injdim", _dim_str(chen["lhs"]),
                     _dim_str(chen["rhs"]), chen["z"]), file=out)
        for c in checks:
            print("  check %-44s %-4s %s" % (c.name, c.status, c.detail),
                  file=out)
        print("seed=%d cutoff=%d" % (cfg.seed, cfg.cutoff), file=out)
    if any(c.status == "fail" for c in checks):
        return 2
    return 0


# ---------------------------------------------------------------------------
# module


def _resolve_fixture(name, cfg: RunConfig):
    if name is None:
        raise _CliError("a --fixture name is required")
    if name.startswith("kupisch-s"):
        return fx.parametric_kupisch(int(name[len("kupisch-s"):]), cfg.field)
    try:
        return fx.build_fixture(name, seed=cfg.seed)
    except KeyError as e:
        raise _CliError(str(e))


def _resolve_module(spec: str, f, cfg: RunConfig):
    spec = spec.strip()
    if spec.startswith("[") and spec.endswith("]"):
        if f.nak is None:
            raise _CliError("coordinate pairs need a Nakayama fixture")
        i, k = (int(x) for x in spec[1:-1].split(","))
        return mr.bridge_module(f.algebra, i, k)
    if spec.startswith("hom:"):
        key = spec[4:]
        if f.endo is None:
            raise _CliError("hom-image specs need an endo fixture")
        base = f.extras.get(key)
        if base is None:
            raise _CliError("fixture %s has no base module %r (known: %s)"
                            % (f.name, key, sorted(f.extras)))
        return mr.hom_functor(f.endo, base)
    if spec.startswith("extra:"):
        m = f.extras.get(spec[6:])
        if m is None:
            raise _CliError("fixture %s has no extra %r" % (f.name, spec[6:]))
        return m
    if spec.startswith("@"):
        d = ser.load_json(spec[1:])
        ref = d.get("algebra_ref", "")
        if ref.endswith(".json"):
            a = ser.algebra_from_json(ser.load_json(ref))
        else:
            a = _resolve_fixture(ref or None, cfg).algebra
        return ser.module_from_json(d, a)
    raise _CliError("cannot parse module spec %r "
                    "(use [i,k], hom:KEY, extra:KEY or @file.json)" % spec)


def cmd_module(args, cfg: RunConfig, out) -> int:
    f = _resolve_fixture(args.fixture, cfg) if args.fixture else None
    m = _resolve_module(args.spec, f, cfg)
    a = m.algebra
    dims = {
        "projdim": inv.module_projdim(m, cfg.cutoff, cfg.seed),
        "injdim": inv.module_injdim(m, cfg.cutoff, cfg.seed),
        "domdim": inv.module_domdim(m, cfg.cutoff, cfg.seed),
        "codomdim": inv.module_codomdim(m, cfg.cutoff, cfg.seed),
    }
    verdicts = {
        "gp": inv.gp_test(a, m, cfg.cutoff, cfg.seed),
        "gi": inv.gi_test(a, m, cfg.cutoff, cfg.seed),
        "gpi": inv.gpi_test(a, m, cfg.cutoff, cfg.seed),
    }
    rep = {
        "schema_version": ser.SCHEMA_VERSION,
        "seed": cfg.seed,
        "cutoff": cfg.cutoff,
        "fixture": f.name if f else None,
        "module": ser.module_to_json(m, algebra_ref=f.name if f else ""),
        "dims": {k: ser.dim_to_json(v) for k, v in dims.items()},
        "verdicts": {k: {"status": v.status, "witness_degree": v.witness_degree,
                         "condition": v.condition, "window": v.window,
                         "certificate": [str(c) for c in v.certificate],
                         "bound": v.bound}
                     for k, v in verdicts.items()},
    }
    if cfg.fmt == "json":
        print(ser.dump_json(rep), file=out)
    else:
        print("module: %s (dim %d) over %s"
              % (m.label or args.spec, m.dim, f.name if f else "file"),
              file=out)
        for k, v in dims.items():
            print("%-10s %s" % (k, _dim_str(v)), file=out)
        for k, v in verdicts.items():
            print("%-10s %s" % (k, v), file=out)
        print("seed=%d cutoff=%d" % (cfg.seed, cfg.cutoff), file=out)
    return 0


# ---------------------------------------------------------------------------
# scan


def _scan_row(series) -> dict:
    a = nak.validate_kupisch(series)
    core = nak.algebra_invariants_nak(a)
    n = a.n
    fd = core["fdomdim"]
    gl = core["gordim_left"]
    viol_fdom = bool(fd.kind == "finite" and fd.value > 2 * n - 2)
    # The g+1 bound on fdomdim is asserted only for CM-finite Gorenstein
    # gendo-symmetric algebras; Nakayama algebras are always CM-finite.
    gendo = False
    if core["domdim"].ge(2) and gl.kind == "finite":
        ba = alg.from_kupisch(a, linalg.PrimeField(2))
        gendo = inv.gendo_symmetric_check(ba)
    viol_gplus1 = bool(gendo and gl.kind == "finite" and fd.kind == "finite"
                       and fd.value > gl.value + 1)
    viol_gd = not bool(core["is_gorenstein_dominant"])
    ng = inv.nearly_gorenstein_check_nak(a)
    return {
        "series": "-".join(str(c) for c in series),
        "domdim": str(core["domdim"]),
        "gordim": str(core["gordim_left"]),
        "fdomdim": str(fd),
        "gp_count": int(core["gp_count"]),
        "nearly_gorenstein": bool(ng),
        "gendo_symmetric": gendo,
        "viol_fdomdim_2n_minus_2": viol_fdom,
        "viol_g_plus_1": viol_gplus1,
        "viol_gorenstein_dominant": viol_gd,
    }


def _cyclic_series(n_max: int, c_max: int):
    import itertools
    for n in range(1, n_max + 1):
        for c in itertools.product(range(2, c_max + 1), repeat=n):
            if all(c[(i + 1) % n] >= c[i] - 1 for i in range(n)):
                yield c


SCAN_COLUMNS = ["schema_version", "series", "domdim", "gordim", "fdomdim",
                "gp_count", "nearly_gorenstein", "gendo_symmetric",
                "viol_fdomdim_2n_minus_2",
                "viol_g_plus_1", "viol_gorenstein_dominant", "seed"]


def cmd_scan(args, cfg: RunConfig, out) -> int:
    if args.n_max < 1 or args.c_max < 2:
        raise _CliError("need n_max >= 1 and c_max >= 2")
    series = []
    for s in _cyclic_series(args.n_max, args.c_max):
        series.append(s)
        if len(series) > SCAN_BUDGET:
            raise BudgetExceeded("more than %d series requested; the scan "
                                 "budget is %d" % (SCAN_BUDGET, SCAN_BUDGET))
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            rows = list(pool.map(_scan_row, series, chunksize=8))
    else:
        rows = [_scan_row(s) for s in series]
    w = csv.writer(out)
    w.writerow(SCAN_COLUMNS)
    violated = False
    for r in rows:
        viol = (r["viol_fdomdim_2n_minus_2"] or r["viol_g_plus_1"]
                or r["viol_gorenstein_dominant"])
        violated = violated or viol
        w.writerow([SCAN_SCHEMA] + [r[c] for c in SCAN_COLUMNS[1:-1]]
                   + [cfg.seed])
    return 3 if violated else 0


# ---------------------------------------------------------------------------
# suite


def cmd_suite(args, cfg: RunConfig, out) -> int:
    names = args.fixtures or fx.FIXTURE_NAMES
    failed = False
    for name in names:
        f = _resolve_fixture(name, cfg)
        checks = inv.theorem_suite(f, cfg.cutoff, cfg.seed)
        for c in checks:
            print("%-22s %-44s %-4s %s" % (name, c.name, c.status, c.detail),
                  file=out)
            failed = failed or c.status == "fail"
    print("seed=%d cutoff=%d" % (cfg.seed, cfg.cutoff), file=out)
    return 2 if failed else 0


# ---------------------------------------------------------------------------
# entry point


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _CliError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="gorlab",
                description="Exact homological invariants of "
                            "finite-dimensional algebras")
    p.add_argument("--field", default="2",
                   help="coefficient field: a prime or 'gf4' (default 2)")
    p.add_argument("--cutoff", type=int, default=inv.DEFAULT_BOUND,
                   help="Ext/resolution certification bound (default %d)"
                        % inv.DEFAULT_BOUND)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", dest="fmt", default="text",
                   choices=["text", "json", "csv"])
    p.add_argument("--jobs", type=int, default=1)
    sub = p.add_subparsers(dest="command", required=True)

    pn = sub.add_parser("nakayama", help="Kupisch-series report")
    pn.add_argument("series", help="comma-separated Kupisch series, e.g. 4,5,5")
    g = pn.add_mutually_exclusive_group()
    g.add_argument("--cyclic", action="store_true", default=True)
    g.add_argument("--linear", action="store_true", default=False)
    pn.set_defaults(func=cmd_nakayama)

    pe = sub.add_parser("endo", help="endomorphism-algebra fixture report")
    pe.add_argument("--fixture", required=True)
    pe.set_defaults(func=cmd_endo)

    pm = sub.add_parser("module", help="per-module report")
    pm.add_argument("spec",
                    help="[i,k] | hom:KEY | extra:KEY | @module.json")
    pm.add_argument("--fixture")
    pm.set_defaults(func=cmd_module)

    ps = sub.add_parser("scan", help="scan cyclic Kupisch series")
    ps.add_argument("n_max", type=int)
    ps.add_argument("c_max", type=int)
    ps.set_defaults(func=cmd_scan)

    pt = sub.add_parser("suite", help="run the named-theorem checks")
    pt.add_argument("--fixture", dest="fixtures", action="append",
                    help="may be repeated; default: all fixtures")
    pt.set_defaults(func=cmd_suite)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = _build_parser().parse_args(argv)
        cfg = RunConfig(field=parse_field(args.field), cutoff=args.cutoff,
                        seed=args.seed, jobs=args.jobs, fmt=args.fmt)
        return args.func(args, cfg, out)
    except (_CliError, BudgetExceeded, nak.KupischViolation,
            alg.ValidationError, linalg.FieldError,
            json.JSONDecodeError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
