"""Command-line surface for the braid-monoid toolkit.

Subcommands: ``present`` (print a presentation), ``analyze`` (classify it),
``certify`` (Garside certificate, disk-cached), ``eq``/``geq``/``nf``
(word problems and normal forms), ``simples`` (divisor lattice, DOT
export), ``iso`` (isomorphism scenarios), ``sweep`` (the whole matrix up
to a parameter bound).

Exit codes: 0 pass/true, 1 fail/false, 2 budget exhausted, 3 bad input.
Configuration precedence: flags, then ``JGAR_*`` environment variables,
then a JSON config file (``--config`` or ``JGAR_CONFIG``), then defaults.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, replace
from math import gcd
from pathlib import Path

from .families import (FLAVORS, KINDS, PRESET_NAMES, VARIANTS, BraidParams,
                       build_presentation, preset_table, special_words)
from .groups import group_context, parse_signed
from .isosuite import SCENARIOS
from .monoid import (BudgetExceeded, Budgets, DivisorSet, MonoidContext,
                     certify_family, family_context)
from .words import Presentation


@dataclass(frozen=True)
class RunConfig:
    budgets: Budgets
    max_m: int = 4
    fmt: str = "text"
    out: str | None = None
    cache_dir: str | None = None


_CONFIG_KEYS = {
    "theta_steps": int,
    "closure_words": int,
    "bfs_nodes": int,
    "max_m": int,
    "format": str,
    "out": str,
    "cache_dir": str,
}

_BUDGET_KEYS = ("theta_steps", "closure_words", "bfs_nodes")


def resolve_config(args: argparse.Namespace) -> RunConfig:
    values: dict[str, object] = {}
    path = getattr(args, "config", None) or os.environ.get("JGAR_CONFIG")
    if path:
        data = json.loads(Path(path).read_text())
        if not isinstance(data, dict):
            raise ValueError("config file must hold a JSON object")
        for key, cast in _CONFIG_KEYS.items():
            if key in data:
                values[key] = cast(data[key])
    for key, cast in _CONFIG_KEYS.items():
        raw = os.environ.get("JGAR_" + key.upper())
        if raw is not None:
            values[key] = cast(raw)
    for key in _CONFIG_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag

    fmt = str(values.get("format", "text"))
    if fmt not in ("text", "json"):
        raise ValueError(f"unknown output format {fmt!r}")
    overrides = {k: int(values[k]) for k in _BUDGET_KEYS if k in values}
    for key, v in overrides.items():
        if v <= 0:
            raise ValueError(f"budget {key} must be positive")
    max_m = int(values.get("max_m", 4))
    if max_m < 1:
        raise ValueError("max_m must be positive")
    out = values.get("out")
    cache = values.get("cache_dir")
    return RunConfig(budgets=replace(Budgets(), **overrides), max_m=max_m,
                     fmt=fmt, out=str(out) if out else None,
                     cache_dir=str(cache) if cache else None)


# ------------------------------------------------------------- reporting


def _check_entry(name: str, ok: bool | None, witness: str = "") -> dict:
    entry: dict = {"name": name, "pass": ok}
    if witness:
        entry["witness"] = str(witness)
    return entry


def _verdict(checks: list[dict]) -> int:
    flags = [c["pass"] for c in checks]
    if any(v is False for v in flags):
        return 1
    if any(v is None for v in flags):
        return 2
    return 0


def _report(scenario: str, params: dict, checks: list[dict],
            budgets: Budgets, elapsed_ms: int) -> dict:
    return {"scenario": scenario, "params": params, "checks": checks,
            "budgets": asdict(budgets), "elapsed_ms": elapsed_ms}


def render_text(rep: dict) -> str:
    params = " ".join(f"{k}={v}" for k, v in rep["params"].items())
    lines = [f"[{rep['scenario']}] {params}".rstrip()]
    for c in rep["checks"]:
        mark = {True: "PASS", False: "FAIL", None: "BUDGET"}[c["pass"]]
        line = f"  {mark:<6} {c['name']}"
        if c.get("witness"):
            line += f"  ({c['witness']})"
        lines.append(line)
    good = sum(1 for c in rep["checks"] if c["pass"])
    lines.append(f"  {good}/{len(rep['checks'])} passed in "
                 f"{rep['elapsed_ms']} ms")
    return "\n".join(lines)


def _write(text: str, cfg: RunConfig):
    if not text.endswith("\n"):
        text += "\n"
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit(rep: dict, cfg: RunConfig):
    if cfg.fmt == "json":
        _write(json.dumps(rep, indent=2, sort_keys=True), cfg)
    else:
        _write(render_text(rep), cfg)


# ------------------------------------------------------------- DOT export


def export_dot(simples: DivisorSet, path, presentation=None) -> None:
    """Write the divisor lattice as a DOT digraph: one node per canonical
    word, one edge per covering relation, deterministic order."""

    def label(e):
        if presentation is None:
            return ".".join(str(c) for c in e.canonical) or "1"
        return presentation.word_text(e.canonical)

    members = sorted(simples.members)
    edges = sorted(simples.hasse)
    lines = ["digraph simples {", "  rankdir=BT;"]
    lines += [f'  "{label(e)}";' for e in members]
    lines += [f'  "{label(a)}" -> "{label(b)}";' for a, b in edges]
    lines.append("}")
    Path(path).write_text("\n".join(lines) + "\n")


# ----------------------------------------------------------- cert caching


def _budget_tag(budgets: Budgets) -> str:
    fields = asdict(budgets)
    return ",".join(f"{k}={fields[k]}" for k in sorted(fields))


def certify_cached(params: BraidParams, cfg: RunConfig,
                   refresh: bool = False) -> tuple[dict, bool]:
    """Certify one family, reusing a disk-cached report when the
    presentation content and the budgets both match."""
    enlarged = build_presentation(replace(params, variant="enlarged"))
    key = f"{enlarged.content_key()[:24]}"
    path = None
    if cfg.cache_dir:
        path = Path(cfg.cache_dir) / f"cert-{key}.json"
        if path.exists() and not refresh:
            cached = json.loads(path.read_text())
            if cached.get("budget_tag") == _budget_tag(cfg.budgets):
                return cached["report"], True
    t0 = time.monotonic()
    _, cert = certify_family(params, cfg.budgets)
    elapsed = int((time.monotonic() - t0) * 1000)
    checks = [_check_entry(name, ev.passed, ev.detail)
              for name, ev in cert.evidence.items()]
    rep = _report("certify",
                  {"n": params.n, "m": params.m, "flavor": params.flavor,
                   "kind": params.kind},
                  checks, cfg.budgets, elapsed)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(
            {"budget_tag": _budget_tag(cfg.budgets), "report": rep},
            sort_keys=True))
    return rep, False


# ------------------------------------------------------------ subcommands


def _family(args: argparse.Namespace, variant: str = "base") -> BraidParams:
    if args.n is None or args.m is None:
        raise ValueError("both -n and -m are required")
    return BraidParams(args.n, args.m, args.flavor, args.kind, variant)


def _presentation_of(args: argparse.Namespace) -> tuple[Presentation, dict]:
    if getattr(args, "preset", None):
        if args.n is not None or args.m is not None:
            raise ValueError("--preset excludes -n/-m")
        return preset_table(args.preset), {"preset": args.preset}
    params = _family(args, args.variant)
    return build_presentation(params), {
        "n": params.n, "m": params.m, "flavor": params.flavor,
        "kind": params.kind, "variant": params.variant}


def cmd_present(args, cfg: RunConfig) -> int:
    p, _ = _presentation_of(args)
    _write(p.canonical_text(), cfg)
    return 0


def cmd_analyze(args, cfg: RunConfig) -> int:
    p, params = _presentation_of(args)
    t0 = time.monotonic()
    ctx = MonoidContext(p, cfg.budgets)
    elapsed = int((time.monotonic() - t0) * 1000)
    checks = [_check_entry(name, flag) for name, flag in (
        ("homogeneous", ctx.homogeneous),
        ("right-complemented", ctx.right_complemented),
        ("right-full", ctx.right_full),
        ("cube-condition", ctx.cube_ok),
        ("C1", ctx.c1_ok))]
    _emit(_report("analyze", params, checks, cfg.budgets, elapsed), cfg)
    # the operative question: can the theta engine decide this monoid
    return 0 if ctx.cube_ok else 1


def cmd_certify(args, cfg: RunConfig) -> int:
    rep, cached = certify_cached(_family(args), cfg, refresh=args.refresh)
    if cached:
        print("cache hit", file=sys.stderr)
    _emit(rep, cfg)
    return _verdict(rep["checks"])


def cmd_eq(args, cfg: RunConfig) -> int:
    ctx = family_context(_family(args), cfg.budgets)
    u = ctx.parse(args.w1)
    v = ctx.parse(args.w2)
    ok = ctx.words_equal(u, v)
    _write("equal" if ok else "different", cfg)
    return 0 if ok else 1


def _certified_context(args, cfg: RunConfig) -> MonoidContext:
    ctx, cert = certify_family(_family(args), cfg.budgets)
    if not cert.valid:
        raise ValueError(f"no valid Garside certificate: "
                         f"fails {', '.join(cert.failing())}")
    return ctx


def cmd_geq(args, cfg: RunConfig) -> int:
    ctx = _certified_context(args, cfg)
    gctx = group_context(ctx)
    a = parse_signed(ctx.presentation, args.w1)
    b = parse_signed(ctx.presentation, args.w2)
    ok = gctx.equal(a, b)
    _write("equal" if ok else "different", cfg)
    return 0 if ok else 1


def cmd_nf(args, cfg: RunConfig) -> int:
    ctx = _certified_context(args, cfg)
    factors = ctx.greedy_nf(ctx.parse(args.word))
    _write(" | ".join(ctx.text(f.canonical) for f in factors) or "1", cfg)
    return 0


def cmd_simples(args, cfg: RunConfig) -> int:
    params = _family(args)
    ctx = family_context(params, cfg.budgets)
    ds = ctx.left_divisors(special_words(params).Delta)
    if args.dot:
        if not ds.hasse and len(ds.members) > 1:
            raise ValueError("cover graph was skipped above the "
                             "lattice-exhaustive budget; raise it for DOT "
                             "export")
        export_dot(ds, args.dot, ctx.presentation)
    lines = [f"{len(ds.members)} simples"]
    if args.list:
        lines += [ctx.text(e.canonical) for e in sorted(ds.members)]
    _write("\n".join(lines), cfg)
    return 0


def cmd_iso(args, cfg: RunConfig) -> int:
    fn = SCENARIOS[args.scenario]
    t0 = time.monotonic()
    rep = fn(args.n, args.m, cfg.budgets)
    elapsed = int((time.monotonic() - t0) * 1000)
    checks = [_check_entry(c.name, c.ok, c.witness) for c in rep.checks]
    _emit(_report(rep.scenario, rep.params, checks, cfg.budgets, elapsed),
          cfg)
    return _verdict(checks)


# ------------------------------------------------------------------ sweep


def _c1_row(n: int, m: int, kind: str, cfg: RunConfig):
    bad = []
    for variant in ("enlarged", "enlarged-opposite"):
        p = build_presentation(BraidParams(n, m, "star-star", kind, variant))
        if not MonoidContext(p, cfg.budgets).c1_ok:
            bad.append(variant)
    if bad:
        return False, f"fails on {', '.join(bad)}"
    return True, "both orientations"


def _certify_row(n: int, m: int, kind: str, cfg: RunConfig):
    rep, cached = certify_cached(
        BraidParams(n, m, "star-star", kind), cfg)
    bad = [c["name"] for c in rep["checks"] if not c["pass"]]
    if bad:
        return False, f"fails {', '.join(bad)}"
    return True, "cached" if cached else f"{rep['elapsed_ms']} ms"


def _scenario_row(fn, n: int, m: int, cfg: RunConfig):
    rep = fn(n, m, cfg.budgets)
    pending = [c for c in rep.checks if c.ok is None]
    if pending:
        raise BudgetExceeded(f"{pending[0].name}: {pending[0].witness}")
    bad = rep.failing()
    if bad:
        return False, f"fails {bad[0].name}"
    return True, f"{len(rep.checks)} checks"


def _sweep_pair(n: int, m: int, cfg: RunConfig) -> list[dict]:
    rows: list[dict] = []

    def guard(name, fn):
        try:
            ok, witness = fn()
        except BudgetExceeded as exc:
            ok, witness = None, str(exc)
        rows.append(_check_entry(f"({n},{m}) {name}", ok, witness))
        print(f"  {rows[-1]['name']}: "
              f"{ {True: 'pass', False: 'FAIL', None: 'budget'}[ok] }",
              file=sys.stderr)

    for kind in KINDS:
        guard(f"C1-{kind}", lambda kind=kind: _c1_row(n, m, kind, cfg))
        guard(f"certify-{kind}",
              lambda kind=kind: _certify_row(n, m, kind, cfg))
    for scenario, fn in SCENARIOS.items():
        if scenario == "dihedral" and n >= m:
            continue
        guard(scenario, lambda fn=fn: _scenario_row(fn, n, m, cfg))
    return rows


def cmd_sweep(args, cfg: RunConfig) -> int:
    t0 = time.monotonic()
    checks: list[dict] = []
    for m in range(1, cfg.max_m + 1):
        for n in range(1, m + 1):
            if gcd(n, m) == 1:
                checks.extend(_sweep_pair(n, m, cfg))
    elapsed = int((time.monotonic() - t0) * 1000)
    _emit(_report("sweep", {"max": cfg.max_m}, checks, cfg.budgets,
                  elapsed), cfg)
    return _verdict(checks)


# ------------------------------------------------------------ entry point


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValueError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file")
    common.add_argument("--theta-steps", type=int, dest="theta_steps")
    common.add_argument("--closure-words", type=int, dest="closure_words")
    common.add_argument("--bfs-nodes", type=int, dest="bfs_nodes")
    common.add_argument("--format", choices=("text", "json"))
    common.add_argument("--out", help="write the report here, not stdout")
    common.add_argument("--cache-dir", dest="cache_dir",
                        help="certificate cache directory")

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("-n", type=int, default=None)
    family.add_argument("-m", type=int, default=None)
    family.add_argument("--flavor", default="star-star", choices=FLAVORS)
    family.add_argument("--kind", default="classical", choices=KINDS)

    parser = _Parser(prog="jgar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("present", parents=[common, family],
                        help="print a presentation, canonically serialized")
    sp.add_argument("--variant", default="base", choices=VARIANTS)
    sp.add_argument("--preset", help=f"one of: {', '.join(PRESET_NAMES)}")
    sp.set_defaults(func=cmd_present)

    sp = sub.add_parser("analyze", parents=[common, family],
                        help="classify a presentation for the engines")
    sp.add_argument("--variant", default="enlarged", choices=VARIANTS)
    sp.add_argument("--preset")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("certify", parents=[common, family],
                        help="run the Garside certificate checks")
    sp.add_argument("--refresh", action="store_true",
                    help="ignore a cached certificate")
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("eq", parents=[common, family],
                        help="decide monoid equality of two words")
    sp.add_argument("w1")
    sp.add_argument("w2")
    sp.set_defaults(func=cmd_eq)

    sp = sub.add_parser("geq", parents=[common, family],
                        help="decide group equality of two signed words")
    sp.add_argument("w1")
    sp.add_argument("w2")
    sp.set_defaults(func=cmd_geq)

    sp = sub.add_parser("nf", parents=[common, family],
                        help="greedy normal form of a word")
    sp.add_argument("word")
    sp.set_defaults(func=cmd_nf)

    sp = sub.add_parser("simples", parents=[common, family],
                        help="divisors of the Garside element")
    sp.add_argument("--list", action="store_true")
    sp.add_argument("--dot", help="write the cover graph as DOT")
    sp.set_defaults(func=cmd_simples)

    sp = sub.add_parser("iso", parents=[common],
                        help="run one isomorphism scenario")
    sp.add_argument("scenario", choices=tuple(SCENARIOS))
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-m", type=int, required=True)
    sp.set_defaults(func=cmd_iso)

    sp = sub.add_parser("sweep", parents=[common],
                        help="full verification matrix for coprime n <= m")
    sp.add_argument("--max", type=int, dest="max_m", default=None)
    sp.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = resolve_config(args)
        return args.func(args, cfg)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
