"""Command-line interface: single computations, verification runs and catalog suites.

Exit codes: 0 all checks pass, N > 0 the number of failed checks (capped at
63), 64 usage error, 65 budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import signal
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, Dict, List, Optional

import jsonschema

from . import groebner
from .catalog import CatalogEntry, CatalogError, entry as catalog_entry, load_catalog, parse_catalog
from .exactpoly import GF, PRIME_A, PRIME_B, QQ, _is_prime
from .groebner import BudgetExceeded

EXIT_USAGE = 64
EXIT_BUDGET = 65
MAX_FAILURE_CODE = 63


class UsageError(Exception):
    pass


class CheckTimeout(Exception):
    pass


@dataclass
class RunConfig:
    field: Optional[object] = None  # None: each check picks its natural field
    seed: int = 0
    budget: int = groebner.DEFAULT_BUDGET
    tol: float = 1e-10
    jobs: int = 1
    output: str = "json"
    timeout: Optional[float] = None

    def field_or(self, default):
        return default if self.field is None else self.field


def field_label(F) -> str:
    if F is None or F == QQ:
        return "q"
    return f"fp:{F.p}"


def parse_field(text: str):
    t = text.strip().lower()
    if t in ("q", "qq"):
        return QQ
    if t.startswith("fp:"):
        try:
            p = int(t[3:])
        except ValueError:
            raise UsageError(f"bad prime in --field {text!r}") from None
        if p < 3 or not _is_prime(p):
            raise UsageError(f"--field fp:{p} needs an odd prime")
        return GF(p)
    raise UsageError(f"--field must be q or fp:<p>, got {text!r}")


# ---------------------------------------------------------------- checks and reports

def check(name: str, anchor: str, expected, observed, *, field=None, seeds=(), seconds=None,
          ok: Optional[bool] = None, error: Optional[str] = None) -> dict:
    expected, observed = _jsonable(expected), _jsonable(observed)
    out = {
        "name": name,
        "anchor": anchor,
        "expected": expected,
        "observed": observed,
        "pass": bool(expected == observed) if ok is None else bool(ok),
    }
    if field is not None:
        out["field"] = field_label(field)
    if seeds:
        out["seeds"] = [int(s) for s in seeds]
    if seconds is not None:
        out["seconds"] = round(float(seconds), 4)
    if error:
        out["error"] = error
    return out


def _jsonable(v):
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    if isinstance(v, list):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


_SCHEMA = None


def report_schema() -> dict:
    global _SCHEMA
    if _SCHEMA is None:
        _SCHEMA = json.loads(resources.files("projdual").joinpath("data/report.schema.json").read_text())
    return _SCHEMA


def make_report(command: str, target: str, anchor: str, cfg: RunConfig, checks: List[dict],
                data: dict, wall: float, budget_hit: bool = False) -> dict:
    fields = {c.get("field") for c in checks if c.get("field")}
    if cfg.field is not None:
        flabel = field_label(cfg.field)
    elif len(fields) == 1:
        flabel = fields.pop()
    elif fields:
        flabel = "mixed"
    else:
        flabel = "q"
    seeds = sorted({s for c in checks for s in c.get("seeds", [])} | {cfg.seed})
    failures = sum(1 for c in checks if not c["pass"])
    rep = {
        "command": command,
        "target": target,
        "anchor": anchor,
        "field": flabel,
        "seeds": seeds,
        "budget": cfg.budget,
        "tolerance": cfg.tol,
        "wall_time": round(wall, 4),
        "pass": failures == 0 and not budget_hit,
        "failures": failures,
        "budget_exceeded": budget_hit,
        "checks": checks,
        "data": _jsonable(data),
    }
    jsonschema.validate(rep, report_schema())
    return rep


def to_markdown(rep: dict) -> str:
    lines = [f"# {rep['command']} {rep.get('target', '')}".rstrip(), ""]
    lines.append(f"- anchor: {rep['anchor']}")
    for key in ("field", "seeds", "budget", "tolerance", "wall_time", "pass", "failures", "budget_exceeded"):
        lines.append(f"- {key}: {json.dumps(rep[key])}")
    lines += ["", "| check | anchor | expected | observed | pass |", "|---|---|---|---|---|"]
    for c in rep["checks"]:
        lines.append(f"| {c['name']} | {c['anchor']} | {json.dumps(c['expected'])} | "
                     f"{json.dumps(c['observed'])} | {'yes' if c['pass'] else 'NO'} |")
    if rep["data"]:
        lines += ["", "## data", ""]
        for k, v in rep["data"].items():
            lines.append(f"- {k}: {json.dumps(v)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- inputs

def load_target(spec: str, name: Optional[str] = None) -> CatalogEntry:
    """A catalog-format file (first entry or ``name``) or a bundled catalog name."""
    path = Path(spec)
    if path.is_file():
        try:
            entries = parse_catalog(path.read_text())
        except CatalogError as exc:
            raise UsageError(str(exc)) from None
        if not entries:
            raise UsageError(f"{spec}: no catalog entries")
        if name is None:
            return entries[0]
        for e in entries:
            if e.name == name:
                return e
        raise UsageError(f"{spec}: no entry named {name!r}")
    try:
        return catalog_entry(spec)
    except KeyError:
        raise UsageError(f"{spec!r} is neither a file nor a catalog entry") from None


# ---------------------------------------------------------------- timeouts

def _with_timeout(fn: Callable, seconds: Optional[float]):
    if not seconds or not hasattr(signal, "SIGALRM"):
        return fn()

    def on_alarm(signum, frame):
        raise CheckTimeout(f"timed out after {seconds}s")

    old = signal.signal(signal.SIGALRM, on_alarm)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        return fn()
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def guarded(name: str, anchor: str, fn: Callable[[], List[dict]], cfg: RunConfig) -> List[dict]:
    """Run a check producer; budget errors propagate, other failures become failed checks."""
    t0 = time.perf_counter()
    try:
        return _with_timeout(fn, cfg.timeout)
    except (BudgetExceeded, UsageError):
        raise
    except CheckTimeout as exc:
        return [check(name, anchor, "completed", "timeout", ok=False, seconds=time.perf_counter() - t0,
                      error=str(exc))]
    except Exception as exc:  # reported, never swallowed silently
        return [check(name, anchor, "completed", type(exc).__name__, ok=False,
                      seconds=time.perf_counter() - t0, error=str(exc))]


# ---------------------------------------------------------------- commands

ANCHOR_DUAL = "dual variety as the image of the conormal variety"
ANCHOR_VERIFY = "duality of the smooth discriminant and the purity trichotomy"
ANCHOR_BRAID = "braid monodromy representation and surjectivity onto the braid group"


def cmd_dual(target: str, cfg: RunConfig, name: Optional[str] = None) -> dict:
    from .duality import dual_variety

    e = load_target(target, name)
    F = cfg.field_or(QQ)
    t0 = time.perf_counter()
    data: dict = {}
    budget_hit = False

    def run():
        X = e.variety(F)
        D = dual_variety(X, seed=cfg.seed, budget=cfg.budget)
        dim, deg = D.dim_and_degree()
        data.update({
            "variety": e.name, "N": e.N, "generators": [str(g) for g in X.gens],
            "dual_generators": [str(g) for g in D.gens], "dual_dim": dim, "dual_degree": deg,
            "defect": X.N - 1 - dim,
        })
        out = []
        for key, obs in (("dual_dim", dim), ("dual_deg", deg)):
            exp = e.expected(key)
            if exp is not None:
                out.append(check(key, ANCHOR_DUAL, exp, obs, field=F, seeds=[cfg.seed]))
        return out

    try:
        checks = guarded("dual", ANCHOR_DUAL, run, cfg)
    except BudgetExceeded as exc:
        budget_hit = True
        checks = [check("dual", ANCHOR_DUAL, "completed", "budget exceeded", ok=False, error=str(exc))]
    return make_report("dual", e.name, ANCHOR_DUAL, cfg, checks, data, time.perf_counter() - t0, budget_hit)


def cmd_verify(target: str, k: int, cfg: RunConfig, name: Optional[str] = None) -> dict:
    from .discriminant import PurityViolation, purity_classify, verify_duality

    e = load_target(target, name)
    F = cfg.field_or(QQ)
    t0 = time.perf_counter()
    data: dict = {"variety": e.name, "k": k}
    budget_hit = False

    def run():
        X = e.variety(F)
        if not 1 <= k <= X.N - 1:
            raise UsageError(f"k must lie in 1..{X.N - 1}")
        rep = verify_duality(X, k, cfg.seed)
        res = rep.discriminant
        data.update({
            "equal": rep.equal, "classification": res.classification, "dominant": res.dominant,
            "discriminant_dim": res.dim, "discriminant_degree": res.degree,
            "discriminant_generators": [str(g) for g in res.discriminant.gens],
            "projection": res.projection.as_json(),
        })
        out = [check("duality", "duality of the smooth discriminant", True, rep.equal, field=F, seeds=rep.seeds)]
        if X.dim >= k:
            try:
                pr = purity_classify(X, k, cfg.seed)
                data.update({"predicted": pr.predicted, "dual_codim": pr.dual_codim})
                out.append(check("purity", "purity trichotomy", pr.predicted, pr.classification,
                                 field=F, seeds=pr.seeds))
            except PurityViolation as exc:
                out.append(check("purity", "purity trichotomy", "consistent", "violation", ok=False,
                                 field=F, error=str(exc)))
        return out

    try:
        checks = guarded("verify", ANCHOR_VERIFY, run, cfg)
    except BudgetExceeded as exc:
        budget_hit = True
        checks = [check("verify", ANCHOR_VERIFY, "completed", "budget exceeded", ok=False, error=str(exc))]
    return make_report("verify", e.name, ANCHOR_VERIFY, cfg, checks, data, time.perf_counter() - t0, budget_hit)


def braid_checks(e: CatalogEntry, cfg: RunConfig, data: dict, attempts: int = 3) -> List[dict]:
    from .braid import braid_monodromy, sphere_return, surjectivity_certificate
    from .variety import random_projection

    X = e.variety(QQ)
    if X.N != 2 or len(X.gens) != 1:
        raise UsageError("braid needs a plane curve given by one equation")
    f = X.gens[0]
    m = f.total_degree()
    out = []
    tried = []
    for i in range(attempts):
        s = cfg.seed + i
        tried.append(s)
        M = braid_monodromy(f, random_projection(2, 1, s), s, cfg.tol, cfg.jobs)
        cert = surjectivity_certificate(M)
        if cert or "smooth" not in e.tags:
            break
    perm, err = sphere_return(M)
    data.update({"curve": e.name, "certificate": cert.status, "certificate_reason": cert.reason,
                 "chain": list(cert.chain), "projection_seeds": tried, "monodromy": M.as_json(),
                 "return_error": err})
    ident = list(range(1, M.m + 1))
    out.append(check("sphere product", ANCHOR_BRAID, ident, [p + 1 for p in M.product_permutation()],
                     seeds=M.seeds_tried))
    out.append(check("fiber return error", ANCHOR_BRAID, f"< {10 * cfg.tol:g}", err,
                     ok=err < 10 * cfg.tol and list(perm) == list(range(M.m))))
    nb = len(M.branch_points)
    exp = e.expected("branch")
    if exp is not None:
        out.append(check("branch points", ANCHOR_BRAID, exp, nb))
    out.append(check("branch bound", ANCHOR_BRAID, f"<= {m * (m - 1)}", nb, ok=nb <= m * (m - 1)))
    if "smooth" in e.tags:
        out.append(check("simple branching", ANCHOR_BRAID, "half-twist", sorted(set(M.kinds())),
                         ok=set(M.kinds()) == {"half-twist"}))
        out.append(check("surjectivity", ANCHOR_BRAID, "Certified", cert.status, seeds=tried))
    elif e.expect.get("certificate"):
        out.append(check("surjectivity", ANCHOR_BRAID, e.expect["certificate"], cert.status, seeds=tried))
    return out


def cmd_braid(target: str, cfg: RunConfig, name: Optional[str] = None) -> dict:
    e = load_target(target, name)
    t0 = time.perf_counter()
    data: dict = {}
    checks = guarded("braid", ANCHOR_BRAID, lambda: braid_checks(e, cfg, data), cfg)
    return make_report("braid", e.name, ANCHOR_BRAID, cfg, checks, data, time.perf_counter() - t0)


def _suite_task(args):
    suite, idx, cfg = args
    from . import suites

    groebner.set_default_budget(cfg.budget)
    name, anchor, fn = suites.SUITES[suite][idx]
    t0 = time.perf_counter()
    try:
        out = guarded(name, anchor, lambda: fn(cfg), cfg)
        hit = False
    except BudgetExceeded as exc:
        out = [check(name, anchor, "completed", "budget exceeded", ok=False, error=str(exc))]
        hit = True
    for c in out:
        c.setdefault("seconds", round(time.perf_counter() - t0, 4))
    return out, hit


def cmd_examples(suite: str, cfg: RunConfig) -> dict:
    from . import suites

    names = list(suites.SUITES) if suite == "all" else [suite]
    for n in names:
        if n not in suites.SUITES:
            raise UsageError(f"unknown suite {n!r}; choose from {', '.join(suites.SUITES)} or all")
    tasks = [(n, i, cfg) for n in names for i in range(len(suites.SUITES[n]))]
    t0 = time.perf_counter()
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            results = list(ex.map(_suite_task, tasks))
    else:
        results = [_suite_task(t) for t in tasks]
    checks = [c for out, _ in results for c in out]
    hit = any(h for _, h in results)
    data = {"suites": names, "entries": len(tasks)}
    anchor = suites.ANCHORS.get(suite, "example catalog")
    return make_report("examples", suite, anchor, cfg, checks, data, time.perf_counter() - t0, hit)


# ---------------------------------------------------------------- argument parsing

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=None, help="q or fp:<p> (default: q, suites pick per check)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=groebner.DEFAULT_BUDGET,
                        help="pair-reduction limit for Groebner runs")
    common.add_argument("--tol", type=float, default=1e-10, help="numerical tolerance (braid only)")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--output", choices=("json", "md"), default="json")
    common.add_argument("--timeout", type=float, default=None, help="seconds per check")
    common.add_argument("--name", default=None, help="entry name inside a catalog file")

    p = _Parser(prog="projdual", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    d = sub.add_parser("dual", parents=[common], help="dual variety of a catalog entry or file")
    d.add_argument("variety")
    v = sub.add_parser("verify", parents=[common], help="duality and purity for a projection to P^k")
    v.add_argument("variety")
    v.add_argument("-k", "--k", type=int, required=True)
    b = sub.add_parser("braid", parents=[common], help="braid monodromy of a plane curve")
    b.add_argument("curve")
    e = sub.add_parser("examples", parents=[common], help="run a bundled suite")
    e.add_argument("suite", help="suite name or all")
    sub.add_parser("catalog", parents=[common], help="list the bundled catalog")
    return p


def config_from_args(ns) -> RunConfig:
    if ns.budget < 1:
        raise UsageError("--budget must be positive")
    if ns.tol <= 0:
        raise UsageError("--tol must be positive")
    if ns.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    if ns.timeout is not None and ns.timeout <= 0:
        raise UsageError("--timeout must be positive")
    F = parse_field(ns.field) if ns.field is not None else None
    return RunConfig(F, ns.seed, ns.budget, ns.tol, ns.jobs, ns.output, ns.timeout)


def exit_code(rep: dict) -> int:
    if rep.get("budget_exceeded"):
        return EXIT_BUDGET
    return min(rep["failures"], MAX_FAILURE_CODE)


def main(argv: Optional[List[str]] = None) -> int:
    previous = groebner.DEFAULT_BUDGET
    try:
        return _main(argv)
    finally:
        # in-process callers keep their own default
        groebner.set_default_budget(previous)


def _main(argv: Optional[List[str]]) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        cfg = config_from_args(ns)
        groebner.set_default_budget(cfg.budget)
        if ns.command == "catalog":
            for e in load_catalog().values():
                print(e.format())
            return 0
        if ns.command == "dual":
            rep = cmd_dual(ns.variety, cfg, ns.name)
        elif ns.command == "verify":
            rep = cmd_verify(ns.variety, ns.k, cfg, ns.name)
        elif ns.command == "braid":
            rep = cmd_braid(ns.curve, cfg, ns.name)
        else:
            rep = cmd_examples(ns.suite, cfg)
    except UsageError as exc:
        print(f"projdual: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(json.dumps(rep, indent=2) + "\n" if cfg.output == "json" else to_markdown(rep))
    return exit_code(rep)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
