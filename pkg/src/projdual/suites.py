"""Bundled verification suites run by ``projdual examples``.

Every entry is ``(name, anchor, fn)`` where ``fn(cfg)`` returns check dicts.
Heavy algebra is imported lazily so that the arithmetic suite stays instant.
"""
from __future__ import annotations

import time
from typing import Callable, Dict, List, Tuple

from .catalog import entry, variety
from .cli import RunConfig, braid_checks, check
from .exactpoly import GF, PRIME_A, PRIME_B, QQ
from .invariants import (
    plucker_dual, shioda_tate_rank, smooth_surface_in_p3, solve_nodes_cusps,
    surface_branch_invariants,
)

A_PLUCKER = "Pluecker formulas for plane curves"
A_SURF = "nodes and cusps of the branch curve of a generic surface projection"
A_NET = "net of quadrics: degree 12 discriminant, 28 nodes, 24 cusps, Mordell-Weil rank 7"
A_TABLE = "duality between discriminants of projections of v2(P^2) and sections of its dual cubic"
A_DEG = "deg(X^perp) = d(d-1)^(N-1) for smooth hypersurfaces"
A_BIDUAL = "reflexivity: the dual of the dual is X"
A_DUALITY = "duality of the smooth discriminant"
A_PURITY = "purity trichotomy for discriminants of generic projections"
A_POLAR = "polar degrees and Segre's section formula"
A_BRAID = "braid monodromy of finite projections of plane curves"

ANCHORS = {
    "plucker": A_PLUCKER, "surfaces": A_SURF, "veronese": A_TABLE, "duality": A_DUALITY,
    "purity": A_PURITY, "polar": A_POLAR, "braid": A_BRAID, "all": "example catalog",
}


def _field(cfg: RunConfig, default):
    return cfg.field_or(default)


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


# ---------------------------------------------------------------- plucker (arithmetic only)

def _plucker(cfg):
    out = [
        check("dual of smooth cubic", A_PLUCKER, [6, 1], plucker_dual(3, 0, 0)),
        check("dual of smooth quartic", A_NET, [12, 3], plucker_dual(4, 0, 0)),
        check("nodes and cusps of the degree-12 discriminant", A_NET, [28, 24], solve_nodes_cusps(12, 4, 76)),
        check("Mordell-Weil rank", A_NET, 7, shioda_tate_rank(9, 1, 0)),
    ]
    for d, frozen in ((2, (2, 0, 0)), (3, (6, 0, 6)), (4, (12, 12, 24))):
        closed = (d * (d - 1), d * (d - 1) * (d - 2) * (d - 3) // 2, d * (d - 1) * (d - 2))
        got = surface_branch_invariants(smooth_surface_in_p3(d))
        out.append(check(f"surface of degree {d} in P^3", A_SURF, frozen, got, ok=got == frozen == closed))
    # involution on node/cusp curves: flexes become cusps, bitangents nodes
    for d, delta, kappa in ((3, 0, 0), (3, 1, 0), (3, 0, 1), (4, 0, 0), (4, 3, 0), (4, 0, 3)):
        dd, g = plucker_dual(d, delta, kappa)
        kd = 3 * d * (d - 2) - 6 * delta - 8 * kappa
        ddelta = (dd - 1) * (dd - 2) // 2 - g - kd
        back = plucker_dual(dd, ddelta, kd)
        out.append(check(f"involution d={d} delta={delta} kappa={kappa}", A_PLUCKER, [d, g], back))
    return out


# ---------------------------------------------------------------- surfaces

def _surface(name: str, d: int):
    def run(cfg):
        from .discriminant import hypersurface_branch_discriminant
        from .duality import dual_variety
        from .invariants import tjurina_total
        from .variety import random_projection

        X = variety(name)
        disc, sec = _timed(lambda: hypersurface_branch_discriminant(X.gens[0], random_projection(3, 2, cfg.seed)))
        out = [check(f"{name}: branch curve degree", A_SURF, d * (d - 1), disc.total_degree(),
                     field=QQ, seeds=[cfg.seed], seconds=sec)]
        if d >= 3:
            closed = (d * (d - 1) * (d - 2) * (d - 3) // 2, d * (d - 1) * (d - 2))
            for p in (PRIME_A, PRIME_B):
                F = GF(p)
                Dp = disc.ring.with_field(F).convert(disc)
                T = tjurina_total(Dp)
                ddual = dual_variety(X.with_field(F), seed=cfg.seed).degree
                got = solve_nodes_cusps(d * (d - 1), ddual, T)
                out.append(check(f"{name}: (nodes, cusps) from Tjurina and dual degree", A_SURF, closed, got,
                                 field=F, seeds=[cfg.seed]))
        return out
    return run


# ---------------------------------------------------------------- veronese table

def _veronese_chain(cfg):
    from .discriminant import projection_chain

    want = [("NonDominantImage", 2, 4), ("NonDominantImage", 2, 4),
            ("IrreducibleHypersurface", 1, 6), ("UnionOfHyperplanes", 0, 3)]
    out = []
    fields = [cfg.field] if cfg.field is not None else [GF(PRIME_A), GF(PRIME_B)]
    for F in fields:
        ch, sec = _timed(lambda: projection_chain(variety("veronese_surface", F), 1, cfg.seed))
        got = [(r.classification, r.dim, r.degree) for r in ch]
        out.append(check("projection chain of v2(P^2)", A_TABLE, want, got, field=F, seeds=[cfg.seed], seconds=sec))
    return out


def _veronese_row(k: int):
    def run(cfg):
        from .discriminant import verify_duality

        F = _field(cfg, GF(PRIME_A))
        rep, sec = _timed(lambda: verify_duality(variety("veronese_surface", F), k, cfg.seed))
        return [
            check(f"Delta for P^{k} is dual to M_{k - 1}", A_TABLE, True, rep.equal, field=F,
                  seeds=rep.seeds, seconds=sec),
            check(f"M_{k - 1} is a cubic of dimension {k - 1}", A_TABLE, [k - 1, 3],
                  rep.right.dim_and_degree(), field=F, seeds=rep.seeds),
        ]
    return run


# ---------------------------------------------------------------- duality

def _dual_degree(name: str, default_field):
    def run(cfg):
        from .duality import dual_variety

        e = entry(name)
        F = _field(cfg, default_field)
        X = e.variety(F)
        d, N = X.gens[0].total_degree(), X.N
        D, sec = _timed(lambda: dual_variety(X, seed=cfg.seed, budget=cfg.budget))
        return [check(f"{name}: dual degree", A_DEG, d * (d - 1) ** (N - 1), D.degree, field=F,
                      seeds=[cfg.seed], seconds=sec)]
    return run


def _bidual(name: str):
    def run(cfg):
        from .duality import check_biduality

        F = _field(cfg, QQ)
        ok, sec = _timed(lambda: check_biduality(variety(name, F), cfg.seed, cfg.budget))
        return [check(f"{name}: biduality", A_BIDUAL, True, ok, field=F, seeds=[cfg.seed], seconds=sec)]
    return run


def _duality_pair(name: str, k: int):
    def run(cfg):
        from .discriminant import verify_duality

        F = _field(cfg, QQ)
        out = []
        for s in (cfg.seed, cfg.seed + 1):
            rep, sec = _timed(lambda: verify_duality(variety(name, F), k, s))
            out.append(check(f"{name}, k={k}", A_DUALITY, True, rep.equal, field=F, seeds=rep.seeds, seconds=sec))
        return out
    return run


# ---------------------------------------------------------------- purity

def _purity(name: str, k: int, cls: str, dim: int, deg: int, default_field=QQ):
    def run(cfg):
        from .discriminant import purity_classify

        F = _field(cfg, default_field)
        rep, sec = _timed(lambda: purity_classify(variety(name, F), k, cfg.seed))
        r = rep.result
        return [check(f"{name}, k={k}", A_PURITY, [cls, dim, deg], [rep.classification, r.dim, r.degree],
                      field=F, seeds=rep.seeds, seconds=sec)]
    return run


def _segre_defect(cfg):
    from .invariants import defect

    F = _field(cfg, GF(PRIME_A))
    got, sec = _timed(lambda: defect(variety("segre_3fold", F), cfg.seed))
    return [check("segre_3fold: dual defect", A_PURITY, 1, got, field=F, seeds=[cfg.seed], seconds=sec)]


# ---------------------------------------------------------------- polar

def _polar(name: str):
    def run(cfg):
        from .invariants import defect, polar_degree, polar_degree_checked

        F = _field(cfg, QQ)
        X = variety(name, F)
        n = X.dim
        out = []
        rs = []
        for i in range(X.N):
            if i <= n:
                r, dd = polar_degree_checked(X, i, cfg.seed)
                if dd is not None:
                    out.append(check(f"{name}: deg Delta_{i + 1} = r_{i}", A_POLAR, r, dd, field=F, seeds=[cfg.seed]))
            else:
                r = polar_degree(X, i, cfg.seed)
            rs.append(r)
        out.append(check(f"{name}: r_n = deg X", A_POLAR, X.degree, rs[n], field=F))
        out.append(check(f"{name}: r_i = 0 for i > n", A_POLAR, [0] * (X.N - 1 - n), rs[n + 1:], field=F))
        df = defect(X, cfg.seed)
        nz = [i for i, r in enumerate(rs) if r != 0]
        out.append(check(f"{name}: r_i nonzero exactly on [def, n]", A_POLAR, list(range(df, n + 1)), nz, field=F))
        return out
    return run


def _polar_cubic_dual(cfg):
    from .duality import dual_variety
    from .invariants import polar_degree

    X = variety("plane_cubic")
    return [check("plane_cubic: r_0 = deg of the dual", A_POLAR, dual_variety(X).degree, polar_degree(X, 0, cfg.seed),
                  field=QQ, seeds=[cfg.seed])]


def _segre_formula(cfg):
    from .invariants import polar_degree, segre_check

    X = variety("cubic_surface")
    return [
        check("cubic_surface: r_1", A_POLAR, 6, polar_degree(X, 1, cfg.seed), field=QQ, seeds=[cfg.seed]),
        check("cubic_surface: r_1 = r_0 of a plane section", A_POLAR, True, segre_check(X, 1, cfg.seed),
              field=QQ, seeds=[cfg.seed]),
    ]


# ---------------------------------------------------------------- braid

def _braid(name: str):
    def run(cfg):
        return braid_checks(entry(name), cfg, {})
    return run


Suite = List[Tuple[str, str, Callable[[RunConfig], List[dict]]]]

SUITES: Dict[str, Suite] = {
    "plucker": [("plucker arithmetic", A_PLUCKER, _plucker)],
    "surfaces": [
        ("quadric surface", A_SURF, _surface("quadric_surface", 2)),
        ("cubic surface", A_SURF, _surface("cubic_surface", 3)),
        ("quartic surface", A_SURF, _surface("quartic_surface", 4)),
    ],
    "veronese": [("projection chain", A_TABLE, _veronese_chain)]
    + [(f"row k={k}", A_TABLE, _veronese_row(k)) for k in (4, 3, 2, 1)],
    "duality": [
        ("conic degree", A_DEG, _dual_degree("conic", QQ)),
        ("cubic degree", A_DEG, _dual_degree("plane_cubic", QQ)),
        ("quartic surface degree", A_DEG, _dual_degree("quartic_surface", GF(PRIME_A))),
        ("conic biduality", A_BIDUAL, _bidual("conic")),
        ("cubic biduality", A_BIDUAL, _bidual("plane_cubic")),
        ("twisted cubic biduality", A_BIDUAL, _bidual("twisted_cubic")),
        ("conic k=1", A_DUALITY, _duality_pair("conic", 1)),
        ("plane cubic k=1", A_DUALITY, _duality_pair("plane_cubic", 1)),
        ("quadric k=1", A_DUALITY, _duality_pair("quadric_surface", 1)),
        ("quadric k=2", A_DUALITY, _duality_pair("quadric_surface", 2)),
        ("cubic surface k=2", A_DUALITY, _duality_pair("cubic_surface", 2)),
        ("veronese k=2", A_DUALITY, _duality_pair("veronese_surface", 2)),
    ],
    "purity": [
        ("cubic surface", A_PURITY, _purity("cubic_surface", 2, "IrreducibleHypersurface", 1, 6)),
        ("plane cubic", A_PURITY, _purity("plane_cubic", 1, "UnionOfHyperplanes", 0, 6)),
        ("dual twisted cubic k=1", A_PURITY, _purity("twisted_cubic_dual", 1, "Empty", -1, 0)),
        ("dual twisted cubic k=2", A_PURITY, _purity("twisted_cubic_dual", 2, "UnionOfHyperplanes", 1, 3)),
        ("segre 3-fold k=1", A_PURITY, _purity("segre_3fold", 1, "Empty", -1, 0, GF(PRIME_A))),
        ("segre 3-fold defect", A_PURITY, _segre_defect),
    ],
    "polar": [
        ("plane cubic", A_POLAR, _polar("plane_cubic")),
        ("twisted cubic", A_POLAR, _polar("twisted_cubic")),
        ("cubic surface", A_POLAR, _polar("cubic_surface")),
        ("plane cubic dual", A_POLAR, _polar_cubic_dual),
        ("segre formula", A_POLAR, _segre_formula),
    ],
    "braid": [(n, A_BRAID, _braid(n)) for n in ("conic", "plane_cubic", "plane_quartic", "line_and_conic")],
}
