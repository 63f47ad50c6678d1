"""The bundled example catalog and its plain-text format.

One entry per line: ``name | N | g1; g2; ... | tags | key=value ...``.
Blank lines and ``#`` comments are ignored.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, List, Tuple

from .exactpoly import QQ, PolySyntaxError
from .variety import ProjectiveVariety, coordinate_ring


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    N: int
    gens: Tuple[str, ...]
    tags: Tuple[str, ...] = ()
    expect: Dict[str, str] = field(default_factory=dict, compare=False, hash=False)

    def variety(self, field=QQ) -> ProjectiveVariety:
        return ProjectiveVariety.from_strings(self.N, list(self.gens), field=field,
                                              label=self.name, tags=self.tags)

    def expected(self, key: str, cast=int):
        v = self.expect.get(key)
        return None if v is None else cast(v)

    def format(self) -> str:
        """Canonical line: generators printed by the polynomial printer."""
        R = coordinate_ring(self.N)
        gens = "; ".join(str(R.parse(g)) for g in self.gens)
        exp = " ".join(f"{k}={v}" for k, v in self.expect.items())
        return " | ".join([self.name, str(self.N), gens, " ".join(self.tags), exp]).rstrip(" |")


def parse_catalog(text: str) -> List[CatalogEntry]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) < 3:
            raise CatalogError(f"line {lineno}: need at least name | N | generators")
        name, N = parts[0], parts[1]
        try:
            N = int(N)
        except ValueError:
            raise CatalogError(f"line {lineno}: ambient dimension {N!r} is not an integer") from None
        gens = tuple(g.strip() for g in parts[2].split(";") if g.strip())
        if not gens:
            raise CatalogError(f"line {lineno}: no generators")
        R = coordinate_ring(N)
        for g in gens:
            try:
                p = R.parse(g)
            except PolySyntaxError as exc:
                raise CatalogError(f"line {lineno}: {exc}") from None
            if not p.is_homogeneous():
                raise CatalogError(f"line {lineno}: generator {g!r} is not homogeneous")
        tags = tuple(parts[3].split()) if len(parts) > 3 else ()
        expect = {}
        if len(parts) > 4:
            for kv in parts[4].split():
                k, _, v = kv.partition("=")
                if not v:
                    raise CatalogError(f"line {lineno}: bad expectation {kv!r}")
                expect[k] = v
        out.append(CatalogEntry(name, N, gens, tags, expect))
    return out


def load_catalog(path: str | Path | None = None) -> Dict[str, CatalogEntry]:
    if path is None:
        text = resources.files("projdual").joinpath("data/catalog.txt").read_text()
    else:
        text = Path(path).read_text()
    entries = parse_catalog(text)
    names = [e.name for e in entries]
    if len(set(names)) != len(names):
        raise CatalogError("duplicate catalog names")
    return {e.name: e for e in entries}


def entry(name: str) -> CatalogEntry:
    cat = load_catalog()
    if name not in cat:
        raise KeyError(f"unknown catalog entry {name!r}")
    return cat[name]


def variety(name: str, field=QQ) -> ProjectiveVariety:
    return entry(name).variety(field)
