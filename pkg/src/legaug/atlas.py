"""Bundled fixture diagrams and generators of small plats.

Fixture files carry ``# key: value`` header comments.  ``class`` groups
presentations of the same Legendrian knot; ``expect`` lists frozen counts as
``key=value`` tokens (``augs0`` is the number of rho=0 augmentations, etc.).
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterator

from .front import PlatDiagram, component_count, parse_plat


@dataclass(frozen=True)
class Fixture:
    name: str
    diagram: PlatDiagram
    knot_class: str
    expect: dict[str, int] = field(default_factory=dict)
    description: str = ""


def _parse_header(text: str) -> dict[str, str]:
    meta = {}
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("#") and ":" in line:
            key, _, value = line[1:].partition(":")
            meta[key.strip()] = value.strip()
    return meta


def load_fixture_text(text: str, source: str = "<fixture>") -> Fixture:
    meta = _parse_header(text)
    expect = {}
    for tok in meta.get("expect", "").split():
        key, _, value = tok.partition("=")
        expect[key] = int(value)
    return Fixture(
        name=meta.get("name", source),
        diagram=parse_plat(text, source),
        knot_class=meta.get("class", meta.get("name", source)),
        expect=expect,
        description=meta.get("knot", ""),
    )


def fixture_names() -> list[str]:
    files = resources.files("legaug") / "fixtures"
    return sorted(p.name[:-5] for p in files.iterdir() if p.name.endswith(".plat"))


def fixture_text(name: str) -> str:
    return (resources.files("legaug") / "fixtures" / f"{name}.plat").read_text(encoding="utf-8")


def load_fixture(name: str) -> Fixture:
    return load_fixture_text(fixture_text(name), f"{name}.plat")


def fixtures() -> list[Fixture]:
    return [load_fixture(name) for name in fixture_names()]


def equivalence_classes() -> dict[str, list[Fixture]]:
    groups: dict[str, list[Fixture]] = {}
    for fx in fixtures():
        if fx.knot_class != "link":
            groups.setdefault(fx.knot_class, []).append(fx)
    return groups


def iter_plats(max_cusps: int, max_crossings: int, knots_only: bool = True) -> Iterator[PlatDiagram]:
    """Every plat with ``c <= max_cusps`` and ``n <= max_crossings``."""
    for c in range(1, max_cusps + 1):
        for n in range(max_crossings + 1):
            for word in itertools.product(range(1, 2 * c), repeat=n):
                d = PlatDiagram(c, word)
                if not knots_only or component_count(d) == 1:
                    yield d


def random_plats(cusps: int, max_crossings: int, count: int, seed: int = 0) -> list[PlatDiagram]:
    """``count`` random single-component plats with exactly ``cusps`` cusps."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(0, max_crossings)
        d = PlatDiagram(cusps, tuple(rng.randint(1, 2 * cusps - 1) for _ in range(n)))
        if component_count(d) == 1:
            out.append(d)
    return out
