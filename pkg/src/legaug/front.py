"""Plat-position front diagrams: parsing, orientation, classical invariants.

Heights are numbered ``1..2c`` from the bottom.  A strand is a maximal
x-monotone arc from the left edge to the right edge and is named by its
height at the left edge.  Slice ``j`` is the vertical line between crossing
``j`` and crossing ``j + 1`` (slice 0 is the left edge, slice ``n`` the right).
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np


class PlatParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += source
        if line is not None:
            where += f"{':' if where else 'line '}{line}"
        super().__init__(f"{where}: {message}" if where else message)


class MultiComponentError(ValueError):
    def __init__(self, count: int):
        self.count = count
        super().__init__(f"MultiComponent{{{count}}}: plat closes up into {count} components, expected a knot")


class Direction(enum.IntEnum):
    RIGHT = 1
    LEFT = -1


class CuspType(enum.Enum):
    UP = "up"
    DOWN = "down"


@dataclass(frozen=True)
class PlatDiagram:
    cusps: int
    crossings: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(int(s) for s in self.crossings))
        if self.cusps < 1:
            raise ValueError(f"cusps must be positive, got {self.cusps}")
        top = 2 * self.cusps - 1
        for i, s in enumerate(self.crossings, 1):
            if not 1 <= s <= top:
                raise ValueError(f"crossing {i}: position {s} out of range [1,{top}]")

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def heights(self) -> int:
        return 2 * self.cusps

    def flipped(self) -> PlatDiagram:
        """Mirror top to bottom (height p becomes 2c + 1 - p)."""
        return PlatDiagram(self.cusps, tuple(2 * self.cusps - s for s in self.crossings))

    def __str__(self):
        return dumps_plat(self).strip()


_HEADER = re.compile(r"^plat\s+v1$")


def parse_plat(text: str, source: str | None = None) -> PlatDiagram:
    """Parse the three-line ``plat v1`` format; ``#`` starts a comment."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body.split()))
    if not lines:
        raise PlatParseError("empty input, expected header 'plat v1'", 1, source)

    lineno, toks = lines[0]
    if not _HEADER.match(" ".join(toks)):
        raise PlatParseError(f"malformed header {' '.join(toks)!r}, expected 'plat v1'", lineno, source)

    if len(lines) < 2:
        raise PlatParseError("missing 'cusps <c>' line", lineno + 1, source)
    lineno, toks = lines[1]
    if toks[0] != "cusps" or len(toks) != 2:
        raise PlatParseError(f"expected 'cusps <c>', got {' '.join(toks)!r}", lineno, source)
    cusps = _int_token(toks[1], lineno, source)
    if cusps < 1:
        raise PlatParseError(f"cusps must be at least 1, got {cusps}", lineno, source)

    if len(lines) < 3:
        raise PlatParseError("missing 'crossings ...' line", lineno + 1, source)
    lineno, toks = lines[2]
    if toks[0] != "crossings":
        raise PlatParseError(f"expected 'crossings ...', got {toks[0]!r}", lineno, source)
    top = 2 * cusps - 1
    crossings = []
    for tok in toks[1:]:
        s = _int_token(tok, lineno, source)
        if not 1 <= s <= top:
            raise PlatParseError(f"position {s} out of range [1,{top}]", lineno, source)
        crossings.append(s)

    if len(lines) > 3:
        raise PlatParseError("unexpected content after crossings line", lines[3][0], source)
    return PlatDiagram(cusps, tuple(crossings))


def _int_token(tok: str, lineno: int, source: str | None) -> int:
    try:
        return int(tok)
    except ValueError:
        raise PlatParseError(f"non-integer token {tok!r}", lineno, source) from None


def dumps_plat(d: PlatDiagram) -> str:
    words = " ".join(str(s) for s in d.crossings)
    return f"plat v1\ncusps {d.cusps}\ncrossings{' ' + words if words else ''}\n"


def occupancy_table(d: PlatDiagram) -> np.ndarray:
    """``table[j, p - 1]`` is the strand at height ``p`` in slice ``j``."""
    table = np.empty((d.n + 1, d.heights), dtype=np.int64)
    row = np.arange(1, d.heights + 1, dtype=np.int64)
    table[0] = row
    for j, s in enumerate(d.crossings, 1):
        row = row.copy()
        row[s - 1], row[s] = row[s], row[s - 1]
        table[j] = row
    return table


def _partner(p: int) -> int:
    return p + 1 if p % 2 else p - 1


@dataclass(frozen=True, eq=False)
class OrientedDiagram:
    diagram: PlatDiagram
    occupancy: np.ndarray = field(repr=False)
    direction: tuple[Direction, ...]          # indexed by strand - 1
    left_cusp_type: tuple[CuspType, ...]      # left cusp k at heights (2k-1, 2k)
    right_cusp_type: tuple[CuspType, ...]
    component_count: int = 1
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def cusps(self) -> int:
        return self.diagram.cusps

    @property
    def crossings(self) -> tuple[int, ...]:
        return self.diagram.crossings

    @property
    def n(self) -> int:
        return self.diagram.n

    def positions(self) -> np.ndarray:
        arr = self._cache.get("positions")
        if arr is None:
            arr = np.asarray(self.crossings, dtype=np.int64).reshape(-1)
            self._cache["positions"] = arr
        return arr

    def crossing_strands(self, i: int) -> tuple[int, int]:
        """``(descending, ascending)`` strands of crossing ``i`` (1-based).

        The descending strand enters from the upper left (height s + 1).
        """
        s = self.crossings[i - 1]
        row = self.occupancy[i - 1]
        return int(row[s]), int(row[s - 1])

    def reversed(self) -> OrientedDiagram:
        flip = {CuspType.UP: CuspType.DOWN, CuspType.DOWN: CuspType.UP}
        return OrientedDiagram(
            self.diagram,
            self.occupancy,
            tuple(Direction(-d) for d in self.direction),
            tuple(flip[t] for t in self.left_cusp_type),
            tuple(flip[t] for t in self.right_cusp_type),
            self.component_count,
        )


def _closure_cycles(d: PlatDiagram, occ: np.ndarray) -> list[list[int]]:
    """Trace the closure; each cycle alternates rightward/leftward strands.

    The first strand of each cycle is traversed rightward.
    """
    final_pos = {int(strand): p for p, strand in enumerate(occ[-1], 1)}
    seen: set[int] = set()
    cycles = []
    for start in range(1, d.heights + 1):
        if start in seen:
            continue
        cycle = []
        strand = start
        while strand not in seen:
            # rightward along strand, turn at the right cusp
            seen.add(strand)
            cycle.append(strand)
            back = int(occ[-1][_partner(final_pos[strand]) - 1])
            seen.add(back)
            cycle.append(back)
            # leftward along back, turn at the left cusp
            strand = _partner(back)
        cycles.append(cycle)
    return cycles


def component_count(d: PlatDiagram) -> int:
    return len(_closure_cycles(d, occupancy_table(d)))


def validate(d: PlatDiagram, orientation: str = "canonical") -> OrientedDiagram:
    """Orient a single-component plat.

    The canonical orientation sends the strand at height 1 of the left edge
    rightward; ``orientation="reversed"`` flips every direction.
    """
    occ = occupancy_table(d)
    cycles = _closure_cycles(d, occ)
    if len(cycles) != 1:
        raise MultiComponentError(len(cycles))
    cycle = cycles[0]
    direction = [Direction.RIGHT] * d.heights
    for idx, strand in enumerate(cycle):
        direction[strand - 1] = Direction.RIGHT if idx % 2 == 0 else Direction.LEFT

    left, right = [], []
    for k in range(1, d.cusps + 1):
        # left cusp: traversal arrives on the leftward strand
        lower, upper = 2 * k - 1, 2 * k
        left.append(CuspType.UP if direction[lower - 1] == Direction.LEFT else CuspType.DOWN)
        # right cusp: traversal arrives on the rightward strand
        lower = int(occ[-1][2 * k - 2])
        right.append(CuspType.UP if direction[lower - 1] == Direction.RIGHT else CuspType.DOWN)

    od = OrientedDiagram(d, occ, tuple(direction), tuple(left), tuple(right), 1)
    if orientation == "reversed":
        return od.reversed()
    if orientation != "canonical":
        raise ValueError(f"unknown orientation {orientation!r}")
    return od


def cusp_counts(od: OrientedDiagram) -> tuple[int, int]:
    """``(down, up)`` over all left and right cusps."""
    types = od.left_cusp_type + od.right_cusp_type
    down = sum(t is CuspType.DOWN for t in types)
    return down, len(types) - down


def rotation_number(od: OrientedDiagram) -> int:
    down, up = cusp_counts(od)
    assert (down - up) % 2 == 0
    return (down - up) // 2


def crossing_sign(od: OrientedDiagram, i: int) -> int:
    a, b = od.crossing_strands(i)
    return 1 if od.direction[a - 1] == od.direction[b - 1] else -1


def writhe(od: OrientedDiagram) -> int:
    return sum(crossing_sign(od, i) for i in range(1, od.n + 1))


def thurston_bennequin(od: OrientedDiagram) -> int:
    return writhe(od) - od.cusps


@dataclass(frozen=True)
class MaslovPotential:
    modulus: int
    values: tuple[int, ...]   # indexed by strand - 1

    def __getitem__(self, strand: int) -> int:
        return self.values[strand - 1]

    def reduce(self, x: int) -> int:
        return x % self.modulus if self.modulus else x


def maslov_potential(od: OrientedDiagram) -> MaslovPotential:
    """Potential with value 0 on strand 1 and ``upper = lower + 1`` at cusps."""
    m = 2 * abs(rotation_number(od))
    occ = od.occupancy
    final_pos = {int(strand): p for p, strand in enumerate(occ[-1], 1)}
    cycle = _closure_cycles(od.diagram, occ)[0]
    values = {cycle[0]: 0}
    for idx, strand in enumerate(cycle):
        nxt = cycle[(idx + 1) % len(cycle)]
        if idx % 2 == 0:
            # right cusp: compare heights at the right edge
            up = final_pos[nxt] > final_pos[strand]
        else:
            up = nxt > strand
        val = values[strand] + (1 if up else -1)
        if nxt in values:
            if (val - values[nxt]) % m if m else val != values[nxt]:
                raise AssertionError("InconsistentPotential: cusp relations do not close up")
        else:
            values[nxt] = val
    pot = MaslovPotential(m, tuple(values[s] % m if m else values[s] for s in range(1, od.diagram.heights + 1)))
    _check_cusp_relations(od, pot)
    return pot


def _check_cusp_relations(od: OrientedDiagram, pot: MaslovPotential) -> None:
    occ = od.occupancy
    for k in range(1, od.cusps + 1):
        for lower, upper in ((2 * k - 1, 2 * k), (int(occ[-1][2 * k - 2]), int(occ[-1][2 * k - 1]))):
            if pot.reduce(pot[upper] - pot[lower] - 1) != 0:
                raise AssertionError(f"InconsistentPotential at cusp {k}: strands {lower}, {upper}")


def crossing_gradings(od: OrientedDiagram, pot: MaslovPotential | None = None) -> tuple[int, ...]:
    """Grading ``mu(descending) - mu(ascending)`` of each crossing."""
    pot = pot or maslov_potential(od)
    out = []
    for i in range(1, od.n + 1):
        a, b = od.crossing_strands(i)
        out.append(pot.reduce(pot[a] - pot[b]))
    return tuple(out)


def crossing_grading(od: OrientedDiagram, pot: MaslovPotential | None = None) -> dict[str, int]:
    """Gradings of all generators, crossings ``q1..qn`` then right cusps."""
    gr = crossing_gradings(od, pot)
    names = generator_names(od.diagram)
    m = (pot or maslov_potential(od)).modulus
    cusp = 1 % m if m else 1
    return {name: (gr[i] if i < od.n else cusp) for i, name in enumerate(names)}


def generator_names(d: PlatDiagram) -> list[str]:
    return [f"q{i}" for i in range(1, d.n + d.cusps + 1)]


def parse_crossing_word(words: Sequence[str] | str) -> tuple[int, ...]:
    if isinstance(words, str):
        words = words.replace(",", " ").split()
    return tuple(int(w) for w in words)
