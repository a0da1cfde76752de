"""Chekanov-Eliashberg differential of a resolved plat, over Z/2.

Disks are found by sweeping a vertical interval leftward from the positive
corner (see :func:`legaug._kernels._sweep`).  A word is a tuple of generator
names; the empty tuple is the unit.  A differential maps each generator name
to a frozenset of words, i.e. a Z/2 linear combination.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from . import _kernels
from .front import OrientedDiagram, crossing_gradings, generator_names, maslov_potential

Word = tuple[str, ...]
Differential = Mapping[str, frozenset]


@dataclass(frozen=True)
class Generator:
    name: str
    index: int          # 1-based; crossings 1..n, then right cusps bottom to top
    is_cusp: bool
    grading: int


@dataclass(frozen=True)
class Disk:
    positive_corner: str
    upper_corners: tuple[str, ...] = ()   # right to left
    lower_corners: tuple[str, ...] = ()   # right to left
    is_loop_term: bool = False

    @property
    def word(self) -> Word:
        # Boundary order read off the resolved diagram: lower corners right to
        # left, then upper corners left to right.  Pinned by the trefoil.
        return self.lower_corners + self.upper_corners[::-1]

    @property
    def corners(self) -> tuple[str, ...]:
        return self.upper_corners + self.lower_corners


@dataclass
class DGA:
    """Generators with gradings plus the differential of an oriented plat."""

    diagram: OrientedDiagram
    modulus: int
    generators: list[Generator]
    differential: dict[str, frozenset] = field(default_factory=dict)

    @property
    def names(self) -> list[str]:
        return [g.name for g in self.generators]

    @property
    def grading(self) -> dict[str, int]:
        return {g.name: g.grading for g in self.generators}

    def __getitem__(self, name: str) -> frozenset:
        return self.differential[name]

    def word_grading(self, word: Iterable[str]) -> int:
        gr = self.grading
        total = sum(gr[x] for x in word)
        return total % self.modulus if self.modulus else total


def generators(od: OrientedDiagram) -> list[Generator]:
    pot = maslov_potential(od)
    gr = crossing_gradings(od, pot)
    m = pot.modulus
    out = []
    for idx, name in enumerate(generator_names(od.diagram), 1):
        if idx <= od.n:
            out.append(Generator(name, idx, False, gr[idx - 1]))
        else:
            out.append(Generator(name, idx, True, 1 % m if m else 1))
    return out


def _start(od: OrientedDiagram, gen: int) -> tuple[int, int, int]:
    """``(slice, lo, hi)`` just left of generator ``gen`` (1-based)."""
    if gen <= od.n:
        s = od.crossings[gen - 1]
        return gen - 1, s, s + 1
    k = gen - od.n
    return od.n, 2 * k - 1, 2 * k


def enumerate_disks(od: OrientedDiagram, g: Generator | str | int) -> list[Disk]:
    """All admissible disks with positive corner at ``g``."""
    idx = _generator_index(od, g)
    name = f"q{idx}"
    slice_, lo, hi = _start(od, idx)
    disks = []
    if idx > od.n:
        disks.append(Disk(name, is_loop_term=True))
    records = _kernels.sweep(od.positions(), slice_, lo, hi, 0, 0, 0)
    for upper, lower in _kernels.decode_sweep(records):
        disks.append(Disk(name, tuple(f"q{i + 1}" for i in upper), tuple(f"q{i + 1}" for i in lower)))
    return disks


def _generator_index(od: OrientedDiagram, g) -> int:
    if isinstance(g, Generator):
        return g.index
    if isinstance(g, str):
        if not g.startswith("q"):
            raise KeyError(g)
        g = int(g[1:])
    if not 1 <= g <= od.n + od.cusps:
        raise KeyError(f"q{g}")
    return int(g)


def _accumulate(words: Iterable[Word]) -> frozenset:
    acc: set[Word] = set()
    for w in words:
        acc ^= {w}
    return frozenset(acc)


def differential(od: OrientedDiagram) -> dict[str, frozenset]:
    return {
        f"q{idx}": _accumulate(d.word for d in enumerate_disks(od, idx))
        for idx in range(1, od.n + od.cusps + 1)
    }


def build_dga(od: OrientedDiagram) -> DGA:
    gens = generators(od)
    m = maslov_potential(od).modulus
    return DGA(od, m, gens, differential(od))


def apply_leibniz(D: Differential, w: Iterable[str]) -> frozenset:
    """``d(w)`` for a word ``w`` by the Leibniz rule (signs vanish mod 2)."""
    w = tuple(w)
    acc: set[Word] = set()
    for i, letter in enumerate(w):
        if letter not in D:
            raise KeyError(f"unknown generator {letter!r}")
        prefix, suffix = w[:i], w[i + 1:]
        for term in D[letter]:
            acc ^= {prefix + tuple(term) + suffix}
    return frozenset(acc)


@dataclass
class DSquaredReport:
    ok: bool
    survivors: dict[str, frozenset]

    def __bool__(self):
        return self.ok


def check_d_squared(D: Differential) -> DSquaredReport:
    survivors = {}
    for g, words in D.items():
        acc: set[Word] = set()
        for w in words:
            acc ^= apply_leibniz(D, w)
        if acc:
            survivors[g] = frozenset(acc)
    return DSquaredReport(not survivors, survivors)


def degree_violations(dga: DGA) -> list[tuple[str, Word]]:
    """Words of ``d g`` whose grading is not ``|g| - 1``."""
    bad = []
    gr = dga.grading
    m = dga.modulus
    for g, words in dga.differential.items():
        want = gr[g] - 1
        want = want % m if m else want
        for w in words:
            if dga.word_grading(w) != want:
                bad.append((g, w))
    return bad


def sort_words(words: Iterable[Word]) -> list[Word]:
    return sorted(words, key=lambda w: (len(w), [int(x[1:]) for x in w]))


def format_word(w: Word) -> str:
    return "".join(w) if w else "1"


def format_sum(words: Iterable[Word]) -> str:
    words = sort_words(words)
    return " + ".join(format_word(w) for w in words) if words else "0"


def differential_to_json(D: Differential) -> dict[str, list[list[str]]]:
    """Names in generator order, words sorted lexicographically."""
    keys = sorted(D, key=lambda g: int(g[1:]))
    return {g: [list(w) for w in sorted(D[g])] for g in keys}


def words_as_index_arrays(dga: DGA):
    """CSR-style description of the differential for the augmentation kernel."""
    index = {g.name: i for i, g in enumerate(dga.generators)}
    cons = []
    for g in dga.generators:
        words = dga.differential[g.name]
        if not words:
            continue
        letter_sets = [sorted({index[x] for x in w}) for w in sorted(words)]
        trigger = max((ls[-1] for ls in letter_sets if ls), default=-1)
        cons.append((trigger, letter_sets))
    cons.sort(key=lambda t: t[0])
    N = len(dga.generators)
    trig_ptr = np.zeros(N + 2, np.int64)
    for trigger, _ in cons:
        trig_ptr[trigger + 2] += 1
    trig_ptr = np.cumsum(trig_ptr)
    cons_ptr = [0]
    word_ptr = [0]
    letters: list[int] = []
    for _, letter_sets in cons:
        for ls in letter_sets:
            letters.extend(ls)
            word_ptr.append(len(letters))
        cons_ptr.append(len(word_ptr) - 1)
    return (
        trig_ptr.astype(np.int64),
        np.asarray(cons_ptr, np.int64),
        np.asarray(word_ptr, np.int64),
        np.asarray(letters, np.int64),
    )
