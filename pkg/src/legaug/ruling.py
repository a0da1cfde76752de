"""Normal rulings of a plat front.

A ruling is tracked slice by slice as a fixed-point-free involution on the
heights ``1..2c``: ``sigma[p]`` is the height of the ruling path paired with
the path at height ``p``.  Involutions are stored as tuples indexed by
``p - 1``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .augment import check_rho, grading_allowed
from .front import OrientedDiagram, crossing_gradings, maslov_potential

PairingState = tuple[int, ...]


class Config(enum.Enum):
    PAIRED = "paired"
    A = "A"
    B = "B"
    C = "C"
    CROSSED = "crossed"
    INTERLEAVED_BELOW = "interleaved-below"
    INTERLEAVED_ABOVE = "interleaved-above"

    @property
    def normal(self) -> bool:
        return self in (Config.A, Config.B, Config.C)


class Action(enum.Enum):
    PASS = "pass"
    SWITCH = "switch"


class IllegalStep(ValueError):
    """A pass or switch that no normal ruling can make."""


def cusp_pairing(c: int) -> PairingState:
    return tuple(p + 1 if p % 2 else p - 1 for p in range(1, 2 * c + 1))


def pairing_from_cycles(cycles, size: int | None = None) -> PairingState:
    """Build an involution from 2-cycles such as ``[(1, 2), (3, 4)]``."""
    size = size or 2 * len(cycles)
    sigma = [0] * size
    for a, b in cycles:
        sigma[a - 1], sigma[b - 1] = b, a
    if 0 in sigma or any(sigma[sigma[p] - 1] != p + 1 for p in range(size)):
        raise ValueError(f"not a fixed-point-free involution: {cycles}")
    return tuple(sigma)


def format_pairing(sigma: PairingState) -> str:
    return "".join(f"({p} {q})" for p, q in enumerate(sigma, 1) if p < q)


def classify_config(sigma: PairingState, s: int) -> Config:
    a = sigma[s - 1]      # companion of the lower crossing path
    b = sigma[s]          # companion of the upper crossing path
    if a == s + 1:
        return Config.PAIRED
    if a < s and b > s + 1:
        return Config.A
    if b < a < s:
        return Config.B
    if a > b > s + 1:
        return Config.C
    if a > s + 1 and b < s:
        return Config.CROSSED
    if a < b < s:
        return Config.INTERLEAVED_BELOW
    if b > a > s + 1:
        return Config.INTERLEAVED_ABOVE
    raise AssertionError(f"unclassified configuration sigma={sigma}, s={s}")


def conjugate(sigma: PairingState, s: int) -> PairingState:
    def tau(p):
        return s + 1 if p == s else s if p == s + 1 else p

    out = [0] * len(sigma)
    for p, q in enumerate(sigma, 1):
        out[tau(p) - 1] = tau(q)
    return tuple(out)


def step(sigma: PairingState, s: int, action: Action, grading: int | None = None, rho: int = 0) -> PairingState:
    config = classify_config(sigma, s)
    if config is Config.PAIRED:
        raise IllegalStep(f"{action.value} at height {s}: crossing paths are paired to each other")
    if action is Action.PASS:
        return conjugate(sigma, s)
    if not config.normal:
        raise IllegalStep(f"switch at height {s}: configuration {config.value} is not a normal switch")
    if grading is None or not grading_allowed(grading, rho):
        raise IllegalStep(f"switch at height {s}: grading {grading} not allowed for rho={rho}")
    return sigma


@dataclass(frozen=True)
class Ruling:
    switches: tuple[str, ...]
    states: tuple[PairingState, ...] = field(compare=False, repr=False)

    def to_json(self) -> dict:
        return {"switches": list(self.switches)}


def _switch_index(name: str) -> int:
    return int(name[1:])


def replay(od: OrientedDiagram, switches) -> tuple[PairingState, ...]:
    """Pairing states of a switch set, without any legality checks."""
    chosen = {_switch_index(x) if isinstance(x, str) else int(x) for x in switches}
    sigma = cusp_pairing(od.cusps)
    states = [sigma]
    for i, s in enumerate(od.crossings, 1):
        if i not in chosen:
            sigma = conjugate(sigma, s)
        states.append(sigma)
    return tuple(states)


def _can_switch(od: OrientedDiagram, rho: int) -> np.ndarray:
    pot = maslov_potential(od)
    check_rho(rho, pot.modulus)
    return np.array([grading_allowed(g, rho) for g in crossing_gradings(od, pot)], dtype=np.uint8)


def enumerate_rulings(od: OrientedDiagram, rho: int = 0) -> list[Ruling]:
    rows = _kernels.rulings_search(od.positions(), od.cusps, _can_switch(od, rho))
    out = []
    for row in rows:
        idx = [i + 1 for i in np.flatnonzero(row[:od.n])]
        out.append(Ruling(tuple(f"q{i}" for i in idx), replay(od, idx)))
    return sorted(out, key=lambda r: [_switch_index(x) for x in r.switches])


def count_rulings(od: OrientedDiagram, rho: int = 0) -> int:
    return int(_kernels.rulings_search(od.positions(), od.cusps, _can_switch(od, rho)).shape[0])


@dataclass
class RulingCheck:
    valid: bool
    message: str = ""
    states: tuple[PairingState, ...] = ()

    def __bool__(self):
        return self.valid


def validate_ruling(od: OrientedDiagram, switches, rho: int = 0) -> RulingCheck:
    pot = maslov_potential(od)
    check_rho(rho, pot.modulus)
    gradings = crossing_gradings(od, pot)
    chosen = {_switch_index(x) if isinstance(x, str) else int(x) for x in switches}
    bad = [i for i in chosen if not 1 <= i <= od.n]
    if bad:
        return RulingCheck(False, f"switch at q{bad[0]}: not a crossing")
    sigma = cusp_pairing(od.cusps)
    states = [sigma]
    for i, s in enumerate(od.crossings, 1):
        action = Action.SWITCH if i in chosen else Action.PASS
        try:
            sigma = step(sigma, s, action, gradings[i - 1], rho)
        except IllegalStep as exc:
            return RulingCheck(False, f"q{i} under {format_pairing(sigma)}: {exc}", tuple(states))
        states.append(sigma)
    if sigma != cusp_pairing(od.cusps):
        return RulingCheck(False, f"final state {format_pairing(sigma)} does not pair the right cusps", tuple(states))
    return RulingCheck(True, "", tuple(states))


def disk_cusp_pairs(od: OrientedDiagram, switches) -> list[tuple[int, int]]:
    """``(left cusp, right cusp)`` joined by each disk of a ruling."""
    chosen = {_switch_index(x) if isinstance(x, str) else int(x) for x in switches}
    label = [p // 2 + 1 for p in range(2 * od.cusps)]
    for i, s in enumerate(od.crossings, 1):
        if i not in chosen:
            label[s - 1], label[s] = label[s], label[s - 1]
    pairs = []
    for k in range(1, od.cusps + 1):
        lower, upper = label[2 * k - 2], label[2 * k - 1]
        if lower != upper:
            raise ValueError("switch set does not close up at the right cusps")
        pairs.append((lower, k))
    return sorted(pairs)
