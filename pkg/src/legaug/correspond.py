"""From augmentations to normal rulings.

:func:`extract_ruling` walks the crossings left to right.  At each crossing it
switches when the current augmentation value is 1 and the ruling is in a
normal configuration, otherwise it passes.  Whenever the value is 1 it then
augments the beta generators of an imaginary dip to the right of the
crossing, and corrects the values of later crossings by counting truncated
disks mod 2.  The dipped diagram itself is never built.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from . import _kernels
from .augment import Augmentation, check_rho, enumerate_augmentations, grading_allowed
from .dga import DGA, build_dga
from .front import OrientedDiagram, crossing_gradings, maslov_potential, rotation_number
from .ruling import (
    Action,
    Config,
    PairingState,
    classify_config,
    conjugate,
    cusp_pairing,
    disk_cusp_pairs,
    enumerate_rulings,
    format_pairing,
    validate_ruling,
)


class ExtractionError(RuntimeError):
    pass


class PairedConfigReached(ExtractionError):
    pass


class ClosureFailed(ExtractionError):
    pass


class BetaGradingViolation(ExtractionError):
    pass


class SwitchGradingViolation(ExtractionError):
    pass


@dataclass(frozen=True)
class DipPair:
    lower: int
    upper: int
    beta_grading: int


@dataclass(frozen=True)
class TruncatedDisk:
    positive_corner: str
    dip_index: int
    left_edge_pair: tuple[int, int]
    upper_corners: tuple[str, ...] = ()
    lower_corners: tuple[str, ...] = ()

    @property
    def corners(self) -> tuple[str, ...]:
        return self.upper_corners + self.lower_corners


@dataclass
class TraceStep:
    crossing: str
    config: Config
    action: Action
    betas: list[tuple[int, int]] = field(default_factory=list)
    flips: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "crossing": self.crossing,
            "config": self.config.value,
            "action": self.action.value,
            "betas": [list(b) for b in self.betas],
            "flips": list(self.flips),
        }


@dataclass
class Extraction:
    augmentation: Augmentation
    switches: tuple[str, ...]
    trace: list[TraceStep]
    states: tuple[PairingState, ...]


def _truncated_corner_sets(od: OrientedDiagram, k: int, j: int, pair: tuple[int, int]):
    key = ("trunc", k, j, pair)
    hit = od._cache.get(key)
    if hit is None:
        s = od.crossings[k - 1]
        rec = _kernels.sweep(od.positions(), k - 1, s, s + 1, j, pair[0], pair[1])
        hit = _kernels.decode_sweep(rec)
        od._cache[key] = hit
    return hit


def truncated_disks(od: OrientedDiagram, k: int, j: int, pair: tuple[int, int]) -> list[TruncatedDisk]:
    """Disks from ``q_k`` whose left edge is the segment ``pair`` just right of ``q_j``."""
    if not 0 <= j < k <= od.n:
        raise ValueError(f"need 0 <= j < k <= n, got j={j}, k={k}")
    p, q = pair
    if not 1 <= p < q <= 2 * od.cusps:
        raise ValueError(f"bad height pair {pair}")
    return [
        TruncatedDisk(f"q{k}", j, (p, q), tuple(f"q{i + 1}" for i in up), tuple(f"q{i + 1}" for i in lw))
        for up, lw in _truncated_corner_sets(od, k, j, (p, q))
    ]


def beta_pairs(config: Config, sigma: PairingState, s: int) -> list[tuple[int, int]]:
    """Height pairs whose beta generator is augmented, lower pair first."""
    a, b = sigma[s - 1], sigma[s]
    companions = (min(a, b), max(a, b))
    if config is Config.PAIRED:
        raise PairedConfigReached(f"crossing at height {s} joins paired paths")
    if config is Config.A:
        pairs = [(s, s + 1)]
    elif config in (Config.B, Config.C):
        pairs = [(s, s + 1), companions]
    elif config is Config.CROSSED:
        pairs = []
    else:
        pairs = [companions]
    return sorted(pairs)


def extract_ruling(od: OrientedDiagram, eps: Augmentation) -> Extraction:
    pot = maslov_potential(od)
    rho = eps.rho
    check_rho(rho, pot.modulus)
    gradings = crossing_gradings(od, pot)
    n = od.n
    value = [0] + [int(f"q{i}" in eps.support) for i in range(1, n + 1)]
    sigma = cusp_pairing(od.cusps)
    states = [sigma]
    trace = []
    switches = []
    for j, s in enumerate(od.crossings, 1):
        name = f"q{j}"
        config = classify_config(sigma, s)
        if config is Config.PAIRED:
            raise PairedConfigReached(f"{name}: crossing paths paired under {format_pairing(sigma)}")
        before = sigma
        if value[j] and config.normal:
            if not grading_allowed(gradings[j - 1], rho):
                raise SwitchGradingViolation(f"{name}: switch at grading {gradings[j - 1]} with rho={rho}")
            action = Action.SWITCH
            switches.append(name)
        else:
            action = Action.PASS
            sigma = conjugate(sigma, s)
        step = TraceStep(name, config, action)
        if value[j]:
            row = od.occupancy[j]
            for pair in beta_pairs(config, before, s):
                beta = pot.reduce(pot[int(row[pair[0] - 1])] - pot[int(row[pair[1] - 1])])
                if not grading_allowed(beta, rho):
                    raise BetaGradingViolation(f"{name}: beta {pair} has grading {beta} with rho={rho}")
                step.betas.append(pair)
                for k in range(j + 1, n + 1):
                    hits = 0
                    for up, lw in _truncated_corner_sets(od, k, j, pair):
                        if all(value[i + 1] for i in up) and all(value[i + 1] for i in lw):
                            hits += 1
                    if hits % 2:
                        value[k] ^= 1
                        step.flips.append(f"q{k}")
        trace.append(step)
        states.append(sigma)
    if sigma != cusp_pairing(od.cusps):
        raise ClosureFailed(f"final state {format_pairing(sigma)} does not pair the right cusps")
    return Extraction(eps, tuple(switches), trace, tuple(states))


def parity_violations(od: OrientedDiagram) -> list[str]:
    """Crossings where even grading and equal strand directions disagree."""
    bad = []
    for i, g in enumerate(crossing_gradings(od), 1):
        a, b = od.crossing_strands(i)
        same = od.direction[a - 1] == od.direction[b - 1]
        if (g % 2 == 0) != same:
            bad.append(f"q{i}")
    return bad


def parity_check(od: OrientedDiagram) -> bool:
    return not parity_violations(od)


@dataclass
class EquivalenceReport:
    rho: int
    augmentations: int
    rulings: int
    equivalent: bool
    extraction_failures: list[str] = field(default_factory=list)
    images: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return self.equivalent and not self.extraction_failures

    def to_json(self) -> dict:
        return {
            "rho": self.rho,
            "augmentations": self.augmentations,
            "rulings": self.rulings,
            "equivalent": self.equivalent,
            "extraction_failures": list(self.extraction_failures),
            "images": [
                {"switches": list(k), "count": v}
                for k, v in sorted(self.images.items(), key=lambda kv: [int(x[1:]) for x in kv[0]])
            ],
            "ok": self.ok,
        }


def check_equivalence(od: OrientedDiagram, rho: int = 0, dga: DGA | None = None) -> EquivalenceReport:
    dga = dga or build_dga(od)
    augs = enumerate_augmentations(dga, rho)
    rulings = enumerate_rulings(od, rho)
    report = EquivalenceReport(rho, len(augs), len(rulings), (len(augs) == 0) == (len(rulings) == 0))
    for eps in augs:
        label = "{" + ",".join(eps.support) + "}"
        try:
            ex = extract_ruling(od, eps)
        except ExtractionError as exc:
            report.extraction_failures.append(f"{label}: {type(exc).__name__}: {exc}")
            continue
        check = validate_ruling(od, ex.switches, rho)
        if not check:
            report.extraction_failures.append(f"{label}: invalid output ruling: {check.message}")
        report.images[ex.switches] += 1
    return report


@dataclass
class RotationReport:
    rotation_number: int
    has_2_graded_augmentation: bool
    satisfied: bool
    disk_violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.satisfied and not self.disk_violations

    def to_json(self) -> dict:
        return {
            "rotation_number": self.rotation_number,
            "has_2_graded_augmentation": self.has_2_graded_augmentation,
            "satisfied": self.satisfied,
            "disk_violations": list(self.disk_violations),
            "ok": self.ok,
        }


def check_rotation_criterion(od: OrientedDiagram, dga: DGA | None = None) -> RotationReport:
    dga = dga or build_dga(od)
    r = rotation_number(od)
    exists = bool(enumerate_augmentations(dga, 2))
    report = RotationReport(r, exists, (not exists) or r == 0)
    for ruling in enumerate_rulings(od, 2):
        for left, right in disk_cusp_pairs(od, ruling.switches):
            if od.left_cusp_type[left - 1] == od.right_cusp_type[right - 1]:
                report.disk_violations.append(
                    f"ruling {{{','.join(ruling.switches)}}}: left cusp {left} and right cusp {right} "
                    f"are both {od.left_cusp_type[left - 1].value}"
                )
    return report
