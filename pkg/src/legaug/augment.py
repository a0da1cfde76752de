"""Graded and rho-graded augmentations of a plat DGA.

``rho`` follows one encoding everywhere: 0 means graded (support in grading
exactly 0), 1 ungraded, ``k >= 2`` support in gradings divisible by ``k``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _kernels
from .dga import DGA, words_as_index_arrays


class IllegalRhoError(ValueError):
    pass


def check_rho(rho: int, modulus: int) -> None:
    if rho < 0:
        raise IllegalRhoError(f"rho must be non-negative, got {rho}")
    if rho >= 1 and modulus > 0 and modulus % rho:
        raise IllegalRhoError(f"rho={rho} does not divide the grading modulus {modulus}")


def grading_allowed(grading: int, rho: int) -> bool:
    """Whether a generator of this grading may be augmented (or switched)."""
    if rho == 0:
        return grading == 0
    return grading % rho == 0


@dataclass(frozen=True)
class Augmentation:
    support: tuple[str, ...]
    rho: int = 0

    def __contains__(self, name: str) -> bool:
        return name in self.support

    def to_json(self) -> dict:
        return {"support": list(self.support), "rho": self.rho}


def _key(name: str) -> int:
    return int(name[1:])


def _ordered(names: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(names), key=_key))


def eligible(dga: DGA, rho: int) -> list[str]:
    check_rho(rho, dga.modulus)
    return [g.name for g in dga.generators if grading_allowed(g.grading, rho)]


def epsilon(word: Iterable[str], support) -> int:
    return int(all(x in support for x in word))


def is_augmentation(dga: DGA, support: Iterable[str], rho: int = 0) -> bool:
    check_rho(rho, dga.modulus)
    support = set(support)
    unknown = support - set(dga.names)
    if unknown:
        raise KeyError(f"unknown generators {sorted(unknown)}")
    gr = dga.grading
    if not all(grading_allowed(gr[x], rho) for x in support):
        return False
    for words in dga.differential.values():
        if sum(epsilon(w, support) for w in words) % 2:
            return False
    return True


def enumerate_augmentations(dga: DGA, rho: int = 0) -> list[Augmentation]:
    """Every augmentation, by backtracking in left-to-right order."""
    check_rho(rho, dga.modulus)
    elig = np.array([grading_allowed(g.grading, rho) for g in dga.generators], dtype=np.uint8)
    rows = _kernels.augmentations_search(elig, *words_as_index_arrays(dga))
    names = dga.names
    augs = [Augmentation(_ordered(names[i] for i in np.flatnonzero(row[:len(names)])), rho) for row in rows]
    return sorted(augs, key=lambda a: [_key(x) for x in a.support])


def brute_force_augmentations(dga: DGA, rho: int = 0) -> list[Augmentation]:
    """Evaluate every subset of the eligible generators at once.

    Row ``i`` of the assignment matrix is the binary expansion of ``i``; a
    word is 1 on a row iff all its letters are.
    """
    elig = eligible(dga, rho)
    k = len(elig)
    col = {name: i for i, name in enumerate(elig)}
    rows = np.arange(2 ** k, dtype=np.int64)
    bits = ((rows[:, None] >> np.arange(k, dtype=np.int64)) & 1).astype(bool)
    alive = np.ones(2 ** k, dtype=bool)
    for words in dga.differential.values():
        parity = np.zeros(2 ** k, dtype=bool)
        for w in words:
            if any(x not in col for x in w):
                continue
            parity ^= bits[:, sorted({col[x] for x in w})].all(axis=1)
        alive &= ~parity
    found = [Augmentation(_ordered(elig[j] for j in np.flatnonzero(bits[i])), rho) for i in np.flatnonzero(alive)]
    return sorted(found, key=lambda a: [_key(x) for x in a.support])


def filter_augmentations(dga: DGA, rho: int = 0) -> list[Augmentation]:
    """Slow reference: run :func:`is_augmentation` on every eligible subset."""
    elig = eligible(dga, rho)
    found = []
    for r in range(len(elig) + 1):
        for subset in itertools.combinations(elig, r):
            if is_augmentation(dga, subset, rho):
                found.append(Augmentation(_ordered(subset), rho))
    return sorted(found, key=lambda a: [_key(x) for x in a.support])
