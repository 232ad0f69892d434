"""Seed-deterministic random rational arrangements."""

from __future__ import annotations

import random
from typing import Iterator

from .arrangement import Arrangement, validate
from .exactlin import EMPTY, AffineSubspace, canonicalize, contains

COEFF = 3


def random_subspace(rng: random.Random, n: int) -> AffineSubspace:
    while True:
        r = rng.randint(1, n)
        rows = [[rng.randint(-COEFF, COEFF) for _ in range(n)] for _ in range(r)]
        # half the draws pass through the origin so concurrency is common
        if rng.random() < 0.5:
            rhs = [0] * r
        else:
            rhs = [rng.randint(-COEFF, COEFF) for _ in range(r)]
        s = canonicalize(rows, rhs, n)
        if s is not EMPTY and s.codimension > 0:
            return s


def random_arrangement(rng: random.Random, n: int | None = None, k: int | None = None) -> Arrangement:
    n = n if n is not None else rng.randint(2, 4)
    k = k if k is not None else rng.randint(2, 5)
    subs: list[AffineSubspace] = []
    while len(subs) < k:
        s = random_subspace(rng, n)
        if any(s == t or contains(s, t) or contains(t, s) for t in subs):
            continue
        subs.append(s)
    return validate(subs, n)


def random_arrangements(seed: int, count: int) -> Iterator[Arrangement]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_arrangement(rng)

