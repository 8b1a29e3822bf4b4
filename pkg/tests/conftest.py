"""Shared helpers: seeded random instances and report comparison."""

import random

import numpy as np

from cuberamsey import Coloring, CubeSpace, SetFamily
from cuberamsey.reports import stable_lines

try:
    from hypothesis import settings

    settings.register_profile("suite", derandomize=True, deadline=None, max_examples=60)
    settings.load_profile("suite")
except ImportError:
    pass


def random_members(m: int, rng: random.Random, density: float = 0.5) -> list[int]:
    return [v for v in range(1 << m) if rng.random() < density]


def random_family(m: int, rng: random.Random, density: float = 0.5) -> SetFamily:
    space = CubeSpace(m)
    mask = np.zeros(space.size, dtype=bool)
    for v in random_members(m, rng, density):
        mask[v] = True
    return SetFamily(space, mask)


def random_coloring(m: int, rng: random.Random, scheme: str = "random") -> Coloring:
    space = CubeSpace(m)
    red = np.array([rng.random() < 0.5 for _ in range(space.size)], dtype=bool)
    return Coloring(space, red, scheme=scheme)


def same_stable_report(a: str, b: str) -> bool:
    return stable_lines(a) == stable_lines(b)
