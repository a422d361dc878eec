"""Shared fixtures and random samplers for the test suite.

All randomized suites run on fixed seeds so the whole run is deterministic.
"""

from __future__ import annotations

import random
from math import gcd

import pytest

from taumt.cusps import Cusp, Divisor
from taumt.qseries import tau_expansion


@pytest.fixture(scope="session")
def tau10k():
    """tau(0..10^4), shared across the suite."""
    return tau_expansion(10_000)


@pytest.fixture()
def rng():
    return random.Random(20260808)


def random_cusp(rng: random.Random, max_den: int = 60) -> Cusp:
    while True:
        den = rng.randrange(0, max_den + 1)
        num = rng.randrange(-max_den, max_den + 1)
        if num == 0 and den == 0:
            continue
        return Cusp.make(num, den)


def random_divisor0(rng: random.Random, max_den: int = 60) -> Divisor:
    return Divisor.path(random_cusp(rng, max_den), random_cusp(rng, max_den))


def _egcd(a: int, b: int):
    if b == 0:
        return (-a, -1, 0) if a < 0 else (a, 1, 0)
    g, x, y = _egcd(b, a % b)
    return g, y, x - y * (a // b)


def _complete_row(c: int, d: int, rng: random.Random, slide: int):
    """Some (a, b) with a*d - b*c = 1, randomly slid along the stabilizer."""
    g, x, y = _egcd(d, -c)
    assert g == 1
    t = rng.randrange(-slide, slide + 1)
    return x + t * c, y + t * d


def random_sl2(rng: random.Random, size: int = 20) -> tuple[int, int, int, int]:
    while True:
        c = rng.randrange(-size, size + 1)
        d = rng.randrange(-size, size + 1)
        if gcd(c, d) == 1:
            break
    a, b = _complete_row(c, d, rng, 3)
    assert a * d - b * c == 1
    return (a, b, c, d)


def random_gamma1(rng: random.Random, N: int, size: int = 8) -> tuple[int, int, int, int]:
    """Element of Gamma_1(N): a = d = 1 mod N, c = 0 mod N, determinant 1."""
    while True:
        c = N * rng.randrange(-size, size + 1)
        d = 1 + N * rng.randrange(-size, size + 1)
        if gcd(c, d) == 1:
            break
    a, b = _complete_row(c, d, rng, 3)
    assert a * d - b * c == 1 and a % N == 1 % N and c % N == 0
    return (a, b, c, d)
