"""Weight-0 boundary symbols: functions on cusps constant on Gamma_1(N) classes.

Two sources: the Eisenstein construction, which assembles the symbol
attached to a character pair (psi, chi) from indicator symbols of the
cusps x/(Qy), and the explicit mod-9 symbol of level 27 shipped as a
fixture table.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from .arith import DirichletCharacter, ResidueRing
from .cusps import Cusp, Divisor, classify_cusp, cusp_equivalent, cusp_representatives
from . import fixtures


class BoundarySymbol:
    """A Z/p^m-valued function on P^1(Q), constant on each Gamma_1(N) cusp.

    Stored as an orbit-value table over pairwise-inequivalent representatives;
    cusps not listed take the value 0.  Evaluation caches by (a mod N, c mod N).
    """

    def __init__(self, level: int, ring: ResidueRing, reps: list[Cusp], values: list[int], label: str = ""):
        if len(reps) != len(values):
            raise ValueError("representative and value lists differ in length")
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                if cusp_equivalent(level, reps[i], reps[j]):
                    raise ValueError(f"representatives {reps[i]} and {reps[j]} are equivalent")
        self.level = level
        self.ring = ring
        self.reps = list(reps)
        self.values = [ring.reduce(v) for v in values]
        self.label = label
        self._cache: dict[tuple[int, int], int] = {}

    def value(self, cusp: Cusp) -> int:
        """The symbol's value at the cusp, 0 off the listed support."""
        key = (cusp.a % self.level, cusp.c % self.level)
        cached = self._cache.get(key)
        if cached is None:
            i = classify_cusp(self.level, cusp, self.reps)
            cached = 0 if i is None else self.values[i]
            self._cache[key] = cached
        return cached

    def difference(self, r: Cusp, s: Cusp) -> int:
        """value(r) - value(s) in the symbol's ring."""
        return (self.value(r) - self.value(s)) % self.ring.n

    def on_divisor(self, D: Divisor) -> int:
        """The induced homomorphism on divisors (all divisors, not just degree 0)."""
        return sum(m * self.value(c) for c, m in D.items()) % self.ring.n

    def __repr__(self):
        tag = self.label or "boundary symbol"
        return f"<{tag}: level {self.level}, ring Z/{self.ring.n}, {len(self.reps)} classes>"


def _support_cusp(x: int, qy: int) -> Cusp:
    # lift x mod Q to a numerator coprime to Q*y
    t = 0
    while gcd(x + t * qy, qy) != 1:
        t += 1
    return Cusp.make(x + t * qy, qy)


def eisenstein_boundary_symbol(
    psi: DirichletCharacter,
    chi: DirichletCharacter,
    ring: ResidueRing | None = None,
) -> BoundarySymbol:
    """The weight-0 boundary symbol attached to the character pair (psi, chi).

    With Q, R the moduli of psi and chi and M = QR, the value at a cusp r is

        sum over units x mod Q, y mod R of psi^(-1)(x) chi(y) [r ~ x/(Qy)],

    the weight-0 specialization of the Eisenstein family: each indicator
    symbol is supported on one Gamma_1(M) cusp with constant value 1.
    """
    if psi.parity() * chi.parity() != 1:
        raise ValueError("parity violation: psi*chi(-1) must be 1 at weight 0")
    if ring is None:
        ring = psi.ring or chi.ring
        if ring is None:
            raise ValueError("a target ring is required for trivial characters")
    Q, R = psi.modulus, chi.modulus
    M = Q * R
    psi_inv = psi.inverse()
    reps = cusp_representatives(M)
    values = [0] * len(reps)
    for x in range(1, Q + 1):
        if gcd(x, Q) != 1:
            continue
        for y in range(1, R + 1):
            if gcd(y, R) != 1:
                continue
            weight = ring.reduce(psi_inv(x) * chi(y))
            if weight == 0:
                continue
            i = classify_cusp(M, _support_cusp(x, Q * y), reps)
            values[i] = (values[i] + weight) % ring.n
    label = f"phi(0, psi mod {Q}, chi mod {R})"
    return BoundarySymbol(M, ring, reps, values, label)


@lru_cache(maxsize=None)
def phi9_symbol() -> BoundarySymbol:
    """The explicit Z/9-valued boundary symbol of level 27, from its orbit table."""
    rows = fixtures.load_orbit_table("phi9_orbits.csv")
    reps = [Cusp.parse(r) for r, _ in rows]
    values = [v for _, v in rows]
    return BoundarySymbol(27, ResidueRing(3, 2), reps, values, "phi9")


def phi9(r: Cusp) -> int:
    """Value of the level-27 mod-9 symbol at a cusp."""
    sym = phi9_symbol()
    key = (r.a % 27, r.c % 27)
    if key not in sym._cache:
        if classify_cusp(27, r, sym.reps) is None:
            raise RuntimeError(f"cusp {r} missed the phi9 orbit table; table must be total")
    return sym.value(r)
