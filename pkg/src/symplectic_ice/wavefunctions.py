"""Particle/hole configurations, Young diagrams, and the (dual) wavefunction overlaps."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .lattice import OccupationState, OperatorParams, OperatorSpec, StateVector, apply_double_row_b


@dataclass(frozen=True)
class Config:
    m: int
    positions: tuple[int, ...]
    role: str = "particles"  # or "holes"

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(self.positions))
        if self.role not in ("particles", "holes"):
            raise ValueError(f"role must be 'particles' or 'holes', got {self.role!r}")
        p = self.positions
        if any(not 1 <= x <= self.m for x in p) or any(a >= b for a, b in zip(p, p[1:])):
            raise ValueError(f"positions {p} are not strictly increasing in [1, {self.m}]")

    @property
    def n(self) -> int:
        return len(self.positions)


@dataclass(frozen=True)
class YoungDiagram:
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        p = self.parts
        if any(x < 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
            raise ValueError(f"{p} is not a weakly decreasing sequence of non-negative integers")

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]


def config_state(c: Config) -> OccupationState:
    mask = 0
    for x in c.positions:
        mask |= 1 << (x - 1)
    if c.role == "particles":
        return OccupationState(c.m, mask)
    return OccupationState(c.m, ((1 << c.m) - 1) ^ mask)


def config_to_partition(c: Config) -> YoungDiagram:
    x, n = c.positions, c.n
    return YoungDiagram(tuple(x[n - j] - n + j - 1 for j in range(1, n + 1)))


def partition_to_config(lam: YoungDiagram | Sequence[int], m: int, role: str = "particles") -> Config:
    parts = tuple(lam)
    n = len(parts)
    if n and parts[0] > m - n:
        raise ValueError(f"partition {parts} does not fit: lambda_1 = {parts[0]} > M - N = {m - n}")
    return Config(m, tuple(parts[n - k] + k for k in range(1, n + 1)), role)


def all_configs(m: int, n: int, role: str = "particles") -> Iterator[Config]:
    for pos in combinations(range(1, m + 1), n):
        yield Config(m, pos, role)


def _spec(z, t, variant, alphas):
    return OperatorSpec("DoubleRowB", variant, OperatorParams(z, t, alphas))


def apply_b_product(v: StateVector, zs: Sequence, t, variant: str = "plain", alphas=None) -> StateVector:
    """B(z_1) ... B(z_N) v with the double-row operator; z_N acts first."""
    for z in reversed(list(zs)):
        v = apply_double_row_b(_spec(z, t, variant, alphas), v)
    return v


def n_particle_state(m: int, zs: Sequence, t, variant: str = "plain", alphas=None) -> StateVector:
    return apply_b_product(StateVector.basis(OccupationState.vacuum(m)), zs, t, variant, alphas)


def wavefunction(m: int, zs: Sequence, t, c: Config, variant: str = "plain", alphas=None):
    """<x_1 ... x_N| B(z_1) ... B(z_N) |vacuum>."""
    if c.role != "particles":
        raise ValueError("wavefunction needs a particle configuration")
    if c.m != m:
        raise ValueError(f"site count mismatch: {c.m} != {m}")
    return n_particle_state(m, zs, t, variant, alphas).coefficient(config_state(c))


def dual_wavefunction(m: int, zs: Sequence, t, c: Config, variant: str = "plain", alphas=None):
    """<1^M| B(z_1) ... B(z_N) |xbar_1 ... xbar_N>, by forward application to the hole state."""
    if c.role != "holes":
        raise ValueError("dual wavefunction needs a hole configuration")
    if c.m != m:
        raise ValueError(f"site count mismatch: {c.m} != {m}")
    v = apply_b_product(StateVector.basis(config_state(c)), zs, t, variant, alphas)
    return v.coefficient(OccupationState.full(m))
