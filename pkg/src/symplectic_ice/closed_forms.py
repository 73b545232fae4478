"""Closed-form matrix elements of the row operators between hole configurations.

Every formula takes the bra configuration first and the ket second, both as
hole configurations on the same number of sites. Elements of the single-row
operators are monomials ``(t+1)^a t^b z^c``; :class:`Monomial` keeps the
exponents so they can be compared directly.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import NamedTuple, Sequence

from .exact import power
from .schur import deformation_factor, sp
from .wavefunctions import Config, YoungDiagram


class Monomial(NamedTuple):
    t_plus_one: int
    t: int
    z: int

    def value(self, z, t):
        return (t + 1) ** self.t_plus_one * power(t, self.t) * power(z, self.z)


def _holes(c: Config | Sequence[int]) -> tuple[int, ...]:
    if isinstance(c, Config):
        if c.role != "holes":
            raise ValueError("closed forms are stated for hole configurations")
        return c.positions
    return tuple(c)


def _same_m(a: Config, b: Config) -> int:
    if a.m != b.m:
        raise ValueError(f"site count mismatch: {a.m} != {b.m}")
    return a.m


def _chain(*seq) -> bool:
    return all(a <= b for a, b in zip(seq, seq[1:]))


def _interleave(first, second):
    out = []
    for a, b in zip(first, second):
        out += [a, b]
    longer = first if len(first) > len(second) else second
    out += longer[len(out) // 2:]
    return out


# ---------------------------------------------------------------------------
# single-row operators; x = bra holes, y = ket holes (1-based lists below)


def monomial_A(x: Sequence[int], y: Sequence[int], m: int) -> Monomial | None:
    n = len(x)
    if len(y) != n or not _chain(*_interleave(x, y)):
        return None
    X = [None, *x, m + 1]      # xbar_{N+1} = M + 1
    Y = [0, *y]                # ybar_0 = 0
    a = sum(1 for j in range(1, n + 1) if X[j] != Y[j] and X[j] != Y[j - 1])
    b = sum(max(X[j + 1] - Y[j] - 1, 0) for j in range(0, n + 1))
    c = sum(X[j] - Y[j] for j in range(1, n + 1))
    return Monomial(a, b, c)


def monomial_B(x: Sequence[int], y: Sequence[int], m: int) -> Monomial | None:
    n = len(x)
    if len(y) != n + 1 or not _chain(*_interleave(y, x)):
        return None
    X = [None, *x, m + 1]      # xbar_{N+1} = M + 1
    Y = [None, *y]
    a = sum(1 for j in range(1, n + 1) if X[j] != Y[j] and X[j] != Y[j + 1])
    b = sum(max(X[j] - Y[j] - 1, 0) for j in range(1, n + 2))
    # sites 1 .. ybar_1 - 1 carry auxiliary 1 at weight z^-1 each
    c = sum(X[j] - Y[j + 1] for j in range(1, n + 1)) - (Y[1] - 1)
    return Monomial(a, b, c)


def monomial_Atilde(x: Sequence[int], y: Sequence[int], m: int) -> Monomial | None:
    n = len(x)
    if len(y) != n or not _chain(*_interleave(x, y)):
        return None
    X = [None, *x]
    Y = [0, *y]                # ybar_0 = 0
    a = sum(1 for j in range(1, n + 1) if X[j] != Y[j] and X[j] != Y[j - 1])
    b = sum(max(Y[j] - X[j] - 1, 0) for j in range(1, n + 1))
    c = sum(Y[j] - X[j] for j in range(1, n + 1))
    return Monomial(a, b, c)


def monomial_Btilde(x: Sequence[int], y: Sequence[int], m: int) -> Monomial | None:
    n = len(x)
    if len(y) != n + 1 or not _chain(*_interleave(y, x)):
        return None
    X = [0, *x]                # xbar_0 = 0
    Y = [None, *y]
    a = sum(1 for j in range(1, n + 1) if X[j] != Y[j] and X[j] != Y[j + 1])
    b = sum(max(Y[j] - X[j - 1] - 1, 0) for j in range(1, n + 2))
    c = sum(Y[j] - X[j - 1] for j in range(1, n + 2)) - 1
    return Monomial(a, b, c)


def _value(mono: Monomial | None, z, t):
    return 0 if mono is None else mono.value(z, t)


def me_A_closed(xbar: Config, ybar: Config, z, t):
    m = _same_m(xbar, ybar)
    return _value(monomial_A(_holes(xbar), _holes(ybar), m), z, t)


def me_B_closed(xbar: Config, ybar: Config, z, t):
    m = _same_m(xbar, ybar)
    return _value(monomial_B(_holes(xbar), _holes(ybar), m), z, t)


def me_Atilde_closed(xbar: Config, ybar: Config, z, t):
    m = _same_m(xbar, ybar)
    return _value(monomial_Atilde(_holes(xbar), _holes(ybar), m), z, t)


def me_Btilde_closed(xbar: Config, ybar: Config, z, t):
    m = _same_m(xbar, ybar)
    return _value(monomial_Btilde(_holes(xbar), _holes(ybar), m), z, t)


# ---------------------------------------------------------------------------
# double-row operator


def _windows(lo: Sequence[int], hi: Sequence[int], m: int):
    """Strictly increasing sequences y with lo[i] <= y[i] <= hi[i] inside [1, m]."""
    def rec(i, prev):
        if i == len(lo):
            yield ()
            return
        for v in range(max(lo[i], prev + 1, 1), min(hi[i], m) + 1):
            for rest in rec(i + 1, v):
                yield (v, *rest)
    yield from rec(0, 0)


def alpha_terms(x: Sequence[int], w: Sequence[int], m: int):
    """Monomials of the z^-1 Atilde B part; x has N holes (bra), w has N+1 (ket)."""
    n = len(x)
    X = [0, *x, m + 1]
    W = [0, *w, m + 1]
    lo = [max(X[j], W[j]) for j in range(1, n + 1)]
    hi = [min(X[j + 1], W[j + 1]) for j in range(1, n + 1)]
    for y in _windows(lo, hi, m):
        Y = [0, *y, m + 1]     # ybar_0 = 0, ybar_{N+1} = M + 1
        a = (sum(1 for j in range(1, n + 1) if X[j] != Y[j] and X[j] != Y[j - 1])
             + sum(1 for j in range(1, n + 1) if Y[j] != W[j] and Y[j] != W[j + 1]))
        b = (sum(max(Y[j] - X[j] - 1, 0) for j in range(1, n + 1))
             + sum(max(Y[j] - W[j] - 1, 0) for j in range(1, n + 2)))
        c = (sum(Y[j] - X[j] for j in range(1, n + 1))
             + sum(Y[j] - W[j + 1] for j in range(1, n + 1)) - 1 - (W[1] - 1))
        yield Monomial(a, b, c)


def beta_terms(x: Sequence[int], w: Sequence[int], m: int):
    """Monomials of the t z Btilde A part; the intermediate configuration has N+1 holes."""
    n = len(x)
    X = [0, *x, m + 1]
    W = [0, *w]
    lo = [max(X[j - 1], W[j - 1]) for j in range(1, n + 2)]
    hi = [min(X[j], W[j]) for j in range(1, n + 2)]
    for y in _windows(lo, hi, m):
        Y = [0, *y, m + 1]     # ybar_{N+2} = M + 1
        a = (sum(1 for j in range(1, n + 1) if X[j] != Y[j] and X[j] != Y[j + 1])
             + sum(1 for j in range(1, n + 2) if Y[j] != W[j] and Y[j] != W[j - 1]))
        b = (sum(max(Y[j] - X[j - 1] - 1, 0) for j in range(1, n + 2))
             + sum(max(Y[j + 1] - W[j] - 1, 0) for j in range(0, n + 2)) + 1)
        c = (sum(Y[j] - X[j - 1] for j in range(1, n + 2))
             + sum(Y[j] - W[j] for j in range(1, n + 2)))
        yield Monomial(a, b, c)


def double_row_me_closed(xbarN: Config, xbarN1: Config, z, t):
    """<xbar^N| double-row B(z) |xbar^{N+1}> as the alpha + beta interlacing sums.

    The pair itself need not interlace: each sum only requires both ends to
    interlace with its intermediate configuration, and an empty sum gives 0.
    """
    m = _same_m(xbarN, xbarN1)
    x, w = _holes(xbarN), _holes(xbarN1)
    if len(w) != len(x) + 1:
        return 0
    total = 0
    for mono in alpha_terms(x, w, m):
        total = total + mono.value(z, t)
    for mono in beta_terms(x, w, m):
        total = total + mono.value(z, t)
    return total


def dual_wavefunction_sum(m: int, zs: Sequence, t, holes: Config | Sequence[int]):
    """Dual wavefunction as a sum over chains of hole configurations.

    Chains run over every sequence x^1, ..., x^{N-1} with x^k a k-hole
    configuration, weighted by products of double-row elements. Restricting to
    mutually interlacing chains drops nonzero terms, so no such filter is applied.
    """
    top = _holes(holes)
    n = len(top)
    if len(zs) != n:
        raise ValueError(f"{len(zs)} spectral parameters for {n} holes")
    if n > m:
        raise ValueError("more holes than sites")

    @lru_cache(maxsize=None)
    def level(k: int, w: tuple[int, ...]):
        # sum over chains ending at w (k holes) of prod_{i<=k} <x^{i-1}| B(z_i) |x^i>
        if k == 0:
            return 1
        total = 0
        for x in combinations(range(1, m + 1), k - 1):
            elem = double_row_me_closed(Config(m, x, "holes"), Config(m, w, "holes"), zs[k - 1], t)
            if elem:
                total = total + level(k - 1, x) * elem
        return total

    return level(n, tuple(top))


def a9_sides(m: int, zs: Sequence, t, lam_bar: YoungDiagram | Sequence[int]):
    """(interlacing-sum side, t^{N(M-N)} D sp_lambda(t z)) of the dual-wavefunction identity."""
    parts = tuple(lam_bar)
    n = len(parts)
    holes = tuple(parts[n - j] + j for j in range(1, n + 1))
    lhs = dual_wavefunction_sum(m, zs, t, holes)
    rhs = t ** (n * (m - n)) * deformation_factor(zs, t) * sp(parts, [t * z for z in zs])
    return lhs, rhs


def verify_a9(m: int, zs: Sequence, t, lam_bar) -> bool:
    lhs, rhs = a9_sides(m, zs, t, lam_bar)
    return lhs == rhs


# ---------------------------------------------------------------------------
# t = -1 (five-vertex) elements of the primed operators; x = bra, y = ket


def _removed_slot(x: Sequence[int], y: Sequence[int]) -> int | None:
    """1-based j with x equal to y without its j-th entry, else None."""
    if len(y) != len(x) + 1:
        return None
    for j in range(len(y)):
        if tuple(y[:j]) + tuple(y[j + 1:]) == tuple(x):
            return j + 1
    return None


def five_vertex_me_closed(kind: str, xbar, ybar, z):
    x, y = _holes(xbar), _holes(ybar)
    k = len(y)
    if kind in ("A", "Atilde"):
        if tuple(x) != tuple(y):
            return 0
        return (-1) ** k if kind == "A" else 1
    if kind not in ("B", "Btilde", "DoubleRowB"):
        raise ValueError(f"unknown operator kind {kind!r}")
    j = _removed_slot(x, y)
    if j is None:
        return 0
    yj = y[j - 1]
    if kind == "B":
        return (-1) ** k * (-1) ** (j - 1) * power(z, 1 - yj)
    if kind == "Btilde":
        return (-1) ** (j - 1) * power(z, yj - 1)
    return (-1) ** (k + 1) * (-1) ** (j - 1) * (power(z, yj) - power(z, -yj))
