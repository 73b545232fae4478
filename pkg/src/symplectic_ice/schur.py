"""Symplectic and factorial symplectic Schur functions as ratios of exact determinants."""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from .exact import as_rational, power, product, rat_det, reciprocal


class WeylDenominator(NamedTuple):
    determinant: Fraction
    factored: Fraction


def _alternant(zs: Sequence[Fraction], exponents: Sequence[int]):
    # row j = variable z_j, column k = exponent e_k: z_j^e_k - z_j^-e_k
    return [[z ** e - z ** -e for e in exponents] for z in zs]


def _check_zs(zs):
    zs = [as_rational(z) for z in zs]
    if any(z == 0 for z in zs):
        raise ZeroDivisionError("variables must be nonzero")
    return zs


def weyl_denominator(zs: Sequence) -> WeylDenominator:
    """det_N(z_j^(N-k+1) - z_j^-(N-k+1)) alongside its product factorization."""
    zs = _check_zs(zs)
    n = len(zs)
    det = rat_det(_alternant(zs, [n - k + 1 for k in range(1, n + 1)]))
    fac = Fraction((-1) ** n)
    for j, z in enumerate(zs, start=1):
        fac *= z ** (j - 1 - n) * (1 - z * z)
    for j in range(n):
        for k in range(j + 1, n):
            fac *= (1 - zs[j] * zs[k]) * (1 - zs[j] / zs[k])
    return WeylDenominator(det, fac)


def _denominator(zs):
    n = len(zs)
    d = rat_det(_alternant(zs, [n - k + 1 for k in range(1, n + 1)]))
    if d == 0:
        raise ZeroDivisionError(f"Weyl denominator vanishes at {list(map(str, zs))}")
    return d


def sp(lam: Sequence[int], zs: Sequence) -> Fraction:
    """Symplectic Schur function sp_lambda(z_1, ..., z_N) at a rational point."""
    zs = _check_zs(zs)
    n = len(zs)
    if len(lam) != n:
        raise ValueError(f"partition {tuple(lam)} has {len(lam)} parts for {n} variables")
    num = rat_det(_alternant(zs, [lam[k - 1] + n - k + 1 for k in range(1, n + 1)]))
    return num / _denominator(zs)


def deformation_factor(zs: Sequence, t, primed: bool = False):
    """The t-deformed Weyl denominator shared by the wavefunction identities.

    Plain: prod_j z_j^(j-1-N) (1 + t z_j^2) prod_{j<k} (1 + t z_j z_k)(1 + t z_j/z_k).
    Primed replaces t by t' = 1/t and the last factor by (t' + z_j/z_k).
    ``t`` may be symbolic.
    """
    n = len(zs)
    s = reciprocal(t) if primed else t
    out = 1
    for j, z in enumerate(zs, start=1):
        out = out * power(z, j - 1 - n) * (1 + s * z * z)
    for j in range(n):
        for k in range(j + 1, n):
            ratio = zs[j] * reciprocal(zs[k])
            out = out * (1 + s * zs[j] * zs[k]) * ((s + ratio) if primed else (1 + s * ratio))
    return out


def g_mu(mu: Sequence[int], zs: Sequence, alphas: Sequence) -> Fraction:
    """det_N( prod_{i=0}^{mu_k} (z_j + a_i) - prod_{i=0}^{mu_k} (1/z_j + a_i) )."""
    zs = _check_zs(zs)
    alphas = [as_rational(a) for a in alphas]
    if len(mu) != len(zs):
        raise ValueError("mu and zs differ in length")
    if mu and max(mu) >= len(alphas):
        raise ValueError(f"mu_1 = {max(mu)} needs alpha_0 .. alpha_{max(mu)}, got {len(alphas)} alphas")
    rows = []
    for z in zs:
        zi = 1 / z
        rows.append([product(z + alphas[i] for i in range(m + 1))
                     - product(zi + alphas[i] for i in range(m + 1)) for m in mu])
    return rat_det(rows)


def factorial_sp(lam: Sequence[int], zs: Sequence, alphas: Sequence) -> Fraction:
    """Factorial symplectic Schur function; the order of ``alphas`` (a_0, a_1, ...) matters."""
    zs = _check_zs(zs)
    n = len(zs)
    if len(lam) != n:
        raise ValueError(f"partition {tuple(lam)} has {len(lam)} parts for {n} variables")
    mu = [lam[k] + n - 1 - k for k in range(n)]
    return g_mu(mu, zs, alphas) / _denominator(zs)
