"""Vertex weights and sparse row-operator contraction on the 2^M occupation basis.

Site ``j`` (1-based) is bit ``j - 1`` of an occupation word; a set bit is a
particle, a clear bit a hole. Weights are indexed as
``(a_in, s_in, a_out, s_out)``: auxiliary and site value on the ket side,
then on the bra side.

The first monodromy matrix ``T = L_M ... L_1`` carries the auxiliary index
from site 1 to site M; the second ``T~ = L~_1 ... L~_M`` carries it from
site M to site 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .exact import LaurentT, Scalar, reciprocal

MAX_SITES = 24

KINDS = ("A", "B", "Atilde", "Btilde", "DoubleRowB")
VARIANTS = ("plain", "primed", "inhom")

# (first|second monodromy, ket-side auxiliary value, bra-side auxiliary value)
_ROW_KINDS = {
    "A": ("first", 0, 0),
    "B": ("first", 1, 0),
    "Atilde": ("second", 1, 1),
    "Btilde": ("second", 1, 0),
}

# particles added to the ket by each kind
CHARGE = {"A": 0, "Atilde": 0, "B": 1, "Btilde": 1, "DoubleRowB": 1}


@dataclass(frozen=True)
class OccupationState:
    m: int
    bits: int

    def __post_init__(self):
        if not 1 <= self.m <= MAX_SITES:
            raise ValueError(f"number of sites must be in [1, {MAX_SITES}], got {self.m}")
        if self.bits < 0 or self.bits >> self.m:
            raise ValueError(f"bits {self.bits:b} do not fit in {self.m} sites")

    @classmethod
    def vacuum(cls, m: int) -> "OccupationState":
        return cls(m, 0)

    @classmethod
    def full(cls, m: int) -> "OccupationState":
        return cls(m, (1 << m) - 1)

    def occupied(self, site: int) -> bool:
        return bool(self.bits >> (site - 1) & 1)

    @property
    def particles(self) -> int:
        return bin(self.bits).count("1")

    def __str__(self):
        # site 1 first
        return "|" + "".join("1" if self.occupied(j) else "0" for j in range(1, self.m + 1)) + ">"


@dataclass(frozen=True)
class StateVector:
    """Sparse superposition ``{bits: amplitude}`` over ``m`` sites; zero amplitudes are dropped."""

    m: int
    amplitudes: Mapping[int, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "amplitudes", {k: v for k, v in self.amplitudes.items() if v})

    @classmethod
    def basis(cls, state: OccupationState, amplitude: Scalar = 1) -> "StateVector":
        return cls(state.m, {state.bits: amplitude})

    def coefficient(self, state: OccupationState | int) -> Scalar:
        bits = state.bits if isinstance(state, OccupationState) else state
        return self.amplitudes.get(bits, 0)

    def __add__(self, other: "StateVector") -> "StateVector":
        _check_m(self.m, other.m)
        out = dict(self.amplitudes)
        for k, v in other.amplitudes.items():
            out[k] = out[k] + v if k in out else v
        return StateVector(self.m, out)

    def scale(self, c: Scalar) -> "StateVector":
        return StateVector(self.m, {k: c * v for k, v in self.amplitudes.items()})

    def __eq__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.m == other.m and dict(self.amplitudes) == dict(other.amplitudes)

    def __len__(self):
        return len(self.amplitudes)


@dataclass(frozen=True)
class OperatorParams:
    z: Scalar
    t: Scalar
    alphas: tuple | None = None  # (alpha_0, alpha_1, ..., alpha_M)

    def __post_init__(self):
        if not self.z:
            raise ValueError("spectral parameter z must be nonzero")
        if self.alphas is not None:
            object.__setattr__(self, "alphas", tuple(self.alphas))

    def alpha(self, j: int):
        if self.alphas is None or not 0 <= j < len(self.alphas):
            raise ValueError(f"inhomogeneous weight needs alpha_{j}")
        return self.alphas[j]


@dataclass(frozen=True)
class OperatorSpec:
    kind: str
    variant: str
    params: OperatorParams

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown operator kind {self.kind!r}")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.variant == "primed" and not self.params.t:
            raise ValueError("primed operators need an invertible t")

    def check_sites(self, m: int):
        if self.variant == "inhom":
            alphas = self.params.alphas
            if alphas is None or len(alphas) != m + 1:
                raise ValueError(f"inhomogeneous operator on {m} sites needs {m + 1} alphas")


def _check_m(m1: int, m2: int):
    if m1 != m2:
        raise ValueError(f"site count mismatch: {m1} != {m2}")


# ---------------------------------------------------------------------------
# weights


def l_weight(kind, variant, a_in, s_in, a_out, s_out, params: OperatorParams, site: int | None = None):
    """Vertex weight of the first (``kind="first"``) or second L-operator."""
    if a_in + s_in != a_out + s_out:
        return 0
    z, t = params.z, params.t
    key = (a_in, s_in, a_out, s_out)
    if variant == "plain":
        zi = reciprocal(z)
        if kind == "first":
            table = {(0, 0, 0, 0): 1, (0, 1, 0, 1): t, (1, 0, 0, 1): 1,
                     (0, 1, 1, 0): (t + 1) * zi, (1, 0, 1, 0): zi, (1, 1, 1, 1): zi}
        else:
            table = {(0, 0, 0, 0): z, (0, 1, 0, 1): t * z, (1, 0, 0, 1): 1,
                     (0, 1, 1, 0): (t + 1) * z, (1, 0, 1, 0): 1, (1, 1, 1, 1): 1}
    elif variant == "primed":
        zi, ti = reciprocal(z), reciprocal(t)
        if kind == "first":
            table = {(0, 0, 0, 0): ti, (0, 1, 0, 1): 1, (1, 0, 0, 1): ti,
                     (0, 1, 1, 0): (t + 1) * zi, (1, 0, 1, 0): zi, (1, 1, 1, 1): zi}
        else:
            table = {(0, 0, 0, 0): ti * z, (0, 1, 0, 1): z, (1, 0, 0, 1): 1,
                     (0, 1, 1, 0): (1 + ti) * z, (1, 0, 1, 0): 1, (1, 1, 1, 1): 1}
    elif variant == "inhom":
        if site is None:
            raise ValueError("inhomogeneous weight needs a site index")
        a = params.alpha(site)
        zi = reciprocal(z)
        if kind == "first":
            table = {(0, 0, 0, 0): 1, (0, 1, 0, 1): t, (1, 0, 0, 1): 1,
                     (0, 1, 1, 0): (t + 1) * zi, (1, 0, 1, 0): zi + a, (1, 1, 1, 1): zi - t * a}
        else:
            table = {(0, 0, 0, 0): z + a, (0, 1, 0, 1): t * z - a, (1, 0, 0, 1): 1,
                     (0, 1, 1, 0): (t + 1) * z, (1, 0, 1, 0): 1, (1, 1, 1, 1): 1}
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return table.get(key, 0)


def k_weight(variant, a_in, a_out, params: OperatorParams):
    """Diagonal boundary (K-matrix) weight."""
    if a_in != a_out:
        return 0
    z, t = params.z, params.t
    zi = reciprocal(z)
    if variant == "plain":
        return t * z if a_in == 0 else zi
    if variant == "primed":
        return reciprocal(t) * z if a_in == 0 else zi
    if variant == "inhom":
        a0 = params.alpha(0)
        return t * z - a0 if a_in == 0 else zi + a0
    raise ValueError(f"unknown variant {variant!r}")


def r_weight(a_in, b_in, a_out, b_out, z, t):
    """R-matrix weight on two auxiliary spaces; zero on charge-violating tuples."""
    zi = reciprocal(z)
    table = {
        (0, 0, 0, 0): 1 + t * zi,
        (0, 1, 0, 1): t * (1 - zi),
        (1, 0, 0, 1): t + 1,
        (0, 1, 1, 0): (t + 1) * zi,
        (1, 0, 1, 0): zi - 1,
        (1, 1, 1, 1): zi + t,
    }
    return table.get((a_in, b_in, a_out, b_out), 0)


# ---------------------------------------------------------------------------
# contraction


def _site_tables(which: str, variant: str, params: OperatorParams, m: int):
    # per site: {(a_in, s_in): [(a_out, s_out, weight), ...]}
    tables = []
    for j in range(1, m + 1):
        site = j if variant == "inhom" else None
        tab = {}
        for a_in in (0, 1):
            for s_in in (0, 1):
                moves = []
                for a_out in (0, 1):
                    s_out = a_in + s_in - a_out
                    if s_out not in (0, 1):
                        continue
                    w = l_weight(which, variant, a_in, s_in, a_out, s_out, params, site)
                    if w:
                        moves.append((a_out, s_out, w))
                tab[(a_in, s_in)] = moves
        tables.append(tab)
    return tables


def _sweep(v: StateVector, which: str, variant: str, params: OperatorParams, aux_in: int, aux_out: int):
    m = v.m
    tables = _site_tables(which, variant, params, m)
    order = range(m) if which == "first" else range(m - 1, -1, -1)
    layer = {(aux_in, bits): amp for bits, amp in v.amplitudes.items()}
    for idx in order:
        mask = 1 << idx
        tab = tables[idx]
        nxt = {}
        for (a, bits), amp in layer.items():
            s_in = 1 if bits & mask else 0
            for a_out, s_out, w in tab[(a, s_in)]:
                key = (a_out, bits | mask if s_out else bits & ~mask)
                val = amp * w
                if key in nxt:
                    nxt[key] = nxt[key] + val
                else:
                    nxt[key] = val
        layer = nxt
    return StateVector(m, {bits: amp for (a, bits), amp in layer.items() if a == aux_out})


def apply_row_operator(spec: OperatorSpec, v: StateVector) -> StateVector:
    """Apply A, B, Atilde or Btilde to a ket."""
    if spec.kind not in _ROW_KINDS:
        raise ValueError(f"{spec.kind} is not a single-row operator")
    spec.check_sites(v.m)
    which, aux_in, aux_out = _ROW_KINDS[spec.kind]
    return _sweep(v, which, spec.variant, spec.params, aux_in, aux_out)


def apply_double_row_b(spec: OperatorSpec, v: StateVector) -> StateVector:
    """K(0,0) Btilde A v + K(1,1) Atilde B v."""
    if spec.kind != "DoubleRowB":
        raise ValueError("apply_double_row_b needs kind DoubleRowB")
    spec.check_sites(v.m)
    p, var = spec.params, spec.variant
    left = _sweep(_sweep(v, "first", var, p, 0, 0), "second", var, p, 1, 0)
    right = _sweep(_sweep(v, "first", var, p, 1, 0), "second", var, p, 1, 1)
    return left.scale(k_weight(var, 0, 0, p)) + right.scale(k_weight(var, 1, 1, p))


def apply(spec: OperatorSpec, v: StateVector) -> StateVector:
    if spec.kind == "DoubleRowB":
        return apply_double_row_b(spec, v)
    return apply_row_operator(spec, v)


def matrix_element(bra: OccupationState, spec: OperatorSpec, ket: OccupationState):
    _check_m(bra.m, ket.m)
    return apply(spec, StateVector.basis(ket)).coefficient(bra)


# ---------------------------------------------------------------------------
# Yang-Baxter relation on W_a (x) W_b (x) F_j


def _identity_r(a_in, b_in, a_out, b_out, z, t):
    return 1 if (a_in, b_in) == (a_out, b_out) else 0


def _mat_mul(x, y):
    n = len(x)
    return [[sum((x[i][k] * y[k][j] for k in range(n) if x[i][k] and y[k][j]), 0)
             for j in range(n)] for i in range(n)]


def yang_baxter_sides(z1, z2, t, r=r_weight):
    """Both sides of R_ab(z1/z2) L_aj(z1) L_bj(z2) = L_bj(z2) L_aj(z1) R_ab(z1/z2) as 8x8 matrices.

    Basis index is ``4a + 2b + j``; rows are outputs, columns inputs.
    """
    if not (z1 and z2 and t):
        raise ValueError("Yang-Baxter check needs nonzero z1, z2, t")
    u = z1 * reciprocal(z2)
    p1, p2 = OperatorParams(z1, t), OperatorParams(z2, t)

    def idx(a, b, j):
        return 4 * a + 2 * b + j

    states = [(a, b, j) for a in (0, 1) for b in (0, 1) for j in (0, 1)]
    R = [[0] * 8 for _ in range(8)]
    La = [[0] * 8 for _ in range(8)]
    Lb = [[0] * 8 for _ in range(8)]
    for (a, b, j) in states:
        for (a2, b2, j2) in states:
            o, i = idx(a2, b2, j2), idx(a, b, j)
            if j == j2:
                R[o][i] = r(a, b, a2, b2, u, t)
            if b == b2:
                La[o][i] = l_weight("first", "plain", a, j, a2, j2, p1)
            if a == a2:
                Lb[o][i] = l_weight("first", "plain", b, j, b2, j2, p2)
    lhs = _mat_mul(R, _mat_mul(La, Lb))
    rhs = _mat_mul(Lb, _mat_mul(La, R))
    return lhs, rhs


def check_yang_baxter(z1, z2, t, r=r_weight) -> bool:
    lhs, rhs = yang_baxter_sides(z1, z2, t, r)
    return all(lhs[i][j] == rhs[i][j] for i in range(8) for j in range(8))


def identity_r():
    """4x4 identity in place of the R-matrix; used as a negative control."""
    return _identity_r
