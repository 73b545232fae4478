"""Seeded verification suites: each enumerates configurations, evaluates two sides exactly, records mismatches."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Iterator, Sequence

from . import lattice
from .closed_forms import (
    a9_sides,
    double_row_me_closed,
    five_vertex_me_closed,
    me_A_closed,
    me_Atilde_closed,
    me_B_closed,
    me_Btilde_closed,
    monomial_A,
    monomial_Atilde,
    monomial_B,
    monomial_Btilde,
)
from .exact import LaurentT, format_scalar, laurent_exponent_range, power, rat_det
from .lattice import OccupationState, OperatorParams, OperatorSpec, StateVector
from .schur import deformation_factor, factorial_sp, sp, weyl_denominator
from .wavefunctions import (
    Config,
    all_configs,
    config_state,
    config_to_partition,
    dual_wavefunction,
    n_particle_state,
)

GENERATOR = "python random.Random (MT19937)"
BOUND = 1000
MAX_REJECTIONS = 1000
M_MAX_CAP = 10


# ---------------------------------------------------------------------------
# sampling


class SamplingError(RuntimeError):
    pass


def random_rational(rng: random.Random, bound: int = BOUND) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def sample_point(rng: random.Random, n: int, constraint: Callable[[list], bool] | None = None,
                 bound: int = BOUND) -> list[Fraction]:
    """Draw ``n`` rationals, resampling until ``constraint`` accepts them."""
    for _ in range(MAX_REJECTIONS):
        point = [random_rational(rng, bound) for _ in range(n)]
        if constraint is None or constraint(point):
            return point
    raise SamplingError(f"{MAX_REJECTIONS} consecutive rejections; constraint is probably unsatisfiable")


def admissible_zs(zs: Sequence) -> bool:
    """z not in {0, 1, -1} and z_i != z_j^(+-1) for i != j."""
    if any(z in (0, 1, -1) for z in zs):
        return False
    for i in range(len(zs)):
        for j in range(i + 1, len(zs)):
            if zs[i] in (zs[j], 1 / zs[j]):
                return False
    return True


def generic_t(t) -> bool:
    return t not in (0, -1)


# ---------------------------------------------------------------------------
# reports


@dataclass
class Failure:
    instance: str
    point: str
    lhs: str
    rhs: str

    def to_dict(self):
        return {"instance": self.instance, "point": self.point, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class Report:
    suite: str
    seed: int
    instances_checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed_ms: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_dict(self):
        return {
            "suite": self.suite,
            "seed": self.seed,
            "instances_checked": self.instances_checked,
            "failures": [f.to_dict() for f in self.failures],
            "elapsed_ms": self.elapsed_ms,
        }

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [
            f"suite     {self.suite}",
            f"seed      {self.seed}  ({GENERATOR})",
            f"instances {self.instances_checked}",
            f"failures  {len(self.failures)}",
            f"elapsed   {self.elapsed_ms:.1f} ms",
            f"result    {status}",
        ]
        lines += [f"note      {n}" for n in self.notes]
        for f in self.failures[:20]:
            lines.append(f"  FAIL {f.instance} @ {f.point}\n    lhs = {f.lhs}\n    rhs = {f.rhs}")
        if len(self.failures) > 20:
            lines.append(f"  ... {len(self.failures) - 20} more")
        return "\n".join(lines)


@dataclass(frozen=True)
class SuiteSpec:
    suite: str
    m_max: int | None = None
    n_max: int | None = None
    trials: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES)}")
        if self.trials is not None and self.trials < 1:
            raise ValueError("trials must be >= 1")
        for name in ("m_max", "n_max"):
            v = getattr(self, name)
            if v is not None and not 0 <= v <= M_MAX_CAP:
                raise ValueError(f"{name} must lie in [0, {M_MAX_CAP}], got {v}")


@dataclass(frozen=True)
class Check:
    """One instance: a description, the sampled point, and (label, lhs, rhs) comparisons."""

    instance: str
    point: str
    comparisons: tuple


def _fmt_point(**kw) -> str:
    parts = []
    for k, v in kw.items():
        if isinstance(v, (list, tuple)):
            parts.append(f"{k}=[{', '.join(format_scalar(x) for x in v)}]")
        else:
            parts.append(f"{k}={format_scalar(v)}")
    return " ".join(parts)


def _sizes(m_max: int, n_max: int) -> Iterator[tuple[int, int]]:
    for m in range(1, m_max + 1):
        for n in range(1, min(n_max, m) + 1):
            yield m, n


# ---------------------------------------------------------------------------
# suites; each takes (rng, m_max, n_max, trials, report) and yields Checks


def suite_ybe(rng, m_max, n_max, trials, report):
    for i in range(trials):
        z1, z2, t = sample_point(rng, 3, lambda p: p[0] != 0 and p[1] != 0 and p[2] != 0 and p[0] != p[1])
        lhs, rhs = lattice.yang_baxter_sides(z1, z2, t)
        comps = []
        for r in range(8):
            for c in range(8):
                if lhs[r][c] != rhs[r][c]:
                    comps.append((f"entry ({r},{c})", lhs[r][c], rhs[r][c]))
        if not comps:
            comps.append(("8x8", 0, 0))
        yield Check(f"trial {i}", _fmt_point(z1=z1, z2=z2, t=t), tuple(comps))


def _character_point(rng, n, m=None, dual=False, factorial=False):
    def ok(p):
        zs, t = p[:n], p[n]
        if not admissible_zs(zs) or not generic_t(t):
            return False
        if dual and not admissible_zs([t * z for z in zs]):
            return False
        return True
    extra = (m + 1) if factorial else 0
    p = sample_point(rng, n + 1 + extra, ok)
    return p[:n], p[n], p[n + 1:]


def suite_wavefunction(rng, m_max, n_max, trials, report):
    for m, n in _sizes(m_max, n_max):
        for trial in range(trials):
            zs, t, _ = _character_point(rng, n)
            psi = n_particle_state(m, zs, t)
            d = deformation_factor(zs, t)
            for c in all_configs(m, n):
                lam = config_to_partition(c)
                yield Check(f"M={m} N={n} x={c.positions} trial={trial}", _fmt_point(z=zs, t=t),
                            (("wavefunction", psi.coefficient(config_state(c)), d * sp(lam.parts, zs)),))


def suite_dual_wavefunction(rng, m_max, n_max, trials, report):
    for m, n in _sizes(m_max, n_max):
        for trial in range(trials):
            zs, t, _ = _character_point(rng, n, dual=True)
            tz = [t * z for z in zs]
            pref = t ** (n * (m - n)) * deformation_factor(zs, t)
            for c in all_configs(m, n, "holes"):
                lam = config_to_partition(c)
                yield Check(f"M={m} N={n} xbar={c.positions} trial={trial}", _fmt_point(z=zs, t=t),
                            (("dual wavefunction", dual_wavefunction(m, zs, t, c), pref * sp(lam.parts, tz)),))


def suite_factorial_wavefunction(rng, m_max, n_max, trials, report):
    for m, n in _sizes(m_max, n_max):
        for trial in range(trials):
            zs, t, alphas = _character_point(rng, n, m, factorial=True)
            psi = n_particle_state(m, zs, t, "inhom", alphas)
            psi0 = n_particle_state(m, zs, t, "inhom", [0] * (m + 1))
            psi_plain = n_particle_state(m, zs, t)
            d = deformation_factor(zs, t)
            for c in all_configs(m, n):
                lam = config_to_partition(c).parts
                s = config_state(c)
                yield Check(f"M={m} N={n} x={c.positions} trial={trial}", _fmt_point(z=zs, t=t, alpha=alphas), (
                    ("factorial wavefunction", psi.coefficient(s), d * factorial_sp(lam, zs, alphas)),
                    ("alpha=0 vs plain", psi0.coefficient(s), psi_plain.coefficient(s)),
                    ("alpha=0 vs sp", d * factorial_sp(lam, zs, [0] * (m + 1)), d * sp(lam, zs)),
                ))


def suite_factorial_dual(rng, m_max, n_max, trials, report):
    for m, n in _sizes(m_max, n_max):
        for trial in range(trials):
            zs, t, alphas = _character_point(rng, n, m, dual=True, factorial=True)
            tz = [t * z for z in zs]
            neg = [-a for a in alphas]
            zero = [0] * (m + 1)
            pref = t ** (n * (m - n)) * deformation_factor(zs, t)
            for c in all_configs(m, n, "holes"):
                lam = config_to_partition(c).parts
                yield Check(f"M={m} N={n} xbar={c.positions} trial={trial}", _fmt_point(z=zs, t=t, alpha=alphas), (
                    ("factorial dual wavefunction", dual_wavefunction(m, zs, t, c, "inhom", alphas),
                     pref * factorial_sp(lam, tz, neg)),
                    ("alpha=0 vs plain", dual_wavefunction(m, zs, t, c, "inhom", zero),
                     dual_wavefunction(m, zs, t, c)),
                ))


def suite_inverse_t_polynomial(rng, m_max, n_max, trials, report):
    tsym = LaurentT.t()
    lowest = {}
    for m, n in _sizes(m_max, n_max):
        for trial in range(trials):
            zs = sample_point(rng, n, admissible_zs)

            def t_ok(p):
                return all(generic_t(x) and deformation_factor(zs, x, primed=True) != 0 for x in p) and p[0] != p[1]

            t1, t2 = sample_point(rng, 2, t_ok)
            target = sp  # ratio must equal sp_lambda(z) for every t
            for c in all_configs(m, n, "holes"):
                q = tsym ** n * dual_wavefunction(m, zs, tsym, c, "primed")
                lo, hi = laurent_exponent_range(q)
                lowest[n] = min(lowest.get(n, 0), lo)
                r1 = q(t1) / deformation_factor(zs, t1, primed=True)
                r2 = q(t2) / deformation_factor(zs, t2, primed=True)
                lam = config_to_partition(c).parts
                yield Check(f"M={m} N={n} xbar={c.positions} trial={trial}", _fmt_point(z=zs, t1=t1, t2=t2), (
                    ("max t-exponent <= 0", min(hi, 0), hi),
                    ("ratio t-independent", r1, r2),
                    ("ratio equals sp", r1, target(lam, zs)),
                ))
    for n, lo in sorted(lowest.items()):
        report.notes.append(f"N={n}: lowest t-exponent {lo} (degree {-lo} in 1/t; N^2 = {n * n})")


def suite_free_fermion_alternant(rng, m_max, n_max, trials, report):
    minus_one = Fraction(-1)
    for m, n in _sizes(m_max, n_max):
        for trial in range(trials):
            zs = sample_point(rng, n, admissible_zs)
            sign = (-1) ** (n * (n - 1) // 2)
            dprime = deformation_factor(zs, minus_one, primed=True)
            for c in all_configs(m, n, "holes"):
                lam = config_to_partition(c).parts
                w = dual_wavefunction(m, zs, minus_one, c, "primed")
                numer = rat_det([[z ** (lam[k] + n - k) - z ** -(lam[k] + n - k) for k in range(n)] for z in zs])
                yield Check(f"M={m} N={n} xbar={c.positions} trial={trial}", _fmt_point(z=zs), (
                    ("t=-1 determinant", w, sign * numer),
                    ("t=-1 ratio equals sp", (-1) ** n * w / dprime, sp(lam, zs)),
                ))


def single_double_row_rhs(z, t, xbar: int):
    return (1 + z * z / t) / (t * z) * (z ** xbar - z ** -xbar) / (z - 1 / z)


def suite_single_hole(rng, m_max, n_max, trials, report):
    for m in range(1, m_max + 1):
        for trial in range(trials):
            z, t = sample_point(rng, 2, lambda p: admissible_zs(p[:1]) and generic_t(p[1]))
            full = OccupationState.full(m)
            dr = OperatorSpec("DoubleRowB", "primed", OperatorParams(z, t))
            for xb in range(1, m + 1):
                ket = config_state(Config(m, (xb,), "holes"))
                out = lattice.apply(dr, StateVector.basis(ket))
                comps = [("single double-row element", out.coefficient(full), single_double_row_rhs(z, t, xb))]
                if m <= 6:
                    comps += list(_boundary_elements(m, xb, z, t))
                yield Check(f"M={m} xbar={xb} trial={trial}", _fmt_point(z=z, t=t), tuple(comps))


def _boundary_elements(m, xb, z, t):
    full = OccupationState.full(m)
    p = OperatorParams(z, t)

    def me(kind, bra, ket):
        return lattice.matrix_element(bra, OperatorSpec(kind, "primed", p), ket)

    ket = config_state(Config(m, (xb,), "holes"))
    yield ("<1^M|Btilde'|x> = z^(x-1)", me("Btilde", full, ket), power(z, xb - 1))
    yield ("<x|A'|x> = 1/t", me("A", ket, ket), 1 / t)
    yield ("<1^M|Atilde'|1^M> = 1", me("Atilde", full, full), 1)
    yield ("<1^M|B'|x> = z^(1-x)/t", me("B", full, ket), power(z, 1 - xb) / t)
    for yb in range(1, xb):
        bra = config_state(Config(m, (yb,), "holes"))
        yield (f"<{yb}|A'|x> = (t+1)/t z^(y-x)", me("A", bra, ket), (t + 1) / t * power(z, yb - xb))


def suite_weyl_denominator(rng, m_max, n_max, trials, report):
    for n in range(1, n_max + 1):
        for trial in range(trials):
            zs = sample_point(rng, n, admissible_zs)
            w = weyl_denominator(zs)
            yield Check(f"N={n} trial={trial}", _fmt_point(z=zs), (("factorization", w.determinant, w.factored),))


_SINGLE_ROW = {
    "A": (me_A_closed, 0),
    "B": (me_B_closed, 1),
    "Atilde": (me_Atilde_closed, 0),
    "Btilde": (me_Btilde_closed, 1),
}

WORKED_EXAMPLES = [
    # kind, M, bra holes, ket holes, (t+1)-power, t-power, z-power
    ("A", 15, (3, 5, 8, 11), (3, 6, 11, 13), 2, 6, -6),
    ("B", 10, (3, 6), (1, 6, 8), 1, 3, -5),
    ("Atilde", 15, (2, 5, 10, 13), (2, 8, 10, 15), 2, 3, 5),
    ("Btilde", 10, (5, 8), (3, 5, 10), 1, 3, 4),
]

_MONOMIALS = {"A": monomial_A, "B": monomial_B, "Atilde": monomial_Atilde, "Btilde": monomial_Btilde}


def suite_row_closed_forms(rng, m_max, n_max, trials, report, double_m_max=5, double_n_max=2):
    tsym = LaurentT.t()
    for kind, m, x, y, a, b, c in WORKED_EXAMPLES:
        z = Fraction(3, 7)
        closed = _SINGLE_ROW[kind][0](Config(m, x, "holes"), Config(m, y, "holes"), z, tsym)
        lat = lattice.matrix_element(config_state(Config(m, x, "holes")),
                                     OperatorSpec(kind, "plain", OperatorParams(z, tsym)),
                                     config_state(Config(m, y, "holes")))
        expected = (tsym + 1) ** a * tsym ** b * power(z, c)
        mono = _MONOMIALS[kind](x, y, m)
        yield Check(f"worked example {kind} M={m} {x} {y}", _fmt_point(z=z, t=tsym), (
            ("exponents", str(tuple(mono)), str((a, b, c))),
            ("closed form", closed, expected),
            ("lattice", lat, expected),
        ))
    for m in range(1, m_max + 1):
        for kind, (fn, charge) in _SINGLE_ROW.items():
            for trial in range(trials):
                z, t = sample_point(rng, 2, lambda p: p[0] != 0)
                spec = OperatorSpec(kind, "plain", OperatorParams(z, t))
                for n in range(0, m + 1 - charge):
                    for ket in all_configs(m, n + charge, "holes"):
                        out = lattice.apply(spec, StateVector.basis(config_state(ket)))
                        for bra in all_configs(m, n, "holes"):
                            yield Check(f"{kind} M={m} <{bra.positions}|{ket.positions}> trial={trial}",
                                        _fmt_point(z=z, t=t),
                                        (("closed vs lattice", fn(bra, ket, z, t), out.coefficient(config_state(bra))),))
    for m in range(1, min(m_max, double_m_max) + 1):
        for trial in range(trials):
            z, t = sample_point(rng, 2, lambda p: p[0] != 0)
            spec = OperatorSpec("DoubleRowB", "plain", OperatorParams(z, t))
            for n in range(0, min(double_n_max, m - 1) + 1):
                for ket in all_configs(m, n + 1, "holes"):
                    out = lattice.apply(spec, StateVector.basis(config_state(ket)))
                    for bra in all_configs(m, n, "holes"):
                        yield Check(f"DoubleRowB M={m} <{bra.positions}|{ket.positions}> trial={trial}",
                                    _fmt_point(z=z, t=t),
                                    (("closed vs lattice", double_row_me_closed(bra, ket, z, t),
                                      out.coefficient(config_state(bra))),))


def suite_interlacing_sum(rng, m_max, n_max, trials, report):
    for m, n in _sizes(m_max, n_max):
        for trial in range(trials):
            zs, t, _ = _character_point(rng, n, dual=True)
            for c in all_configs(m, n, "holes"):
                lam = config_to_partition(c).parts
                lhs, rhs = a9_sides(m, zs, t, lam)
                yield Check(f"M={m} N={n} lambda={lam} trial={trial}", _fmt_point(z=zs, t=t),
                            (("interlacing sum vs character", lhs, rhs),
                             ("interlacing sum vs lattice", lhs, dual_wavefunction(m, zs, t, c))))


def suite_five_vertex(rng, m_max, n_max, trials, report):
    minus_one = Fraction(-1)
    charges = {"A": 0, "B": 1, "Atilde": 0, "Btilde": 1, "DoubleRowB": 1}
    for m in range(1, m_max + 1):
        for trial in range(trials):
            z = sample_point(rng, 1, lambda p: p[0] != 0)[0]
            for kind, charge in charges.items():
                spec = OperatorSpec(kind, "primed", OperatorParams(z, minus_one))
                for n in range(0, m + 1 - charge):
                    for ket in all_configs(m, n + charge, "holes"):
                        out = lattice.apply(spec, StateVector.basis(config_state(ket)))
                        for bra in all_configs(m, n, "holes"):
                            yield Check(f"{kind}' M={m} <{bra.positions}|{ket.positions}> trial={trial}",
                                        _fmt_point(z=z),
                                        (("t=-1 closed vs lattice", five_vertex_me_closed(kind, bra, ket, z),
                                          out.coefficient(config_state(bra))),))


# name -> (runner, default m_max, default n_max, default trials, description)
SUITES = {
    "ybe": (suite_ybe, 0, 0, 100, "Yang-Baxter relation, 8x8 exact matrices"),
    "thm-3-2": (suite_wavefunction, 6, 3, 3, "wavefunction = deformation factor x sp_lambda(z)"),
    "thm-4-1": (suite_dual_wavefunction, 6, 3, 3, "dual wavefunction = t^{N(M-N)} x deformation factor x sp_lambda(tz)"),
    "thm-5-2": (suite_factorial_wavefunction, 6, 3, 3, "inhomogeneous wavefunction = factorial sp; alpha=0 reduction"),
    "thm-5-3": (suite_factorial_dual, 6, 3, 3, "inhomogeneous dual wavefunction = factorial sp(tz | -alpha)"),
    "lemma-4-2": (suite_inverse_t_polynomial, 5, 2, 1, "primed dual wavefunction is polynomial in 1/t; ratio t-independent"),
    "lemma-4-3": (suite_free_fermion_alternant, 6, 3, 3, "t = -1 dual wavefunction is a signed alternant"),
    "eq-4-20": (suite_single_hole, 8, 1, 3, "single double-row element and boundary elements"),
    "eq-4-37": (suite_weyl_denominator, 0, 4, 10, "Weyl denominator factorization"),
    "appendix-a": (suite_row_closed_forms, 6, 2, 2, "closed-form row operator elements vs lattice"),
    "cor-a-9": (suite_interlacing_sum, 5, 2, 3, "interlacing-sum identity"),
    "five-vertex": (suite_five_vertex, 5, 5, 1, "t = -1 closed forms vs primed lattice operators"),
}


def expected_instance_count(suite: str, m_max: int, n_max: int, trials: int) -> int:
    """Instances a character suite visits: sum over M, N of C(M, N) * trials."""
    return sum(comb(m, n) for m, n in _sizes(m_max, n_max)) * trials


def iter_checks(spec: SuiteSpec, report: Report) -> Iterable[Check]:
    runner, m_def, n_def, t_def, _ = SUITES[spec.suite]
    m_max = spec.m_max if spec.m_max is not None else m_def
    n_max = spec.n_max if spec.n_max is not None else n_def
    trials = spec.trials if spec.trials is not None else t_def
    rng = random.Random(spec.seed)
    return runner(rng, m_max, n_max, trials, report)


def run_suite(spec: SuiteSpec) -> Report:
    report = Report(spec.suite, spec.seed)
    start = time.perf_counter()
    checks = iter_checks(spec, report)
    while True:
        try:
            check = next(checks)
        except StopIteration:
            break
        except (ArithmeticError, ValueError) as exc:
            report.failures.append(Failure("suite aborted", "", type(exc).__name__, str(exc)))
            break
        report.instances_checked += 1
        for label, lhs, rhs in check.comparisons:
            if lhs != rhs:
                report.failures.append(Failure(f"{check.instance} [{label}]", check.point,
                                               format_scalar(lhs) if not isinstance(lhs, str) else lhs,
                                               format_scalar(rhs) if not isinstance(rhs, str) else rhs))
    report.elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
    return report
