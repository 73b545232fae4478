from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from symplectic_ice.closed_forms import (
    Monomial, a9_sides, double_row_me_closed, dual_wavefunction_sum, five_vertex_me_closed, me_A_closed,
    me_Atilde_closed, me_B_closed, me_Btilde_closed, monomial_A, monomial_Atilde, monomial_B, monomial_Btilde,
)
from symplectic_ice.exact import LaurentT
from symplectic_ice.lattice import OperatorParams, OperatorSpec, StateVector, apply
from symplectic_ice.wavefunctions import Config, all_configs, config_state, dual_wavefunction

CLOSED = {"A": (me_A_closed, 0), "B": (me_B_closed, 1), "Atilde": (me_Atilde_closed, 0), "Btilde": (me_Btilde_closed, 1)}


@pytest.mark.parametrize("fn, m, x, y, expected", [
    (monomial_A, 15, (3, 5, 8, 11), (3, 6, 11, 13), (2, 6, -6)),
    (monomial_B, 10, (3, 6), (1, 6, 8), (1, 3, -5)),
    (monomial_Atilde, 15, (2, 5, 10, 13), (2, 8, 10, 15), (2, 3, 5)),
    (monomial_Btilde, 10, (5, 8), (3, 5, 10), (1, 3, 4)),
])
def test_worked_examples(fn, m, x, y, expected):
    assert fn(x, y, m) == Monomial(*expected)


def test_non_interlacing_pairs_vanish():
    assert monomial_A((1, 2), (3, 4), 4) is None
    assert me_B_closed(Config(4, (3,), "holes"), Config(4, (1, 2), "holes"), 2, 3) == 0


def _lattice_elements(kind, variant, z, t, m, charge):
    spec = OperatorSpec(kind, variant, OperatorParams(z, t))
    for n in range(0, m + 1 - charge):
        for ket in all_configs(m, n + charge, "holes"):
            out = apply(spec, StateVector.basis(config_state(ket)))
            for bra in all_configs(m, n, "holes"):
                yield bra, ket, out.coefficient(config_state(bra))


@pytest.mark.parametrize("kind", list(CLOSED))
@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_single_row_symbolic_t(kind, m):
    fn, charge = CLOSED[kind]
    z, t = Fraction(-7, 3), LaurentT.t()
    for bra, ket, value in _lattice_elements(kind, "plain", z, t, m, charge):
        assert fn(bra, ket, z, t) == value, (bra, ket)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_double_row_symbolic_t(m):
    z, t = Fraction(5, 2), LaurentT.t()
    for bra, ket, value in _lattice_elements("DoubleRowB", "plain", z, t, m, 1):
        assert double_row_me_closed(bra, ket, z, t) == value, (bra, ket)


def test_double_row_pair_need_not_interlace():
    # (1) and (2, 3) do not interlace, yet the element is nonzero
    z, t = Fraction(2), Fraction(3)
    bra, ket = Config(3, (1,), "holes"), Config(3, (2, 3), "holes")
    value = double_row_me_closed(bra, ket, z, t)
    assert value != 0
    spec = OperatorSpec("DoubleRowB", "plain", OperatorParams(z, t))
    assert apply(spec, StateVector.basis(config_state(ket))).coefficient(config_state(bra)) == value


@pytest.mark.parametrize("kind, charge", [("A", 0), ("Atilde", 0), ("B", 1), ("Btilde", 1), ("DoubleRowB", 1)])
def test_free_fermion_point(kind, charge):
    z = Fraction(4, 3)
    for m in range(1, 6):
        for bra, ket, value in _lattice_elements(kind, "primed", z, Fraction(-1), m, charge):
            assert five_vertex_me_closed(kind, bra, ket, z) == value


@given(st.integers(1, 4), st.data())
def test_chain_sum_matches_lattice(m, data):
    n = data.draw(st.integers(1, min(m, 2)))
    holes = tuple(sorted(data.draw(st.sets(st.integers(1, m), min_size=n, max_size=n))))
    zs = [Fraction(2), Fraction(-3, 4)][:n]
    t = Fraction(5, 3)
    assert dual_wavefunction_sum(m, zs, t, holes) == dual_wavefunction(m, zs, t, Config(m, holes, "holes"))


def test_interlacing_identity():
    lhs, rhs = a9_sides(4, [Fraction(3), Fraction(-1, 2)], Fraction(2, 7), (1, 0))
    assert lhs == rhs


def test_site_mismatch_and_unknown_kind():
    with pytest.raises(ValueError):
        me_A_closed(Config(3, (1,), "holes"), Config(4, (1,), "holes"), 1, 1)
    with pytest.raises(ValueError):
        five_vertex_me_closed("C", (1,), (1,), 2)
