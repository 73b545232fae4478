from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from symplectic_ice.exact import LaurentT, laurent_eval
from symplectic_ice.schur import deformation_factor, sp
from symplectic_ice.wavefunctions import (
    Config, YoungDiagram, all_configs, config_state, config_to_partition, dual_wavefunction, partition_to_config,
    wavefunction,
)


@st.composite
def configs(draw, role="particles"):
    m = draw(st.integers(1, 8))
    pos = draw(st.sets(st.integers(1, m), max_size=m))
    return Config(m, tuple(sorted(pos)), role)


@given(configs())
def test_partition_round_trip(c):
    lam = config_to_partition(c)
    assert partition_to_config(lam, c.m) == c
    assert all(a >= b >= 0 for a, b in zip(lam.parts, lam.parts[1:] + (0,)))


def test_partition_convention():
    # x = (2, 5) on 6 sites: lambda_j = x_{N+1-j} - N + j - 1
    assert config_to_partition(Config(6, (2, 5))).parts == (3, 1)
    with pytest.raises(ValueError):
        partition_to_config((5, 0), 4)


def test_config_validation():
    with pytest.raises(ValueError):
        Config(3, (2, 2))
    with pytest.raises(ValueError):
        Config(3, (4,))
    with pytest.raises(ValueError):
        Config(3, (1,), "spins")
    with pytest.raises(ValueError):
        YoungDiagram((1, 2))


def test_hole_state_is_complement():
    assert config_state(Config(4, (1, 3), "holes")).bits == 0b1010
    assert len(list(all_configs(5, 2))) == 10


def test_one_site():
    z, t = Fraction(2), Fraction(3)
    assert wavefunction(1, [z], t, Config(1, (1,))) == Fraction(13, 2)


def test_symbolic_t_agrees_with_substitution():
    zs = [Fraction(2), Fraction(-1, 3)]
    c = Config(4, (1, 3), "holes")
    sym = dual_wavefunction(4, zs, LaurentT.t(), c)
    t0 = Fraction(5, 7)
    assert laurent_eval(sym, t0) == dual_wavefunction(4, zs, t0, c)


def test_two_particles_on_three_sites():
    zs, t = [Fraction(3), Fraction(-2, 5)], Fraction(4, 9)
    for c in all_configs(3, 2):
        lam = config_to_partition(c).parts
        assert wavefunction(3, zs, t, c) == deformation_factor(zs, t) * sp(lam, zs)


def test_role_mismatch():
    with pytest.raises(ValueError):
        wavefunction(2, [Fraction(2)], 1, Config(2, (1,), "holes"))
    with pytest.raises(ValueError):
        dual_wavefunction(3, [Fraction(2)], 1, Config(2, (1,), "holes"))
