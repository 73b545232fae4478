import json
import random
from fractions import Fraction

import pytest

from symplectic_ice import cli, lattice
from symplectic_ice.verify import (
    SamplingError, SuiteSpec, admissible_zs, expected_instance_count, run_suite, sample_point,
)


def test_sampling_is_deterministic():
    a = [sample_point(random.Random(11), 3) for _ in range(5)]
    b = [sample_point(random.Random(11), 3) for _ in range(5)]
    assert a == b


def test_sampling_bounds_and_rejection():
    rng = random.Random(3)
    for _ in range(10_000):
        (x,) = sample_point(rng, 1, lambda p: p[0] != 0)
        assert x != 0
        assert abs(x.numerator) <= 1000 and x.denominator <= 1000


def test_pairwise_constraint():
    rng = random.Random(5)
    for _ in range(200):
        zs = sample_point(rng, 3, admissible_zs)
        assert all(zs[i] not in (zs[j], 1 / zs[j]) for i in range(3) for j in range(i + 1, 3))


def test_unsatisfiable_constraint_signals():
    with pytest.raises(SamplingError):
        sample_point(random.Random(0), 1, lambda p: False)


def test_instance_count_and_reproducibility():
    spec = SuiteSpec("thm-3-2", m_max=4, n_max=2, trials=2, seed=7)
    r1, r2 = run_suite(spec), run_suite(spec)
    assert r1.passed
    assert r1.instances_checked == expected_instance_count("thm-3-2", 4, 2, 2) == 40
    d1, d2 = r1.to_json_dict(), r2.to_json_dict()
    d1.pop("elapsed_ms"), d2.pop("elapsed_ms")
    assert d1 == d2


def test_json_fields_exact():
    r = run_suite(SuiteSpec("eq-4-37", n_max=2, trials=2, seed=1))
    assert set(r.to_json_dict()) == {"suite", "seed", "instances_checked", "failures", "elapsed_ms"}


def test_spec_validation():
    with pytest.raises(ValueError):
        SuiteSpec("nope")
    with pytest.raises(ValueError):
        SuiteSpec("ybe", trials=0)
    with pytest.raises(ValueError):
        SuiteSpec("thm-3-2", m_max=11)


def test_corrupted_weight_is_caught(monkeypatch):
    original = lattice.l_weight

    def corrupted(kind, variant, a_in, s_in, a_out, s_out, params, site=None):
        w = original(kind, variant, a_in, s_in, a_out, s_out, params, site)
        return w + 1 if (kind, variant, a_in, s_in, a_out, s_out) == ("first", "plain", 0, 0, 0, 0) else w

    monkeypatch.setattr(lattice, "l_weight", corrupted)
    r = run_suite(SuiteSpec("thm-3-2", m_max=3, n_max=2, trials=1, seed=0))
    assert r.failures and all(f.lhs != f.rhs for f in r.failures)


@pytest.mark.parametrize("argv, out", [
    ("eval wavefunction --m 1 --n 1 --x 1 --z 2 --t 3", "13/2"),
    ("eval sp --lambda 0 --z 5", "1"),
    ("eval sp --lambda 1 --z 2", "5/2"),
    ("eval me-closed --kind B --m 10 --xbar 3,6 --ybar 1,6,8 --z 1 --t t", "1*t^3 + 1*t^4"),
    ("eval factorial-sp --lambda 1 --z 2 --alphas 0,0", "5/2"),
    ("eval double-row-me --m 1 --xbar , --ybar 1 --z 2 --t 3", "13/2"),
])
def test_eval(capsys, argv, out):
    assert cli.main(argv.split()) == 0
    assert capsys.readouterr().out.strip() == out


@pytest.mark.parametrize("argv", [
    "eval sp --lambda 1",
    "eval sp --lambda 1 --z x",
    "verify nope",
    "verify ybe --trials 0",
    "frobnicate",
])
def test_usage_errors(capsys, argv):
    assert cli.main(argv.split()) == 2


def test_verify_json_and_failure_exit(capsys, monkeypatch):
    assert cli.main("verify ybe --trials 3 --seed 2 --json".split()) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["instances_checked"] == 3 and doc["failures"] == []
    monkeypatch.setattr(lattice, "r_weight", lambda *a: 0)
    monkeypatch.setattr(lattice, "yang_baxter_sides", lambda z1, z2, t: ([[1] * 8] * 8, [[0] * 8] * 8))
    assert cli.main("verify ybe --trials 1".split()) == 1
    assert "FAIL" in capsys.readouterr().out


def test_list_suites(capsys):
    assert cli.main(["list-suites"]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 12


def test_full_default_run_is_clean():
    from symplectic_ice.verify import SUITES
    for name in SUITES:
        r = run_suite(SuiteSpec(name, seed=123))
        assert r.passed, r.to_text()
