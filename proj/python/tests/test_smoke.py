from fractions import Fraction

import pytest

import jmclass


def test_partitions():
    assert jmclass.partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(jmclass.partitions_of(10)) == 42


def test_jucys():
    e = jmclass.expand("e", 2, 4)
    assert {mu for mu, c in e.items() if c} == {(3, 1), (2, 2)}
    assert e[(3, 1)] == {(0, 0): 1}


def test_engine_matches_oracle():
    for family in ("p", "h", "hl"):
        for k in range(1, 4):
            assert jmclass.expand(family, k, 5) == jmclass.oracle(family, k, 5)
    assert jmclass.expand("hook", 2, 5, l=1) == jmclass.oracle("hook", 2, 5, l=1)


def test_reduced_hl():
    r = jmclass.reduced("hl", 2)
    assert r[(3,)] == {(0, 0): 2, (1, 0): -1}
    assert r[(2, 2)] == {(0, 0): 1, (1, 0): -1}
    assert r[(1, 1)] == {(0, 0): 1}


def test_jack():
    r = jmclass.reduced("jack_p", 2)
    assert r[(2,)] == {(0, 1): 1, (0, 0): -1}


def test_characters_and_moments():
    assert jmclass.character((2, 1), (3,)) == -1
    assert jmclass.central_character((2, 1), (3,)) == -1
    assert jmclass.moment((3, 2, 1), 2) == 6
    assert jmclass.moment((2, 1), 3) == 0


def test_catalan():
    assert jmclass.gen_catalan(2) == {(0, 0): 2, (1, 0): -1}
    for method in ("defsum", "rec", "alt1", "alt2", "hl_spec"):
        assert jmclass.gen_catalan(6, method) == jmclass.gen_catalan(6)


def test_series():
    phi = jmclass.phi_series("p", (2,), 6)
    assert phi[1] == {(0, 0): 1}
    assert phi[3] == {(0, 0): Fraction(1, 6)}
    assert jmclass.psi_series("hl", (2, 2), 6)[4]  # nonzero for general z


def test_verify_and_cli():
    report = jmclass.verify("jack", max_n=3, max_k=2)
    assert report["failed"] == 0 and report["passed"] > 0
    code, out, _ = jmclass.run_cli(["catalan", "--max-r", "3"])
    assert code == 0
    assert out.splitlines()[-1] == "3\tz^2 - 5*z + 5"
    assert jmclass.run_cli(["expand", "--bogus"])[0] == 2


def test_errors():
    with pytest.raises(ValueError):
        jmclass.expand("schur", 2, 4)
    with pytest.raises(ValueError):
        jmclass.character((1, 2), (3,))
    with pytest.raises(jmclass.GuardRailError):
        jmclass.oracle("p", 1, 9)
