import json

import pytest

import hyspec


def test_ring_basics():
    r = hyspec.Ring("Z12")
    assert r.size() == 12
    assert r.add(7, 8) == 3
    assert r.mul(4, 5) == 8
    assert not r.is_regular()
    assert r.is_arithmetical()


def test_lattice_and_primes():
    r = hyspec.Ring("Z12")
    ideals = r.ideals()
    assert len(ideals) == 6
    primes = r.primes()
    assert sorted(map(sorted, primes)) == [
        [0, 2, 4, 6, 8, 10],
        [0, 3, 6, 9],
    ]


def test_hy_operations():
    r = hyspec.Ring("Z12")
    y = [0, 1]  # all of Spec
    assert sorted(r.hy_closure([0], y)) == [0, 6]
    assert sorted(r.strong_hy_closure([4], y)) == [0, 2, 4, 6, 8, 10]
    assert r.is_hy([6], y)
    assert not r.is_hy([4], y)
    assert r.is_fixed([4], y)
    assert not r.is_relative([4], y)
    assert r.is_relative([0], y)
    assert sorted(r.greatest_factor([0], y)) == [0, 4, 8]


def test_parse_error():
    with pytest.raises(hyspec.HyspecError):
        hyspec.Ring("Q12")


def test_verify_default_corpus():
    report = json.loads(hyspec.verify(hyspec.default_corpus()))
    assert report["summary"]["fail"] == 0
    assert report["summary"]["pass"] > 0
    assert len(hyspec.registry_ids()) == 59
