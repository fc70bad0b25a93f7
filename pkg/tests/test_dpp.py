import pytest

from asmdpp.dpp import (Dpp, dpp_dagger, dpp_star, dpp_stats, enumerate_dpps,
                        validate_dpp)
from asmdpp.utils import AsmDppError


def test_validate(example_dpp):
    assert validate_dpp([], 4).rows == ()
    assert example_dpp.lengths == (5, 3, 1)
    assert example_dpp.part(2, 3) == 4
    assert example_dpp.part(2, 1) is None
    with pytest.raises(AsmDppError):
        validate_dpp([[2, 2]], 3)
    with pytest.raises(AsmDppError):
        validate_dpp([[4]], 3)
    with pytest.raises(AsmDppError):
        validate_dpp([[3, 3], [3]], 3)


def test_enumerate_small(dpps_3):
    assert [d.rows for d in enumerate_dpps(1)] == [()]
    assert {d.rows for d in enumerate_dpps(3)} == {d.rows for d in dpps_3}


def test_counts():
    for n, expected in enumerate([1, 2, 7, 42, 429], start=1):
        assert sum(1 for _ in enumerate_dpps(n)) == expected


def test_enumeration_yields_valid_dpps():
    for d in enumerate_dpps(5):
        assert validate_dpp(d.rows, 5).rows == d.rows


def test_example_stats(example_dpp):
    assert dpp_stats(example_dpp).key == (7, 2, 3, 2)


def test_stats_of_listing(dpps_3):
    keys = [dpp_stats(d).key for d in dpps_3]
    assert keys == [
        (0, 0, 0, 0), (3, 0, 2, 2), (1, 0, 0, 1), (2, 0, 2, 1),
        (1, 0, 1, 0), (2, 0, 1, 2), (1, 1, 1, 1)
    ]


def test_star_of_empty():
    assert dpp_star(validate_dpp([], 3)).rows == ((3, 3), (2,))


def test_star_laws():
    for d in enumerate_dpps(5):
        star = dpp_star(d)
        assert dpp_star(star).rows == d.rows
        before, after = dpp_stats(d), dpp_stats(star)
        assert after.nu == 10 - before.nu - before.mu
        assert after.mu == before.mu
        assert (after.rho1, after.rho2) == (4 - before.rho1, 4 - before.rho2)


def test_dagger():
    assert dpp_dagger(validate_dpp([], 3)).rows == ()
    assert dpp_dagger(validate_dpp([[3, 1]], 3)).rows == ((3, 1),)
    assert dpp_dagger(validate_dpp([[3, 3]], 3)).rows == ((3, 2),)
    for d in enumerate_dpps(5):
        dagger = dpp_dagger(d)
        assert dpp_dagger(dagger).rows == d.rows
        before, after = dpp_stats(d), dpp_stats(dagger)
        assert (after.rho1, after.rho2) == (before.rho2, before.rho1)


def test_json(example_dpp):
    data = example_dpp.to_json()
    assert data == {'n': 6, 'rows': [[6, 6, 6, 5, 2], [4, 4, 1], [3]]}
    assert Dpp.from_json(data).rows == example_dpp.rows
    with pytest.raises(AsmDppError):
        Dpp.from_json({'rows': [[3]]})
