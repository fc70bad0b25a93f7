import pytest

from asmdpp.dpp import dpp_stats, enumerate_dpps, validate_dpp
from asmdpp.paths import (LatticePath, PathFamily, dpp_lgv_matrix,
                          dpp_lgv_reassembly, dpp_lgv_sum, dpp_to_nilp,
                          endpoint_tuples, enumerate_nilps, iter_paths,
                          nilp_stats, nilp_to_dpp, path_weight_sum_bruteforce,
                          path_weight_sum_closed, validate_family, verify_lgv)
from asmdpp.utils import AsmDppError


def test_single_path_sums(variables):
    x, z2 = variables['x'], variables['z2']
    assert path_weight_sum_bruteforce(3, 1, 1) == x + x * z2
    assert path_weight_sum_bruteforce(4, 2, 0) == 1
    with pytest.raises(AsmDppError):
        path_weight_sum_bruteforce(3, 3, 0)


def test_iter_paths():
    assert [p.steps for p in iter_paths((0, 1), (1, 0))] == ['RD', 'DR']
    assert list(iter_paths((0, 0), (0, 1))) == []


def test_closed_form_matches():
    for n in range(1, 6):
        for j in range(n):
            for i in range(n):
                assert path_weight_sum_closed(n, j, i) == \
                    path_weight_sum_bruteforce(n, j, i)


def test_empty_dpp_is_one_path():
    family = dpp_to_nilp(validate_dpp([], 3))
    assert [(p.start, p.steps) for p in family.paths] == [((0, 2), 'DD')]


def test_example_family(example_dpp):
    family = dpp_to_nilp(example_dpp)
    assert len(family.paths) == 4
    assert validate_family(family) == [5, 3, 1]
    assert nilp_stats(family) == (7, 2, 3, 2)
    assert nilp_to_dpp(family).rows == example_dpp.rows


def test_stats_agree_with_dpps():
    for d in enumerate_dpps(4):
        family = dpp_to_nilp(d)
        assert nilp_stats(family) == dpp_stats(d).key
        assert nilp_to_dpp(family).rows == d.rows


def test_nilp_counts():
    for n, expected in enumerate([1, 2, 7, 42], start=1):
        assert sum(1 for _ in enumerate_nilps(n)) == expected


def test_endpoint_tuples():
    assert sum(1 for _ in endpoint_tuples(4)) == 8


def test_lgv():
    for n in range(1, 4):
        assert verify_lgv(n) is None


def test_dpp_determinants(z3):
    assert dpp_lgv_reassembly(3) == z3
    assert dpp_lgv_sum(3) == z3
    assert dpp_lgv_matrix(4).rows == 4
    with pytest.raises(AsmDppError):
        dpp_lgv_sum(1)


def test_invalid_families():
    crossing = PathFamily(n=3, paths=(
        LatticePath(start=(0, 2), steps='DDR'),
        LatticePath(start=(0, 0), steps='')
    ))
    with pytest.raises(AsmDppError):
        validate_family(crossing)
    misplaced = PathFamily(n=3, paths=(LatticePath(start=(0, 1),
                                                   steps='D'),))
    with pytest.raises(AsmDppError):
        validate_family(misplaced)
    with pytest.raises(AsmDppError):
        LatticePath(start=(0, 1), steps='DL')
    with pytest.raises(AsmDppError):
        PathFamily.from_json({'paths': []})


def test_json(example_dpp):
    family = dpp_to_nilp(example_dpp)
    assert PathFamily.from_json(family.to_json()).paths == family.paths
