import pytest

from asmdpp.algebra import Matrix, det
from asmdpp.identities import (BilinearForm, asm_count, check_recursion,
                               doubly_refined_count, refined_count,
                               refined_counts, refined_counts_bruteforce,
                               subset_minor_sum, verify_boundary_relations,
                               verify_ceq, verify_det_k,
                               verify_det_subset_identity, verify_dj_suite,
                               verify_dppwp, verify_l_condensation,
                               verify_ldet, verify_lgv_suite, verify_perm,
                               verify_refined, verify_specializations,
                               verify_star_invariant_equality,
                               verify_symmetry_laws, verify_theorem1,
                               verify_theorem2)
from asmdpp.utils import AsmDppError, CapExceededError, Caps


def test_asm_count():
    assert [asm_count(n) for n in range(8)] == [1, 1, 2, 7, 42, 429, 7436,
                                                218348]
    with pytest.raises(AsmDppError):
        asm_count(-1)


def test_refined_counts_of_order_three():
    table = refined_counts(3)
    assert table.a_n == 7
    assert table.a_nk == (2, 3, 2)
    assert table.a_nij == ((1, 1, 0), (1, 1, 1), (0, 1, 1))
    assert det(table.matrix()) == -1


def test_refined_counts_of_order_four():
    table = refined_counts(4)
    assert table.a_nk == (7, 14, 14, 7)
    assert refined_count(4, 4) == 0
    assert doubly_refined_count(4, 0, 4) == 0
    with pytest.raises(AsmDppError):
        refined_counts(1)


def test_refined_counts_match_enumeration():
    for n in range(2, 7):
        assert refined_counts(n) == refined_counts_bruteforce(n)
        assert check_recursion(n)


def test_refined_counts_of_order_seven():
    table = refined_counts(7)
    assert check_recursion(7)
    assert sum(table.a_nk) == 218348
    assert table.a_nk[0] == table.a_nk[6] == 7436


def test_verify_refined():
    outcome = verify_refined(4)
    assert outcome
    assert outcome.details == 'A_4 = 42'
    with pytest.raises(CapExceededError):
        verify_refined(5, Caps(enumeration=4))


def test_theorem1():
    for n in range(1, 6):
        assert verify_theorem1(n)


@pytest.mark.parametrize('form', list(BilinearForm))
def test_theorem2(form):
    assert verify_theorem2(3, form)
    assert verify_theorem2(4, form.value)


def test_theorem2_needs_two():
    with pytest.raises(AsmDppError):
        verify_theorem2(1, BilinearForm.PROPEQ1)


def test_specializations():
    assert verify_specializations(2)
    assert verify_specializations(4)
    assert verify_specializations(5)


def test_symmetry_laws():
    for n in range(1, 5):
        assert verify_symmetry_laws(n)
    assert verify_symmetry_laws(5, elementwise=False)


def test_star_invariant_equality():
    assert verify_star_invariant_equality(3)
    assert verify_star_invariant_equality(5)
    with pytest.raises(AsmDppError):
        verify_star_invariant_equality(4)


def test_boundary_relations():
    assert verify_boundary_relations(3)
    assert verify_boundary_relations(4)


def test_subset_minor_sum():
    m = Matrix.from_rows([[2, 1, 0], [4, 3, 1], [1, 5, 2]])
    shifted = Matrix.from_rows([[2, 1, 0], [3, 3, 1], [1, 4, 2]])
    assert subset_minor_sum(m) == det(shifted)


def test_det_subset_identity():
    outcome = verify_det_subset_identity(20, 4, seed=1)
    assert outcome
    assert outcome.details == '20 matrices'
    assert verify_det_subset_identity(5, 1)
    with pytest.raises(AsmDppError):
        verify_det_subset_identity(1, 7)


def test_determinant_forms():
    for n in range(2, 5):
        assert verify_det_k(n)
        assert verify_ceq(n)
        assert verify_ldet(n)
        assert verify_l_condensation(n)


def test_det_k_follows_genfun_cap():
    assert verify_det_k(3, Caps(genfun=3))
    with pytest.raises(CapExceededError):
        verify_det_k(4, Caps(genfun=3))
    with pytest.raises(CapExceededError):
        verify_det_k(7)


def test_path_forms():
    for n in range(1, 5):
        assert verify_dppwp(n)
    for n in range(1, 4):
        assert verify_lgv_suite(n)


def test_permutations():
    for n in range(2, 6):
        assert verify_perm(n)


@pytest.mark.parametrize('n', range(2, 7))
def test_desnanot_jacobi_suite(n):
    outcome = verify_dj_suite(n, seed=n)
    assert outcome
    assert outcome.details == '500 matrices per form'
