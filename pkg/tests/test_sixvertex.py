from fractions import Fraction

import pytest

from asmdpp.asm import asm_stats, enumerate_asms, validate_asm
from asmdpp.genfun import ObjectKind, genfun_bruteforce
from asmdpp.sixvertex import (SpectralPoint, SvConfig, VertexWeights,
                              asm_to_sv, check_vertex_relations,
                              enumerate_svs, ik_determinant,
                              specialization_point, sv_edges,
                              sv_partition_function, sv_stats, sv_to_asm,
                              verify_ik, verify_sv_bazin_random, verify_uz,
                              verify_zczasm, verify_zczasm_random)
from asmdpp.utils import AsmDppError, CapExceededError, Caps


def test_weights():
    w = VertexWeights.at(Fraction(2), Fraction(1), Fraction(1))
    assert (w.a, w.b, w.c) == (Fraction(3, 2), Fraction(-3, 2),
                               Fraction(15, 4))
    assert [w.of_type(k) for k in range(1, 7)] == [w.a, w.a, w.b, w.b, w.c,
                                                   w.c]


def test_order_one():
    pt = SpectralPoint(q=2, u_sqrt=[1], v_sqrt=[3])
    assert sv_partition_function(1, pt) == Fraction(45, 4)
    assert ik_determinant(1, pt) == Fraction(45, 4)


def test_identity_types():
    identity = validate_asm([[1, 0], [0, 1]])
    assert asm_to_sv(identity).types == ((5, 3), (4, 5))


def test_determinant_matches_brute_force():
    pt = SpectralPoint(q=2, u_sqrt=[1, 2], v_sqrt=[3, 5])
    assert sv_partition_function(2, pt) == ik_determinant(2, pt)


def test_symmetric_in_rows():
    pt = SpectralPoint(q=Fraction(3, 2), u_sqrt=[1, 2, 5],
                       v_sqrt=[3, Fraction(1, 2), 7])
    swapped = SpectralPoint(q=pt.q, u_sqrt=[2, 5, 1], v_sqrt=pt.v_sqrt)
    assert sv_partition_function(3, pt) == sv_partition_function(3, swapped)


@pytest.mark.parametrize('n', [2, 3, 4])
def test_verify_ik(n):
    outcome = verify_ik(n, points=20, seed=n)
    assert outcome
    assert outcome.details == '20/20 points'


def test_verify_ik_respects_cap():
    with pytest.raises(CapExceededError):
        verify_ik(4, points=1, caps=Caps(six_vertex=3))


def test_verify_zczasm_at_fixed_point():
    z2 = genfun_bruteforce(ObjectKind.ASM, 2).poly
    assert verify_zczasm(2, 1, 3, 5, 7, 2)
    assert verify_zczasm(2, 1, 3, 5, 7, 2, z_asm=z2)
    assert verify_zczasm(3, 1, 3, 5, 7, 2)


def test_verify_zczasm_random():
    assert verify_zczasm_random(3, points=3, seed=1)
    with pytest.raises(AsmDppError):
        verify_zczasm_random(1)


def test_verify_uz():
    assert verify_uz(2, 1, 7, [3, 5])
    assert verify_uz(Fraction(1, 3), 2, 5, [1, 3, Fraction(1, 2)])


def test_specialization_point():
    point = specialization_point(Fraction(2), Fraction(1), Fraction(1))
    assert point == {'x': 1, 'y': Fraction(25, 4)}
    with pytest.raises(AsmDppError):
        specialization_point(Fraction(1), Fraction(1), Fraction(2))


def test_verify_sv_bazin():
    assert verify_sv_bazin_random(2, points=2, seed=3)
    with pytest.raises(AsmDppError):
        verify_sv_bazin_random(1)


def test_vertex_relations():
    for n in range(1, 5):
        for config in enumerate_svs(n):
            assert check_vertex_relations(config)


def test_round_trip_and_stats():
    for a in enumerate_asms(4):
        config = asm_to_sv(a)
        assert sv_to_asm(config).rows == a.rows
        assert sv_stats(config).key == asm_stats(a).key


def test_edges_of_identity():
    edges = sv_edges(asm_to_sv(validate_asm([[1, 0], [0, 1]])))
    assert edges.horizontal == ((0, 1, 1), (0, 0, 1))
    assert edges.vertical == ((0, 0), (1, 0), (1, 1))


def test_invalid_configuration():
    with pytest.raises(AsmDppError):
        sv_edges(SvConfig(n=2, types=((1, 5), (5, 1))))
    with pytest.raises(AsmDppError):
        sv_edges(SvConfig(n=2, types=((5, 3), (4, 7))))
    with pytest.raises(AsmDppError):
        SvConfig.from_json({'types': [[5]]})


def test_degenerate_points():
    with pytest.raises(AsmDppError):
        SpectralPoint(q=1, u_sqrt=[1], v_sqrt=[1])
    with pytest.raises(AsmDppError):
        SpectralPoint(q=2, u_sqrt=[0], v_sqrt=[1])
    with pytest.raises(AsmDppError):
        SpectralPoint(q=2, u_sqrt=[1, 2], v_sqrt=[1])
    # a vanishes when u q^2 = v
    with pytest.raises(AsmDppError):
        SpectralPoint(q=2, u_sqrt=[1], v_sqrt=[2])
    with pytest.raises(AsmDppError):
        ik_determinant(2, SpectralPoint(q=2, u_sqrt=[1, -1],
                                        v_sqrt=[3, 5]))
