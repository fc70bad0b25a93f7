from fractions import Fraction
from random import Random

import pytest

from asmdpp.algebra import (DesnanotForm, Matrix, MPoly, PolyOp,
                            check_desnanot_jacobi, cofactor_det, det, minor,
                            poly_arith, poly_eval, poly_substitute)
from asmdpp.utils import AsmDppError


def _random_poly(rng):
    terms = {
        (rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 1)):
            rng.randint(-4, 4)
        for _ in range(4)
    }
    return MPoly.from_terms(terms, ('x', 'y', 'z1'))


def test_difference_of_squares(variables):
    x, y = variables['x'], variables['y']
    assert poly_arith(x + y, x - y, PolyOp.MUL) == x ** 2 - y ** 2


def test_additive_identity(z3):
    assert z3 + 0 == z3
    assert poly_arith(z3, MPoly.constant(0), 'add') == z3


def test_expand_product(variables):
    x, z1, z2 = variables['x'], variables['z1'], variables['z2']
    product = (1 + x * z1) * (1 + x * z2)
    assert product == 1 + x * z1 + x * z2 + x ** 2 * z1 * z2


def test_ring_axioms(rng):
    for _ in range(20):
        a, b, c = (_random_poly(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a


def test_evaluate(variables, z3):
    x, y = variables['x'], variables['y']
    assert poly_eval(x ** 2 * y, {'x': 2, 'y': 3}) == 12
    assert MPoly.constant(7).evaluate({}) == 7
    assert z3.evaluate({'x': 1, 'y': 1, 'z1': 1, 'z2': 1}) == 7
    assert x.evaluate({'x': Fraction(1, 3)}) == Fraction(1, 3)


def test_evaluate_missing_variable(variables):
    with pytest.raises(AsmDppError):
        variables['x'].evaluate({'y': 1})


def test_substitute(variables):
    x, z1, z3 = variables['x'], variables['z1'], MPoly.var('z3')
    assert poly_substitute(x * z1, {'z1': z3}) == x * z3
    assert (1 + x * z1).substitute({'z1': 0}) == 1


def test_substitute_is_simultaneous(variables):
    z1, z2 = variables['z1'], variables['z2']
    swapped = (z1 ** 2 * z2).substitute({'z1': z2, 'z2': z1})
    assert swapped == z2 ** 2 * z1


def test_declared_variables_survive(z3):
    constant = z3.substitute({'x': 0})
    assert constant == 1
    assert constant.variables == ('y', 'z1', 'z2')


def test_terms_ascending(variables):
    x = variables['x']
    assert (1 + x).terms() == [((0,), 1), ((1,), 1)]
    with pytest.raises(AsmDppError):
        (x * variables['y']).terms(['x'])


def test_exact_division(variables):
    x, y = variables['x'], variables['y']
    assert (x ** 2 - y ** 2).exquo(x - y) == x + y
    with pytest.raises(AsmDppError):
        (x ** 2 + y).exquo(x)


def test_json_forms(z3):
    data = z3.to_json()
    assert data['vars'] == ['x', 'y', 'z1', 'z2']
    assert data['terms'][0] == {'c': '1', 'e': [0, 0, 0, 0]}
    assert MPoly.from_json(data) == z3


def test_json_rejects_bad_order():
    with pytest.raises(AsmDppError):
        MPoly.from_json({'vars': ['y', 'x'], 'terms': []})


def test_det_small(variables):
    x, y = variables['x'], variables['y']
    assert det(Matrix.from_rows([[5]])) == 5
    assert det(Matrix.from_rows([[x, y], [1, 1]])) == x - y


def test_det_matches_cofactor_expansion():
    rng = Random(3)
    for size in range(1, 6):
        m = Matrix.build(size, size, lambda i, j: rng.randint(-9, 9))
        assert det(m) == cofactor_det(m)


def test_det_of_rationals():
    m = Matrix.from_rows([[Fraction(1, 2), 1, 0], [0, 3, 1], [1, 0, 2]])
    assert det(m) == cofactor_det(m)


def test_det_of_polynomials(variables):
    x, y = variables['x'], variables['y']
    m = Matrix.from_rows([[x, 1, 0], [y, x, 1], [0, y, x]])
    assert det(m) == x ** 3 - 2 * x * y
    assert det(m) == cofactor_det(m)


def test_det_needs_square():
    with pytest.raises(AsmDppError):
        det(Matrix.from_rows([[1, 2, 3]]))


def test_minor():
    identity = Matrix.build(3, 3, lambda i, j: int(i == j))
    assert minor(identity, [], []) == identity
    assert minor(identity, [0], [0]) == Matrix.build(
        2, 2, lambda i, j: int(i == j)
    )
    tall = Matrix.build(5, 3, lambda i, j: 3 * i + j)
    assert minor(tall, [0, 1], []) == tall.select([2, 3, 4], [0, 1, 2])
    with pytest.raises(AsmDppError):
        minor(identity, [3], [])


def test_desnanot_jacobi_forms():
    rng = Random(11)
    square = Matrix.from_rows([[2, 7], [1, 8]])
    assert check_desnanot_jacobi(square, DesnanotForm.CLASSIC, [0, 1],
                                 [0, 1])
    tall = Matrix.build(5, 3, lambda i, j: rng.randint(-9, 9))
    assert check_desnanot_jacobi(tall, 'two_column', [0, 1, 2, 3])
    mixed = Matrix.build(4, 3, lambda i, j: rng.randint(-9, 9))
    assert check_desnanot_jacobi(mixed, DesnanotForm.MIXED, [0, 1, 3], [2])


def test_desnanot_jacobi_rejects_bad_shapes():
    square = Matrix.build(3, 3, lambda i, j: i + j)
    with pytest.raises(AsmDppError):
        check_desnanot_jacobi(square, DesnanotForm.TWO_COLUMN, [0, 1, 2, 3])
    with pytest.raises(AsmDppError):
        check_desnanot_jacobi(square, DesnanotForm.CLASSIC, [1, 0], [0, 1])
