from collections import Counter
from enum import Enum
from functools import lru_cache
from typing import Any, Dict, Iterator, List, Mapping, Tuple, Union

from pydantic import ConfigDict, model_validator

from asmdpp import logger
from asmdpp.algebra import Matrix, MPoly
from asmdpp.asm import asm_stats, enumerate_asms
from asmdpp.dpp import dpp_stats, enumerate_dpps
from asmdpp.utils import (DEFAULT_CAPS, AsmDppError, AsmDppJsonDataclass,
                          Caps, binom)

#: variables of the doubly-refined generating functions
GF_VARIABLES = ('x', 'y', 'z1', 'z2')

Key = Tuple[int, int, int, int]


class ObjectKind(str, Enum):
    """
    This is an :class:`~enum.Enum` that contains the two families of
    objects whose generating functions are compared.
    """
    ASM = 'ASM'
    DPP = 'DPP'


class Refinement(str, Enum):
    """
    This is an :class:`~enum.Enum` that contains the refinements of the
    determinant matrix: one boundary statistic (variable z1) or two
    (variables z1 and z2).
    """
    SINGLY = 'singly'
    DOUBLY = 'doubly'


class CVariant(str, Enum):
    """
    This is an :class:`~enum.Enum` that contains the two column vectors
    used to rewrite the last columns of the determinant matrix.
    """
    ONE_Z = 'one_z'
    TWO_Z = 'two_z'


class GenFun(AsmDppJsonDataclass):
    """
    Dataclass containing the doubly-refined generating function
    sum x^nu y^mu z1^rho1 z2^rho2 of ASMs or DPPs of order `n`.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    kind: ObjectKind
    n: int
    poly: MPoly

    @model_validator(mode='after')
    def _check_coefficients(self) -> 'GenFun':
        if any(coeff < 0 for _, coeff in self.poly.terms()):
            raise AsmDppError('generating functions have nonnegative '
                              'coefficients')
        return self

    @property
    def total(self) -> int:
        """
        The number of objects counted.
        """
        return sum(coeff for _, coeff in self.poly.terms())

    def to_json(self) -> Dict[str, Any]:
        return {'kind': self.kind.value, 'n': self.n, **self.poly.to_json()}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> 'GenFun':
        """
        Parses the polynomial JSON format with a ``kind``/``n`` header.
        """
        try:
            kind = ObjectKind(data['kind'])
            n = int(data['n'])
        except (KeyError, ValueError, TypeError):
            raise AsmDppError('generating function JSON needs "kind" and "n"')
        poly = MPoly.from_json(data).declare(GF_VARIABLES)
        return cls(kind=kind, n=n, poly=poly)


def iter_stat_keys(kind: Union[ObjectKind, str], n: int) -> Iterator[Key]:
    """
    Yields (nu, mu, rho1, rho2) for every object of the given kind and
    order, in enumeration order.
    """
    kind = ObjectKind(kind)
    if kind == ObjectKind.ASM:
        for a in enumerate_asms(n):
            yield asm_stats(a).key
    else:
        for d in enumerate_dpps(n):
            yield dpp_stats(d).key


@lru_cache(maxsize=None)
def _stat_counts(kind: ObjectKind, n: int) -> Tuple[Tuple[Key, int], ...]:
    counts = Counter(iter_stat_keys(kind, n))
    logger.debug('tallied %s %ss of order %s', sum(counts.values()),
                 kind.value, n)
    return tuple(sorted(counts.items()))


def genfun_bruteforce(
    kind: Union[ObjectKind, str],
    n: int,
    caps: Caps = DEFAULT_CAPS
) -> GenFun:
    """
    Builds the generating function by enumerating every object.

    :param kind: ASM or DPP
    :param n: the order, at most the genfun cap
    :param caps: brute-force limits

    :return: the generating function
    """
    kind = ObjectKind(kind)
    if n < 1:
        raise AsmDppError(f'order must be at least 1, not {n}')
    caps.require('genfun', n)
    poly = MPoly.from_terms(dict(_stat_counts(kind, n)), GF_VARIABLES)
    return GenFun(kind=kind, n=n, poly=poly)


def singly_genfun_bruteforce(
    kind: Union[ObjectKind, str],
    n: int,
    caps: Caps = DEFAULT_CAPS
) -> MPoly:
    """
    The three-statistic generating function sum x^nu y^mu z1^rho1, by
    enumeration.
    """
    kind = ObjectKind(kind)
    caps.require('genfun', n)
    counts: Counter = Counter()
    for (nu, mu, rho1, _), count in _stat_counts(kind, n):
        counts[nu, mu, rho1] += count
    return MPoly.from_terms(counts, ('x', 'y', 'z1'))


def boundary_genfun(
    n: int,
    i: int,
    j: int,
    caps: Caps = DEFAULT_CAPS
) -> MPoly:
    """
    The ASM generating function sum x^nu y^mu z1^rho_i z2^rho_j for a pair
    of distinct boundaries, numbered 1 (top) 2 (bottom) 3 (left) and
    4 (right).
    """
    if i == j or not {i, j} <= {1, 2, 3, 4}:
        raise AsmDppError(f'boundaries {i}, {j} must be distinct in 1..4')
    caps.require('genfun', n)
    counts: Counter = Counter()
    for a in enumerate_asms(n):
        stats = asm_stats(a)
        rho = (stats.rho1, stats.rho2, stats.rho3, stats.rho4)
        counts[stats.nu, stats.mu, rho[i - 1], rho[j - 1]] += 1
    return MPoly.from_terms(counts, GF_VARIABLES)


def reflect(p: MPoly, n: int) -> MPoly:
    """
    Applies x^N (z1 z2)^(n-1) f(1/x, y/x, 1/z1, 1/z2) with N = n(n-1)/2 as
    a map on exponents, (p, m, k1, k2) -> (N - p - m, m, n-1-k1, n-1-k2).
    """
    top = n * (n - 1) // 2
    terms: Dict[Key, int] = {}
    for (e_x, e_y, e_1, e_2), coeff in p.terms(GF_VARIABLES):
        image = (top - e_x - e_y, e_y, n - 1 - e_1, n - 1 - e_2)
        if min(image) < 0:
            raise AsmDppError(f'reflection of x^{e_x} y^{e_y} z1^{e_1} '
                              f'z2^{e_2} is not a polynomial for n = {n}')
        terms[image] = coeff
    return MPoly.from_terms(terms, GF_VARIABLES)


def _bulk_entry(i: int, j: int) -> MPoly:
    terms = {
        (k, i - k): binom(i - 1, i - k) * binom(j + 1, k)
        for k in range(min(i, j + 1) + 1)
    }
    return MPoly.from_terms(terms, ('x', 'y'))


def _c_entry(n: int, i: int, variant: CVariant, variable: str) -> MPoly:
    terms: Dict[Tuple[int, ...], int] = {}
    names: Tuple[str, ...]
    if variant == CVariant.ONE_Z:
        names = ('x', 'y', variable)
    else:
        names = GF_VARIABLES
    for k in range(i + 1):
        lead = binom(i - 1, i - k)
        if not lead:
            continue
        for s in range(k + 1):
            coeff = lead * binom(n - s - 2, k - s)
            if not coeff:
                continue
            if variant == CVariant.ONE_Z:
                key: Tuple[int, ...] = (k, i - k, s + 1)
                terms[key] = terms.get(key, 0) + coeff
                continue
            for m in range(s + 1):
                key = (k, i - k, m, s - m)
                terms[key] = terms.get(key, 0) + coeff
    return MPoly.from_terms(terms, names)


def c_vector(
    n: int,
    which: Union[CVariant, str],
    variable: str = 'z1'
) -> List[MPoly]:
    """
    The column vectors C_n(x, y, z)_i and C_n(x, y, z1, z2)_i for
    i = 0, ..., n-1.

    :param n: the order, at least 2
    :param which: one_z or two_z
    :param variable: the variable playing z in the one_z vector
    """
    if n < 2:
        raise AsmDppError('the determinant forms need n >= 2')
    variant = CVariant(which)
    return [_c_entry(n, i, variant, variable) for i in range(n)]


def _singly_last_entry(n: int, i: int) -> MPoly:
    terms: Dict[Tuple[int, int, int], int] = {}
    for k in range(i + 1):
        lead = binom(i - 1, i - k)
        for s in range(k + 1):
            coeff = lead * binom(n - s - 1, k - s)
            if coeff:
                terms[k, i - k, s] = coeff
    return MPoly.from_terms(terms, ('x', 'y', 'z1'))


def k_matrix(
    n: int,
    refined: Union[Refinement, str] = Refinement.DOUBLY
) -> Matrix[MPoly]:
    """
    The nxn matrix whose determinant is the singly- or doubly-refined
    generating function. Entry (i, j) is a binomial sum in x and y minus
    delta_{i,j+1}, with the boundary variables entering the last column
    (and, when doubly refined, the second-last).

    :param n: the order, at least 2
    :param refined: singly or doubly

    :return: the matrix
    """
    if n < 2:
        raise AsmDppError('the determinant forms need n >= 2')
    refined = Refinement(refined)
    if refined == Refinement.DOUBLY:
        second = c_vector(n, CVariant.ONE_Z, 'z2')
        last = c_vector(n, CVariant.TWO_Z)
    else:
        last = [_singly_last_entry(n, i) for i in range(n)]

    def entry(i: int, j: int) -> MPoly:
        if j == n - 1:
            value = last[i]
        elif j == n - 2 and refined == Refinement.DOUBLY:
            value = second[i]
        else:
            value = _bulk_entry(i, j)
        return value - 1 if i == j + 1 else value

    return Matrix.build(n, n, entry)


def l_matrix(n: int, augmented: bool = False) -> Matrix[MPoly]:
    """
    The matrix whose determinant is (z2 - z1) times the DPP generating
    function: the bulk columns of :func:`k_matrix` followed by
    C_n(x, y, z1) - delta and C_n(x, y, z2) - delta. The augmented
    nx(n+2) form appends the z3 and z4 columns.
    """
    if n < 2:
        raise AsmDppError('the determinant forms need n >= 2')
    variables = ('z1', 'z2', 'z3', 'z4') if augmented else ('z1', 'z2')
    tails = [c_vector(n, CVariant.ONE_Z, name) for name in variables]

    def entry(i: int, j: int) -> MPoly:
        if j >= n - 2:
            value = tails[j - n + 2][i]
            return value - 1 if i == n - 1 else value
        value = _bulk_entry(i, j)
        return value - 1 if i == j + 1 else value

    return Matrix.build(n, n + len(variables) - 2, entry)


def q_integer(m: int, variable: str = 'x') -> MPoly:
    """
    [m]_x = 1 + x + ... + x^(m-1).
    """
    return MPoly.from_terms({(e,): 1 for e in range(m)}, (variable,))


def q_factorial(m: int, variable: str = 'x') -> MPoly:
    result = MPoly.constant(1)
    for k in range(1, m + 1):
        result = result * q_integer(k, variable)
    return result


def perm_genfun(n: int) -> MPoly:
    """
    The closed form of the generating function over permutation matrices,
    i.e. at y = 0.
    """
    if n < 2:
        raise AsmDppError('the closed form needs n >= 2')
    terms: Counter = Counter()
    for i in range(n):
        for j in range(i + 1, n):
            terms[n + i - j - 1, 0, i, n - j - 1] += 1
            terms[n - i + j - 2, 0, n - i - 1, j] += 1
    total = q_factorial(n - 2) * MPoly.from_terms(terms, GF_VARIABLES)
    return total.declare(GF_VARIABLES)
