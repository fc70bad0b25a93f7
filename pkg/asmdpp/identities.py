from collections import Counter
from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import factorial
from random import Random
from typing import Any, Dict, List, Optional, Tuple, Union

from asmdpp import logger
from asmdpp.algebra import (DesnanotForm, Matrix, MPoly, check_desnanot_jacobi,
                            det, minor)
from asmdpp.asm import asm_dagger, asm_star, asm_stats, enumerate_asms
from asmdpp.dpp import dpp_dagger, dpp_star, dpp_stats, enumerate_dpps
from asmdpp.genfun import (CVariant, ObjectKind, Refinement, boundary_genfun,
                           c_vector, genfun_bruteforce, k_matrix, l_matrix,
                           perm_genfun, reflect, singly_genfun_bruteforce)
from asmdpp.paths import (dpp_lgv_matrix, dpp_lgv_reassembly, dpp_lgv_sum,
                          path_weight_sum_bruteforce, path_weight_sum_closed,
                          verify_lgv)
from asmdpp.utils import (DEFAULT_CAPS, AsmDppError, AsmDppJsonDataclass,
                          Caps, CheckOutcome)

_Z = {name: MPoly.var(name) for name in ('z1', 'z2', 'z3', 'z4')}
_KINDS = (ObjectKind.ASM, ObjectKind.DPP)


class BilinearForm(str, Enum):
    """
    This is an :class:`~enum.Enum` that contains the two equivalent forms
    of the bilinear relation satisfied by the generating functions: one
    relating orders n and n - 1, and one in four boundary variables.
    """
    PROPEQ1 = 'propeq1'
    PROPEQ2 = 'propeq2'


class CountTable(AsmDppJsonDataclass):
    """
    Dataclass containing the plain, singly-refined and doubly-refined
    counts of order `n`: `a_n` objects in total, `a_nk[k]` with a given
    top boundary statistic and `a_nij[i][j]` with given top and bottom
    boundary statistics.
    """
    n: int
    a_n: int
    a_nk: Tuple[int, ...]
    a_nij: Tuple[Tuple[int, ...], ...]

    def matrix(self) -> Matrix[int]:
        return Matrix.from_rows(self.a_nij)


def asm_count(n: int) -> int:
    """
    The product formula for the number of ASMs of order `n`.
    """
    if n < 0:
        raise AsmDppError(f'no ASMs of order {n}')
    value = Fraction(1)
    for i in range(n):
        value *= Fraction(factorial(3 * i + 1), factorial(n + i))
    return _integral(value)


def refined_count(n: int, k: int) -> int:
    """
    The number of ASMs of order `n` whose first-row 1 has `k` zeros to its
    left; zero for k outside 0..n-1.
    """
    if n < 1 or not 0 <= k < n:
        return 0
    value = Fraction(
        factorial(n + k - 1) * factorial(2 * n - k - 2),
        factorial(2 * n - 2) * factorial(k) * factorial(n - k - 1)
    )
    for s in range(n - 1):
        value *= Fraction(factorial(3 * s + 1), factorial(n + s - 1))
    return _integral(value)


def doubly_refined_count(n: int, i: int, j: int) -> int:
    """
    The number of ASMs of order n >= 2 with top boundary statistic `i` and
    bottom boundary statistic `j`, from the solved form of the recursion
    in the singly-refined counts.
    """
    if n < 2:
        raise AsmDppError('the doubly-refined formula needs n >= 2')
    if not (0 <= i < n and 0 <= j < n):
        return 0
    total = 0
    for k in range(min(i, n - j - 1) + 1):
        total += refined_count(n, i - k) * refined_count(n - 1, j + k) \
            - refined_count(n, i - k - 1) * refined_count(n - 1, j + k) \
            - refined_count(n - 1, i - k - 1) * refined_count(n, j + k + 1) \
            + refined_count(n - 1, i - k - 1) * refined_count(n, j + k)
    return _integral(Fraction(total, asm_count(n - 1)))


def _integral(value: Fraction) -> int:
    if value.denominator != 1:
        raise AsmDppError(f'count {value} is not an integer')
    return value.numerator


def _extended(table: CountTable, i: int, j: int) -> int:
    if 0 <= i < table.n and 0 <= j < table.n:
        return table.a_nij[i][j]
    return 0


def check_recursion(n: int) -> CheckOutcome:
    """
    Checks the relation (A_{n,i-1,j} - A_{n,i,j-1}) A_{n-1} =
    A_{n,i-1} A_{n-1,j-1} - A_{n,i} A_{n-1,j-1} - A_{n-1,i-1} A_{n,j-1}
    + A_{n-1,i-1} A_{n,j} for 0 <= i, j <= n, with counts outside their
    range taken as zero.
    """
    table = refined_counts(n, check=False)
    previous = asm_count(n - 1)
    r = refined_count
    for i in range(n + 1):
        for j in range(n + 1):
            lhs = (_extended(table, i - 1, j) - _extended(table, i, j - 1)) \
                * previous
            rhs = r(n, i - 1) * r(n - 1, j - 1) - r(n, i) * r(n - 1, j - 1) \
                - r(n - 1, i - 1) * r(n, j - 1) + r(n - 1, i - 1) * r(n, j)
            if lhs != rhs:
                return CheckOutcome.failure(
                    f'recursion fails at n={n}, i={i}, j={j}: {lhs} != {rhs}'
                )
    return CheckOutcome.success()


def refined_counts(n: int, check: bool = True) -> CountTable:
    """
    The closed-form counts of order n >= 2, checked for internal
    consistency.

    :param n: the order
    :param check: whether to also check the recursion the doubly-refined
        counts solve
    """
    if n < 2:
        raise AsmDppError('refined counts need n >= 2')
    table = CountTable(
        n=n,
        a_n=asm_count(n),
        a_nk=tuple(refined_count(n, k) for k in range(n)),
        a_nij=tuple(
            tuple(doubly_refined_count(n, i, j) for j in range(n))
            for i in range(n)
        )
    )
    if sum(table.a_nk) != table.a_n:
        raise AsmDppError(f'singly-refined counts of order {n} do not add up')
    if sum(map(sum, table.a_nij)) != table.a_n:
        raise AsmDppError(f'doubly-refined counts of order {n} do not add up')
    if table.matrix() != table.matrix().transpose():
        raise AsmDppError(f'doubly-refined counts of order {n} are not '
                          'symmetric')
    if check and not check_recursion(n):
        raise AsmDppError(f'doubly-refined counts of order {n} break the '
                          'recursion')
    return table


def refined_counts_bruteforce(n: int, caps: Caps = DEFAULT_CAPS) -> CountTable:
    """
    The same table, counted over the enumeration of ASMs.
    """
    caps.require('enumeration', n)
    total = 0
    first: Counter = Counter()
    both: Counter = Counter()
    for a in enumerate_asms(n):
        stats = asm_stats(a)
        total += 1
        first[stats.rho1] += 1
        both[stats.rho1, stats.rho2] += 1
    return CountTable(
        n=n,
        a_n=total,
        a_nk=tuple(first[k] for k in range(n)),
        a_nij=tuple(tuple(both[i, j] for j in range(n)) for i in range(n))
    )


def verify_refined(n: int, caps: Caps = DEFAULT_CAPS) -> CheckOutcome:
    """
    Compares the closed-form counts with enumeration and checks the
    determinant of the doubly-refined table, which is
    (-1)^(n(n+1)/2 + 1) A_{n-1}^(n-3) for n >= 3.
    """
    table = refined_counts(n)
    brute = refined_counts_bruteforce(n, caps)
    if table != brute:
        return CheckOutcome.failure(
            f'closed-form counts {table.model_dump()} != enumerated '
            f'{brute.model_dump()}'
        )
    if n >= 3:
        sign = -1 if (n * (n + 1) // 2 + 1) % 2 else 1
        expected = sign * asm_count(n - 1) ** (n - 3)
        found = det(table.matrix())
        if found != expected:
            return CheckOutcome.failure(
                f'det of doubly-refined counts of order {n} is {found}, '
                f'expected {expected}'
            )
    return CheckOutcome.success(f'A_{n} = {table.a_n}')


def _singly(z: MPoly, variable: str) -> MPoly:
    # Z(x, y, z, 1) with z renamed to `variable`
    return z.substitute({'z1': _Z[variable], 'z2': 1})


def _pair(z: MPoly, first: str, second: str) -> MPoly:
    return z.substitute({'z1': _Z[first], 'z2': _Z[second]})


def verify_theorem1(n: int, caps: Caps = DEFAULT_CAPS) -> CheckOutcome:
    """
    Checks that the ASM and DPP generating functions coincide and, for
    n >= 2, equal the determinant of the doubly-refined matrix.
    """
    z_asm = genfun_bruteforce(ObjectKind.ASM, n, caps).poly
    z_dpp = genfun_bruteforce(ObjectKind.DPP, n, caps).poly
    if z_asm != z_dpp:
        return CheckOutcome.failure(f'n={n}: ASM {z_asm} != DPP {z_dpp}')
    if n >= 2:
        z_det = det(k_matrix(n, Refinement.DOUBLY))
        if z_det != z_asm:
            return CheckOutcome.failure(
                f'n={n}: determinant {z_det} != generating function {z_asm}'
            )
    return CheckOutcome.success()


def _propeq1(z: MPoly, z_previous: MPoly) -> MPoly:
    z1, z2 = _Z['z1'], _Z['z2']
    lhs = (z1 - z2) * z * z_previous.substitute({'z1': 1, 'z2': 1})
    rhs = (z1 - 1) * z2 * _singly(z, 'z1') * _singly(z_previous, 'z2') \
        - z1 * (z2 - 1) * _singly(z_previous, 'z1') * _singly(z, 'z2')
    return lhs - rhs


def _propeq2(z: MPoly) -> MPoly:
    z1, z2, z3, z4 = (_Z[name] for name in ('z1', 'z2', 'z3', 'z4'))
    p = _pair
    return (z1 - z2) * (z3 - z4) * p(z, 'z1', 'z2') * p(z, 'z3', 'z4') \
        - (z1 - z3) * (z2 - z4) * p(z, 'z1', 'z3') * p(z, 'z2', 'z4') \
        + (z1 - z4) * (z2 - z3) * p(z, 'z1', 'z4') * p(z, 'z2', 'z3')


def verify_theorem2(
    n: int,
    form: Union[BilinearForm, str],
    caps: Caps = DEFAULT_CAPS
) -> CheckOutcome:
    """
    Checks one form of the bilinear relation for both the ASM and the DPP
    generating functions of order `n`.
    """
    if n < 2:
        raise AsmDppError('the bilinear relations need n >= 2')
    form = BilinearForm(form)
    for kind in _KINDS:
        z = genfun_bruteforce(kind, n, caps).poly
        if form == BilinearForm.PROPEQ1:
            lower = genfun_bruteforce(kind, n - 1, caps).poly
            residue = _propeq1(z, lower)
        else:
            residue = _propeq2(z)
        if residue:
            return CheckOutcome.failure(
                f'{form.value} fails for {kind.value}, n={n}: residue '
                f'{residue}'
            )
    return CheckOutcome.success()


def verify_specializations(n: int, caps: Caps = DEFAULT_CAPS) -> CheckOutcome:
    """
    Checks, for ASMs and DPPs, that setting z2 = 1 gives the three-statistic
    generating function, that setting z1 or z2 to 0 gives the order n - 1
    function, that setting both to 0 gives the order n - 2 function at
    z = 1, and that z1 and z2 can be swapped.
    """
    if n < 2:
        raise AsmDppError('the specializations need n >= 2')
    for kind in _KINDS:
        z = genfun_bruteforce(kind, n, caps).poly
        lower = genfun_bruteforce(kind, n - 1, caps).poly
        checks = [
            ('z2 = 1', z.substitute({'z2': 1}),
             singly_genfun_bruteforce(kind, n, caps)),
            ('z2 = 0', z.substitute({'z2': 0}), _singly(lower, 'z1')),
            ('z1 = 0', z.substitute({'z1': 0}), _singly(lower, 'z2')),
            ('z1 <-> z2', _pair(z, 'z2', 'z1'), z)
        ]
        if n >= 3:
            lowest = genfun_bruteforce(kind, n - 2, caps).poly
            checks.append((
                'z1 = z2 = 0', z.substitute({'z1': 0, 'z2': 0}),
                lowest.substitute({'z1': 1, 'z2': 1})
            ))
        for name, found, expected in checks:
            if found != expected:
                return CheckOutcome.failure(
                    f'{kind.value} n={n}, {name}: {found} != {expected}'
                )
    return CheckOutcome.success()


def _star_law(n: int, before: Tuple[int, ...], after: Tuple[int, ...]) -> bool:
    nu, mu, rho1, rho2 = before
    return after == (n * (n - 1) // 2 - nu - mu, mu, n - 1 - rho1,
                     n - 1 - rho2)


def _dagger_law(before: Tuple[int, ...], after: Tuple[int, ...]) -> bool:
    nu, mu, rho1, rho2 = before
    return after == (nu, mu, rho2, rho1)


def _check_operations(n: int) -> Optional[str]:
    for a in enumerate_asms(n):
        key = asm_stats(a).key
        star, dagger = asm_star(a), asm_dagger(a)
        if asm_star(star).rows != a.rows or \
                asm_dagger(dagger).rows != a.rows:
            return f'ASM operations are not involutions at {a.rows}'
        if not _star_law(n, key, asm_stats(star).key):
            return f'ASM star law fails at {a.rows}'
        if not _dagger_law(key, asm_stats(dagger).key):
            return f'ASM dagger law fails at {a.rows}'
    for d in enumerate_dpps(n):
        key = dpp_stats(d).key
        star, dagger = dpp_star(d), dpp_dagger(d)
        if dpp_star(star).rows != d.rows or dpp_dagger(dagger).rows != d.rows:
            return f'DPP operations are not involutions at {d}'
        if not _star_law(n, key, dpp_stats(star).key):
            return f'DPP star law fails at {d}'
        if not _dagger_law(key, dpp_stats(dagger).key):
            return f'DPP dagger law fails at {d}'
    return None


def verify_symmetry_laws(
    n: int,
    caps: Caps = DEFAULT_CAPS,
    elementwise: bool = True
) -> CheckOutcome:
    """
    Checks the functional equation Z = x^N (z1 z2)^(n-1) Z(1/x, y/x, 1/z1,
    1/z2), the statistic laws of the star and dagger operations object by
    object, and that each (k(k+1)/2, k(n-k-1), k, k) is taken by exactly
    one ASM and one DPP.

    :param elementwise: whether to apply the operations to every object
    """
    for kind in _KINDS:
        z = genfun_bruteforce(kind, n, caps).poly
        if reflect(z, n) != z:
            return CheckOutcome.failure(
                f'{kind.value} n={n}: functional equation fails'
            )
        for k in range(n):
            exponents = (k * (k + 1) // 2, k * (n - k - 1), k, k)
            count = z.coefficient(x=exponents[0], y=exponents[1],
                                  z1=k, z2=k)
            if count != 1:
                return CheckOutcome.failure(
                    f'{kind.value} n={n}: {count} objects have statistics '
                    f'{exponents}'
                )
    if elementwise:
        caps.require('enumeration', n)
        problem = _check_operations(n)
        if problem:
            return CheckOutcome.failure(f'n={n}: {problem}')
    return CheckOutcome.success()


def verify_star_invariant_equality(
    n: int,
    caps: Caps = DEFAULT_CAPS
) -> CheckOutcome:
    """
    Checks that star-invariant ASMs and star-invariant DPPs of odd order
    have the same distribution of (nu, mu, rho1, rho2).
    """
    if n % 2 == 0:
        raise AsmDppError(f'star-invariant objects need odd n, not {n}')
    caps.require('enumeration', n)
    asms = Counter(
        asm_stats(a).key for a in enumerate_asms(n)
        if asm_star(a).rows == a.rows
    )
    dpps = Counter(
        dpp_stats(d).key for d in enumerate_dpps(n)
        if dpp_star(d).rows == d.rows
    )
    if asms != dpps:
        return CheckOutcome.failure(
            f'n={n}: star-invariant ASMs {dict(asms)} != DPPs {dict(dpps)}'
        )
    return CheckOutcome.success(f'{sum(asms.values())} invariant objects')


def verify_boundary_relations(
    n: int,
    caps: Caps = DEFAULT_CAPS
) -> CheckOutcome:
    """
    Checks the relations between the ASM generating functions that track
    two of the four boundary statistics.
    """
    if n < 2:
        raise AsmDppError('boundary relations need n >= 2')
    table: Dict[Tuple[int, int], MPoly] = {
        (i, j): boundary_genfun(n, i, j, caps)
        for i in range(1, 5) for j in range(1, 5) if i != j
    }
    z = genfun_bruteforce(ObjectKind.ASM, n, caps).poly
    relations: List[Tuple[str, MPoly, MPoly]] = [
        (f'Z^{i}{j} = Z^{j}{i}', table[i, j], table[j, i])
        for i, j in combinations(range(1, 5), 2)
    ]
    relations += [
        ('Z^12 = Z', table[1, 2], z),
        ('Z^34 = Z', table[3, 4], z),
        ('Z^13 = Z^24', table[1, 3], table[2, 4]),
        ('Z^13 = reflected Z^14', table[1, 3], reflect(table[1, 4], n)),
        ('Z^23 = reflected Z^14', table[2, 3], reflect(table[1, 4], n))
    ]
    for name, found, expected in relations:
        if found != expected:
            return CheckOutcome.failure(f'n={n}: {name} fails')
    return CheckOutcome.success()


def subset_minor_sum(m: Matrix) -> Any:
    """
    Sums det M[{0} + S, (S - 1) + {n-1}] over all subsets S of
    {1, ..., n-1}; equal to det(M - delta_{i,j+1}).
    """
    n = m.rows
    total: Any = 0
    for size in range(n):
        for chosen in combinations(range(1, n), size):
            rows = [0] + list(chosen)
            cols = [s - 1 for s in chosen] + [n - 1]
            total = total + det(m.select(rows, cols))
    return total


def _shifted(m: Matrix) -> Matrix:
    return Matrix.build(
        m.rows, m.cols, lambda i, j: m[i, j] - 1 if i == j + 1 else m[i, j]
    )


def verify_det_subset_identity(
    trials: int,
    n: int,
    seed: int = 0
) -> CheckOutcome:
    """
    Checks det(M - delta_{i,j+1}) against the sum of bordered minors on
    random integer matrices with entries in [-5, 5] and, for n >= 2, on
    the matrix of path weight sums.
    """
    if not 1 <= n <= 6:
        raise AsmDppError('subset identity is checked for 1 <= n <= 6')
    rng = Random(seed)
    for trial in range(trials):
        m = Matrix.build(n, n, lambda i, j: rng.randint(-5, 5))
        lhs, rhs = det(_shifted(m)), subset_minor_sum(m)
        if lhs != rhs:
            return CheckOutcome.failure(
                f'trial {trial}: {m} gives {lhs} != {rhs}'
            )
    if n >= 2:
        paths = _shifted_back(n)
        if det(_shifted(paths)) != subset_minor_sum(paths):
            return CheckOutcome.failure(f'path sum matrix of order {n} fails')
    return CheckOutcome.success(f'{trials} matrices')


def _dpp_genfun(n: int, caps: Caps) -> MPoly:
    if n <= caps.genfun:
        return genfun_bruteforce(ObjectKind.DPP, n, caps).poly
    return det(k_matrix(n, Refinement.DOUBLY))


def verify_det_k(n: int, caps: Caps = DEFAULT_CAPS) -> CheckOutcome:
    """
    Checks both determinant formulas against enumeration, and that the
    doubly-refined matrix at z2 = 1 is the singly-refined one.
    """
    if n < 2:
        raise AsmDppError('the determinant forms need n >= 2')
    # compared against enumeration, so the genfun cap binds too
    caps.require('formula', n)
    caps.require('genfun', n)
    doubly = k_matrix(n, Refinement.DOUBLY)
    singly = k_matrix(n, Refinement.SINGLY)
    if doubly.map(lambda e: e.substitute({'z2': 1})) != singly:
        return CheckOutcome.failure(f'n={n}: K(x, y, z, 1) != K(x, y, z)')
    z = genfun_bruteforce(ObjectKind.ASM, n, caps).poly
    if det(doubly) != z:
        return CheckOutcome.failure(f'n={n}: doubly-refined determinant')
    if det(singly) != z.substitute({'z2': 1}):
        return CheckOutcome.failure(f'n={n}: singly-refined determinant')
    return CheckOutcome.success()


def verify_ceq(n: int, caps: Caps = DEFAULT_CAPS) -> CheckOutcome:
    """
    Checks (z1 - z2) C_n(x, y, z1, z2)_i = C_n(x, y, z1)_i - C_n(x, y, z2)_i.
    """
    caps.require('formula', n)
    both = c_vector(n, CVariant.TWO_Z)
    first = c_vector(n, CVariant.ONE_Z, 'z1')
    second = c_vector(n, CVariant.ONE_Z, 'z2')
    for i in range(n):
        if (_Z['z1'] - _Z['z2']) * both[i] != first[i] - second[i]:
            return CheckOutcome.failure(f'n={n}: entry {i} fails')
    return CheckOutcome.success()


def verify_ldet(n: int, caps: Caps = DEFAULT_CAPS) -> CheckOutcome:
    """
    Checks det L_n = (z2 - z1) Z_n for the DPP generating function.
    """
    caps.require('formula', n)
    z = _dpp_genfun(n, caps)
    found = det(l_matrix(n))
    if found != (_Z['z2'] - _Z['z1']) * z:
        return CheckOutcome.failure(f'n={n}: det L = {found}')
    return CheckOutcome.success()


def verify_l_condensation(n: int, caps: Caps = DEFAULT_CAPS) -> CheckOutcome:
    """
    Applies the two-row-deleted Desnanot-Jacobi identity to the transposed
    augmented L matrix, deleting pairs of the rows carrying z1, ..., z4.
    Each remaining minor must be (z_d - z_c) Z_n(z_c, z_d) for the two
    kept variables, so the identity becomes the four-variable bilinear
    relation for DPPs.
    """
    caps.require('formula', n)
    if n < 2:
        raise AsmDppError('the determinant forms need n >= 2')
    z = _dpp_genfun(n, caps)
    tall = l_matrix(n, augmented=True).transpose()
    rows = (n - 2, n - 1, n, n + 1)
    names = ('z1', 'z2', 'z3', 'z4')
    for dropped in combinations(range(4), 2):
        kept = [k for k in range(4) if k not in dropped]
        c, d = names[kept[0]], names[kept[1]]
        found = det(minor(tall, [rows[k] for k in dropped], []))
        if found != (_Z[d] - _Z[c]) * _pair(z, c, d):
            return CheckOutcome.failure(
                f'n={n}: minor without {[names[k] for k in dropped]}'
            )
    if not check_desnanot_jacobi(tall, DesnanotForm.TWO_COLUMN, rows):
        return CheckOutcome.failure(f'n={n}: condensation identity fails')
    if _propeq2(z):
        return CheckOutcome.failure(f'n={n}: bilinear relation fails')
    return CheckOutcome.success()


def verify_dppwp(n: int, caps: Caps = DEFAULT_CAPS) -> CheckOutcome:
    """
    Checks the closed path sums against dynamic programming for every
    pair of endpoints.
    """
    caps.require('formula', n)
    for j in range(n):
        for i in range(n):
            closed = path_weight_sum_closed(n, j, i)
            brute = path_weight_sum_bruteforce(n, j, i)
            if closed != brute:
                return CheckOutcome.failure(
                    f'n={n}, (0, {j}) -> ({i}, 0): {closed} != {brute}'
                )
    return CheckOutcome.success()


def verify_lgv_suite(n: int, caps: Caps = DEFAULT_CAPS) -> CheckOutcome:
    """
    Checks path determinants against brute-force family sums and that
    the three determinant forms built from path sums give the DPP
    generating function.
    """
    caps.require('genfun', n)
    problem = verify_lgv(n)
    if problem:
        return CheckOutcome.failure(f'n={n}: {problem}')
    if n >= 2:
        z = genfun_bruteforce(ObjectKind.DPP, n, caps).poly
        forms = [
            ('reassembly', dpp_lgv_reassembly(n)),
            ('column factor', dpp_lgv_sum(n)),
            ('row factor', dpp_lgv_sum(n, row_factor=True)),
            ('subset sum', subset_minor_sum(_shifted_back(n)))
        ]
        for name, found in forms:
            if found != z:
                return CheckOutcome.failure(f'n={n}: {name} gives {found}')
    return CheckOutcome.success()


def _shifted_back(n: int) -> Matrix:
    # the path-sum matrix without its -delta_{i,j+1}
    m = dpp_lgv_matrix(n)
    return Matrix.build(
        n, n, lambda i, j: m[i, j] + 1 if i == j + 1 else m[i, j]
    )


def verify_perm(n: int, caps: Caps = DEFAULT_CAPS) -> CheckOutcome:
    """
    Checks the closed form over permutation matrices against the y = 0
    part of the generating function.
    """
    closed = perm_genfun(n)
    z = genfun_bruteforce(ObjectKind.ASM, n, caps).poly
    if closed != z.substitute({'y': 0}):
        return CheckOutcome.failure(f'n={n}: closed form {closed}')
    total = closed.evaluate({'x': 1, 'z1': 1, 'z2': 1})
    if total != factorial(n):
        return CheckOutcome.failure(f'n={n}: {total} permutations')
    return CheckOutcome.success()


def verify_dj_suite(
    n: int = 3,
    trials: int = 500,
    seed: int = 0
) -> CheckOutcome:
    """
    Runs all three Desnanot-Jacobi forms on random integer matrices with
    entries in [-9, 9] and random increasing index choices.
    """
    rng = Random(seed)
    for trial in range(trials):
        square = Matrix.build(n, n, lambda i, j: rng.randint(-9, 9))
        rows = sorted(rng.sample(range(n), 2))
        cols = sorted(rng.sample(range(n), 2))
        if not check_desnanot_jacobi(square, DesnanotForm.CLASSIC, rows,
                                     cols):
            return CheckOutcome.failure(f'classic form, trial {trial}')
        tall = Matrix.build(n + 2, n, lambda i, j: rng.randint(-9, 9))
        four = sorted(rng.sample(range(n + 2), 4))
        if not check_desnanot_jacobi(tall, DesnanotForm.TWO_COLUMN, four):
            return CheckOutcome.failure(f'two_column form, trial {trial}')
        mixed = Matrix.build(n + 1, n, lambda i, j: rng.randint(-9, 9))
        three = sorted(rng.sample(range(n + 1), 3))
        column = [rng.randrange(n)]
        if not check_desnanot_jacobi(mixed, DesnanotForm.MIXED, three,
                                     column):
            return CheckOutcome.failure(f'mixed form, trial {trial}')
    logger.debug('desnanot-jacobi forms held on %s trials', trials)
    return CheckOutcome.success(f'{trials} matrices per form')
