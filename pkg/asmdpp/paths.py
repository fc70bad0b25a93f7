from functools import reduce
from itertools import combinations
from operator import mul
from typing import (Any, Dict, FrozenSet, Iterator, List, Mapping, Optional,
                    Sequence, Tuple)

from pydantic import field_validator

from asmdpp import logger
from asmdpp.algebra import Matrix, MPoly, det
from asmdpp.dpp import Dpp, enumerate_dpps, validate_dpp
from asmdpp.utils import AsmDppError, AsmDppJsonDataclass, binom

Point = Tuple[int, int]

#: variables of every path weight
PATH_VARIABLES = ('x', 'y', 'z1', 'z2')

_X, _Y, _Z1, _Z2 = (MPoly.var(name) for name in PATH_VARIABLES)
_ONE = MPoly.constant(1).declare(PATH_VARIABLES)


class LatticePath(AsmDppJsonDataclass):
    """
    Dataclass representing a path on the grid {0, ..., n-1}^2. Points are
    (column, row); a Right step 'R' adds one to the column and a Down step
    'D' takes one from the row.
    """
    start: Point
    steps: str = ''

    @field_validator('steps')
    @classmethod
    def _check_steps(cls, value: str) -> str:
        if set(value) - {'R', 'D'}:
            raise AsmDppError(f'steps {value!r} must be R or D')
        return value

    def points(self) -> List[Point]:
        """
        Every vertex visited, starting point included.
        """
        column, row = self.start
        visited = [(column, row)]
        for step in self.steps:
            if step == 'R':
                column += 1
            else:
                row -= 1
            visited.append((column, row))
        return visited

    @property
    def end(self) -> Point:
        return self.points()[-1]

    def right_steps(self) -> List[Point]:
        """
        The points from which the Right steps leave.
        """
        return [
            point for point, step in zip(self.points(), self.steps)
            if step == 'R'
        ]

    def to_json(self) -> Dict[str, Any]:
        return {'start': list(self.start), 'steps': self.steps}


class PathFamily(AsmDppJsonDataclass):
    """
    Dataclass representing a family of nonintersecting paths of order `n`:
    path i runs from (0, lambda_{i-1} - 1) to (lambda_i, 0) for
    n = lambda_0 > lambda_1 > ... > lambda_{t+1} = 0, so the last path
    always ends at the origin.
    """
    n: int
    paths: Tuple[LatticePath, ...]

    def to_json(self) -> Dict[str, Any]:
        return {'n': self.n, 'paths': [p.to_json() for p in self.paths]}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> 'PathFamily':
        """
        Parses ``{"n": 3, "paths": [{"start": [0, 2], "steps": "RDD"}]}``
        and checks the family.
        """
        try:
            family = cls(n=data['n'], paths=data['paths'])
        except (KeyError, TypeError):
            raise AsmDppError('path family JSON needs "n" and "paths"')
        validate_family(family)
        return family


def validate_family(p: PathFamily) -> List[int]:
    """
    Checks that the paths stay in the grid, have the right endpoints and
    share no vertex.

    :param p: the family

    :return: the endpoint columns lambda_1, ..., lambda_t
    """
    n = p.n
    if n < 1 or not p.paths:
        raise AsmDppError('a path family needs n >= 1 and at least one path')
    lambdas: List[int] = []
    top = n
    seen: Dict[Point, int] = {}
    for index, path in enumerate(p.paths):
        if path.start != (0, top - 1):
            raise AsmDppError(f'path {index} starts at {path.start}, not '
                              f'(0, {top - 1})')
        for point in path.points():
            if not (0 <= point[0] < n and 0 <= point[1] < n):
                raise AsmDppError(f'path {index} leaves the grid at {point}')
            if point in seen:
                raise AsmDppError(f'paths {seen[point]} and {index} meet at '
                                  f'{point}')
            seen[point] = index
        column, row = path.end
        if row != 0:
            raise AsmDppError(f'path {index} ends at {path.end}, off row 0')
        last = index == len(p.paths) - 1
        if last != (column == 0):
            raise AsmDppError(f'path {index} ends at {path.end}; only the '
                              'last path ends at the origin')
        if not last:
            lambdas.append(column)
            top = column
    return lambdas


def dpp_to_nilp(d: Dpp) -> PathFamily:
    """
    Turns row i of a DPP into a path whose k-th Right step is at height
    D_{i,i+k-1} - 1, followed by a final all-Down path to the origin.

    :param d: a valid DPP

    :return: the family
    """
    n = d.n
    tops = (n,) + d.lengths
    paths = []
    for index, top in enumerate(tops):
        height = top - 1
        steps = []
        parts = d.rows[index] if index < len(d.rows) else ()
        for part in parts:
            steps.append('D' * (height - part + 1) + 'R')
            height = part - 1
        steps.append('D' * height)
        paths.append(LatticePath(start=(0, top - 1), steps=''.join(steps)))
    return PathFamily(n=n, paths=tuple(paths))


def nilp_to_dpp(p: PathFamily) -> Dpp:
    """
    Reads D_ij as one plus the height of the matching Right step.

    :param p: a family; it is validated first
    """
    validate_family(p)
    rows = [
        [height + 1 for _, height in path.right_steps()]
        for path in p.paths[:-1]
    ]
    return validate_dpp(rows, p.n)


def nilp_stats(p: PathFamily) -> Tuple[int, int, int, int]:
    """
    Counts Right steps above and below the subdiagonal, those in the top
    row, and those in the row below it plus one if a path starts there.

    :return: (nu, mu, rho1, rho2)
    """
    n = p.n
    nu = mu = rho1 = rho2 = 0
    for path in p.paths:
        for column, height in path.right_steps():
            if height >= column:
                nu += 1
            else:
                mu += 1
            if height == n - 1:
                rho1 += 1
            elif height == n - 2:
                rho2 += 1
        if path.start == (0, n - 2):
            rho2 += 1
    return nu, mu, rho1, rho2


def edge_weight(n: int, column: int, height: int) -> MPoly:
    """
    The weight of the Right step leaving (column, height). Down steps have
    weight 1.
    """
    if height == n - 1:
        return _X * _Z1
    if height == n - 2:
        return _X * _Z2
    return _X if height >= column else _Y


def path_weight(n: int, path: LatticePath) -> MPoly:
    return reduce(
        mul,
        (edge_weight(n, a, h) for a, h in path.right_steps()),
        _ONE
    )


def iter_paths(start: Point, end: Point) -> Iterator[LatticePath]:
    """
    Lists every Right/Down path between two points.
    """
    rights = end[0] - start[0]
    downs = start[1] - end[1]
    if rights < 0 or downs < 0:
        return
    length = rights + downs
    for chosen in combinations(range(length), rights):
        positions = set(chosen)
        steps = ''.join('R' if k in positions else 'D' for k in range(length))
        yield LatticePath(start=start, steps=steps)


def _check_ends(n: int, j: int, i: int) -> None:
    if not (0 <= i < n and 0 <= j < n):
        raise AsmDppError(f'path from (0, {j}) to ({i}, 0) is off the '
                          f'{n}x{n} grid')


def _path_sums_from(n: int, i: int, top: int) -> Dict[Point, MPoly]:
    table: Dict[Point, MPoly] = {}
    for height in range(top + 1):
        for column in range(i, -1, -1):
            if (column, height) == (i, 0):
                table[column, height] = _ONE
                continue
            total = MPoly.constant(0).declare(PATH_VARIABLES)
            if column < i:
                total += edge_weight(n, column, height) * \
                    table[column + 1, height]
            if height > 0:
                total += table[column, height - 1]
            table[column, height] = total
    return table


def path_weight_sum_bruteforce(n: int, j: int, i: int) -> MPoly:
    """
    Sums path weights from (0, j) to (i, 0) by dynamic programming over
    grid points. For n <= 3 the paths are also listed one by one and the
    two sums compared.

    :param n: the grid size
    :param j: starting row
    :param i: ending column

    :return: a polynomial in x, y, z1 and z2
    """
    _check_ends(n, j, i)
    total = _path_sums_from(n, i, j)[0, j]
    if n <= 3:
        listed = sum(
            (path_weight(n, p) for p in iter_paths((0, j), (i, 0))),
            MPoly.constant(0)
        )
        if listed != total:
            raise AsmDppError(f'path sums from (0, {j}) to ({i}, 0) '
                              f'disagree: {listed} != {total}')
    return total


def path_weight_sum_closed(n: int, j: int, i: int) -> MPoly:
    """
    The binomial sum formula for the path weight sum from (0, j) to
    (i, 0), in three cases according to how many of the two top rows the
    path can reach.
    """
    _check_ends(n, j, i)
    terms: Dict[Tuple[int, int, int, int], int] = {}

    def add(k: int, e1: int, e2: int, coeff: int) -> None:
        if coeff:
            key = (k, i - k, e1, e2)
            terms[key] = terms.get(key, 0) + coeff

    for k in range(min(i, j + 1) + 1 if j <= n - 3 else i + 1):
        lead = binom(i - 1, i - k)
        if not lead:
            continue
        if j <= n - 3:
            add(k, 0, 0, lead * binom(j + 1, k))
            continue
        for s in range(k + 1):
            coeff = lead * binom(n - s - 2, k - s)
            if j == n - 2:
                add(k, 0, s, coeff)
            else:
                for m in range(s + 1):
                    add(k, m, s - m, coeff)
    return MPoly.from_terms(terms, PATH_VARIABLES)


def enumerate_nilps(n: int) -> Iterator[PathFamily]:
    """
    Yields every nonintersecting family of order `n` as the image of
    :func:`~asmdpp.dpp.enumerate_dpps`, checking each one.
    """
    for d in enumerate_dpps(n):
        family = dpp_to_nilp(d)
        validate_family(family)
        yield family


def endpoint_tuples(n: int) -> Iterator[Tuple[List[Point], List[Point]]]:
    """
    Yields the (starts, ends) of every possible family of order `n`: one
    pair for each strictly decreasing n - 1 >= lambda_1 > ... > lambda_t
    >= 1.
    """
    for t in range(n):
        for chosen in combinations(range(n - 1, 0, -1), t):
            tops = (n,) + chosen
            starts = [(0, top - 1) for top in tops]
            ends = [(column, 0) for column in chosen] + [(0, 0)]
            yield starts, ends


def path_sum_matrix(
    n: int,
    starts: Sequence[Point],
    ends: Sequence[Point]
) -> Matrix[MPoly]:
    """
    The matrix of single-path weight sums, row a for start a and column b
    for end b.
    """
    return Matrix.build(
        len(starts), len(ends),
        lambda a, b: path_weight_sum_bruteforce(n, starts[a][1], ends[b][0])
    )


def family_sum_bruteforce(
    n: int,
    starts: Sequence[Point],
    ends: Sequence[Point]
) -> MPoly:
    """
    Sums the weights of all nonintersecting families joining start a to
    end a, by backtracking over explicit path listings.
    """
    options = [list(iter_paths(s, e)) for s, e in zip(starts, ends)]
    total = MPoly.constant(0).declare(PATH_VARIABLES)

    def extend(index: int, used: FrozenSet[Point], weight: MPoly) -> None:
        nonlocal total
        if index == len(options):
            total += weight
            return
        for path in options[index]:
            visited = frozenset(path.points())
            if visited & used:
                continue
            extend(index + 1, used | visited, weight * path_weight(n, path))

    extend(0, frozenset(), _ONE)
    return total


def verify_lgv(n: int) -> Optional[str]:
    """
    Compares the path-sum determinant with the brute-force family sum for
    every endpoint tuple of order `n`.

    :return: None when everything agrees, otherwise a description of the
        first mismatch
    """
    for starts, ends in endpoint_tuples(n):
        determinant = det(path_sum_matrix(n, starts, ends))
        brute = family_sum_bruteforce(n, starts, ends)
        if determinant != brute:
            return f'starts {starts} ends {ends}: {determinant} != {brute}'
    logger.debug('path determinants match family sums for n = %s', n)
    return None


def dpp_lgv_reassembly(n: int) -> MPoly:
    """
    Rebuilds the DPP generating function as a sum over lambda of bordered
    path-sum determinants, each multiplied by z2 when lambda_1 = n - 1.
    """
    if n < 2:
        raise AsmDppError('the determinant forms need n >= 2')
    total = MPoly.constant(0).declare(PATH_VARIABLES)
    for t in range(n):
        for chosen in combinations(range(n - 1, 0, -1), t):
            rows = [0] + list(reversed(chosen))
            cols = [value - 1 for value in reversed(chosen)] + [n - 1]
            m = Matrix.build(
                t + 1, t + 1,
                lambda a, b: path_weight_sum_bruteforce(n, cols[b], rows[a])
            )
            term = det(m)
            if chosen and chosen[0] == n - 1:
                term = term * _Z2
            total += term
    return total


def dpp_lgv_matrix(n: int, row_factor: bool = False) -> Matrix[MPoly]:
    """
    The single nxn matrix -delta_{i,j+1} + f * P(j -> i) whose
    determinant is the DPP generating function, where P(j -> i) is the
    path sum from (0, j) to (i, 0) and f is z2 in column n - 2 (or, with
    `row_factor`, in row n - 1) and 1 elsewhere.
    """
    if n < 2:
        raise AsmDppError('the determinant forms need n >= 2')

    def entry(i: int, j: int) -> MPoly:
        value = path_weight_sum_bruteforce(n, j, i)
        if (i == n - 1) if row_factor else (j == n - 2):
            value = value * _Z2
        return value - 1 if i == j + 1 else value

    return Matrix.build(n, n, entry)


def dpp_lgv_sum(n: int, row_factor: bool = False) -> MPoly:
    """
    The determinant of :func:`dpp_lgv_matrix`.
    """
    return det(dpp_lgv_matrix(n, row_factor))
