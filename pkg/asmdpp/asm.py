from itertools import accumulate, product
from typing import Any, Dict, Iterator, List, Mapping, Sequence, Tuple

from asmdpp import logger
from asmdpp.algebra import Matrix
from asmdpp.utils import AsmDppError, AsmDppJsonDataclass

Row = Tuple[int, ...]


class AsmStats(AsmDppJsonDataclass):
    """
    Dataclass containing the statistics of an alternating sign matrix: the
    generalized inversion number `nu`, the number of -1's `mu`, and the
    four boundary statistics (the number of 0's to the left of the 1 in the
    first row, to the right of the 1 in the last row, above the 1 in the
    first column and below the 1 in the last column).
    """
    nu: int
    mu: int
    rho1: int
    rho2: int
    rho3: int
    rho4: int

    @property
    def key(self) -> Tuple[int, int, int, int]:
        """
        The (nu, mu, rho1, rho2) tuple the generating functions track.
        """
        return self.nu, self.mu, self.rho1, self.rho2


class Asm(AsmDppJsonDataclass):
    """
    Dataclass representing an nxn alternating sign matrix: entries in
    {-1, 0, 1}, every row and column summing to 1, and nonzero entries
    alternating in sign along every row and column.

    Build instances with :func:`validate_asm`; enumeration and the symmetry
    operations produce them directly.
    """
    n: int
    rows: Tuple[Row, ...]

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.rows[i][j]

    def matrix(self) -> Matrix[int]:
        return Matrix.from_rows(self.rows)

    def transpose(self) -> 'Asm':
        return Asm.model_construct(
            n=self.n, rows=tuple(zip(*self.rows))
        )

    def is_permutation(self) -> bool:
        return all(-1 not in row for row in self.rows)

    def to_json(self) -> Dict[str, Any]:
        return {'n': self.n, 'rows': [list(row) for row in self.rows]}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> 'Asm':
        """
        Parses and validates ``{"n": 3, "rows": [[...], ...]}``.
        """
        try:
            rows = data['rows']
        except (KeyError, TypeError):
            raise AsmDppError('ASM JSON needs "rows"')
        asm = validate_asm(rows)
        if 'n' in data and data['n'] != asm.n:
            raise AsmDppError(f'n = {data["n"]} but {asm.n} rows were given')
        return asm


def _alternates(line: Sequence[int]) -> bool:
    return all(s in (0, 1) for s in accumulate(line))


def validate_asm(candidate: Sequence[Sequence[int]]) -> Asm:
    """
    Checks that a square integer array is an alternating sign matrix.

    :param candidate: the rows of the array

    :return: the validated :class:`Asm`
    """
    n = len(candidate)
    if n == 0 or any(len(row) != n for row in candidate):
        raise AsmDppError('an ASM must be a nonempty square array')
    rows = tuple(tuple(row) for row in candidate)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            if value not in (-1, 0, 1) or isinstance(value, bool):
                raise AsmDppError(f'entry ({i}, {j}) = {value!r} is not -1, '
                                  '0 or 1')
    columns = tuple(zip(*rows))
    for i, row in enumerate(rows):
        if sum(row) != 1:
            raise AsmDppError(f'row {i} sums to {sum(row)}')
    for j, column in enumerate(columns):
        if sum(column) != 1:
            raise AsmDppError(f'column {j} sums to {sum(column)}')
    for i, row in enumerate(rows):
        if not _alternates(row):
            raise AsmDppError(f'signs do not alternate in row {i}')
    for j, column in enumerate(columns):
        if not _alternates(column):
            raise AsmDppError(f'signs do not alternate in column {j}')
    return Asm(n=n, rows=rows)


def _admissible_rows(state: Row) -> List[Tuple[Row, Row]]:
    # state holds the column partial sums so far, each 0 or 1
    options = [(0, 1) if s == 0 else (-1, 0) for s in state]
    result = []
    for row in product(*options):
        partial = list(accumulate(row))
        if partial[-1] == 1 and all(s in (0, 1) for s in partial):
            result.append((row, tuple(s + r for s, r in zip(state, row))))
    return result


def enumerate_asms(n: int) -> Iterator[Asm]:
    """
    Yields every nxn alternating sign matrix exactly once, in lexicographic
    order of their rows.

    The matrices are built row by row; a row is admissible when it keeps
    every column partial sum in {0, 1} and its own partial sums in {0, 1}.

    :param n: the order, at least 1
    """
    if n < 1:
        raise AsmDppError(f'ASMs need n >= 1, not {n}')
    memo: Dict[Row, List[Tuple[Row, Row]]] = {}

    def rows_for(state: Row) -> List[Tuple[Row, Row]]:
        if state not in memo:
            memo[state] = _admissible_rows(state)
        return memo[state]

    def walk(state: Row, prefix: Tuple[Row, ...]) -> Iterator[Asm]:
        if len(prefix) == n:
            yield Asm.model_construct(n=n, rows=prefix)
            return
        for row, following in rows_for(state):
            yield from walk(following, prefix + (row,))

    count = 0
    for asm in walk((0,) * n, ()):
        count += 1
        yield asm
    logger.debug('enumerated %s ASMs of order %s', count, n)


def asm_stats(a: Asm) -> AsmStats:
    """
    Computes all six statistics. `nu` is the sum of A_ij * A_i'j' over
    i < i' and j' <= j.

    :param a: a valid ASM

    :return: the statistics
    """
    n = a.n
    nu = 0
    above = [0] * n
    for row in a.rows:
        suffix = 0
        for j in range(n - 1, -1, -1):
            suffix += above[j]
            if row[j]:
                nu += row[j] * suffix
        for j, value in enumerate(row):
            above[j] += value
    mu = sum(row.count(-1) for row in a.rows)
    first_column = [row[0] for row in a.rows]
    last_column = [row[-1] for row in a.rows]
    return AsmStats(
        nu=nu,
        mu=mu,
        rho1=a.rows[0].index(1),
        rho2=n - 1 - a.rows[-1].index(1),
        rho3=first_column.index(1),
        rho4=n - 1 - last_column.index(1)
    )


def asm_nu_alt(a: Asm) -> int:
    """
    The generalized inversion number written as the sum of A_ij * A_i'j'
    over i <= i' and j' < j; always equal to ``asm_stats(a).nu``.
    """
    cells = [
        (i, j, value)
        for i, row in enumerate(a.rows)
        for j, value in enumerate(row) if value
    ]
    return sum(
        v * w
        for i, j, v in cells
        for k, l, w in cells
        if i <= k and l < j
    )


def asm_inversions(a: Asm) -> int:
    """
    Inversion count of a permutation matrix.
    """
    if not a.is_permutation():
        raise AsmDppError('inversions are only defined for permutations')
    image = [row.index(1) for row in a.rows]
    return sum(
        1
        for i in range(a.n)
        for k in range(i + 1, a.n)
        if image[i] > image[k]
    )


def asm_star(a: Asm) -> Asm:
    """
    Reflects the matrix in a vertical line.
    """
    return Asm.model_construct(
        n=a.n, rows=tuple(row[::-1] for row in a.rows)
    )


def asm_dagger(a: Asm) -> Asm:
    """
    Rotates the matrix by a half turn.
    """
    return Asm.model_construct(
        n=a.n, rows=tuple(row[::-1] for row in reversed(a.rows))
    )
