from typing import (Any, Dict, Iterator, List, Mapping, Optional, Sequence,
                    Tuple)

from asmdpp import logger
from asmdpp.utils import AsmDppError, AsmDppJsonDataclass

Row = Tuple[int, ...]


class DppStats(AsmDppJsonDataclass):
    """
    Dataclass containing the statistics of a descending plane partition:
    `nu` and `mu` count nonspecial and special parts, `rho1` counts the
    n's, `rho2` counts the (n-1)'s plus one if the first row has length
    n-1, and `rho3` counts the (n-1)'s in the first row.
    """
    nu: int
    mu: int
    rho1: int
    rho2: int
    rho3: int

    @property
    def key(self) -> Tuple[int, int, int, int]:
        """
        The (nu, mu, rho1, rho2) tuple the generating functions track.
        """
        return self.nu, self.mu, self.rho1, self.rho2


class Dpp(AsmDppJsonDataclass):
    """
    Dataclass representing a descending plane partition with each part at
    most `n`. Row i (counting from 1) is shifted i-1 places to the right,
    so its parts D_ij sit in columns i, ..., i + len(row) - 1.

    Build instances with :func:`validate_dpp`; the empty partition is
    valid for every `n`.
    """
    n: int
    rows: Tuple[Row, ...] = ()

    @property
    def lengths(self) -> Tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    def part(self, i: int, j: int) -> Optional[int]:
        """
        The part D_ij in 1-based shifted coordinates, or None where the
        array has no part.
        """
        if not 1 <= i <= len(self.rows):
            return None
        row = self.rows[i - 1]
        k = j - i
        if not 0 <= k < len(row):
            return None
        return row[k]

    def to_json(self) -> Dict[str, Any]:
        return {'n': self.n, 'rows': [list(row) for row in self.rows]}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> 'Dpp':
        """
        Parses and validates ``{"n": 6, "rows": [[6, 6, 6, 5, 2], ...]}``.
        """
        try:
            return validate_dpp(data.get('rows', []), data['n'])
        except (KeyError, AttributeError):
            raise AsmDppError('DPP JSON needs "n" and "rows"')

    def __str__(self) -> str:
        if not self.rows:
            return '()'
        return ' / '.join(' '.join(map(str, row)) for row in self.rows)


def validate_dpp(candidate: Sequence[Sequence[int]], n: int) -> Dpp:
    """
    Checks the descending plane partition conditions: positive parts at
    most `n`, weak decrease along rows, strict decrease down columns, and
    lambda_{i-1} >= D_ii > lambda_i for the row lengths lambda.

    :param candidate: the rows, each a nonempty list of parts
    :param n: the bound on the parts

    :return: the validated :class:`Dpp`
    """
    if n < 1:
        raise AsmDppError(f'DPPs need n >= 1, not {n}')
    rows = tuple(tuple(row) for row in candidate)
    for i, row in enumerate(rows, start=1):
        if not row:
            raise AsmDppError(f'row {i} is empty')
        for part in row:
            if isinstance(part, bool) or not isinstance(part, int) \
                    or part < 1:
                raise AsmDppError(f'row {i} has a part {part!r} that is not '
                                  'a positive integer')
            if part > n:
                raise AsmDppError(f'part {part} in row {i} exceeds n = {n}')
        if any(a < b for a, b in zip(row, row[1:])):
            raise AsmDppError(f'row {i} is not weakly decreasing')
        if row[0] <= len(row):
            raise AsmDppError(f'D_{i}{i} = {row[0]} is not greater than the '
                              f'row length {len(row)}')
        if i > 1:
            above = rows[i - 2]
            if len(above) < row[0]:
                raise AsmDppError(f'row {i - 1} has length {len(above)}, '
                                  f'less than D_{i}{i} = {row[0]}')
            for k, part in enumerate(row):
                if part >= above[k + 1]:
                    raise AsmDppError(
                        f'column {i + k} does not strictly decrease between '
                        f'rows {i - 1} and {i}'
                    )
    return Dpp(n=n, rows=rows)


def _fill(prefix: Row, length: int, above: Optional[Row]) -> Iterator[Row]:
    k = len(prefix)
    if k == length:
        yield prefix
        return
    top = prefix[-1]
    if above is not None:
        top = min(top, above[k + 1] - 1)
    for part in range(top, 0, -1):
        yield from _fill(prefix + (part,), length, above)


def _next_rows(above: Optional[Row], n: int) -> Iterator[Row]:
    if above is None:
        top = n
    elif len(above) < 2:
        return
    else:
        top = min(len(above), above[1] - 1)
    for first in range(top, 1, -1):
        for length in range(first - 1, 0, -1):
            yield from _fill((first,), length, above)


def enumerate_dpps(n: int) -> Iterator[Dpp]:
    """
    Yields every descending plane partition with parts at most `n` exactly
    once. The empty partition comes first; after that, rows are chosen top
    down, each row followed by all of its extensions.

    :param n: the bound on the parts, at least 1
    """
    if n < 1:
        raise AsmDppError(f'DPPs need n >= 1, not {n}')

    def extend(rows: Tuple[Row, ...]) -> Iterator[Tuple[Row, ...]]:
        for row in _next_rows(rows[-1] if rows else None, n):
            grown = rows + (row,)
            yield grown
            yield from extend(grown)

    yield Dpp.model_construct(n=n, rows=())
    count = 1
    for rows in extend(()):
        count += 1
        yield Dpp.model_construct(n=n, rows=rows)
    logger.debug('enumerated %s DPPs of order %s', count, n)


def dpp_stats(d: Dpp) -> DppStats:
    """
    Computes the statistics. A part D_ij is special when D_ij <= j - i,
    i.e. when it is at most its 0-based position in its row.

    :param d: a valid DPP

    :return: the statistics
    """
    n = d.n
    nu = mu = 0
    for i, row in enumerate(d.rows, start=1):
        for k, part in enumerate(row):
            if part <= k:
                mu += 1
            else:
                nu += 1
            if part == n and i > 1:
                raise AsmDppError(f'part n = {n} found in row {i}')
            if part == n - 1 and i > 2:
                raise AsmDppError(f'part n-1 = {n - 1} found in row {i}')
    rho1 = sum(part == n for part in (d.rows[0] if d.rows else ()))
    rho2 = sum(row.count(n - 1) for row in d.rows)
    if d.rows and len(d.rows[0]) == n - 1:
        rho2 += 1
    rho3 = d.rows[0].count(n - 1) if d.rows else 0
    return DppStats(nu=nu, mu=mu, rho1=rho1, rho2=rho2, rho3=rho3)


def dpp_star(d: Dpp) -> Dpp:
    """
    The involution with nu(D*) = n(n-1)/2 - nu(D) - mu(D), the same mu,
    and rho(D*) = n - 1 - rho(D) for rho1 and rho2. For
    1 <= i <= j <= n-1, with E = D_{n-j,n-i}:

    - if E is defined and special, D*_ij = j - i + 1 - E;
    - if E is undefined, D*_ij = n + 1 - i minus the number of rows k with
      a defined part D_{k,n-j} satisfying n + 2 - i - D_{k,n-j} <= k <= n-j;
    - if E is defined and nonspecial, D*_ij is undefined.

    :param d: a valid DPP

    :return: the image, validated
    """
    n = d.n
    rows: List[Row] = []
    ended = False
    for i in range(1, n):
        cells: Dict[int, int] = {}
        for j in range(i, n):
            mirror = d.part(n - j, n - i)
            if mirror is None:
                count = 0
                for k in range(1, n - j + 1):
                    part = d.part(k, n - j)
                    if part is not None and n + 2 - i - part <= k:
                        count += 1
                cells[j] = n + 1 - i - count
            elif mirror <= j - i:
                cells[j] = j - i + 1 - mirror
        if not cells:
            ended = True
            continue
        if ended or sorted(cells) != list(range(i, i + len(cells))):
            raise AsmDppError(f'the reflection of {d} is not a shifted array')
        rows.append(tuple(cells[j] for j in range(i, i + len(cells))))
    return validate_dpp(rows, n)


def dpp_dagger(d: Dpp) -> Dpp:
    """
    The involution exchanging rho1 and rho2: the n's and (n-1)'s at the
    start of the first row are replaced by rho2 n's followed by
    rho1 + rho3 - rho2 (n-1)'s.

    :param d: a valid DPP

    :return: the image, validated
    """
    if not d.rows:
        return d
    n = d.n
    stats = dpp_stats(d)
    first = d.rows[0]
    kept = first[stats.rho1 + stats.rho3:]
    fresh = stats.rho1 + stats.rho3 - stats.rho2
    if fresh < 0:
        raise AsmDppError(f'cannot exchange boundary statistics of {d}')
    row = (n,) * stats.rho2 + (n - 1,) * fresh + kept
    return validate_dpp((row,) + d.rows[1:], n)
