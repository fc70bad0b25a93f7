from enum import Enum
from fractions import Fraction
from typing import (Any, Callable, Dict, FrozenSet, Generic, Iterable, List,
                    Mapping, Optional, Sequence, Tuple, TypeVar, Union)

from sympy.polys.domains import ZZ
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, ring

from asmdpp import logger
from asmdpp.utils import AsmDppError

#: canonical variable order shared by every polynomial
VARIABLES = ('x', 'y', 'z1', 'z2', 'z3', 'z4')

_RING, *_GENERATORS = ring(','.join(VARIABLES), ZZ, grlex)

Exponents = Tuple[int, ...]
Number = Union[int, Fraction]


def _index(name: str) -> int:
    try:
        return VARIABLES.index(name)
    except ValueError:
        raise AsmDppError(f'unknown variable {name!r}')


class PolyOp(str, Enum):
    """
    This is an :class:`~enum.Enum` that contains the arithmetic operations
    accepted by :func:`poly_arith`.
    """
    ADD = 'add'
    SUB = 'sub'
    MUL = 'mul'


class MPoly:
    """
    A sparse polynomial with integer coefficients in the variables
    x, y, z1, z2, z3 and z4.

    Besides its terms, a polynomial remembers the variables it was declared
    over, so that a generating function in (x, y, z1, z2) keeps all four
    names even when it happens to be constant. Equality only looks at the
    terms.

    Values are never mutated after construction.
    """
    __slots__ = ('_element', '_declared')

    def __init__(
        self,
        element: Optional[PolyElement] = None,
        variables: Iterable[str] = ()
    ):
        self._element = _RING.zero if element is None else element
        declared = frozenset(variables)
        for name in declared:
            _index(name)
        self._declared: FrozenSet[str] = declared

    @classmethod
    def constant(cls, value: int) -> 'MPoly':
        """
        Creates a constant polynomial.

        :param value: the integer value
        """
        return cls(_RING.ground_new(value))

    @classmethod
    def var(cls, name: str) -> 'MPoly':
        """
        Creates the polynomial consisting of a single variable.

        :param name: one of :data:`VARIABLES`
        """
        return cls(_GENERATORS[_index(name)])

    @classmethod
    def from_terms(
        cls,
        terms: Mapping[Exponents, int],
        variables: Sequence[str]
    ) -> 'MPoly':
        """
        Creates a polynomial from a mapping of exponent vectors to
        coefficients. Zero coefficients are dropped.

        :param terms: exponent vectors aligned with `variables`
        :param variables: the variable names the vectors refer to
        """
        positions = [_index(name) for name in variables]
        element: Dict[Exponents, int] = {}
        for exponents, coeff in terms.items():
            if len(exponents) != len(positions):
                raise AsmDppError(
                    f'exponent vector {exponents} does not match {variables}'
                )
            monom = [0] * len(VARIABLES)
            for position, exponent in zip(positions, exponents):
                if exponent < 0:
                    raise AsmDppError(f'negative exponent in {exponents}')
                monom[position] = exponent
            key = tuple(monom)
            element[key] = element.get(key, 0) + coeff
        return cls(_RING.from_dict(element), variables)

    @property
    def variables(self) -> Tuple[str, ...]:
        """
        The declared and occurring variables, in canonical order.
        """
        used = self._declared.union(self.occurring())
        return tuple(name for name in VARIABLES if name in used)

    def occurring(self) -> Tuple[str, ...]:
        """
        The variables that appear with a positive exponent in some term.
        """
        seen = [False] * len(VARIABLES)
        for monom in self._element.keys():
            for k, exponent in enumerate(monom):
                if exponent:
                    seen[k] = True
        return tuple(name for name, hit in zip(VARIABLES, seen) if hit)

    def declare(self, variables: Iterable[str]) -> 'MPoly':
        """
        Returns the same polynomial with extra declared variables.
        """
        return MPoly(self._element, self._declared.union(variables))

    def is_zero(self) -> bool:
        return not self._element

    def __bool__(self) -> bool:
        return bool(self._element)

    def __len__(self) -> int:
        return len(self._element)

    def _wrap(self, element: PolyElement, other: Any = None) -> 'MPoly':
        declared = self._declared
        if isinstance(other, MPoly):
            declared = declared | other._declared
        return MPoly(element, declared)

    def __add__(self, other: Any) -> 'MPoly':
        element = _lift(other)
        if element is None:
            return NotImplemented
        return self._wrap(self._element + element, other)

    __radd__ = __add__

    def __sub__(self, other: Any) -> 'MPoly':
        element = _lift(other)
        if element is None:
            return NotImplemented
        return self._wrap(self._element - element, other)

    def __rsub__(self, other: Any) -> 'MPoly':
        element = _lift(other)
        if element is None:
            return NotImplemented
        return self._wrap(element - self._element, other)

    def __mul__(self, other: Any) -> 'MPoly':
        element = _lift(other)
        if element is None:
            return NotImplemented
        return self._wrap(self._element * element, other)

    __rmul__ = __mul__

    def __neg__(self) -> 'MPoly':
        return self._wrap(-self._element)

    def __pow__(self, exponent: int) -> 'MPoly':
        if exponent < 0:
            raise AsmDppError('negative powers of polynomials are undefined')
        return self._wrap(self._element ** exponent)

    def __eq__(self, other: Any) -> bool:
        element = _lift(other)
        if element is None:
            return NotImplemented
        return dict.__eq__(self._element, element)

    def __hash__(self) -> int:
        return hash(frozenset(self._element.items()))

    def exquo(self, other: Union['MPoly', int]) -> 'MPoly':
        """
        Exact division.

        :param other: the divisor

        :return: the quotient, which must leave no remainder
        """
        divisor = _lift(other)
        if divisor is None or not divisor:
            raise AsmDppError(f'cannot divide by {other!r}')
        try:
            quotient = self._element.exquo(divisor)
        except ExactQuotientFailed:
            raise AsmDppError(f'{other} does not divide {self}')
        return self._wrap(quotient, other)

    def coefficient(self, **exponents: int) -> int:
        """
        The coefficient of a monomial, given as keyword exponents, e.g.
        ``p.coefficient(x=3, z1=2, z2=2)``.
        """
        monom = [0] * len(VARIABLES)
        for name, exponent in exponents.items():
            monom[_index(name)] = exponent
        return int(self._element.get(tuple(monom), 0))

    def terms(
        self,
        variables: Optional[Sequence[str]] = None
    ) -> List[Tuple[Exponents, int]]:
        """
        The nonzero terms in ascending graded-lexicographic order.

        :param variables:
            the variables to project exponent vectors onto, defaulting to
            :attr:`variables`; must include every occurring variable

        :return: (exponent vector, coefficient) pairs
        """
        names = self.variables if variables is None else tuple(variables)
        missing = set(self.occurring()) - set(names)
        if missing:
            raise AsmDppError(f'terms use variables {sorted(missing)}')
        positions = [_index(name) for name in names]
        return [
            (tuple(monom[k] for k in positions), int(coeff))
            for monom, coeff in reversed(self._element.terms(grlex))
        ]

    def evaluate(self, point: Mapping[str, Number]) -> Fraction:
        """
        Evaluates the polynomial exactly at a rational point.

        :param point: a value for every occurring variable

        :return: the exact value
        """
        missing = [name for name in self.occurring() if name not in point]
        if missing:
            raise AsmDppError(f'no value given for {", ".join(missing)}')
        values = [
            Fraction(point[name]) if name in point else Fraction(0)
            for name in VARIABLES
        ]
        total = Fraction(0)
        for monom, coeff in self._element.items():
            term = Fraction(int(coeff))
            for value, exponent in zip(values, monom):
                if exponent:
                    term *= value ** exponent
            total += term
        return total

    def substitute(
        self,
        mapping: Mapping[str, Union['MPoly', int]]
    ) -> 'MPoly':
        """
        Replaces variables by polynomials, all at once, so that
        ``{'z1': z2, 'z2': 1}`` moves z1 into the place of z2.

        :param mapping: variable name to replacement

        :return: the composed polynomial
        """
        replacements = []
        declared = self._declared - set(mapping)
        for name, value in mapping.items():
            element = _lift(value)
            if element is None:
                raise AsmDppError(f'cannot substitute {value!r} for {name}')
            replacements.append((_GENERATORS[_index(name)], element))
            if isinstance(value, MPoly):
                declared = declared | value._declared
        if not replacements:
            return self
        return MPoly(self._element.compose(replacements), declared)

    def to_json(self) -> Dict[str, Any]:
        """
        Serializes to the canonical JSON-ready form with ascending
        graded-lexicographic terms and decimal string coefficients.
        """
        return {
            'vars': list(self.variables),
            'terms': [
                {'c': str(coeff), 'e': list(exponents)}
                for exponents, coeff in self.terms()
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> 'MPoly':
        """
        Parses the form produced by :meth:`to_json`.

        :param data: the decoded JSON object
        """
        try:
            names = list(data['vars'])
            raw_terms = list(data['terms'])
        except (KeyError, TypeError):
            raise AsmDppError('polynomial JSON needs "vars" and "terms"')
        order = [name for name in VARIABLES if name in names]
        if order != names or len(set(names)) != len(names):
            raise AsmDppError(f'variables {names} are not in canonical order')
        terms: Dict[Exponents, int] = {}
        for raw in raw_terms:
            exponents = tuple(int(e) for e in raw['e'])
            coeff = int(raw['c'])
            if coeff == 0:
                raise AsmDppError(f'zero coefficient stored for {exponents}')
            if exponents in terms:
                raise AsmDppError(f'duplicate term {exponents}')
            terms[exponents] = coeff
        return cls.from_terms(terms, names)

    def __str__(self) -> str:
        if not self._element:
            return '0'
        pieces = []
        for exponents, coeff in self.terms(VARIABLES):
            factors = [
                name if e == 1 else f'{name}^{e}'
                for name, e in zip(VARIABLES, exponents) if e
            ]
            if not factors:
                pieces.append(str(coeff))
                continue
            monomial = '*'.join(factors)
            if coeff == 1:
                pieces.append(monomial)
            elif coeff == -1:
                pieces.append(f'-{monomial}')
            else:
                pieces.append(f'{coeff}*{monomial}')
        return ' + '.join(pieces).replace('+ -', '- ')

    def __repr__(self) -> str:
        return f'MPoly({self})'


def _lift(value: Any) -> Optional[PolyElement]:
    if isinstance(value, MPoly):
        return value._element
    if isinstance(value, int):
        return _RING.ground_new(value)
    return None


def poly_arith(a: MPoly, b: MPoly, op: Union[PolyOp, str]) -> MPoly:
    """
    Adds, subtracts or multiplies two polynomials over the union of their
    variables.

    :param a: left operand
    :param b: right operand
    :param op: which operation to perform

    :return: the exact result
    """
    op = PolyOp(op)
    if op == PolyOp.ADD:
        return a + b
    if op == PolyOp.SUB:
        return a - b
    return a * b


def poly_eval(p: MPoly, point: Mapping[str, Number]) -> Fraction:
    """
    Evaluates `p` exactly; see :meth:`MPoly.evaluate`.
    """
    return p.evaluate(point)


def poly_substitute(
    p: MPoly,
    sub: Mapping[str, Union[MPoly, int]]
) -> MPoly:
    """
    Substitutes polynomials for variables; see :meth:`MPoly.substitute`.
    """
    return p.substitute(sub)


S = TypeVar('S')


class Matrix(Generic[S]):
    """
    An immutable dense matrix over integers, rationals or polynomials,
    stored row-major.
    """
    __slots__ = ('rows', 'cols', 'entries')

    def __init__(self, rows: int, cols: int, entries: Iterable[S]):
        values = tuple(entries)
        if rows < 0 or cols < 0 or len(values) != rows * cols:
            raise AsmDppError(
                f'{len(values)} entries cannot fill a {rows}x{cols} matrix'
            )
        self.rows = rows
        self.cols = cols
        self.entries = values

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[S]]) -> 'Matrix[S]':
        """
        Creates a matrix from a list of equally long rows.
        """
        if not rows:
            return cls(0, 0, ())
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise AsmDppError('rows have different lengths')
        return cls(len(rows), width, (v for row in rows for v in row))

    @classmethod
    def build(
        cls,
        rows: int,
        cols: int,
        entry: Callable[[int, int], S]
    ) -> 'Matrix[S]':
        """
        Creates a matrix from a function of (row, column).
        """
        return cls(
            rows, cols, (entry(i, j) for i in range(rows) for j in range(cols))
        )

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> S:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise AsmDppError(f'index {index} out of range')
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[S, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[List[S]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> 'Matrix[S]':
        return Matrix.build(self.cols, self.rows, lambda i, j: self[j, i])

    def select(self, rows: Sequence[int], cols: Sequence[int]) -> 'Matrix[S]':
        """
        The submatrix keeping the given rows and columns, in the given
        order.
        """
        return Matrix.build(
            len(rows), len(cols), lambda i, j: self[rows[i], cols[j]]
        )

    def map(self, f: Callable[[S], Any]) -> 'Matrix[Any]':
        return Matrix(self.rows, self.cols, (f(v) for v in self.entries))

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and \
            all(a == b for a, b in zip(self.entries, other.entries))

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f'Matrix({self.to_rows()})'


def minor(
    m: Matrix[S],
    del_rows: Iterable[int],
    del_cols: Iterable[int]
) -> Matrix[S]:
    """
    Deletes rows and columns from a matrix, keeping the order of the rest.

    :param m: the matrix
    :param del_rows: indices of rows to delete
    :param del_cols: indices of columns to delete

    :return: the submatrix
    """
    drop_rows = set(del_rows)
    drop_cols = set(del_cols)
    for index in drop_rows:
        if not 0 <= index < m.rows:
            raise AsmDppError(f'row {index} out of range for {m.rows} rows')
    for index in drop_cols:
        if not 0 <= index < m.cols:
            raise AsmDppError(
                f'column {index} out of range for {m.cols} columns'
            )
    keep_rows = [i for i in range(m.rows) if i not in drop_rows]
    keep_cols = [j for j in range(m.cols) if j not in drop_cols]
    return m.select(keep_rows, keep_cols)


def _exact_div(num: Any, den: Any) -> Any:
    if isinstance(num, MPoly):
        return num.exquo(den)
    if isinstance(den, MPoly):
        return MPoly.constant(num).exquo(den)
    if isinstance(num, Fraction) or isinstance(den, Fraction):
        return Fraction(num) / Fraction(den)
    quotient, remainder = divmod(num, den)
    if remainder:
        raise AsmDppError(f'{den} does not divide {num}')
    return quotient


def _bareiss(m: Matrix[Any]) -> Any:
    n = m.rows
    a = m.to_rows()
    negate = False
    previous: Any = 1
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return a[k][k] - a[k][k]
            a[k], a[swap] = a[swap], a[k]
            negate = not negate
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                value = a[i][j] * pivot - a[i][k] * a[k][j]
                a[i][j] = value if k == 0 else _exact_div(value, previous)
        previous = pivot
    result = a[n - 1][n - 1]
    return -result if negate else result


def det(m: Matrix[S]) -> S:
    """
    Exact determinant by fraction-free (Bareiss) elimination; every
    division along the way is exact.

    :param m: a square matrix

    :return: the determinant, of the same scalar type as the entries
    """
    if not m.is_square:
        raise AsmDppError(f'determinant of a {m.rows}x{m.cols} matrix')
    n = m.rows
    if n == 0:
        return 1  # type: ignore
    if n == 1:
        return m.entries[0]
    if n == 2:
        a, b, c, d = m.entries
        return a * d - b * c  # type: ignore
    logger.debug('bareiss elimination on a %sx%s matrix', n, n)
    return _bareiss(m)


def cofactor_det(m: Matrix[S]) -> S:
    """
    Determinant by cofactor expansion along the first row. Exponential, so
    only useful as an independent check on small matrices.
    """
    if not m.is_square:
        raise AsmDppError(f'determinant of a {m.rows}x{m.cols} matrix')
    if m.rows == 0:
        return 1  # type: ignore
    if m.rows == 1:
        return m.entries[0]
    total: Any = 0
    for j in range(m.cols):
        entry = m[0, j]
        if not entry:
            continue
        term = entry * cofactor_det(minor(m, [0], [j]))  # type: ignore
        total = total - term if j % 2 else total + term
    return total


class DesnanotForm(str, Enum):
    """
    This is an :class:`~enum.Enum` that contains the three equivalent
    shapes of the Desnanot-Jacobi identity: the classic square form, the
    two-row-deleted form for (n+2)xn matrices and the mixed form for
    (n+1)xn matrices.
    """
    CLASSIC = 'classic'
    TWO_COLUMN = 'two_column'
    MIXED = 'mixed'


def _require_increasing(indices: Sequence[int], bound: int, what: str) -> None:
    if any(not 0 <= k < bound for k in indices):
        raise AsmDppError(f'{what} {list(indices)} out of range [0, {bound})')
    if any(a >= b for a, b in zip(indices, indices[1:])):
        raise AsmDppError(f'{what} {list(indices)} are not increasing')


def check_desnanot_jacobi(
    m: Matrix[Any],
    form: Union[DesnanotForm, str],
    rows: Sequence[int],
    cols: Sequence[int] = ()
) -> bool:
    """
    Evaluates one form of the Desnanot-Jacobi identity exactly. Indices
    start at 0.

    - classic: `m` is nxn, `rows` = (i1, i2), `cols` = (j1, j2)
    - two_column: `m` is (n+2)xn, `rows` = (k1, k2, k3, k4), no `cols`
    - mixed: `m` is (n+1)xn, `rows` = (k1, k2, k3), `cols` = (l,)

    :return: whether the identity holds, which it always should
    """
    form = DesnanotForm(form)
    _require_increasing(rows, m.rows, 'rows')
    _require_increasing(cols, m.cols, 'columns')

    def d(del_rows: Sequence[int], del_cols: Sequence[int] = ()) -> Any:
        return det(minor(m, del_rows, del_cols))

    if form == DesnanotForm.CLASSIC:
        if not m.is_square or len(rows) != 2 or len(cols) != 2:
            raise AsmDppError('classic form needs a square matrix, 2 rows '
                              'and 2 columns')
        (i1, i2), (j1, j2) = rows, cols
        lhs = d([]) * d(rows, cols)
        rhs = d([i1], [j1]) * d([i2], [j2]) - d([i1], [j2]) * d([i2], [j1])
        return bool(lhs == rhs)

    if form == DesnanotForm.TWO_COLUMN:
        if m.rows != m.cols + 2 or len(rows) != 4 or cols:
            raise AsmDppError('two_column form needs an (n+2)xn matrix and '
                              '4 rows')
        k1, k2, k3, k4 = rows
        total = d([k1, k2]) * d([k3, k4]) - d([k1, k3]) * d([k2, k4]) + \
            d([k1, k4]) * d([k2, k3])
        return bool(total == 0)

    if m.rows != m.cols + 1 or len(rows) != 3 or len(cols) != 1:
        raise AsmDppError('mixed form needs an (n+1)xn matrix, 3 rows and '
                          '1 column')
    k1, k2, k3 = rows
    total = d([k1]) * d([k2, k3], cols) - d([k2]) * d([k1, k3], cols) + \
        d([k3]) * d([k1, k2], cols)
    return bool(total == 0)
