from fractions import Fraction
from itertools import combinations
from random import Random
from typing import (Any, Dict, Iterator, List, Mapping, Optional, Sequence,
                    Tuple)

from pydantic import ConfigDict, field_validator, model_validator

from asmdpp import logger
from asmdpp.algebra import Matrix, MPoly, det
from asmdpp.asm import Asm, enumerate_asms, validate_asm
from asmdpp.utils import (DEFAULT_CAPS, AsmDppError, AsmDppJsonDataclass,
                          Caps, CheckOutcome, random_rational)

Number = Any


#: (left, right, top, bottom) edge values around each vertex type; a
#: horizontal edge is 0 when its arrow points right, a vertical edge is 0
#: when its arrow points up
_TYPE_EDGES: Dict[int, Tuple[int, int, int, int]] = {
    1: (0, 0, 0, 0),
    2: (1, 1, 1, 1),
    3: (1, 1, 0, 0),
    4: (0, 0, 1, 1),
    5: (0, 1, 0, 1),
    6: (1, 0, 1, 0)
}


class SvConfig(AsmDppJsonDataclass):
    """
    Dataclass representing a six-vertex configuration with domain-wall
    boundary conditions as an nxn grid of vertex types 1-6. Edge arrows
    are derived on demand by :func:`sv_edges`.
    """
    n: int
    types: Tuple[Tuple[int, ...], ...]

    def to_json(self) -> Dict[str, Any]:
        return {'n': self.n, 'types': [list(row) for row in self.types]}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> 'SvConfig':
        """
        Parses ``{"n": 3, "types": [[...], ...]}`` and checks that the
        arrows fit together.
        """
        try:
            config = cls(n=data['n'], types=data['types'])
        except (KeyError, TypeError):
            raise AsmDppError('six-vertex JSON needs "n" and "types"')
        sv_edges(config)
        return config


class EdgeOrientations(AsmDppJsonDataclass):
    """
    Dataclass containing the arrows of a configuration. `horizontal` has n
    rows of n+1 edges (0 = pointing right, 1 = pointing left) and
    `vertical` has n+1 rows of n edges (0 = pointing up, 1 = pointing
    down).
    """
    horizontal: Tuple[Tuple[int, ...], ...]
    vertical: Tuple[Tuple[int, ...], ...]


class VertexCounts(AsmDppJsonDataclass):
    """
    Dataclass containing how often each vertex type occurs, overall and
    in each row. Index k - 1 holds the count of type k.
    """
    totals: Tuple[int, ...]
    by_row: Tuple[Tuple[int, ...], ...]

    def total(self, k: int) -> int:
        return self.totals[k - 1]

    def in_row(self, i: int, k: int) -> int:
        """
        The number of type `k` vertices in row `i`, counting rows from 1.
        """
        return self.by_row[i - 1][k - 1]


class SvStats(AsmDppJsonDataclass):
    """
    Dataclass containing the four statistics of a configuration read off
    its vertex counts.
    """
    nu: int
    mu: int
    rho1: int
    rho2: int

    @property
    def key(self) -> Tuple[int, int, int, int]:
        return self.nu, self.mu, self.rho1, self.rho2


def weight_a(q: Fraction, u: Fraction, v: Fraction) -> Fraction:
    return u * q - v / q


def weight_b(q: Fraction, u: Fraction, v: Fraction) -> Fraction:
    return u / q - v * q


def weight_c(q: Fraction, u_sqrt: Fraction, v_sqrt: Fraction) -> Fraction:
    """
    The c weight, written in the square roots of the spectral parameters
    so that it stays rational.
    """
    return (q * q - 1 / (q * q)) * u_sqrt * v_sqrt


def _degeneracy(
    q: Fraction,
    u_sqrt: Sequence[Fraction],
    v_sqrt: Sequence[Fraction]
) -> Optional[str]:
    if q in (0, 1, -1):
        return f'q = {q} is not allowed'
    if any(not value for value in list(u_sqrt) + list(v_sqrt)):
        return 'spectral square roots must be nonzero'
    for i, us in enumerate(u_sqrt):
        for j, vs in enumerate(v_sqrt):
            u, v = us * us, vs * vs
            if not weight_a(q, u, v) or not weight_b(q, u, v):
                return f'a or b vanishes at (u{i + 1}, v{j + 1})'
    return None


class SpectralPoint(AsmDppJsonDataclass):
    """
    Dataclass holding a rational point at which partition functions are
    evaluated. Only square roots are stored: u_i = u_sqrt[i]^2 and
    v_j = v_sqrt[j]^2.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    q: Fraction
    u_sqrt: Tuple[Fraction, ...]
    v_sqrt: Tuple[Fraction, ...]

    @field_validator('q', mode='before')
    @classmethod
    def _coerce_q(cls, value: Any) -> Fraction:
        return Fraction(value)

    @field_validator('u_sqrt', 'v_sqrt', mode='before')
    @classmethod
    def _coerce_roots(cls, value: Any) -> Tuple[Fraction, ...]:
        return tuple(Fraction(v) for v in value)

    @model_validator(mode='after')
    def _check_point(self) -> 'SpectralPoint':
        if len(self.u_sqrt) != len(self.v_sqrt):
            raise AsmDppError('need as many u parameters as v parameters')
        reason = _degeneracy(self.q, self.u_sqrt, self.v_sqrt)
        if reason:
            raise AsmDppError(reason)
        return self

    @property
    def n(self) -> int:
        return len(self.u_sqrt)

    @property
    def u(self) -> Tuple[Fraction, ...]:
        return tuple(s * s for s in self.u_sqrt)

    @property
    def v(self) -> Tuple[Fraction, ...]:
        return tuple(s * s for s in self.v_sqrt)


class VertexWeights(AsmDppJsonDataclass):
    """
    Dataclass containing the a, b and c weights at one (u, v) pair.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    a: Fraction
    b: Fraction
    c: Fraction

    @classmethod
    def at(
        cls,
        q: Fraction,
        u_sqrt: Fraction,
        v_sqrt: Fraction
    ) -> 'VertexWeights':
        u, v = u_sqrt * u_sqrt, v_sqrt * v_sqrt
        return cls(
            a=weight_a(q, u, v),
            b=weight_b(q, u, v),
            c=weight_c(q, u_sqrt, v_sqrt)
        )

    def of_type(self, k: int) -> Fraction:
        return (self.a, self.b, self.c)[(k - 1) // 2]


def asm_to_sv(a: Asm) -> SvConfig:
    """
    Reads off vertex types from the partial sums of an ASM: the edge left
    of (i, j) carries the row sum of the entries before column j, and the
    edge above carries the column sum of the entries above row i.

    :param a: a valid ASM

    :return: the corresponding configuration
    """
    n = a.n
    above = [0] * n
    types: List[Tuple[int, ...]] = []
    for row in a.rows:
        left = 0
        line = []
        for j, entry in enumerate(row):
            if entry == 1:
                kind = 5
            elif entry == -1:
                kind = 6
            elif left == above[j]:
                kind = 1 if left == 0 else 2
            else:
                kind = 3 if left == 1 else 4
            line.append(kind)
            left += entry
            above[j] += entry
        types.append(tuple(line))
    return SvConfig.model_construct(n=n, types=tuple(types))


def sv_edges(c: SvConfig) -> EdgeOrientations:
    """
    Derives the arrows on every edge and checks that neighbouring vertices
    agree and that the boundary is domain-wall: arrows point in on the
    left and right, out at the top and bottom.

    :param c: the configuration to check

    :return: the edge orientations
    """
    n = c.n
    if n < 1 or len(c.types) != n or any(len(row) != n for row in c.types):
        raise AsmDppError(f'a configuration of order {n} needs an nxn grid')
    horizontal: List[Tuple[int, ...]] = []
    columns = [0] * n
    vertical: List[Tuple[int, ...]] = [tuple(columns)]
    for i, row in enumerate(c.types, start=1):
        edges = [0]
        for j, kind in enumerate(row, start=1):
            if kind not in _TYPE_EDGES:
                raise AsmDppError(f'vertex ({i}, {j}) has type {kind!r}')
            left, right, top, bottom = _TYPE_EDGES[kind]
            if left != edges[-1] or top != columns[j - 1]:
                raise AsmDppError(f'vertex ({i}, {j}) of type {kind} does '
                                  'not match its neighbours')
            edges.append(right)
            columns[j - 1] = bottom
        if edges[-1] != 1:
            raise AsmDppError(f'row {i} does not end with an inward arrow')
        horizontal.append(tuple(edges))
        vertical.append(tuple(columns))
    if any(value != 1 for value in columns):
        raise AsmDppError('bottom boundary arrows must point down')
    return EdgeOrientations(
        horizontal=tuple(horizontal), vertical=tuple(vertical)
    )


def sv_to_asm(c: SvConfig) -> Asm:
    """
    Maps type 5 to 1, type 6 to -1 and everything else to 0.

    :param c: a configuration; its arrows are checked first
    """
    sv_edges(c)
    values = {5: 1, 6: -1}
    return validate_asm(
        [[values.get(kind, 0) for kind in row] for row in c.types]
    )


def vertex_counts(c: SvConfig) -> VertexCounts:
    by_row = tuple(
        tuple(row.count(k) for k in range(1, 7)) for row in c.types
    )
    totals = tuple(sum(row[k] for row in by_row) for k in range(6))
    return VertexCounts(totals=totals, by_row=by_row)


def sv_stats(c: SvConfig) -> SvStats:
    """
    nu is the number of type 1 vertices, mu the number of type 6 vertices,
    rho1 the type 1 vertices in the first row and rho2 the type 2
    vertices in the last row.
    """
    counts = vertex_counts(c)
    return SvStats(
        nu=counts.total(1),
        mu=counts.total(6),
        rho1=counts.in_row(1, 1),
        rho2=counts.in_row(c.n, 2)
    )


def check_vertex_relations(c: SvConfig) -> CheckOutcome:
    """
    Checks the linear relations every domain-wall configuration satisfies
    between its vertex counts.

    :param c: a valid configuration

    :return: the outcome, with the first failing relation on failure
    """
    n = c.n
    counts = vertex_counts(c)
    first = counts.by_row[0]
    last = counts.by_row[-1]
    relations = [
        ('N1 = N2', counts.total(1) == counts.total(2)),
        ('N3 = N4', counts.total(3) == counts.total(4)),
        ('N5 = N6 + n', counts.total(5) == counts.total(6) + n),
        ('first row has no types 2, 4, 6', first[1] == first[3] == first[5]
         == 0),
        ('last row has no types 1, 3, 6', last[0] == last[2] == last[5]
         == 0),
        ('one type 5 in the first row', first[4] == 1),
        ('one type 5 in the last row', last[4] == 1),
        ('n^2 vertices', sum(counts.totals) == n * n),
        ('n vertices per row', all(sum(row) == n for row in counts.by_row))
    ]
    for name, holds in relations:
        if not holds:
            return CheckOutcome.failure(f'{name} fails for {c.types}')
    return CheckOutcome.success()


def enumerate_svs(n: int) -> Iterator[SvConfig]:
    """
    Yields every domain-wall configuration of order `n`, in the order of
    :func:`~asmdpp.asm.enumerate_asms`.
    """
    for a in enumerate_asms(n):
        yield asm_to_sv(a)


def _partition_sum(
    q: Fraction,
    u_sqrt: Sequence[Fraction],
    v_sqrt: Sequence[Fraction]
) -> Fraction:
    n = len(u_sqrt)
    weights = [
        [VertexWeights.at(q, us, vs) for vs in v_sqrt] for us in u_sqrt
    ]
    total = Fraction(0)
    for config in enumerate_svs(n):
        term = Fraction(1)
        for i, row in enumerate(config.types):
            for j, kind in enumerate(row):
                term *= weights[i][j].of_type(kind)
        total += term
    return total


def sv_partition_function(
    n: int,
    pt: SpectralPoint,
    caps: Caps = DEFAULT_CAPS
) -> Fraction:
    """
    Sums the product of vertex weights over every configuration of order
    `n`.

    :param n: the order, at most the six-vertex cap
    :param pt: the point; row i uses u_i and column j uses v_j
    :param caps: brute-force limits

    :return: the exact value
    """
    caps.require('six_vertex', n)
    if pt.n != n:
        raise AsmDppError(f'point has {pt.n} parameters, order is {n}')
    return _partition_sum(pt.q, pt.u_sqrt, pt.v_sqrt)


def _determinant_form(
    q: Fraction,
    u_sqrt: Sequence[Fraction],
    v_sqrt: Sequence[Fraction]
) -> Fraction:
    n = len(u_sqrt)
    u = [s * s for s in u_sqrt]
    v = [s * s for s in v_sqrt]
    if len(set(u)) != n or len(set(v)) != n:
        raise AsmDppError('determinant form needs distinct u and v values')
    numerator = Fraction(1)
    entries = []
    for i in range(n):
        for j in range(n):
            w = VertexWeights.at(q, u_sqrt[i], v_sqrt[j])
            if not w.a or not w.b:
                raise AsmDppError(f'a or b vanishes at (u{i + 1}, v{j + 1})')
            numerator *= w.a * w.b
            entries.append(w.c / (w.a * w.b))
    denominator = Fraction(1)
    for i, j in combinations(range(n), 2):
        denominator *= (u[i] - u[j]) * (v[j] - v[i])
    return numerator / denominator * det(Matrix(n, n, entries))


def ik_determinant(n: int, pt: SpectralPoint) -> Fraction:
    """
    Evaluates the Izergin-Korepin determinant expression for the partition
    function.

    :param n: the order
    :param pt: a point with pairwise distinct u's and pairwise distinct v's

    :return: the exact value
    """
    if pt.n != n:
        raise AsmDppError(f'point has {pt.n} parameters, order is {n}')
    return _determinant_form(pt.q, pt.u_sqrt, pt.v_sqrt)


def random_spectral_point(
    rng: Random,
    n: int,
    distinct: bool = True,
    bound: int = 50
) -> SpectralPoint:
    """
    Draws a nondegenerate point by rejection sampling.

    :param rng: the seeded generator
    :param n: how many u's and v's to draw
    :param distinct: whether the u's, and the v's, must differ pairwise
    :param bound: numerator and denominator bound
    """
    while True:
        q = random_rational(rng, bound)
        u_sqrt = [random_rational(rng, bound) for _ in range(n)]
        v_sqrt = [random_rational(rng, bound) for _ in range(n)]
        if distinct and (len({s * s for s in u_sqrt}) != n or
                         len({s * s for s in v_sqrt}) != n):
            continue
        if _degeneracy(q, u_sqrt, v_sqrt) is None:
            logger.debug('drew spectral point q=%s u=%s v=%s', q, u_sqrt,
                         v_sqrt)
            return SpectralPoint(q=q, u_sqrt=u_sqrt, v_sqrt=v_sqrt)


def verify_ik(
    n: int,
    points: int = 20,
    seed: int = 0,
    caps: Caps = DEFAULT_CAPS
) -> CheckOutcome:
    """
    Compares the brute-force partition function with the determinant
    formula at random points.
    """
    caps.require('six_vertex', n)
    rng = Random(seed)
    for _ in range(points):
        pt = random_spectral_point(rng, n)
        brute = sv_partition_function(n, pt, caps)
        formula = ik_determinant(n, pt)
        if brute != formula:
            return CheckOutcome.failure(
                f'n={n} q={pt.q} u={pt.u_sqrt} v={pt.v_sqrt}: brute force '
                f'{brute} != determinant {formula}'
            )
    return CheckOutcome.success(f'{points}/{points} points')


def specialization_point(
    q: Fraction,
    r_sqrt: Fraction,
    w_sqrt: Fraction,
    u_sqrt: Sequence[Fraction] = ()
) -> Dict[str, Fraction]:
    """
    The (x, y, z1, z2, ...) values at which a generating function must be
    evaluated when every row but the listed ones carries r and every
    column carries w.

    :param u_sqrt: the square roots of the distinguished row parameters,
        giving z1, z2, ... in order
    """
    if q in (0, 1, -1) or not w_sqrt:
        raise AsmDppError(f'degenerate parameters q = {q}, w = {w_sqrt}')
    r, w = r_sqrt * r_sqrt, w_sqrt * w_sqrt
    a_r, b_r = weight_a(q, r, w), weight_b(q, r, w)
    c_r = weight_c(q, r_sqrt, w_sqrt)
    if not a_r or not b_r:
        raise AsmDppError('a(r, w) and b(r, w) must be nonzero')
    point = {'x': (a_r / b_r) ** 2, 'y': (c_r / b_r) ** 2}
    for k, s in enumerate(u_sqrt, start=1):
        u = s * s
        b_u = weight_b(q, u, w)
        if not b_u:
            raise AsmDppError(f'b(u{k}, w) must be nonzero')
        point[f'z{k}'] = weight_a(q, u, w) * b_r / (a_r * b_u)
    return point


def verify_zczasm(
    n: int,
    r_sqrt: Number,
    s_sqrt: Number,
    t_sqrt: Number,
    w_sqrt: Number,
    q: Number,
    z_asm: Optional[MPoly] = None,
    caps: Caps = DEFAULT_CAPS
) -> CheckOutcome:
    """
    Checks that the partition function with rows (s, r, ..., r, t) and all
    columns w equals an explicit prefactor times the ASM generating
    function at the matching (x, y, z1, z2). Parameters are given by their
    square roots.

    :param z_asm: the ASM generating function of order `n`, computed by
        enumeration when omitted
    """
    if n < 2:
        raise AsmDppError('the specialization needs n >= 2')
    caps.require('six_vertex', n)
    q, r_sqrt, s_sqrt, t_sqrt, w_sqrt = (
        Fraction(value) for value in (q, r_sqrt, s_sqrt, t_sqrt, w_sqrt)
    )
    if q in (0, 1, -1) or not w_sqrt:
        raise AsmDppError('degenerate parameter choice')
    point = specialization_point(q, r_sqrt, w_sqrt, (s_sqrt, t_sqrt))
    if z_asm is None:
        from asmdpp.genfun import ObjectKind, genfun_bruteforce
        z_asm = genfun_bruteforce(ObjectKind.ASM, n, caps).poly
    r, s, t, w = (value * value for value in (r_sqrt, s_sqrt, t_sqrt, w_sqrt))
    b_r, b_s, b_t = (weight_b(q, u, w) for u in (r, s, t))
    prefactor = b_r ** ((n - 1) * (n - 2)) * (b_s * b_t) ** (n - 1) * \
        weight_c(q, r_sqrt, w_sqrt) ** (n - 2) * \
        weight_c(q, s_sqrt, w_sqrt) * weight_c(q, t_sqrt, w_sqrt)
    rhs = prefactor * z_asm.evaluate(point)
    lhs = _partition_sum(
        q, (s_sqrt,) + (r_sqrt,) * (n - 2) + (t_sqrt,), (w_sqrt,) * n
    )
    if lhs != rhs:
        return CheckOutcome.failure(
            f'n={n} q={q} r={r_sqrt} s={s_sqrt} t={t_sqrt} w={w_sqrt}: '
            f'{lhs} != {rhs}'
        )
    return CheckOutcome.success()


def verify_uz(
    q: Number,
    r_sqrt: Number,
    w_sqrt: Number,
    u_sqrt: Sequence[Number]
) -> CheckOutcome:
    """
    Checks that differences of row parameters are proportional to
    differences of the matching z values, with the proportionality factor
    a(r,w) b(u_i,w) b(u_j,w) / (b(r,w) (q^-2 - q^2) w).
    """
    q, r_sqrt, w_sqrt = Fraction(q), Fraction(r_sqrt), Fraction(w_sqrt)
    roots = [Fraction(s) for s in u_sqrt]
    point = specialization_point(q, r_sqrt, w_sqrt, roots)
    r, w = r_sqrt * r_sqrt, w_sqrt * w_sqrt
    a_r, b_r = weight_a(q, r, w), weight_b(q, r, w)
    u = [s * s for s in roots]
    for i, j in combinations(range(len(u)), 2):
        factor = a_r * weight_b(q, u[i], w) * weight_b(q, u[j], w) / \
            (b_r * (1 / (q * q) - q * q) * w)
        difference = point[f'z{i + 1}'] - point[f'z{j + 1}']
        if u[i] - u[j] != factor * difference:
            return CheckOutcome.failure(
                f'u{i + 1} - u{j + 1} is not proportional to '
                f'z{i + 1} - z{j + 1} at q={q} r={r_sqrt} w={w_sqrt}'
            )
    return CheckOutcome.success()


def verify_sv_bazin(
    n: int,
    q: Number,
    u_sqrt: Sequence[Number],
    v_sqrt: Sequence[Number],
    ks: Tuple[int, int, int, int] = (0, 1, 2, 3),
    caps: Caps = DEFAULT_CAPS
) -> CheckOutcome:
    """
    Checks the three-term bilinear relation between partition functions
    of order `n` built from n + 2 row parameters with two of them left
    out each time.

    :param u_sqrt: n + 2 row square roots
    :param v_sqrt: n column square roots
    :param ks: the four 0-based rows that get left out, increasing
    """
    caps.require('six_vertex', n)
    q = Fraction(q)
    rows = [Fraction(s) for s in u_sqrt]
    cols = [Fraction(s) for s in v_sqrt]
    if len(rows) != n + 2 or len(cols) != n:
        raise AsmDppError(f'need {n + 2} row and {n} column parameters')
    if sorted(set(ks)) != list(ks) or len(ks) != 4 or \
            not all(0 <= k < n + 2 for k in ks):
        raise AsmDppError(f'rows {ks} must be 4 increasing indices')
    u = [s * s for s in rows]

    def omit(i: int, j: int) -> Fraction:
        kept = [s for k, s in enumerate(rows) if k not in (i, j)]
        return _partition_sum(q, kept, cols)

    k1, k2, k3, k4 = ks
    total = (u[k1] - u[k2]) * (u[k3] - u[k4]) * omit(k1, k2) * omit(k3, k4) \
        - (u[k1] - u[k3]) * (u[k2] - u[k4]) * omit(k1, k3) * omit(k2, k4) \
        + (u[k1] - u[k4]) * (u[k2] - u[k3]) * omit(k1, k4) * omit(k2, k3)
    if total:
        return CheckOutcome.failure(
            f'bilinear relation leaves {total} at q={q} u={rows} v={cols}'
        )
    return CheckOutcome.success()


def verify_zczasm_random(
    n: int,
    points: int = 10,
    seed: int = 0,
    z_asm: Optional[MPoly] = None,
    caps: Caps = DEFAULT_CAPS
) -> CheckOutcome:
    """
    Runs :func:`verify_zczasm` and :func:`verify_uz` at random
    nondegenerate parameter choices.
    """
    if n < 2:
        raise AsmDppError('the specialization needs n >= 2')
    caps.require('six_vertex', n)
    if z_asm is None:
        from asmdpp.genfun import ObjectKind, genfun_bruteforce
        z_asm = genfun_bruteforce(ObjectKind.ASM, n, caps).poly
    rng = Random(seed)
    done = 0
    while done < points:
        q, r, s, t, w = (random_rational(rng) for _ in range(5))
        if q in (1, -1):
            continue
        try:
            outcome = verify_zczasm(n, r, s, t, w, q, z_asm, caps)
            if outcome:
                outcome = verify_uz(q, r, w, (s, t))
        except AsmDppError:
            continue
        if not outcome:
            return outcome
        done += 1
    return CheckOutcome.success(f'{points}/{points} points')


def verify_sv_bazin_random(
    n: int,
    points: int = 3,
    seed: int = 0,
    caps: Caps = DEFAULT_CAPS
) -> CheckOutcome:
    """
    Runs :func:`verify_sv_bazin` at random points, leaving out the first
    four rows each time.
    """
    if n < 2:
        raise AsmDppError('the bilinear relation needs n >= 2')
    caps.require('six_vertex', n)
    rng = Random(seed)
    for _ in range(points):
        q = random_rational(rng)
        u_sqrt = [random_rational(rng) for _ in range(n + 2)]
        v_sqrt = [random_rational(rng) for _ in range(n)]
        outcome = verify_sv_bazin(n, q, u_sqrt, v_sqrt, caps=caps)
        if not outcome:
            return outcome
    return CheckOutcome.success(f'{points}/{points} points')
