import json
from fractions import Fraction
from math import comb
from random import Random
from typing import Any

from pydantic import BaseModel, ConfigDict

from asmdpp import logger


class AsmDppError(Exception):
    """
    An internal error raised by asmdpp: invalid objects, shape mismatches,
    inexact divisions and degenerate parameter choices all end up here.
    """
    pass


class CapExceededError(AsmDppError):
    """
    Raised when a brute-force computation is requested for an order above
    its configured cap.
    """
    pass


def _dasherize(s: str) -> str:
    """
    Converts a string from snake case to dasherized.

    :param s: string to convert

    :return: dasherized string
    """
    return s.replace('_', '-')


class AsmDppJsonDataclass(BaseModel):
    """
    A pydantic dataclass that converts keys from snake case to dasherized
    and performs type validation and coercion. Instances are frozen, so
    they can be shared freely between threads and used as dict keys.
    """
    model_config = ConfigDict(
        alias_generator=_dasherize,
        populate_by_name=True,
        frozen=True
    )


class Caps(AsmDppJsonDataclass):
    """
    Dataclass holding the largest orders the brute-force machinery will
    accept. These are configuration, so callers may pass their own
    instance anywhere a ``caps`` argument is accepted.
    """
    #: exhaustive enumeration (counting, bijections)
    enumeration: int = 7
    #: generating functions and everything built on top of them
    genfun: int = 6
    #: brute-force six-vertex partition functions
    six_vertex: int = 5
    #: determinant formulas that never enumerate objects
    formula: int = 8

    def require(self, name: str, n: int) -> None:
        """
        Raises :class:`CapExceededError` if `n` is above the named cap.

        :param name: one of the field names of this class
        :param n: the requested order
        """
        cap = getattr(self, name)
        if n > cap:
            raise CapExceededError(
                f'n = {n} exceeds the {name} cap of {cap}'
            )


DEFAULT_CAPS = Caps()


class CheckOutcome(AsmDppJsonDataclass):
    """
    Dataclass returned by every verification. It is truthy exactly when the
    identity held, so it can be used wherever a plain bool is expected;
    `details` carries the first counterexample found.
    """
    passed: bool
    details: str = ''

    def __bool__(self) -> bool:
        return self.passed

    @classmethod
    def success(cls, details: str = '') -> 'CheckOutcome':
        return cls(passed=True, details=details)

    @classmethod
    def failure(cls, details: str) -> 'CheckOutcome':
        logger.warning('identity failed: %s', details)
        return cls(passed=False, details=details)


def binom(m: int, r: int) -> int:
    """
    Binomial coefficient with the conventions the determinant entries need:
    zero for negative `r`, one for `r` = 0 whatever `m` is (including -1),
    and zero when `r` > `m` >= 0.

    :param m: upper index
    :param r: lower index

    :return: the coefficient
    """
    if r < 0:
        return 0
    if r == 0:
        return 1
    if m < 0:
        raise AsmDppError(f'binomial({m}, {r}) is not supported')
    return comb(m, r)


def random_rational(rng: Random, bound: int = 50) -> Fraction:
    """
    Draws a nonzero rational whose numerator and denominator are uniform in
    [1, `bound`], with a random sign.

    :param rng: the seeded generator to draw from
    :param bound: largest numerator and denominator

    :return: the drawn value
    """
    sign = rng.choice((-1, 1))
    return Fraction(sign * rng.randint(1, bound), rng.randint(1, bound))


def canonical_json(data: Any) -> str:
    """
    Serializes JSON-ready data deterministically: sorted keys, two-space
    indentation and a trailing newline, so equal values give equal bytes.
    """
    return json.dumps(data, indent=2, sort_keys=True) + '\n'
