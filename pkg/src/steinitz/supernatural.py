"""Exact arithmetic on Steinitz (supernatural) numbers.

A Steinitz number is a formal product over all primes p of p**e_p with
exponents in N union {infinity}.  This module restricts to the decidable
class whose exponent pattern is eventually constant: a single default
exponent applies to every prime outside a finite exception set.  That class
contains every positive integer, every p**infinity pattern, the product of
all primes, and is closed under the operations below, which makes equality,
divisibility, lcm/gcd and rational connectedness all decidable by finite
bookkeeping.

Values are immutable and canonicalized on construction, so structural
equality coincides with semantic equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Mapping, Union

from .errors import DenominatorDoesNotDivideError, NotPrimeError
from .primes import factorize, is_prime


class Infinity:
    """Absorbing infinite exponent: t + inf = inf, and inf exceeds every int."""

    __slots__ = ()

    def __add__(self, other):
        if isinstance(other, (int, Infinity)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        # inf - t = inf for finite t; inf - inf stays undefined.
        if isinstance(other, int):
            return self
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, Infinity)

    def __lt__(self, other):
        if isinstance(other, (int, Infinity)):
            return False
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, Infinity):
            return True
        if isinstance(other, int):
            return False
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, int):
            return True
        if isinstance(other, Infinity):
            return False
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, (int, Infinity)):
            return True
        return NotImplemented

    def __hash__(self):
        return hash(float("inf"))

    def __repr__(self):
        return "INF"


#: The infinite exponent marker.
INF = Infinity()

#: A prime exponent: a finite nonnegative integer or INF.
Exponent = Union[int, Infinity]

#: Reduced positive fraction; positivity is validated where it matters.
PositiveRational = Fraction


def is_infinite(e: Exponent) -> bool:
    return isinstance(e, Infinity)


def _check_exponent(e, what: str) -> None:
    if isinstance(e, Infinity):
        return
    if isinstance(e, bool) or not isinstance(e, int):
        raise TypeError(f"{what} must be a nonnegative int or INF, got {e!r}")
    if e < 0:
        raise ValueError(f"{what} must be nonnegative, got {e}")


@dataclass(frozen=True)
class SupernaturalNumber:
    """A Steinitz number with an eventually-constant exponent pattern.

    ``default_exp`` applies to every prime not listed in ``exceptions``.
    ``exceptions`` may be given as a mapping or as (prime, exponent) pairs;
    it is stored canonically: ascending primes, no entry equal to the
    default.
    """

    default_exp: Exponent = 0
    exceptions: tuple[tuple[int, Exponent], ...] = ()

    def __post_init__(self):
        _check_exponent(self.default_exp, "default exponent")
        if isinstance(self.exceptions, Mapping):
            items = list(self.exceptions.items())
        else:
            items = list(self.exceptions)
        seen: dict[int, Exponent] = {}
        for entry in items:
            p, e = entry
            if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
                raise NotPrimeError(f"exception key {p!r} is not prime")
            _check_exponent(e, f"exponent of {p}")
            if p in seen:
                raise ValueError(f"duplicate prime {p} in exceptions")
            seen[p] = e
        canonical = tuple(
            (p, e)
            for p, e in sorted(seen.items(), key=lambda kv: kv[0])
            if e != self.default_exp
        )
        object.__setattr__(self, "exceptions", canonical)

    def exponent(self, p: int) -> Exponent:
        return exponent_at(self, p)

    def __mul__(self, other):
        if isinstance(other, SupernaturalNumber):
            return mul(self, other)
        return NotImplemented

    def __str__(self):
        parts = []
        for p, e in self.exceptions:
            if e == 1:
                parts.append(str(p))
            elif is_infinite(e):
                parts.append(f"{p}^inf")
            else:
                parts.append(f"{p}^{e}")
        if is_infinite(self.default_exp):
            parts.append("rest^inf")
        elif self.default_exp != 0:
            parts.append(f"rest^{self.default_exp}")
        return "*".join(parts) if parts else "1"


#: The empty product.
ONE = SupernaturalNumber()


def from_natural(n: int, trial_bound: int | None = None) -> SupernaturalNumber:
    """Embed a positive integer via its prime factorization."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"expected a positive integer, got {n!r}")
    return SupernaturalNumber(0, factorize(n, trial_bound))


def exponent_at(s: SupernaturalNumber, p: int) -> Exponent:
    """Exponent of the prime p in s (the default if p is not an exception)."""
    if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
        raise NotPrimeError(f"{p!r} is not prime")
    for q, e in s.exceptions:
        if q == p:
            return e
    return s.default_exp


def _support_union(s: SupernaturalNumber, t: SupernaturalNumber) -> list[int]:
    return sorted({p for p, _ in s.exceptions} | {p for p, _ in t.exceptions})


def mul(s: SupernaturalNumber, t: SupernaturalNumber) -> SupernaturalNumber:
    """Pointwise exponent addition, with INF absorbing."""
    exc = {p: exponent_at(s, p) + exponent_at(t, p) for p in _support_union(s, t)}
    return SupernaturalNumber(s.default_exp + t.default_exp, exc)


def lcm(s: SupernaturalNumber, t: SupernaturalNumber) -> SupernaturalNumber:
    """Pointwise maximum of exponents (join in the divisibility lattice)."""
    exc = {p: max(exponent_at(s, p), exponent_at(t, p)) for p in _support_union(s, t)}
    return SupernaturalNumber(max(s.default_exp, t.default_exp), exc)


def gcd(s: SupernaturalNumber, t: SupernaturalNumber) -> SupernaturalNumber:
    """Pointwise minimum of exponents (meet in the divisibility lattice)."""
    exc = {p: min(exponent_at(s, p), exponent_at(t, p)) for p in _support_union(s, t)}
    return SupernaturalNumber(min(s.default_exp, t.default_exp), exc)


def divides(s: SupernaturalNumber, t: SupernaturalNumber) -> bool:
    """True iff every exponent of s is <= the matching exponent of t."""
    if not s.default_exp <= t.default_exp:
        return False
    return all(
        exponent_at(s, p) <= exponent_at(t, p) for p in _support_union(s, t)
    )


def is_locally_finite(s: SupernaturalNumber) -> bool:
    """True iff no exponent (default or exception) is infinite."""
    if is_infinite(s.default_exp):
        return False
    return not any(is_infinite(e) for _, e in s.exceptions)


def is_natural(s: SupernaturalNumber) -> int | None:
    """The positive integer s denotes, or None if s is infinite."""
    if s.default_exp != 0 or not is_locally_finite(s):
        return None
    return prod(p**e for p, e in s.exceptions)


def rationally_connected(
    s1: SupernaturalNumber, s2: SupernaturalNumber
) -> Fraction | None:
    """The reduced positive rational q with s2 = q * s1, or None.

    Two representable Steinitz numbers are connected exactly when their
    default exponents agree and every prime where they differ carries a
    finite exponent on both sides; q is then the finite product of the
    exponent differences.
    """
    if s1.default_exp != s2.default_exp:
        return None
    num = den = 1
    for p in _support_union(s1, s2):
        a = exponent_at(s1, p)
        b = exponent_at(s2, p)
        if a == b:
            continue
        if is_infinite(a) or is_infinite(b):
            return None
        if b > a:
            num *= p ** (b - a)
        else:
            den *= p ** (a - b)
    return Fraction(num, den)


def scale(
    s: SupernaturalNumber, q: Fraction | int | str, trial_bound: int | None = None
) -> SupernaturalNumber:
    """Multiply s by a positive rational q = m/n, exponentwise.

    Each exponent moves by v_p(m) - v_p(n) with INF absorbing; an exponent
    that would become negative raises DenominatorDoesNotDivideError.
    """
    if isinstance(q, float):
        raise TypeError("scale factor must be exact (int, Fraction or 'm/n' text)")
    q = Fraction(q)
    if q <= 0:
        raise ValueError(f"scale factor must be positive, got {q}")
    adjust: dict[int, int] = dict(factorize(q.numerator, trial_bound))
    for p, e in factorize(q.denominator, trial_bound).items():
        adjust[p] = adjust.get(p, 0) - e
    exc: dict[int, Exponent] = dict(s.exceptions)
    for p, delta in adjust.items():
        e = exponent_at(s, p)
        if is_infinite(e):
            exc[p] = e
            continue
        if e + delta < 0:
            raise DenominatorDoesNotDivideError(
                f"prime {p}: exponent {e} cannot absorb {delta} (q={q})"
            )
        exc[p] = e + delta
    return SupernaturalNumber(s.default_exp, exc)
