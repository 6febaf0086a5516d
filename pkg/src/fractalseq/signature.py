"""Signature sequences of exact positive reals.

For a parameter theta > 0, sort the multiset {i + j*theta : i, j >= 1}
in nondecreasing order; the stream of i-components is the signature of
theta, and the j-components are exactly the occurrence ranks.

theta is either a ``fractions.Fraction`` or a :class:`Surd`, an exact
quadratic irrational (a + b*sqrt(d))/c.  Every comparison in this module
is decided by integer arithmetic (sign analysis plus one squaring step
for surds); floating point is never consulted.  Distinct parameters that
are arbitrarily close still separate correctly, no matter how deep in
the sequence the first differing term lies.

Ties happen exactly when theta is rational.  Equal values are emitted
with the larger i-component first; the listings this module is tested
against fix that order.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from heapq import heappop, heappush
from itertools import islice
from typing import Iterator, Union

from .seqcore import AnnotatedTerm


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _squarefree_part(d: int) -> tuple[int, int]:
    """Write d = f*f * dd with dd square-free; return (f, dd)."""
    f, dd, p = 1, d, 2
    while p * p <= dd:
        while dd % (p * p) == 0:
            dd //= p * p
            f *= p
        p += 1
    return f, dd


def _is_squarefree(d: int) -> bool:
    return _squarefree_part(d)[1] == d


def surd_sign(a: int, b: int, d: int) -> int:
    """Exact sign of a + b*sqrt(d) for square-free d >= 2.

    When a and b have opposite signs the comparison reduces to a*a
    versus b*b*d, which cannot be a draw: equality would make sqrt(d)
    rational.
    """
    if b == 0:
        return _sign(a)
    if a == 0:
        return _sign(b)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    t = a * a - b * b * d
    return _sign(t) if a > 0 else -_sign(t)


@dataclass(frozen=True)
class Surd:
    """Exact value (a + b*sqrt(d)) / c.

    Normal form: c >= 1, b != 0, d >= 2 square-free, gcd(a, b, c) = 1.
    Build values through :meth:`make` (or :func:`parse_theta`), which
    normalizes and collapses rational cases to ``Fraction``; the raw
    constructor rejects anything not already in normal form.
    """

    a: int
    b: int
    d: int
    c: int = 1

    def __post_init__(self) -> None:
        if self.c < 1:
            raise ValueError("denominator must be positive")
        if self.b == 0:
            raise ValueError("b = 0 is rational; use Fraction")
        if self.d < 2 or not _is_squarefree(self.d):
            raise ValueError("d must be square-free and >= 2")
        if math.gcd(math.gcd(abs(self.a), abs(self.b)), self.c) != 1:
            raise ValueError("components must have no common factor")

    @staticmethod
    def make(a: int, b: int, d: int, c: int = 1) -> "ExactNumber":
        if c == 0:
            raise ZeroDivisionError("denominator is zero")
        if d < 0:
            raise ValueError("negative radicand")
        if c < 0:
            a, b, c = -a, -b, -c
        f, dd = _squarefree_part(d) if d else (0, 0)
        b *= f
        if d == 0 or b == 0:
            return Fraction(a, c)
        if dd == 1:
            return Fraction(a + b, c)
        g = math.gcd(math.gcd(abs(a), abs(b)), c)
        return Surd(a // g, b // g, dd, c // g)

    @staticmethod
    def sqrt(d: int) -> "ExactNumber":
        return Surd.make(0, 1, d)

    def sign(self) -> int:
        return surd_sign(self.a, self.b, self.d)

    def __str__(self) -> str:
        if self.a == 0 and self.b == 1 and self.c == 1:
            return f"sqrt({self.d})"
        root = f"sqrt({self.d})" if abs(self.b) == 1 else f"{abs(self.b)}*sqrt({self.d})"
        if self.a == 0:
            body = root if self.b > 0 else f"0-{root}"
        else:
            body = f"{self.a}{'+' if self.b > 0 else '-'}{root}"
        return body if self.c == 1 else f"({body})/{self.c}"


ExactNumber = Union[Fraction, Surd]


def as_exact(theta) -> ExactNumber:
    """Coerce int/Fraction/Surd to an ExactNumber."""
    if isinstance(theta, Surd):
        return theta
    if isinstance(theta, (int, Fraction)):
        return Fraction(theta)
    raise TypeError(f"not an exact number: {theta!r}")


def theta_sign(theta: ExactNumber) -> int:
    if isinstance(theta, Fraction):
        return _sign(theta.numerator)
    return theta.sign()


def _require_positive(theta: ExactNumber) -> None:
    if theta_sign(theta) <= 0:
        raise ValueError("theta must be positive")


def exact_equal(x: ExactNumber, y: ExactNumber) -> bool:
    """Exact equality; a Surd in normal form is never rational."""
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x == y
    if isinstance(x, Surd) and isinstance(y, Surd):
        return x == y
    return False


def compare_affine(i1: int, j1: int, i2: int, j2: int, theta) -> int:
    """Exact three-way comparison of i1 + j1*theta against i2 + j2*theta.

    Returns -1, 0, or 1 as the first form is less than, equal to, or
    greater than the second.  Equality requires a rational theta.
    """
    theta = as_exact(theta)
    de, df = i1 - i2, j1 - j2
    if isinstance(theta, Fraction):
        return _sign(de * theta.denominator + df * theta.numerator)
    return surd_sign(de * theta.c + df * theta.a, df * theta.b, theta.d)


def compare_with_rational(theta: ExactNumber, r: Fraction) -> int:
    """Exact sign of theta - r."""
    if isinstance(theta, Fraction):
        return _sign((theta - r).numerator)
    # (a + b*sqrt(d))/c - u/v  has the sign of (a*v - u*c) + b*v*sqrt(d)
    return surd_sign(theta.a * r.denominator - r.numerator * theta.c,
                     theta.b * r.denominator, theta.d)


# ---------------------------------------------------------------------------
# Generation


def signature_terms(theta) -> Iterator[AnnotatedTerm]:
    """Yield (value, rank) pairs of the signature of theta, lazily.

    Frontier discipline: the heap holds one candidate per active rank
    row; popping (i, j) pushes (i+1, j), and popping (1, j) additionally
    opens row j+1 with (1, j+1).  The j-component of each popped pair is
    already the occurrence rank of its i-component.
    """
    theta = as_exact(theta)
    _require_positive(theta)
    if isinstance(theta, Fraction):
        return _rational_terms(theta.numerator, theta.denominator)
    return _surd_terms(theta)


def _rational_terms(p: int, q: int) -> Iterator[AnnotatedTerm]:
    # Key (i*q + j*p, -i): exact value order, ties emit the larger i first.
    heap = [(q + p, -1, 1, 1)]
    while True:
        _, _, i, j = heappop(heap)
        yield AnnotatedTerm(i, j)
        heappush(heap, ((i + 1) * q + j * p, -(i + 1), i + 1, j))
        if i == 1:
            heappush(heap, (q + (j + 1) * p, -1, 1, j + 1))


def _surd_terms(theta: Surd) -> Iterator[AnnotatedTerm]:
    a, b, c, d = theta.a, theta.b, theta.c, theta.d

    class Entry:
        __slots__ = ("i", "j")

        def __init__(self, i: int, j: int) -> None:
            self.i, self.j = i, j

        def __lt__(self, other: "Entry") -> bool:
            de, df = self.i - other.i, self.j - other.j
            s = surd_sign(de * c + df * a, df * b, d)
            if s:
                return s < 0
            return self.i > other.i  # unreachable for irrational theta

    heap = [Entry(1, 1)]
    while True:
        e = heappop(heap)
        yield AnnotatedTerm(e.i, e.j)
        heappush(heap, Entry(e.i + 1, e.j))
        if e.i == 1:
            heappush(heap, Entry(1, e.j + 1))


def generate_signature(theta, n_terms: int) -> list[AnnotatedTerm]:
    """First ``n_terms`` annotated terms of the signature of theta."""
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    return list(islice(signature_terms(theta), n_terms))


def _integer_bound_above(theta: ExactNumber) -> int:
    """Some integer >= theta; looseness is harmless here."""
    if isinstance(theta, Fraction):
        return max(1, math.ceil(theta))
    root = math.isqrt(theta.d) + 1
    num = theta.a + theta.b * (root if theta.b > 0 else math.isqrt(theta.d))
    return max(1, num // theta.c + 1)


def brute_force_signature(theta, n_terms: int) -> list[AnnotatedTerm]:
    """Independent oracle: enumerate a value box, sort, take a prefix.

    All pairs (i, j) with i + j*theta <= V are collected for a cutoff V
    grown until the box holds at least ``n_terms`` pairs; anything
    outside the box exceeds V, so the sorted prefix is complete.  The
    sort uses :func:`compare_affine` with the same tie rule as the lazy
    generator but shares none of its frontier machinery.
    """
    theta = as_exact(theta)
    _require_positive(theta)
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    V = _integer_bound_above(theta) + 2
    while True:
        pairs: list[tuple[int, int]] = []
        j = 1
        while compare_affine(1, j, V, 0, theta) <= 0:
            i = 1
            while compare_affine(i, j, V, 0, theta) <= 0:
                pairs.append((i, j))
                i += 1
            j += 1
        if len(pairs) >= n_terms:
            break
        V *= 2
    pairs.sort(key=cmp_to_key(
        lambda u, v: compare_affine(u[0], u[1], v[0], v[1], theta) or (v[0] - u[0])))
    return [AnnotatedTerm(i, j) for i, j in pairs[:n_terms]]


# ---------------------------------------------------------------------------
# Parsing and formatting


_RATIONAL_RE = re.compile(r"([+-]?\d+)(?:\s*/\s*(\d+))?")
_DECIMAL_RE = re.compile(r"[+-]?(?:\d*\.\d+|\d+\.\d*)")
_SURD_INNER = r"(?:(?P<a>[+-]?\d+)\s*(?P<op>[+-])\s*)?(?:(?P<b>\d+)\s*\*\s*)?sqrt\(\s*(?P<d>\d+)\s*\)"
_SURD_PAREN_RE = re.compile(rf"\(\s*{_SURD_INNER}\s*\)\s*/\s*(?P<c>\d+)")
_SURD_BARE_RE = re.compile(rf"{_SURD_INNER}(?:\s*/\s*(?P<c>\d+))?")


def parse_theta(text: str) -> ExactNumber:
    """Parse a positive exact parameter.

    Accepted forms: ``7``, ``13/2``, ``sqrt(13)``, ``3*sqrt(2)``,
    ``1+sqrt(2)``, ``sqrt(13)/2``, ``(1+2*sqrt(5))/3``.  Decimal
    notation is rejected: a float cannot say which exact number it
    means, and nearby parameters have different signatures.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty theta expression")
    if _DECIMAL_RE.fullmatch(s):
        raise ValueError(
            f"decimal theta {s!r} not supported; use p/q or (a+b*sqrt(d))/c")

    if "sqrt" not in s:
        m = _RATIONAL_RE.fullmatch(s)
        if not m:
            raise ValueError(f"malformed theta expression: {text!r}")
        q = int(m.group(2)) if m.group(2) else 1
        if q == 0:
            raise ValueError("zero denominator")
        value: ExactNumber = Fraction(int(m.group(1)), q)
    else:
        m = _SURD_PAREN_RE.fullmatch(s) or _SURD_BARE_RE.fullmatch(s)
        if not m:
            raise ValueError(f"malformed theta expression: {text!r}")
        if m.group("a") is not None and m.re is _SURD_BARE_RE and m.group("c"):
            raise ValueError(
                f"ambiguous theta {text!r}: parenthesize as (a+b*sqrt(d))/c")
        a = int(m.group("a")) if m.group("a") else 0
        b = int(m.group("b")) if m.group("b") else 1
        if m.group("op") == "-":
            b = -b
        c = int(m.group("c")) if m.group("c") else 1
        value = Surd.make(a, b, int(m.group("d")), c)

    if theta_sign(value) <= 0:
        raise ValueError(f"theta must be positive: {text!r}")
    return value


def format_theta(theta: ExactNumber) -> str:
    """Render an ExactNumber in a form parse_theta accepts."""
    return str(theta)
