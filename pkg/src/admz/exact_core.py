"""Exact rational scalars and univariate polynomials in the Cartan generator h.

Every scalar in the library is a ``fractions.Fraction``: arbitrary precision,
always in lowest terms, denominator positive, no floating point anywhere.
``HPoly`` is the dense polynomial type used for the classifying polynomials;
its canonical text form is terms in decreasing power with "num/den"
coefficients, e.g. ``2*h^2 + 2*h``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import InvalidInputError

Scalar = Fraction

_SCALAR_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_scalar(text: str) -> Fraction:
    """Parse an exact "num/den" (or integer) string. Decimals are rejected."""
    text = text.strip()
    if not _SCALAR_RE.match(text):
        raise InvalidInputError(f"not an exact rational literal: {text!r}")
    return Fraction(text)


def format_scalar(x: Fraction) -> str:
    """Render as "num/den", denominator omitted when 1."""
    return str(x)


def scalar_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    """Exact rational arithmetic; op is one of add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise InvalidInputError("division by zero")
        return a / b
    raise InvalidInputError(f"unknown scalar op {op!r}")


class HPoly:
    """Polynomial in h with exact rational coefficients.

    Stored dense in ascending powers with the leading coefficient nonzero;
    the zero polynomial has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "HPoly":
        return cls(())

    @classmethod
    def one(cls) -> "HPoly":
        return cls((Fraction(1),))

    @classmethod
    def h(cls) -> "HPoly":
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def constant(cls, c) -> "HPoly":
        return cls((Fraction(c),))

    @classmethod
    def linear(cls, const, lead=1) -> "HPoly":
        """lead*h + const"""
        return cls((Fraction(const), Fraction(lead)))

    @classmethod
    def from_roots(cls, roots) -> "HPoly":
        """Monic product of (h - r) over the given roots."""
        out = cls.one()
        for r in roots:
            out = out * cls((-Fraction(r), Fraction(1)))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise InvalidInputError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        if not isinstance(other, HPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"HPoly({self.to_text()!r})"

    def __neg__(self):
        return HPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if not isinstance(other, HPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return HPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HPoly):
            if not self.coeffs or not other.coeffs:
                return HPoly.zero()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
            return HPoly(out)
        return HPoly(tuple(c * Fraction(other) for c in self.coeffs))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod_linear(self, root) -> tuple["HPoly", Fraction]:
        """Synthetic division by (h - root); returns (quotient, remainder)."""
        root = Fraction(root)
        if not self.coeffs:
            return HPoly.zero(), Fraction(0)
        quot = []
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * root + c
            quot.append(acc)
        rem = quot.pop()
        quot.reverse()
        return HPoly(quot), rem

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            mag = abs(c)
            if power == 0:
                body = format_scalar(mag)
            else:
                hpart = "h" if power == 1 else f"h^{power}"
                body = hpart if mag == 1 else f"{format_scalar(mag)}*{hpart}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


_TERM_RE = re.compile(
    r"^(?P<sign>[+-]?)(?:(?P<coeff>\d+(?:/\d+)?)\*?)?(?:(?P<h>h)(?:\^(?P<pow>\d+))?)?$"
)


def parse_hpoly(text: str) -> HPoly:
    """Parse the canonical text form of HPoly (round-trip of to_text)."""
    compact = text.replace(" ", "")
    if not compact:
        raise InvalidInputError("empty polynomial text")
    if compact == "0":
        return HPoly.zero()
    terms = re.findall(r"[+-]?[^+-]+", compact)
    if "".join(terms) != compact:
        raise InvalidInputError(f"cannot parse polynomial: {text!r}")
    coeff_map: dict[int, Fraction] = {}
    for term in terms:
        m = _TERM_RE.match(term)
        if not m or (m.group("coeff") is None and m.group("h") is None):
            raise InvalidInputError(f"cannot parse polynomial term: {term!r}")
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        if m.group("sign") == "-":
            coeff = -coeff
        if m.group("h"):
            power = int(m.group("pow")) if m.group("pow") else 1
        else:
            power = 0
        coeff_map[power] = coeff_map.get(power, Fraction(0)) + coeff
    size = max(coeff_map) + 1
    out = [Fraction(0)] * size
    for p, c in coeff_map.items():
        out[p] = c
    return HPoly(out)


def poly_mul(a: HPoly, b: HPoly) -> HPoly:
    return a * b


def poly_root_check(p: HPoly, candidates) -> tuple[dict[Fraction, int], HPoly]:
    """Divide p exactly by (h - r) for each candidate root as often as possible.

    Returns the multiplicity map (only matched roots) and the remaining
    cofactor. Candidates are processed in ascending order for determinism.
    """
    if p.is_zero():
        raise InvalidInputError("poly_root_check requires a nonzero polynomial")
    matched: dict[Fraction, int] = {}
    cofactor = p
    for r in sorted(Fraction(c) for c in set(candidates)):
        while True:
            quot, rem = cofactor.divmod_linear(r)
            if rem != 0 or cofactor.is_zero():
                break
            matched[r] = matched.get(r, 0) + 1
            cofactor = quot
    return matched, cofactor


def poly_proportional(a: HPoly, b: HPoly):
    """Return c with a == c*b (nonzero c) when it exists, else None.

    Degenerate convention: both zero -> 1 (never hit by the main pipeline).
    """
    if a.is_zero() and b.is_zero():
        return Fraction(1)
    if a.is_zero() or b.is_zero():
        return None
    if a.degree != b.degree:
        return None
    c = a.leading() / b.leading()
    if a == c * b:
        return c
    return None
