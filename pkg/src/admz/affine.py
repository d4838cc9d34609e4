"""The affine algebra sl2^ at a fixed level and its vacuum Verma module.

Modes x(n) = x (x) t^n for x in {e, h, f} with
    [x(m), y(n)] = [x,y](m+n) + m delta_{m+n,0} <x,y> k,
where the invariant form is normalized <e,f> = 1, <h,h> = 2 and the central
element has been replaced by the level k.  The vacuum is annihilated by every
mode of nonnegative degree; canonical monomials list their modes with degree
ascending, ties broken f < h < e, so annihilation modes bubble rightward to
the vacuum during straightening.
"""

from __future__ import annotations

import functools
import os
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError, ResourceCapError
from .exact_core import format_scalar

GEN_RANK = {"f": 0, "h": 1, "e": 2}
RANK_GEN = {0: "f", 1: "h", 2: "e"}
GEN_CHARGE = {"f": -1, "h": 0, "e": 1}

# normalized invariant bilinear form
_PAIRING = {("e", "f"): 1, ("f", "e"): 1, ("h", "h"): 2}
_FIN_BRACKET = {
    ("e", "f"): ("h", 1),
    ("f", "e"): ("h", -1),
    ("h", "e"): ("e", 2),
    ("e", "h"): ("e", -2),
    ("h", "f"): ("f", -2),
    ("f", "h"): ("f", 2),
}

DEFAULT_MAX_WEIGHT_DIM = 20000
MAX_DIM_ENV_VAR = "ADMZ_MAX_WEIGHT_DIM"

# a mode is the key pair (degree, rank); rank orders ties f < h < e
Mode = tuple


def mode(gen: str, degree: int) -> Mode:
    if gen not in GEN_RANK:
        raise InvalidInputError(f"unknown sl2 generator {gen!r}")
    return (degree, GEN_RANK[gen])


def mode_gen(m: Mode) -> str:
    return RANK_GEN[m[1]]


def mode_degree(m: Mode) -> int:
    return m[0]


def mode_charge(m: Mode) -> int:
    return GEN_CHARGE[RANK_GEN[m[1]]]


def monomial_delta_degree(mono) -> int:
    return -sum(d for d, _ in mono)


def monomial_alpha_weight(mono) -> int:
    return sum(GEN_CHARGE[RANK_GEN[r]] for _, r in mono)


def resolve_max_dim(explicit=None) -> int:
    """Weight-space dimension cap: explicit arg, else env var, else default."""
    if explicit is not None:
        return int(explicit)
    env = os.environ.get(MAX_DIM_ENV_VAR)
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise InvalidInputError(f"bad {MAX_DIM_ENV_VAR} value {env!r}") from exc
    return DEFAULT_MAX_WEIGHT_DIM


def bracket_modes(x: Mode, y: Mode, level) -> tuple[list[tuple[Mode, Fraction]], Fraction]:
    """[x(m), y(n)] as (list of (mode, coeff), central scalar)."""
    level = Fraction(level)
    gx, gy = mode_gen(x), mode_gen(y)
    m, n = mode_degree(x), mode_degree(y)
    modes: list[tuple[Mode, Fraction]] = []
    br = _FIN_BRACKET.get((gx, gy))
    if br is not None:
        bg, bc = br
        modes.append((mode(bg, m + n), Fraction(bc)))
    central = Fraction(0)
    if m + n == 0:
        central = Fraction(m) * _PAIRING.get((gx, gy), 0) * level
    return modes, central


@dataclass(frozen=True)
class AffineWeight:
    """Weight in the span of Lambda_0, Lambda_1, delta."""

    lambda0: Fraction
    lambda1: Fraction
    delta: Fraction = Fraction(0)

    @property
    def level_value(self) -> Fraction:
        """Pairing with the central element: Lambda0 + Lambda1 coefficients."""
        return self.lambda0 + self.lambda1

    @property
    def h_value(self) -> Fraction:
        """Pairing with the finite Cartan generator h."""
        return self.lambda1

    def to_dict(self) -> dict:
        return {
            "lambda0": format_scalar(self.lambda0),
            "lambda1": format_scalar(self.lambda1),
            "delta": format_scalar(self.delta),
            "h": format_scalar(self.h_value),
        }


class VermaVector:
    """Element of the vacuum module M(k,0): finite sum of canonical monomials.

    Monomials are tuples of modes (all of negative degree) sorted ascending;
    the empty tuple is the vacuum.  Immutable by convention.
    """

    __slots__ = ("level", "terms")

    def __init__(self, level, terms=None):
        self.level = Fraction(level)
        clean = {}
        for mono, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                clean[mono] = coeff
        self.terms = clean

    @classmethod
    def vacuum(cls, level) -> "VermaVector":
        return cls(level, {(): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, VermaVector):
            return NotImplemented
        return self.level == other.level and self.terms == other.terms

    def __repr__(self):
        return f"VermaVector(level={self.level}, {self.to_text()!r})"

    def __add__(self, other):
        if not isinstance(other, VermaVector):
            return NotImplemented
        if self.level != other.level:
            raise InvalidInputError("mixed levels in Verma-vector addition")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return VermaVector(self.level, out)

    def __neg__(self):
        return VermaVector(self.level, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return VermaVector(self.level, {m: c * Fraction(scalar) for m, c in self.terms.items()})

    __rmul__ = __mul__

    def homogeneous_weight(self):
        """(delta-degree, alpha-weight) if homogeneous, else None."""
        grades = {(monomial_delta_degree(m), monomial_alpha_weight(m)) for m in self.terms}
        if len(grades) == 1:
            return grades.pop()
        return None

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            coeff = self.terms[mono]
            body = monomial_to_text(mono)
            mag = abs(coeff)
            if mag != 1:
                body = f"{format_scalar(mag)} {body}"
            if not parts:
                parts.append(body if coeff > 0 else "- " + body)
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)


def monomial_to_text(mono) -> str:
    if not mono:
        return "|0>"
    pieces = []
    i = 0
    while i < len(mono):
        j = i
        while j < len(mono) and mono[j] == mono[i]:
            j += 1
        count = j - i
        base = f"{mode_gen(mono[i])}({mode_degree(mono[i])})"
        pieces.append(base if count == 1 else f"{base}^{count}")
        i = j
    return " ".join(pieces) + " |0>"


_MODE_RE = re.compile(r"^([efh])\((-?\d+)\)(?:\^(\d+))?$")


def parse_verma(text: str, level) -> VermaVector:
    """Parse the canonical text form of a VermaVector."""
    text = text.strip()
    if not text:
        raise InvalidInputError("empty Verma-vector text")
    if text == "0":
        return VermaVector(level)
    terms: dict[tuple, Fraction] = {}
    # split into signed terms on top-level +/-
    chunks = re.split(r"\s+(?=[+-]\s)", " " + text)
    total = {}
    for chunk in chunks:
        chunk = chunk.strip()
        if not chunk:
            continue
        sign = Fraction(1)
        if chunk.startswith("+"):
            chunk = chunk[1:].strip()
        elif chunk.startswith("-"):
            sign = Fraction(-1)
            chunk = chunk[1:].strip()
        tokens = chunk.split()
        if tokens[-1] != "|0>":
            raise InvalidInputError(f"Verma term must end with |0>: {chunk!r}")
        tokens = tokens[:-1]
        coeff = sign
        modes: list[Mode] = []
        for tok in tokens:
            m = _MODE_RE.match(tok)
            if m:
                g, deg, exp = m.group(1), int(m.group(2)), m.group(3)
                modes.extend([mode(g, deg)] * (int(exp) if exp else 1))
            else:
                coeff *= Fraction(tok)
        mono = tuple(sorted(modes))
        total[mono] = total.get(mono, Fraction(0)) + coeff
    terms.update(total)
    return VermaVector(level, terms)


class VacuumModule:
    """Straightening engine for M(k,0) at one level, with a per-level memo."""

    def __init__(self, level):
        self.level = Fraction(level)
        self._memo: dict = {}

    # -- single-mode action on a canonical monomial -------------------------
    def act_mono(self, md: Mode, mono: tuple) -> dict:
        key = (md, mono)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if not mono:
            out = {} if md[0] >= 0 else {(md,): Fraction(1)}
        elif md[0] < 0 and md <= mono[0]:
            out = {(md,) + mono: Fraction(1)}
        else:
            head, rest = mono[0], mono[1:]
            acc: dict = {}
            for m2, c2 in self.act_mono(md, rest).items():
                for m3, c3 in self.act_mono(head, m2).items():
                    acc[m3] = acc.get(m3, Fraction(0)) + c2 * c3
            bmodes, central = bracket_modes(md, head, self.level)
            for bm, bc in bmodes:
                for m2, c2 in self.act_mono(bm, rest).items():
                    acc[m2] = acc.get(m2, Fraction(0)) + bc * c2
            if central:
                acc[rest] = acc.get(rest, Fraction(0)) + central
            out = {m: c for m, c in acc.items() if c}
        self._memo[key] = out
        return out

    def act(self, md: Mode, v: VermaVector) -> VermaVector:
        if v.level != self.level:
            raise InvalidInputError("vector level does not match module level")
        out: dict = {}
        for mono, coeff in v.terms.items():
            for m2, c2 in self.act_mono(md, mono).items():
                out[m2] = out.get(m2, Fraction(0)) + coeff * c2
        return VermaVector(self.level, out)

    # -- weight spaces -------------------------------------------------------
    def weight_space_basis(self, delta_deg: int, alpha_wt: int, max_dim=None) -> list:
        """All canonical monomials with the given delta-degree and alpha-weight,
        in lexicographically ascending order."""
        if delta_deg < 0:
            raise InvalidInputError("delta-degree must be nonnegative")
        cap = resolve_max_dim(max_dim)
        if delta_deg == 0:
            return [()] if alpha_wt == 0 else []
        modes = [(d, r) for d in range(-delta_deg, 0) for r in (0, 1, 2)]
        out: list = []

        def search(start: int, remaining: int, charge: int, stack: list):
            if remaining == 0:
                if charge == alpha_wt:
                    out.append(tuple(stack))
                    if len(out) > cap:
                        raise ResourceCapError(
                            f"weight space W({delta_deg},{alpha_wt}) exceeds cap {cap}"
                        )
                return
            for i in range(start, len(modes)):
                d, r = modes[i]
                cost = -d
                if cost > remaining:
                    continue
                new_charge = charge + GEN_CHARGE[RANK_GEN[r]]
                new_remaining = remaining - cost
                if abs(alpha_wt - new_charge) > new_remaining:
                    continue
                stack.append((d, r))
                search(i, new_remaining, new_charge, stack)
                stack.pop()

        search(0, delta_deg, 0, [])
        return out


@functools.lru_cache(maxsize=None)
def vacuum_module(level) -> VacuumModule:
    return VacuumModule(level)


def act_mode(md: Mode, v: VermaVector) -> VermaVector:
    """Straightened action of a single mode on a Verma vector."""
    return vacuum_module(v.level).act(md, v)


def weight_space_basis(level, delta_deg: int, alpha_wt: int, max_dim=None) -> list:
    return vacuum_module(Fraction(level)).weight_space_basis(delta_deg, alpha_wt, max_dim)


def operator_matrix(md: Mode, from_basis, to_basis, level):
    """Exact matrix of a single mode between enumerated weight-space bases."""
    from .nullspace import RationalMatrix

    module = vacuum_module(Fraction(level))
    index = {monomial: i for i, monomial in enumerate(to_basis)}
    entries: dict = {}
    for j, monomial in enumerate(from_basis):
        for m2, c2 in module.act_mono(md, monomial).items():
            i = index.get(m2)
            if i is None:
                raise InvalidInputError(
                    "operator image leaves the declared target weight space"
                )
            entries[(i, j)] = c2
    return RationalMatrix(len(to_basis), len(from_basis), entries)
