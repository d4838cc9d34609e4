"""Dense weight modules E(r,mu) and the annihilation test against Q.

E(r,mu) is the span of basis vectors E_i (i integer) with the sl2 action

    e.E_i = -(mu+i) E_{i-1},   h.E_i = (r - 2mu - 2i) E_i,
    f.E_i = (mu+i-r) E_{i+1}.

An element of U(sl2) of ad-weight 2w sends E_i to a multiple of E_{i-w}; the
coefficient of Q.E_i is a polynomial of degree <= N in (mu+i), so vanishing
at N+1 consecutive indices proves vanishing everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError
from .exact_core import format_scalar
from .usl2 import _LETTERS, FinElement
from .zhu import AdmissibleLevel, compute_Q, module_families, set_S


@dataclass(frozen=True)
class DenseParams:
    """The pair (r, mu) labelling E(r,mu)."""

    r: Fraction
    mu: Fraction

    @property
    def is_irreducible(self) -> bool:
        """Irreducibility of E(r,mu) as a plain sl2-module."""
        return self.mu.denominator != 1 and (self.r - self.mu).denominator != 1


@dataclass(frozen=True)
class EActionResult:
    """Image of a weight-homogeneous element on E_i: coefficient * E_{i+shift}."""

    shift: int
    coefficient: Fraction


def act_generator_on_E(g: str, params: DenseParams, i: int) -> tuple[Fraction, int]:
    """One generator on E_i: (coefficient, new index)."""
    x = params.mu + i
    if g == "e":
        return -x, i - 1
    if g == "h":
        return params.r - 2 * x, i
    if g == "f":
        return x - params.r, i + 1
    raise InvalidInputError(f"unknown sl2 generator {g!r}")


def act_element_on_E(u: FinElement, params: DenseParams, i: int) -> EActionResult:
    """Apply a weight-homogeneous element term by term."""
    w = u.ad_weight()
    if w is None:
        raise InvalidInputError("act_element_on_E requires a weight-homogeneous element")
    if w % 2:
        raise InvalidInputError("odd ad-weight cannot occur in U(sl2)")
    shift = -w // 2
    letters = _LETTERS[u.order]
    total = Fraction(0)
    for mono, coeff in u.terms.items():
        word = []
        for g, exp in zip(letters, mono):
            word.extend([g] * exp)
        acc = coeff
        idx = i
        for g in reversed(word):
            c, idx = act_generator_on_E(g, params, idx)
            if c == 0:
                acc = Fraction(0)
                break
            acc *= c
        total += acc
    return EActionResult(shift=shift, coefficient=total)


def q_annihilates_E(lv: AdmissibleLevel, params: DenseParams, max_dim=None) -> bool:
    """Whether Q kills every E_i.

    Checks i = 0..N (enough, by the degree bound) plus two out-of-range
    spot checks at i = -1 and i = N+1.
    """
    Q = compute_Q(lv, max_dim)
    indices = list(range(lv.N + 1)) + [-1, lv.N + 1]
    return all(act_element_on_E(Q, params, i).coefficient == 0 for i in indices)


def is_T_member(lv: AdmissibleLevel, params: DenseParams) -> bool:
    """(r,mu) in T: r in S minus Z+, mu not in Z, r-mu not in Z."""
    if params.mu.denominator == 1 or (params.r - params.mu).denominator == 1:
        return False
    r = params.r
    if r.denominator == 1 and r.numerator >= 0:
        return False
    return r in set(set_S(lv))


def classify_weight_modules(lv: AdmissibleLevel, max_dim=None) -> dict:
    """The three weight-module families, with verified dense samples."""
    S = set_S(lv)
    families = module_families(lv, S)
    samples = []
    sample_mus = (Fraction(1, 3), Fraction(1, 4))
    for r in S:
        for mu in sample_mus:
            params = DenseParams(r=r, mu=mu)
            if not params.is_irreducible:
                continue
            member = is_T_member(lv, params)
            annihilates = q_annihilates_E(lv, params, max_dim)
            samples.append(
                {
                    "r": format_scalar(r),
                    "mu": format_scalar(mu),
                    "in_T": member,
                    "q_annihilates": annihilates,
                    "agrees": member == annihilates,
                }
            )
    families[2]["verified_samples"] = samples
    return {
        "level": lv.to_dict(),
        "S": [format_scalar(r) for r in S],
        "families": families,
    }
