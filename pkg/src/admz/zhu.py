"""The classification pipeline for admissible levels k = p/q.

From the parameter pack (k, t=k+2, N=2q+p-1, l=q-1) this module produces:
the admissible h-value set S, the weight box P^k, the vacuum singular vector
(by an exact nullspace search), its image Q in U(sl2), the closed-form
substitute for Q^T modulo the lowering ideal (the "mff" route), the
classifying polynomials p1/p2 by both routes, and the assembled
category-O / weight-module report.  Every step is exact and cross-checked.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import affine
from .affine import AffineWeight, VermaVector, mode, vacuum_module
from .errors import ConsistencyError, InvalidInputError, NotAdmissibleError
from .exact_core import HPoly, format_scalar, parse_scalar, poly_proportional, poly_root_check
from .nullspace import RationalMatrix, kernel_basis
from .usl2 import (
    E_ORDER,
    MOD_N_MINUS,
    MOD_N_PLUS,
    FinElement,
    fin_ad,
    fin_product,
    project_cartan,
)

NULLSPACE_ROUTE = "nullspace"
MFF_ROUTE = "mff"


@dataclass(frozen=True)
class AdmissibleLevel:
    """Validated parameter pack for an admissible level k = p/q."""

    p: int
    q: int
    k: Fraction
    t: Fraction
    N: int
    l: int

    def __str__(self):
        return format_scalar(self.k)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "k": format_scalar(self.k),
            "t": format_scalar(self.t),
            "N": self.N,
            "l": self.l,
        }


def admissible_params(p: int, q: int) -> AdmissibleLevel:
    """Validate (p, q) and build the parameter pack."""
    if q < 1:
        raise InvalidInputError(f"q must be a positive integer, got {q}")
    if gcd(p, q) != 1:
        raise InvalidInputError(f"p and q must be coprime, got p={p}, q={q}")
    if 2 * q + p - 2 < 0:
        raise NotAdmissibleError(
            f"level {p}/{q} is not admissible: 2q+p-2 = {2 * q + p - 2} < 0"
        )
    k = Fraction(p, q)
    return AdmissibleLevel(p=p, q=q, k=k, t=k + 2, N=2 * q + p - 1, l=q - 1)


def level_from_string(text: str) -> AdmissibleLevel:
    """Parse an exact "p/q" level string (decimals rejected)."""
    k = parse_scalar(text)
    return admissible_params(k.numerator, k.denominator)


def set_S(lv: AdmissibleLevel) -> list[Fraction]:
    """S = { N - i*t - j : 0 <= i <= l, 1 <= j <= N } in enumeration order."""
    out = [lv.N - i * lv.t - j for i in range(lv.l + 1) for j in range(1, lv.N + 1)]
    if len(set(out)) != (lv.l + 1) * lv.N:
        raise ConsistencyError("invariant S-distinct: elements of S collide")
    return out


def enumerate_Pk(lv: AdmissibleLevel) -> list[AffineWeight]:
    """The admissible-weight box: (k-n+mt) Lambda0 + (n-mt) Lambda1."""
    out = []
    for m in range(lv.l + 1):
        for n in range(2 * lv.q + lv.p - 1):  # n <= 2q+p-2
            out.append(
                AffineWeight(
                    lambda0=lv.k - n + m * lv.t,
                    lambda1=Fraction(n) - m * lv.t,
                )
            )
    return out


def singular_position(lv: AdmissibleLevel) -> tuple[int, int]:
    """(delta-degree, alpha-weight) of the singular vector's weight space."""
    return lv.q * lv.N, lv.N


@functools.lru_cache(maxsize=None)
def _singular_cached(p: int, q: int, max_dim: int) -> VermaVector:
    lv = admissible_params(p, q)
    module = vacuum_module(lv.k)
    d, w = singular_position(lv)
    basis0 = module.weight_space_basis(d, w, max_dim)
    basis_e = module.weight_space_basis(d, w + 1, max_dim)
    basis_f = module.weight_space_basis(d - 1, w - 1, max_dim)
    m_e = affine.operator_matrix(mode("e", 0), basis0, basis_e, lv.k)
    m_f = affine.operator_matrix(mode("f", 1), basis0, basis_f, lv.k)
    stacked = RationalMatrix.vstack(m_e, m_f)
    kernel = kernel_basis(stacked)
    if len(kernel) != 1:
        raise ConsistencyError(
            f"invariant kernel-dimension: expected 1-dimensional singular space, "
            f"got {len(kernel)} at weight ({d},{w}) for k={lv.k}"
        )
    vec = kernel[0]
    v = VermaVector(lv.k, {basis0[j]: c for j, c in enumerate(vec) if c})
    # re-verify by direct action, independent of the solver
    for md in (mode("e", 0), mode("f", 1)):
        if not module.act(md, v).is_zero():
            raise ConsistencyError(
                "invariant singular-annihilation: solver output not singular"
            )
    return v


def singular_vector_nullspace(lv: AdmissibleLevel, max_dim=None) -> VermaVector:
    """The unique singular vector in W(qN, N), first support monomial scaled to 1."""
    return _singular_cached(lv.p, lv.q, affine.resolve_max_dim(max_dim))


def zhu_image_F(v: VermaVector) -> FinElement:
    """Image of a Verma vector in U(sl2): reverse each monomial and apply
    the sign (-1)^(i_1+...+i_n) with x(-i-1) carrying index i."""
    out = FinElement.zero(E_ORDER)
    for mono, coeff in v.terms.items():
        isum = 0
        for d, _ in mono:
            if d >= 0:
                raise InvalidInputError("zhu_image_F requires mode degrees <= -1")
            isum += -d - 1
        sign = -1 if isum % 2 else 1
        word = FinElement.one(E_ORDER)
        for md in mono:  # reversed product: a_n ... a_1
            word = fin_product(
                FinElement.generator(affine.mode_gen(md), E_ORDER), word
            )
        out = out + word * (coeff * sign)
    return out


@functools.lru_cache(maxsize=None)
def _q_cached(p: int, q: int, max_dim: int) -> FinElement:
    lv = admissible_params(p, q)
    return zhu_image_F(_singular_cached(p, q, max_dim))


def compute_Q(lv: AdmissibleLevel, max_dim=None) -> FinElement:
    """Q = F([v_sing]) in U(sl2), E_ORDER."""
    return _q_cached(lv.p, lv.q, affine.resolve_max_dim(max_dim))


def mff_epsilon(lv: AdmissibleLevel) -> FinElement:
    """Closed form of the projected singular element:
    prod_{i=1..l, j=1..N} (ef + (it+j-1)h - (it+j)(it+j-1)) * e^N."""
    out = FinElement.monomial(E_ORDER, (lv.N, 0, 0))
    for i in range(1, lv.l + 1):
        for j in range(1, lv.N + 1):
            s = i * lv.t + j
            factor = FinElement(
                E_ORDER,
                {
                    (1, 0, 1): Fraction(1),
                    (0, 1, 0): s - 1,
                    (0, 0, 0): -s * (s - 1),
                },
            )
            out = fin_product(factor, out)
    return out


def descend_to_weight_zero(x: FinElement) -> FinElement:
    """Apply ad e (weight < 0) or ad f (weight > 0) until ad-weight is zero.

    The power is chosen at run time from the element's actual weight, which
    sidesteps the transpose/weight sign ambiguity in the source conventions.
    """
    w = x.ad_weight()
    if w is None:
        raise InvalidInputError("descend_to_weight_zero requires a homogeneous element")
    while w != 0:
        x = fin_ad("e" if w < 0 else "f", x)
        w += 2 if w < 0 else -2
        if x.is_zero():
            raise ConsistencyError("adjoint descent hit zero before weight 0")
    return x


def compute_p2(lv: AdmissibleLevel, route: str = NULLSPACE_ROUTE, max_dim=None) -> HPoly:
    """Classifying polynomial p2 (defined up to a nonzero constant).

    nullspace route: transpose Q, descend to ad-weight 0, project mod U(g)n_-.
    mff route: straighten f^N * (closed-form product) and project the same way.
    """
    if route == NULLSPACE_ROUTE:
        qt = compute_Q(lv, max_dim).transpose()
        u = descend_to_weight_zero(qt)
    elif route == MFF_ROUTE:
        f_n = FinElement.monomial(E_ORDER, (0, 0, lv.N))
        u = fin_product(f_n, mff_epsilon(lv))
    else:
        raise InvalidInputError(f"unknown p2 route {route!r}")
    poly = project_cartan(u, MOD_N_MINUS)
    if poly.is_zero():
        raise ConsistencyError(f"p2 via {route} projected to the zero polynomial")
    return poly


def compute_p1(lv: AdmissibleLevel, max_dim=None) -> HPoly:
    """Classifying polynomial p1: descend Q itself, project mod U(g)n_+."""
    u = descend_to_weight_zero(compute_Q(lv, max_dim))
    poly = project_cartan(u, MOD_N_PLUS)
    if poly.is_zero():
        raise ConsistencyError("p1 projected to the zero polynomial")
    return poly


def module_families(lv: AdmissibleLevel, S) -> list[dict]:
    """The three weight-module families with their parameter conditions."""
    s_dense = [r for r in S if not _is_nonneg_int(r)]
    s_text = [format_scalar(r) for r in S]
    return [
        {
            "family": "highest_weight",
            "modules": "V(r*omega)",
            "condition": "r in S",
            "r_values": s_text,
        },
        {
            "family": "lowest_weight",
            "modules": "V(r*omega)*",
            "condition": "r in S",
            "r_values": s_text,
        },
        {
            "family": "dense",
            "modules": "E(r,mu)",
            "condition": "r in S minus Z+, mu not in Z, r - mu not in Z",
            "r_values": [format_scalar(r) for r in s_dense],
        },
    ]


def _is_nonneg_int(r: Fraction) -> bool:
    return r.denominator == 1 and r.numerator >= 0


@dataclass
class ClassificationReport:
    """Everything the pipeline produces for one admissible level."""

    level: AdmissibleLevel
    S: list
    Pk: list
    p2: HPoly
    p1: HPoly
    p2_mff: HPoly
    p2_route_constant: Fraction
    singular_vector: VermaVector
    Q: FinElement
    families: list

    def to_dict(self) -> dict:
        return {
            "level": self.level.to_dict(),
            "S": [format_scalar(r) for r in self.S],
            "Pk": [w.to_dict() for w in self.Pk],
            "p1": self.p1.to_text(),
            "p2": self.p2.to_text(),
            "p2_mff": self.p2_mff.to_text(),
            "p2_route_constant": format_scalar(self.p2_route_constant),
            "singular_vector": self.singular_vector.to_text(),
            "Q": {"order": "e_first", "text": self.Q.to_text()},
            "families": self.families,
        }


def classify_category_O(lv: AdmissibleLevel, max_dim=None) -> ClassificationReport:
    """Run the full pipeline with every internal cross-check enabled."""
    S = set_S(lv)
    if len(S) != (lv.l + 1) * lv.N:
        raise ConsistencyError("invariant S-size: |S| != (l+1)N")
    Pk = enumerate_Pk(lv)
    if {w.h_value for w in Pk} != set(S):
        raise ConsistencyError("invariant Pk-h-values: h-values of P^k differ from S")
    for w in Pk:
        if w.level_value != lv.k:
            raise ConsistencyError("invariant Pk-level: weight has wrong level")

    v_sing = singular_vector_nullspace(lv, max_dim)
    Q = compute_Q(lv, max_dim)
    if Q.ad_weight() != 2 * lv.N:
        raise ConsistencyError("invariant Q-adjoint-weight: expected 2N")
    if not fin_ad("e", Q).is_zero():
        raise ConsistencyError("invariant adjoint-module: (ad e)Q != 0")
    x = Q
    for _ in range(2 * lv.N):
        x = fin_ad("f", x)
    if x.is_zero():
        raise ConsistencyError("invariant adjoint-module: (ad f)^{2N} Q == 0")
    if not fin_ad("f", x).is_zero():
        raise ConsistencyError("invariant adjoint-module: (ad f)^{2N+1} Q != 0")

    p2 = compute_p2(lv, NULLSPACE_ROUTE, max_dim)
    p2_mff = compute_p2(lv, MFF_ROUTE, max_dim)
    const = poly_proportional(p2, p2_mff)
    if const is None or const == 0:
        raise ConsistencyError("invariant p2-route-agreement: routes not proportional")
    p1 = compute_p1(lv, max_dim)

    if p2.degree != (lv.l + 1) * lv.N:
        raise ConsistencyError("invariant p2-degree: deg p2 != (l+1)N")
    roots2, cofactor2 = poly_root_check(p2, [-r for r in S])
    if cofactor2.degree != 0 or any(mult != 1 for mult in roots2.values()) or len(
        roots2
    ) != len(S):
        raise ConsistencyError("invariant p2-roots: root multiset is not {-r : r in S}")
    roots1, cofactor1 = poly_root_check(p1, S)
    if cofactor1.degree != 0 or any(mult != 1 for mult in roots1.values()) or len(
        roots1
    ) != len(S):
        raise ConsistencyError("invariant p1-roots: root multiset is not S")
    for r in S:
        if (p1(r) == 0) != (p2(-r) == 0):
            raise ConsistencyError("invariant p1-p2-mirror: root correspondence broken")

    return ClassificationReport(
        level=lv,
        S=S,
        Pk=Pk,
        p2=p2,
        p1=p1,
        p2_mff=p2_mff,
        p2_route_constant=const,
        singular_vector=v_sing,
        Q=Q,
        families=module_families(lv, S),
    )
