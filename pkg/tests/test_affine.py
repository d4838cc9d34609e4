"""Affine sl2^: mode brackets, vacuum-module action, weight spaces, matrices."""

import random
from fractions import Fraction

import pytest

from admz.affine import (
    VermaVector,
    act_mode,
    bracket_modes,
    mode,
    mode_charge,
    mode_degree,
    monomial_to_text,
    operator_matrix,
    parse_verma,
    vacuum_module,
    weight_space_basis,
)
from admz.errors import InvalidInputError, ResourceCapError
from oracles import brute_weight_space

F = Fraction
K = F(-1, 2)  # a convenient generic level for module tests


def vec(monos, level=K):
    return VermaVector(level, {m: F(1) for m in monos})


# -- bracket -----------------------------------------------------------------


def test_bracket_examples():
    ms, central = bracket_modes(mode("e", 0), mode("f", 0), K)
    assert ms == [(mode("h", 0), F(1))] and central == 0

    ms, central = bracket_modes(mode("e", 1), mode("f", -1), K)
    assert ms == [(mode("h", 0), F(1))] and central == K

    ms, central = bracket_modes(mode("h", 2), mode("h", -2), K)
    assert ms == [] and central == 4 * K


def test_bracket_antisymmetry_and_jacobi():
    level = F(7, 3)
    modes = [mode(g, d) for g in "ehf" for d in range(-3, 4)]
    for x in modes:
        for y in modes:
            mxy, cxy = bracket_modes(x, y, level)
            myx, cyx = bracket_modes(y, x, level)
            combined = {}
            for m, c in mxy + myx:
                combined[m] = combined.get(m, F(0)) + c
            assert all(v == 0 for v in combined.values())
            assert cxy + cyx == 0
    for x in modes:
        for y in modes:
            for z in modes:
                total_modes, total_central = {}, F(0)
                for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
                    inner_modes, _ = bracket_modes(b, c, level)
                    for bm, bc in inner_modes:
                        outer_modes, outer_central = bracket_modes(a, bm, level)
                        for om, oc in outer_modes:
                            total_modes[om] = total_modes.get(om, F(0)) + bc * oc
                        total_central += bc * outer_central
                assert all(v == 0 for v in total_modes.values()), (x, y, z)
                assert total_central == 0, (x, y, z)


# -- act_mode -----------------------------------------------------------------


def test_act_examples():
    e_m1 = vec([(mode("e", -1),)])
    assert act_mode(mode("e", 0), e_m1).is_zero()
    assert act_mode(mode("f", 1), e_m1) == VermaVector(K, {(): K})
    # h(0) acts by twice the alpha-weight
    m = (mode("f", -2), mode("e", -1), mode("e", -1))
    v = vec([tuple(sorted(m))])
    assert act_mode(mode("h", 0), v) == v * 2


def test_act_module_axiom_sampled():
    level = F(3, 5)
    module = vacuum_module(level)
    rng = random.Random(5)
    basis_vectors = []
    for d, w in ((1, 1), (2, 0), (3, 1), (3, -1)):
        for mono in module.weight_space_basis(d, w):
            basis_vectors.append(VermaVector(level, {mono: F(1)}))
    modes = [mode(g, d) for g in "ehf" for d in (-2, -1, 0, 1, 2)]
    for _ in range(150):
        x, y = rng.choice(modes), rng.choice(modes)
        v = rng.choice(basis_vectors)
        lhs = module.act(x, module.act(y, v)) - module.act(y, module.act(x, v))
        ms, central = bracket_modes(x, y, level)
        rhs = v * central
        for bm, bc in ms:
            rhs = rhs + module.act(bm, v) * bc
        assert lhs == rhs


def test_act_grading():
    module = vacuum_module(K)
    for d, w in ((2, 0), (3, 1), (4, 2)):
        for mono in module.weight_space_basis(d, w):
            v = VermaVector(K, {mono: F(1)})
            for md in (mode("e", 0), mode("f", 1), mode("h", -1), mode("e", -2)):
                img = module.act(md, v)
                if not img.is_zero():
                    assert img.homogeneous_weight() == (
                        d - mode_degree(md),
                        w + mode_charge(md),
                    )


# -- weight spaces ------------------------------------------------------------


def test_weight_space_examples():
    assert weight_space_basis(K, 2, 2) == [(mode("e", -1), mode("e", -1))]
    assert weight_space_basis(K, 1, 0) == [(mode("h", -1),)]
    assert weight_space_basis(K, 0, 1) == []
    assert weight_space_basis(K, 0, 0) == [()]


def test_weight_space_against_brute_force():
    for d in range(0, 6):
        for w in range(-d, d + 1):
            assert weight_space_basis(K, d, w) == brute_weight_space(d, w)


def test_weight_space_cap():
    with pytest.raises(ResourceCapError):
        weight_space_basis(K, 9, 1, max_dim=3)


# -- operator matrices ----------------------------------------------------------


def test_operator_matrix_examples():
    b22 = weight_space_basis(K, 2, 2)
    b23 = weight_space_basis(K, 2, 3)
    m = operator_matrix(mode("e", 0), b22, b23, K)
    assert (m.nrows, m.ncols) == (0, 1) and not m.entries

    b11 = weight_space_basis(K, 1, 1)
    m = operator_matrix(mode("f", 1), b22, b11, K)
    # f(1) e(-1)^2 |0> = (2k-2) e(-1)|0>
    assert m.to_rows() == [[2 * K - 2]]

    empty = operator_matrix(mode("e", 0), [], [], K)
    assert (empty.nrows, empty.ncols) == (0, 0)


def test_operator_matrix_target_mismatch():
    b22 = weight_space_basis(K, 2, 2)
    with pytest.raises(InvalidInputError):
        operator_matrix(mode("f", 1), b22, [], K)


# -- text round trip -------------------------------------------------------------


def test_verma_text_round_trip():
    rng = random.Random(37)
    module = vacuum_module(K)
    pool = module.weight_space_basis(4, 0) + module.weight_space_basis(3, 1)
    for _ in range(40):
        terms = {}
        for mono in rng.sample(pool, k=min(3, len(pool))):
            terms[mono] = F(rng.randint(-5, 5), rng.randint(1, 4))
        v = VermaVector(K, terms)
        assert parse_verma(v.to_text(), K) == v
    assert monomial_to_text((mode("h", -3), mode("e", -1), mode("e", -1))) == (
        "h(-3) e(-1)^2 |0>"
    )
    assert parse_verma("|0>", K) == VermaVector.vacuum(K)
    assert parse_verma("0", K).is_zero()
