"""Mixed-product embedding and the graded conformal module machinery."""

import random
from fractions import Fraction

import pytest

from oconf.linalg import SparseMat
from oconf.mixed import (
    ConformalModule,
    build_slice,
    shen_closed_forms,
    shen_embed,
    verify_shen_monomorphism,
)
from oconf.ortho import build_conformal
from oconf.poly import DiffOp, bracket
from oconf.weights import parse_weight, zero_weight

F = Fraction


def test_embed_fixes_translations_and_shifts_euler():
    conf = build_conformal(2, "D")
    for r in range(1, 5):
        e = shen_embed(conf.op(f"d_{r}"))
        assert e.field == conf.op(f"d_{r}") and not e.gl
    eD = shen_embed(conf.op("D"))
    assert eD.gl == {(0, 0, 0, 0): SparseMat.identity(4)}


def test_embed_rejects_non_vector_fields():
    with pytest.raises(ValueError):
        shen_embed(DiffOp.identity(2))


@pytest.mark.parametrize("n,series", [(2, "D"), (2, "B"), (1, "B")])
def test_closed_forms_match_general_formula(n, series):
    conf = build_conformal(n, series)
    closed = shen_closed_forms(n, series)
    for lbl in conf.labels():
        assert shen_embed(conf.op(lbl)) == closed[lbl], lbl


@pytest.mark.parametrize("n,series", [(2, "D"), (2, "B")])
def test_monomorphism_report(n, series):
    r = verify_shen_monomorphism(n, series)
    assert r["ok"], r
    # rotations carry no central part; the Euler operator carries exactly one
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            assert r["central_parts"][f"A_{{{i},{j}}}"] == []
    zero = (0,) * (2 * n if series == "D" else 2 * n + 1)
    assert r["central_parts"]["D"] == [(zero, F(1))]


def test_extended_bracket_matches_embedding_of_bracket():
    rng = random.Random(11)
    conf = build_conformal(2, "D")
    labels = conf.labels()
    for _ in range(10):
        la, lb = rng.sample(labels, 2)
        lhs = shen_embed(bracket(conf.op(la), conf.op(lb)))
        rhs = shen_embed(conf.op(la)).bracket(shen_embed(conf.op(lb)))
        assert lhs == rhs


def test_slice_degree_shifts():
    mod = ConformalModule(parse_weight("1,0", "D"), F(1, 3))
    sl = mod.slice(1)
    assert sl.dim == 16
    for lbl, M in sl.down.items():
        assert M.rows == mod.slice_dim(0) and M.cols == sl.dim
    for lbl, M in sl.up.items():
        assert M.rows == mod.slice_dim(2)
    # translations kill degree zero
    sl0 = mod.slice(0)
    assert all(M.is_zero() for M in sl0.down.values())


def test_central_element_acts_by_b():
    mod = ConformalModule(parse_weight("1,0", "D"), F(7, 2))
    for k in range(3):
        assert mod.central_matrix(k) == SparseMat.identity(mod.slice_dim(k)).scale(F(7, 2))


def test_special_conformal_on_bottom_of_trivial_module():
    # J_i (1 (x) v0) = b x_i (x) v0
    for series, n in [("D", 2), ("B", 2)]:
        mod = ConformalModule(zero_weight(series, n), F(5, 3))
        for i, lbl in enumerate(mod.j_labels):
            M = mod.action_matrix(lbl, 0)
            assert M == SparseMat(mod.slice_dim(1), 1, {(i, 0): F(5, 3)})


@pytest.mark.parametrize(
    "series,mus,b,degrees",
    [("D", "1,0", F(1, 3), (0, 1)), ("B", "1/2,1/2", F(-2), (0, 1)), ("D", "0,0", F(1), (0, 1, 2))],
)
def test_module_axiom_for_big_algebra(series, mus, b, degrees):
    # action([X,Y]) = [action(X), action(Y)] for all o(2n+2)/o(2n+3) pairs
    mu = parse_weight(mus, series)
    mod = ConformalModule(mu, b)
    table = mod.big_action_table()
    from oconf.ortho import build_ortho

    ob_big = build_ortho(2 * mod.n + 2 if series == "D" else 2 * mod.n + 3)
    by_label = {big: (conf_lbl, sign) for big, conf_lbl, sign in table}

    def act(big_label, k):
        conf_lbl, sign = by_label[big_label]
        return mod.action_matrix(conf_lbl, k).scale(sign), mod.degree_shift(conf_lbl)

    labels = ob_big.labels()
    for k in degrees:
        for i in range(len(labels)):
            for j in range(i + 1, len(labels)):
                Mi_k, si = act(labels[i], k)
                Mj_k, sj = act(labels[j], k)
                if k + sj >= 0:
                    Mi_shift, _ = act(labels[i], k + sj)
                else:
                    Mi_shift = SparseMat(0, 0)
                if k + si >= 0:
                    Mj_shift, _ = act(labels[j], k + si)
                else:
                    Mj_shift = SparseMat(0, 0)
                tdim = mod.slice_dim(k + si + sj) if k + si + sj >= 0 else 0
                comm = SparseMat(tdim, mod.slice_dim(k))
                if k + sj >= 0 and k + sj + si >= 0:
                    comm = comm + Mi_shift * Mj_k
                if k + si >= 0 and k + si + sj >= 0:
                    comm = comm - Mj_shift * Mi_k
                expected = SparseMat(tdim, mod.slice_dim(k))
                for t, c in ob_big.bracket_coeffs(i, j):
                    conf_lbl, sign = by_label[labels[t]]
                    if mod.degree_shift(conf_lbl) == si + sj:
                        expected = expected + mod.action_matrix(conf_lbl, k).scale(sign * c)
                assert comm == expected, (labels[i], labels[j], k)


def test_phi_degree_zero_is_identity():
    mod = ConformalModule(parse_weight("1,1", "D"), F(2))
    assert mod.phi_matrix(0) == SparseMat.identity(3)


def test_phi_degree_one_is_b_plus_split_casimir():
    from oconf.spectral import omega_tilde_matrix

    for series, mus in [("D", "1,0"), ("B", "1/2,1/2")]:
        mu = parse_weight(mus, series)
        otm = omega_tilde_matrix(mu)
        for b in [F(0), F(1, 3), F(-2)]:
            mod = ConformalModule(mu, b)
            assert mod.phi_matrix(1) == SparseMat.identity(otm.dim).scale(b) + otm.matrix


def test_phi_invertibility_signals_critical_b():
    mu = parse_weight("1,0", "D")
    # b = 1/3: all eigenvalues 1/3 + {1,-1,-3} nonzero -> invertible
    mod = ConformalModule(mu, F(1, 3))
    phi = mod.phi_matrix(1)
    assert phi.rank() == phi.rows
    # b = 3: eigenvalue 3 - 3 = 0 -> singular
    mod = ConformalModule(mu, F(3))
    phi = mod.phi_matrix(1)
    assert phi.rank() < phi.rows


def test_j_alpha_order_independent():
    # the special conformal operators commute, so any application order of
    # J^alpha gives the same vector
    rng = random.Random(17)
    mod = ConformalModule(parse_weight("1,0", "D"), F(1, 3))
    for _ in range(5):
        alpha = [0] * mod.num_vars
        for _ in range(3):
            alpha[rng.randrange(mod.num_vars)] += 1
        order1 = [i for i, a in enumerate(alpha) for _ in range(a)]
        order2 = order1[:]
        rng.shuffle(order2)
        r = rng.randrange(mod.dim_v)
        for order in [order1, order2]:
            vec = {r: F(1)}
            deg = 0
            for i in order:
                vec = mod.action_matrix(mod.j_labels[i], deg).apply(vec)
                deg += 1
            if order is order1:
                first = vec
        assert vec == first


def test_phi_commutes_with_rotation_action():
    # phi is a homomorphism for the degree-preserving orthogonal action
    for series, mus in [("D", "1,0"), ("B", "1/2,1/2")]:
        mu = parse_weight(mus, series)
        mod = ConformalModule(mu, F(1, 3))
        n = mod.n
        flat_labels = [f"A_{{{i},{j}}}" for i in range(1, n + 1) for j in range(1, n + 1)]
        flat_labels += [f"B_{{{i},{j}}}" for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        flat_labels += [f"C_{{{i},{j}}}" for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        if series == "B":
            flat_labels += [f"K_{s}" for s in range(1, 2 * n + 1)]
        for k in [1, 2]:
            phi = mod.phi_matrix(k)
            for lbl in flat_labels:
                M = mod.action_matrix(lbl, k)
                assert phi * M == M * phi, (lbl, k)


def test_build_slice_facade():
    sl = build_slice(parse_weight("1,0", "D"), F(1), 2)
    assert sl.k == 2 and sl.dim == 40 and len(sl.monomials) == 10


def test_slice_cap_enforced():
    mod = ConformalModule(parse_weight("1,0", "D"), F(1), slice_cap=10)
    with pytest.raises(ValueError):
        mod.slice(2)
