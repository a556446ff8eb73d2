"""Weight combinatorics: dominance, jumps, Pieri, dimensions, spectra,
excluded central-charge sets.  Frozen values are derived in comments."""

import itertools
from fractions import Fraction

import pytest

from oconf.weights import (
    WeightVec,
    casimir_eigenvalue,
    critical_b_set,
    epsilon,
    is_dominant,
    jump_sequence,
    omega_tilde_spectrum,
    parse_weight,
    pieri_decompose,
    pieri_terms,
    rho,
    split_casimir_eigenvalue,
    weyl_dim,
    zero_weight,
)

F = Fraction


def W(series, *coords):
    return WeightVec(series, tuple(F(c) for c in coords))


def test_dominance():
    assert is_dominant(W("D", 1, 0))
    assert not is_dominant(W("D", 0, 1))
    assert is_dominant(W("B", F(1, 2), F(1, 2)))
    assert is_dominant(W("D", 1, -1))
    assert not is_dominant(W("D", 0, -1))  # mu_{n-1}+mu_n < 0
    assert not is_dominant(W("B", 1, -1))  # B coordinates must be nonnegative
    assert is_dominant(W("D", 2, 1, 1, -1))
    assert not is_dominant(W("D", 1, F(1, 2)))  # descent not integral


def test_jump_sequences():
    assert jump_sequence(W("D", 1, 0)).boundaries == (0, 1, 2)
    assert jump_sequence(W("D", 2, 2, 2)).boundaries == (0, 3)
    assert jump_sequence(W("D", 3, 1, 1, 0)).boundaries == (0, 1, 3, 4)
    js = jump_sequence(W("D", 3, 1, 1, 0))
    assert js.s == 3 and js.iota == 1


def test_jump_sequence_reconstructs_equality_pattern():
    for coords in [(3, 1, 1, 0), (2, 2, 0, 0), (1, 1, 1, 1), (5, 4, 3, 2)]:
        mu = W("D", *coords)
        js = jump_sequence(mu)
        for i in range(1, mu.n + 1):
            for j in range(1, mu.n + 1):
                same_block = js.block_of(i) == js.block_of(j)
                assert (mu.coords[i - 1] == mu.coords[j - 1]) == same_block


def test_rho():
    assert rho("D", 2).coords == (F(1), F(0))
    assert rho("B", 2).coords == (F(3, 2), F(1, 2))
    assert rho("D", 4).coords == (F(3), F(2), F(1), F(0))


def test_weyl_dims():
    assert weyl_dim(W("D", 1, 0)) == 4
    assert weyl_dim(W("D", 1, 1)) == 3  # so(4) = sl2 x sl2 self-dual factor
    assert weyl_dim(W("B", F(1, 2), F(1, 2))) == 4  # spin rep of so(5)
    assert weyl_dim(W("B", 1, 0)) == 5
    assert weyl_dim(W("D", 1, 1, 0)) == 15  # adjoint of so(6)
    assert weyl_dim(zero_weight("B", 3)) == 1


def test_casimir_eigenvalues():
    assert casimir_eigenvalue(W("D", 1, 0)) == 3
    assert casimir_eigenvalue(zero_weight("D", 4)) == 0
    assert casimir_eigenvalue(W("B", F(1, 2), F(1, 2))) == F(5, 2)


def test_pieri_examples():
    got = {w.coords for w in pieri_decompose(W("D", 1, 0))}
    assert got == {(F(0), F(0)), (F(2), F(0)), (F(1), F(1)), (F(1), F(-1))}
    assert [w.coords for w in pieri_decompose(zero_weight("D", 2))] == [(F(1), F(0))]
    got = {w.coords for w in pieri_decompose(W("B", F(1, 2), F(1, 2)))}
    assert got == {(F(1, 2), F(1, 2)), (F(3, 2), F(1, 2))}
    # B-series mu_n = 0: no V(mu) summand (5*5 = 14+10+1)
    got = {w.coords for w in pieri_decompose(W("B", 1, 0))}
    assert got == {(F(2), F(0)), (F(1), F(1)), (F(0), F(0))}


def _dominant_corpus(series, n, max_mu1):
    """All dominant weights with coordinates in Z/2, |mu_1| <= max_mu1."""
    vals = [F(k, 2) for k in range(-2 * max_mu1, 2 * max_mu1 + 1)]
    out = []
    for coords in itertools.product(vals, repeat=n):
        try:
            mu = WeightVec(series, coords)
        except ValueError:
            continue
        if is_dominant(mu):
            out.append(mu)
    return out


@pytest.mark.parametrize("series,n", [("D", 2), ("D", 3), ("B", 1), ("B", 2)])
def test_pieri_total_dimension_identity(series, n):
    nat = weyl_dim(epsilon(series, n, 1))
    for mu in _dominant_corpus(series, n, 2):
        parts = pieri_decompose(mu)
        assert all(is_dominant(w) for w in parts)
        assert nat * weyl_dim(mu) == sum(weyl_dim(w) for w in parts)


@pytest.mark.parametrize("series,n", [("D", 2), ("D", 3), ("B", 2)])
def test_spectrum_matches_casimir_shift(series, n):
    # each spectrum eigenvalue equals (c(nu) - c(mu) - c(e1)) / 2
    e1 = epsilon(series, n, 1)
    for mu in _dominant_corpus(series, n, 2):
        for term in pieri_terms(mu):
            lam = split_casimir_eigenvalue(mu, term)
            shift = (casimir_eigenvalue(term.weight) - casimir_eigenvalue(mu) - casimir_eigenvalue(e1)) / 2
            assert lam == shift


def test_spectrum_examples():
    sp = omega_tilde_spectrum(W("D", 1, 0))
    assert sp.entries == ((F(1), 9), (F(-1), 6), (F(-3), 1))
    assert sp.total_multiplicity() == 16
    sp = omega_tilde_spectrum(zero_weight("D", 3))
    assert sp.entries == ((F(0), 6),)
    sp = omega_tilde_spectrum(W("B", F(1, 2), F(1, 2)))
    assert sp.entries == ((F(1, 2), 16), (F(-2), 4))


@pytest.mark.parametrize("series,n", [("D", 2), ("D", 3), ("B", 2)])
def test_spectrum_total_multiplicity(series, n):
    nat = weyl_dim(epsilon(series, n, 1))
    for mu in _dominant_corpus(series, n, 2):
        assert omega_tilde_spectrum(mu).total_multiplicity() == nat * weyl_dim(mu)


def test_eigenvalue_containment_in_theta_ladder():
    # both eigenvalue families lie in mu_1 + 2n - n_1 - 1 - N (D series)
    for n in range(2, 5):
        for mu in _dominant_corpus("D", n, 3):
            if mu.is_zero():
                continue
            js = jump_sequence(mu)
            top = mu.coords[0] + 2 * n - js.boundaries[1] - 1
            for i in range(1, js.s + 1):
                lo = js.boundaries[i - 1]
                raise_val = -mu.coords[lo] + lo
                lower_val = mu.coords[js.boundaries[i] - 1] + 2 * n - js.boundaries[i] - 1
                for v in (raise_val, lower_val):
                    assert (top - v).denominator == 1 and top - v >= 0


def test_critical_sets():
    cs = critical_b_set(W("D", 1, 0))
    assert [c.describe() for c in cs.components] == ["n-1-N/2 = 1-N/2", "Theta(mu) = 3-N"]
    assert cs.contains(F(3)) and cs.contains(F(1)) and cs.contains(F(1, 2))
    assert not cs.contains(F(5, 3)) and not cs.contains(F(7, 2))
    # special branch: mu_{n-1} = -mu_n > 0 with s = 2
    cs = critical_b_set(W("D", 1, -1))
    assert [c.describe() for c in cs.components] == ["n-1-N/2 = 1-N/2", "Theta(mu) = 2-N"]
    # B-series spin weight: Theta empty
    cs = critical_b_set(W("B", F(1, 2), F(1, 2)))
    assert [c.describe() for c in cs.components] == ["n-N/2 = 2-N/2"]
    assert cs.contains(F(2)) and not cs.contains(F(1, 4))
    # mu = 0: exactly -N, and flagged exact
    cs = critical_b_set(zero_weight("B", 2))
    assert cs.exact and cs.contains(F(0)) and cs.contains(F(-2)) and not cs.contains(F(1, 2))


def test_weight_parsing_round_trip():
    mu = parse_weight("3/2,1/2", "B")
    assert str(mu) == "3/2,1/2"
    with pytest.raises(ValueError):
        parse_weight("1,x", "D")
    with pytest.raises(ValueError):
        WeightVec("D", (F(1, 3),))
