from fractions import Fraction

import pytest

from qhodge import calculus, exterior as ext
from qhodge.scalar import ONE, Q, ZERO, eval_at


def _sigma(v, k, j, d):
    return ext.apply_sigma(v, k, j, d)


@pytest.mark.parametrize("j", range(16))
def test_braiding_inverse(j):
    assert _sigma(_sigma({j: ONE}, 2, 1, "+"), 2, 1, "-") == {j: ONE}


def test_braiding_conserves_charge():
    for d in "+-":
        for j, col in enumerate(calculus.braiding_columns(d)):
            for i in col:
                assert calculus.tensor_charge(i, 2) == calculus.tensor_charge(j, 2)


def test_words_braid_relation():
    for d in "+-":
        for j in range(64):
            v = {j: ONE}
            assert ext.apply_word(v, 3, [1, 2, 1], d) == ext.apply_word(v, 3, [2, 1, 2], d)
    assert ext.apply_word({5: ONE}, 2, [], "+") == {5: ONE}


@pytest.mark.parametrize("d", "+-")
def test_a2_spectrum(d):
    rep = ext.spectral_report(2, d)
    assert rep.rank == 6 and rep.kernel_dim == 10
    assert dict(rep.eigenvalues) == {ZERO: 10, 1 + Q ** 2: 3, 1 + Q ** -2: 3}


@pytest.mark.parametrize("k,fact", [(2, 2), (3, 6), (4, 24)])
def test_classical_limit(k, fact):
    for d in "+-":
        for v, _ in ext.spectral_report(k, d).eigenvalues:
            if not v.is_zero():
                assert eval_at(v, 1).as_fraction() == Fraction(fact)


def test_a4_eigenvalue_computed():
    lam = ext.eigenvalue("vol", "+")
    assert lam == 2 * (Q ** 4 + 3 * Q ** 2 + 4 + 3 * Q ** -2 + Q ** -4)


def test_a5_vanishes():
    assert all(not c for c in ext.antisymmetrizer_columns(5, "+"))


def test_eigenbasis_names():
    names = {k: [e.name for e in ext.eigenbasis(k, "+")] for k in range(5)}
    assert names[0] == ["1"]
    assert names[1] == ["omega-", "omega+", "omega0", "omegaz"]
    assert sorted(names[2]) == sorted(["phi+", "kappa+", "psi+", "phi-", "kappa-", "psi-"])
    assert names[3] == ["chi-", "chi+", "chi0", "chiz"]
    assert names[4] == ["vol"]


def test_charges():
    assert ext.u1_charge(ext.basis_form("omega-", "+")) == -2
    assert ext.u1_charge(ext.basis_form("phi+", "+")) == -2
    assert ext.u1_charge(ext.basis_form("vol", "+")) == 0


def test_wedge_coordinates():
    w = ext.wedge(ext.basis_form("omega-", "+"), ext.basis_form("omega+", "+"))
    c = ext.form_coordinates(w.tensor, 2, "+")
    k = Q ** -2 - Q ** 2
    assert c["psi+"] == 1 / k and c["psi-"] == -1 / k
    assert all(v.is_zero() for n, v in c.items() if not n.startswith("psi"))


def test_wedge_associative():
    names = ["omega-", "omega+", "omega0", "omegaz"]
    for a in names:
        for b in names:
            for c in names[:2]:
                x, y, z = (ext.basis_form(n, "+") for n in (a, b, c))
                assert ext.wedge(ext.wedge(x, y), z).tensor == ext.wedge(x, ext.wedge(y, z)).tensor


def test_wedge_square_of_omega_minus_vanishes():
    w = ext.basis_form("omega-", "+")
    assert not ext.wedge(w, w).tensor


def test_bad_direction():
    with pytest.raises(ValueError):
        ext.spectral_report(2, "x")


@pytest.mark.parametrize("k", [2, 3])
def test_antisymmetrizer_factorization(k):
    # A^(k) = (1 (x) A^(k-1)) B_{1,k-1}, the identity used to build A^(5)
    inner = ext.antisymmetrizer_columns(k - 1, "+")
    full = ext.antisymmetrizer_columns(k, "+")
    size = 4 ** (k - 1)
    for i in range(4 ** k):
        out = {}
        for idx, c in ext.apply_shuffle({i: ONE}, 1, k - 1, "+").items():
            head, tail = divmod(idx, size)
            for t, v in inner[tail].items():
                n = head * size + t
                out[n] = out.get(n, ZERO) + c * v
        assert {n: v for n, v in out.items() if not v.is_zero()} == full[i]


def test_a4_trace_matches_eigenvalue():
    # A^(4) has rank 1, so its trace is its only nonzero eigenvalue
    cols = ext.antisymmetrizer_columns(4, "+")
    trace = ZERO
    for i, col in enumerate(cols):
        trace = trace + col.get(i, ZERO)
    assert trace == ext.eigenvalue("vol", "+")
