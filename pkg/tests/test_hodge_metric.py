import pytest

from qhodge import exterior as ext, hodge, metric
from qhodge.hodge import Contraction, HodgeConfig, HodgeError
from qhodge.scalar import I, ONE, Q, ZERO, symbol


def test_reality_examples():
    assert hodge.is_real(Contraction(ONE, Q ** 2, ZERO, ZERO, ZERO, ONE))
    assert not hodge.is_real(Contraction(ONE, ONE))
    assert not hodge.is_real(Contraction(ONE, Q ** 2, I))


def test_hermitian_examples():
    assert hodge.is_hermitian(hodge.family_a())
    assert hodge.is_hermitian(hodge.family_c())
    assert not hodge.is_hermitian(Contraction(ONE, Q ** 2, ZERO, ONE, 2 * ONE, ZERO))


def test_classify_closed_forms():
    eps = Q ** 2 - 1
    g = Contraction(ONE, Q ** 2, ZERO, eps, eps, -(Q + Q ** -1) * eps / (Q - Q ** -1))
    assert hodge.classify_family(g) == "a"
    assert hodge.classify_family(hodge.family_c()) == "c"
    assert hodge.classify_family(hodge.family_b()) == "b"
    assert hodge.classify_family(Contraction(ONE, 2 * ONE)) == "none"


def test_maximal_hermitianity():
    assert hodge.is_maximally_hermitian(hodge.family_a(), "+")
    assert hodge.is_maximally_hermitian(hodge.family_a(sign=-1), "-")
    assert not hodge.is_maximally_hermitian(hodge.family_c(), "+")
    with pytest.raises(HodgeError):
        hodge.is_maximally_hermitian(Contraction(ONE, ONE))


def test_detq_family_a():
    g = hodge.family_a()
    d, sgn = hodge.detq_and_sign(HodgeConfig(g, hodge.normalize_m(g)))
    assert d == -Q ** 2 * (1 - Q ** 2) ** 2 * symbol("alpha") ** 4
    assert sgn == -1


def test_normalize_m():
    g = hodge.family_a(ONE)
    m = hodge.normalize_m(g)
    assert m ** 2 * g.alpha * g.beta * g.epsilon ** 2 == ONE
    with pytest.raises(HodgeError):
        hodge.normalize_m(hodge.family_c())


def test_square_is_diagonal_on_one_forms():
    g = hodge.family_a(ONE)
    cfg = HodgeConfig(g, hodge.normalize_m(g))
    for e in ext.eigenbasis(1, "+"):
        coords = hodge.hodge_T(cfg, hodge.hodge_T(cfg, e.form)).coordinates()
        assert [n for n, v in coords.items() if not v.is_zero()] == [e.name]


def test_duality_identities_hold():
    g = hodge.family_a(ONE)
    bad = [c for c in hodge.verify_duality_identities(g) if not c.ok and c.tag != "L = T"]
    assert not bad


def test_hodge_config_rejects_zero_m():
    with pytest.raises(HodgeError):
        HodgeConfig(hodge.family_a(), ZERO)


def test_metric_branches():
    sigma = metric.metric_from_contraction(hodge.family_a(sign=-1))
    other = metric.metric_from_contraction(hodge.family_a(sign=1))
    assert metric.classify_metric(sigma) == metric.IN_G_SIGMA
    assert metric.classify_metric(other) == metric.IN_G_ONLY
    ident = metric.MetricMatrix.from_rows([[ONE if i == j else ZERO for j in range(4)] for i in range(4)])
    assert metric.classify_metric(ident) == metric.NOT_IN_G
    assert metric.zero_pattern_violations(ident)


def test_metric_contraction_round_trip():
    g = hodge.family_a()
    assert metric.contraction_from_metric(metric.metric_from_contraction(g)).params() == g.params()


def test_metric_shape_error():
    with pytest.raises(ValueError):
        metric.MetricMatrix.from_rows([[ONE]])
