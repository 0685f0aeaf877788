from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from splitspin import (
    Field,
    Matrix,
    TwoGenConfig,
    axet,
    build_two_gen,
    check_axis,
    miyamoto,
    monster_law,
    rho,
    rho_order,
    yabe_data,
)
from splitspin.errors import CapExceeded, CharTwo, MuOne, SpecialAlpha
from splitspin.two_gen import SINGLE, TWO_HALVES, default_two_gen_alpha

QQ = Field.rationals()
F5 = Field.prime(5)
F7 = Field.prime(7)
HALF = Fraction(1, 2)


def test_build_two_gen_split():
    algebra, x, y = build_two_gen(TwoGenConfig(QQ, mu=QQ.scalar(2), alpha=QQ.scalar(3)))
    assert algebra.dim == 4
    law = monster_law(QQ, 3, HALF)
    for axis in (x, y):
        report = check_axis(algebra, axis, law)
        assert report.primitive and not report.violations


def test_build_two_gen_cover():
    algebra, x, y = build_two_gen(TwoGenConfig(QQ, mu=QQ.scalar(2), variant="cover"))
    assert algebra.meta.kind == "cover"
    law = monster_law(QQ, -1, HALF)
    report = check_axis(algebra, x, law)
    assert report.primitive and not report.violations


def test_build_rejects_bad_parameters():
    with pytest.raises(ValueError):
        build_two_gen(TwoGenConfig(QQ, mu=QQ.scalar(2), alpha=QQ.scalar(1)))
    with pytest.raises(CharTwo):
        build_two_gen(TwoGenConfig(Field.prime(2), mu=Field.prime(2).one(), alpha=None, variant="cover"))
    with pytest.raises(ValueError):
        TwoGenConfig(QQ, mu=QQ.scalar(2), alpha=QQ.scalar(5), variant="cover")


def test_rho_matrix():
    assert rho(QQ.scalar(0)) == Matrix(QQ, [[0, -1], [1, 0]])
    m = rho(QQ.scalar(Fraction(2, 3)))
    assert m.trace() == QQ.scalar(Fraction(4, 3))
    assert m.det() == QQ.one()


@given(st.fractions(min_value=-5, max_value=5, max_denominator=6))
def test_rho_det_one(mu):
    assert rho(QQ.scalar(mu)).det() == QQ.one()


def test_rho_matches_swap_times_miyamoto():
    # rho acts on row vectors: its transpose is (tau_x on E) @ (theta on E)
    mu = QQ.scalar(Fraction(2, 3))
    algebra, x, y = build_two_gen(TwoGenConfig(QQ, mu=mu, alpha=QQ.scalar(3)))
    tau = miyamoto(algebra, x, monster_law(QQ, 3, HALF))
    tau_e = Matrix(QQ, [row[:2] for row in tau.entries[:2]])
    theta_e = Matrix(QQ, [[0, 1], [1, 0]])
    assert rho(mu).transpose() == tau_e @ theta_e


@pytest.mark.parametrize(
    "mu, expected",
    [
        (Fraction(-1), None),
        (Fraction(-1, 2), 3),
        (Fraction(0), 4),
        (Fraction(1, 2), 6),
        (Fraction(1), None),
        (Fraction(5), None),
        (Fraction(3, 4), None),
    ],
)
def test_rho_order_rational(mu, expected):
    order = rho_order(QQ, mu)
    if expected is None:
        assert order.kind == "infinite"
    else:
        assert order.order == expected
        # oracle: direct powering reaches the identity exactly at the order
        m = rho(QQ.scalar(mu))
        assert m.pow(expected) == Matrix.identity(QQ, 2)
        for k in range(1, expected):
            assert m.pow(k) != Matrix.identity(QQ, 2)


def test_rho_order_prime_special_values():
    assert rho_order(F7, F7.one()).order == 7
    assert rho_order(F5, F5.scalar(-1)).order == 10
    assert rho_order(F5, F5.scalar(2)).order == 3
    m = rho(F5.scalar(2))
    assert m.pow(3) == Matrix.identity(F5, 2)


def test_rho_order_cap():
    assert rho_order(F5, F5.scalar(2), cap=1).kind == "exceeds_cap"
    with pytest.raises(ValueError):
        rho_order(F5, F5.scalar(2), cap=0)


def test_yabe_split_example():
    algebra, x, y = build_two_gen(TwoGenConfig(QQ, mu=QQ.scalar(2), alpha=QQ.scalar(3)))
    data = yabe_data(algebra, x, y)
    assert data.delta == QQ.scalar(-5)
    assert data.q == algebra.identity() * 3
    assert data.spans_algebra
    assert data.a_minus1 == algebra.element([2, Fraction(-1, 2), Fraction(3, 2), 2])
    # a0 is idempotent in the emitted constants: a0 a0 = 1 a0
    assert data.structure_constants[0][0] == (QQ.one(), QQ.zero(), QQ.zero(), QQ.zero())


def test_yabe_cover_example():
    algebra, x, y = build_two_gen(TwoGenConfig(QQ, mu=QQ.scalar(2), variant="cover"))
    data = yabe_data(algebra, x, y)
    assert data.q == algebra.basis_by_label("n") * Fraction(-1, 4)
    assert data.delta == QQ.scalar(-5)
    assert data.spans_algebra


def test_yabe_rejections():
    algebra, x, y = build_two_gen(TwoGenConfig(QQ, mu=QQ.one(), alpha=QQ.scalar(3)))
    with pytest.raises(MuOne):
        yabe_data(algebra, x, y)
    algebra, x, y = build_two_gen(TwoGenConfig(QQ, mu=QQ.scalar(2), alpha=QQ.scalar(-1)))
    with pytest.raises(SpecialAlpha):
        yabe_data(algebra, x, y)


def test_axet_rational_orders():
    sizes = {}
    for mu in (Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1)):
        algebra, x, y = build_two_gen(TwoGenConfig(QQ, mu=QQ.scalar(mu), alpha=QQ.scalar(3)))
        result = axet(algebra, x, y)
        sizes[mu] = result.size.order if result.size.is_finite else "infinite"
    assert sizes == {
        Fraction(-1): "infinite",
        Fraction(-1, 2): 3,
        Fraction(0): 4,
        Fraction(1, 2): 6,
        Fraction(1): "infinite",
    }


def test_axet_orbit_structure_mu_zero():
    algebra, x, y = build_two_gen(TwoGenConfig(QQ, mu=QQ.zero(), alpha=QQ.scalar(3)))
    result = axet(algebra, x, y)
    assert result.size.order == 4
    assert result.d_orbit_split == TWO_HALVES and result.d_hat_index == 2
    assert len(result.orbit_x) == len(result.orbit_y) == 2
    coords = {tuple(c.value for c in v) for v in result.orbit}
    assert coords == {(1, 0), (0, 1), (-1, 0), (0, -1)}


def test_axet_single_orbit_mu_minus_half():
    algebra, x, y = build_two_gen(TwoGenConfig(QQ, mu=QQ.scalar(Fraction(-1, 2)), alpha=QQ.scalar(3)))
    result = axet(algebra, x, y)
    assert result.size.order == 3
    assert result.d_orbit_split == SINGLE and result.d_hat_index == 1


def test_axet_prime_cases():
    algebra, x, y = build_two_gen(TwoGenConfig(F7, mu=F7.one(), alpha=F7.scalar(2)))
    result = axet(algebra, x, y)
    assert result.size.order == 7 and result.d_orbit_split == SINGLE

    algebra, x, y = build_two_gen(TwoGenConfig(F5, mu=F5.scalar(-1), alpha=F5.scalar(2)))
    result = axet(algebra, x, y)
    assert result.size.order == 10
    assert result.d_orbit_split == TWO_HALVES
    assert len(result.orbit_x) == len(result.orbit_y) == 5


def test_axet_norm_one_stability():
    algebra, x, y = build_two_gen(TwoGenConfig(QQ, mu=QQ.scalar(Fraction(1, 2)), alpha=QQ.scalar(3)))
    result = axet(algebra, x, y)
    space = algebra.meta.space
    for v in result.orbit:
        assert space.bform(v, v).is_one


def test_axet_cap():
    algebra, x, y = build_two_gen(TwoGenConfig(QQ, mu=QQ.scalar(Fraction(-1, 2)), alpha=QQ.scalar(3)))
    with pytest.raises(CapExceeded):
        axet(algebra, x, y, cap=2)


def test_axet_cover_variant():
    algebra, x, y = build_two_gen(TwoGenConfig(F5, mu=F5.scalar(2), variant="cover"))
    result = axet(algebra, x, y)
    assert result.size.order == 3


def test_default_two_gen_alpha():
    assert default_two_gen_alpha(QQ) == QQ.scalar(2)
    assert default_two_gen_alpha(F5) == F5.scalar(2)
    # over F_7 the value 4 is 1/2, but 2 comes first anyway
    assert default_two_gen_alpha(F7) == F7.scalar(2)
    # F_3 = {0, 1, 1/2}: every alpha is excluded
    with pytest.raises(ValueError):
        default_two_gen_alpha(Field.prime(3))
