import random
from fractions import Fraction

import pytest

from splitspin import (
    Field,
    Matrix,
    QuadraticSpace,
    algebra_radical,
    axes_with_involution,
    check_axis,
    exceptional_cover,
    extend_orthogonal,
    family_axis,
    frobenius,
    frobenius_s3_invariant,
    fusion_law,
    is_automorphism,
    is_simple,
    jordan_law,
    matsuo_3c,
    miyamoto,
    monster_law,
    split_spin,
)
from splitspin.axial import FusionLaw, sample_orthogonal_extension
from splitspin.errors import (
    BaricCase,
    EigenvalueCollision,
    IncompleteDecomposition,
    NotAnAutomorphism,
    UnverifiedSpanHypothesis,
    WrongAlgebraKind,
)
from splitspin.idempotents import FAMILY_A, FAMILY_B, FAMILY_EXC
from splitspin.linalg import same_span

QQ = Field.rationals()
F5 = Field.prime(5)
F7 = Field.prime(7)
HALF = Fraction(1, 2)


def identity_space(field, dim):
    return QuadraticSpace(Matrix.identity(field, dim))


@pytest.fixture
def A3():
    return split_spin(identity_space(QQ, 2), 3)


# -- fusion laws ------------------------------------------------------------------


def test_monster_law_table():
    law = monster_law(QQ, 3, HALF)
    one, zero = QQ.one(), QQ.zero()
    alpha, beta = QQ.scalar(3), QQ.scalar(HALF)
    assert law.allowed(one, zero) == frozenset()
    assert law.allowed(zero, zero) == {zero}
    assert law.allowed(alpha, alpha) == {one, zero}
    assert law.allowed(beta, alpha) == {beta}
    assert law.allowed(beta, beta) == {one, zero, alpha}
    assert law.minus == {beta}


def test_jordan_law_is_the_sublaw():
    law = jordan_law(F7, 3)
    one, zero, eta = F7.one(), F7.zero(), F7.scalar(3)
    assert law.allowed(eta, eta) == {one, zero}
    assert law.allowed(one, eta) == {eta}
    assert law.plus == {one, zero}


def test_law_collisions_are_named():
    with pytest.raises(EigenvalueCollision):
        jordan_law(QQ, 1)
    with pytest.raises(EigenvalueCollision) as info:
        monster_law(QQ, HALF, HALF)
    assert "alpha" in str(info.value) and "beta" in str(info.value)
    with pytest.raises(EigenvalueCollision):
        # 1/2 = 3 = alpha in F_5
        monster_law(F5, 3, HALF)


def test_fusion_law_dispatch():
    assert fusion_law(QQ, "jordan", [3]).kind == "jordan"
    assert fusion_law(QQ, "monster", [3, HALF]).kind == "monster"
    with pytest.raises(ValueError):
        fusion_law(QQ, "both", [1])


# -- axis checking ----------------------------------------------------------------


def test_z1_is_jordan_axis(A3):
    report = check_axis(A3, A3.basis_by_label("z1"), jordan_law(QQ, 3))
    assert report.primitive
    assert not report.violations
    assert list(report.dims.values()) == [1, 1, 2]
    assert report.miyamoto is not None


def test_family_a_is_monster_axis(A3):
    x = family_axis(A3, [1, 0], FAMILY_A)
    report = check_axis(A3, x, monster_law(QQ, 3, HALF))
    assert report.primitive
    assert not report.violations
    assert list(report.dims.values()) == [1, 1, 1, 1]


def test_family_b_fails_the_wrong_law(A3):
    y = family_axis(A3, [1, 0], FAMILY_B)
    with pytest.raises(IncompleteDecomposition):
        check_axis(A3, y, monster_law(QQ, 3, HALF))
    report = check_axis(A3, y, monster_law(QQ, -2, HALF))
    assert report.primitive and not report.violations


def test_grading_failure_reports_not_an_automorphism(A3):
    # an artificial law grading the alpha-eigenspace as the minus part:
    # products between the 1/2- and alpha-eigenspaces land in 1/2 (plus),
    # so the flip cannot be multiplicative
    x = family_axis(A3, [1, 0], FAMILY_A)
    good = monster_law(QQ, 3, HALF)
    bad = FusionLaw(
        kind="monster",
        eigenvalues=good.eigenvalues,
        table=good.table,
        plus=frozenset([QQ.one(), QQ.zero(), QQ.scalar(HALF)]),
        minus=frozenset([QQ.scalar(3)]),
    )
    with pytest.raises(NotAnAutomorphism):
        miyamoto(A3, x, bad)


def test_miyamoto_is_negated_reflection(A3):
    space = A3.meta.space
    x = family_axis(A3, [1, 0], FAMILY_A)
    tau = miyamoto(A3, x, monster_law(QQ, 3, HALF))
    assert tau == extend_orthogonal(A3, space.neg_reflection([1, 0]))
    assert tau @ tau == Matrix.identity(QQ, 4)
    assert is_automorphism(A3, tau)


def test_tau_z1_equals_tau_z2_equals_sigma(A3):
    sigma = extend_orthogonal(A3, -Matrix.identity(QQ, 2))
    assert miyamoto(A3, A3.basis_by_label("z1"), jordan_law(QQ, 3)) == sigma
    assert miyamoto(A3, A3.basis_by_label("z2"), jordan_law(QQ, -2)) == sigma


def test_axes_with_involution_four_distinct(A3):
    quad = axes_with_involution(A3, [1, 0])
    assert len({x.coords for x in quad}) == 4


def test_axes_with_involution_rejections(A3):
    from splitspin.errors import NotNormOne

    with pytest.raises(NotNormOne):
        axes_with_involution(A3, [2, 0])
    with pytest.raises(WrongAlgebraKind):
        axes_with_involution(exceptional_cover(identity_space(QQ, 2)), [1, 0])


def test_adjoint_charpoly_matches_eigenstructure():
    # independent oracle: the characteristic polynomial of ad_x over dim E = 3
    # factors as t (t - 1)(t - alpha)(t - 1/2)^2
    import sympy

    algebra = split_spin(identity_space(QQ, 3), 3)
    x = family_axis(algebra, [1, 0, 0], FAMILY_A)
    ad = algebra.adjoint(x)
    sym = sympy.Matrix(5, 5, [c.value for row in ad.entries for c in row])
    t = sympy.Symbol("t")
    charpoly = sym.charpoly(t).as_expr()
    expected = t * (t - 1) * (t - 3) * (t - sympy.Rational(1, 2)) ** 2
    assert sympy.expand(charpoly - expected) == 0


def test_miyamoto_permutes_family_a():
    from splitspin import classify_idempotent

    algebra = split_spin(identity_space(QQ, 2), 3)
    space = algebra.meta.space
    x = family_axis(algebra, [1, 0], FAMILY_A)
    tau = miyamoto(algebra, x, monster_law(QQ, 3, HALF))
    other = family_axis(algebra, [Fraction(3, 5), Fraction(4, 5)], FAMILY_A)
    image = algebra.element(tau.apply(other.coords))
    verdict = classify_idempotent(algebra, image)
    assert verdict.tag == "family_a"
    assert verdict.e == space.neg_reflection([1, 0]).apply([Fraction(3, 5), Fraction(4, 5)])


def test_exceptional_axis_monster_law():
    cover = exceptional_cover(identity_space(QQ, 2))
    x = family_axis(cover, [1, 0], FAMILY_EXC)
    report = check_axis(cover, x, monster_law(QQ, -1, HALF))
    assert report.primitive and not report.violations
    assert list(report.dims.values()) == [1, 1, 1, 1]


# -- Frobenius form ----------------------------------------------------------------


def test_frobenius_values_alpha_three(A3):
    form = frobenius(A3)
    z1 = A3.basis_by_label("z1")
    z2 = A3.basis_by_label("z2")
    e1 = A3.basis(0)
    assert form.evaluate(z1, z1) == QQ.scalar(4)
    assert form.evaluate(z2, z2) == QQ.scalar(-1)
    assert form.evaluate(e1, e1) == QQ.scalar(-4)
    assert form.evaluate(e1, z1) == QQ.zero()
    assert form.radical_basis == ()


def test_frobenius_lengths(A3):
    form = frobenius(A3)
    x = family_axis(A3, [1, 0], FAMILY_A)
    y = family_axis(A3, [1, 0], FAMILY_B)
    assert form.evaluate(x, x) == QQ.scalar(4)  # alpha + 1
    assert form.evaluate(y, y) == QQ.scalar(-1)  # 2 - alpha


def test_frobenius_cover_values():
    cover = exceptional_cover(identity_space(QQ, 2))
    form = frobenius(cover)
    e1, z1, n = cover.basis(0), cover.basis_by_label("z1"), cover.basis_by_label("n")
    assert form.evaluate(e1, e1) == QQ.scalar(3)
    assert form.evaluate(z1, z1) == QQ.one()
    assert form.evaluate(n, n) == QQ.zero()
    assert form.evaluate(n, e1) == QQ.zero()
    assert same_span(QQ, [v.coords for v in form.radical_basis], [n.coords])


def test_frobenius_wrong_kind():
    with pytest.raises(WrongAlgebraKind):
        frobenius(matsuo_3c(QQ, 3))


def test_frobenius_rank_one_baric():
    for alpha, label in ((-1, "z1"), (2, "z2")):
        algebra = split_spin(identity_space(QQ, 2), alpha)
        form = frobenius(algebra)
        assert form.gram.rank() == 1
        stated = [algebra.basis(i).coords for i in range(2)]
        stated.append(algebra.basis_by_label(label).coords)
        assert same_span(QQ, [v.coords for v in form.radical_basis], stated)


def test_frobenius_invariant_under_sampled_orthogonal(A3):
    rng = random.Random(5)
    form = frobenius(A3)
    for _ in range(5):
        m = sample_orthogonal_extension(A3, rng)
        assert is_automorphism(A3, m)
        assert m.transpose() @ form.gram @ m == form.gram


def test_projection_graph_surrogate():
    # (z1, x) != 0 for every family (a) axis when alpha is outside {-1, 2}
    for alpha in (3, -3, 5, Fraction(1, 4)):
        algebra = split_spin(identity_space(QQ, 2), alpha)
        form = frobenius(algebra)
        z1 = algebra.basis_by_label("z1")
        for e in ([1, 0], [0, 1], [Fraction(3, 5), Fraction(4, 5)]):
            x = family_axis(algebra, e, FAMILY_A)
            assert form.evaluate(z1, x) != QQ.zero()


# -- radical and simplicity ---------------------------------------------------------


def test_radical_nondegenerate(A3):
    assert algebra_radical(A3) == ()


def test_radical_degenerate():
    space = QuadraticSpace(Matrix(QQ, [[1, 1], [1, 1]]))
    algebra = split_spin(space, 3)
    radical = algebra_radical(algebra)
    assert len(radical) == 1
    lifted = tuple(radical[0].coords)
    assert lifted[2] == QQ.zero() and lifted[3] == QQ.zero()
    assert space.bform(lifted[:2], [1, 0]) == QQ.zero()


def test_radical_baric_case():
    algebra = split_spin(identity_space(QQ, 2), 2)
    with pytest.raises(BaricCase) as info:
        algebra_radical(algebra)
    assert info.value.tag == "alpha=2"
    stated = [algebra.basis(0).coords, algebra.basis(1).coords,
              algebra.basis_by_label("z2").coords]
    assert same_span(QQ, [v.coords for v in info.value.radical], stated)


def test_radical_cover():
    space = QuadraticSpace(Matrix(QQ, [[1, 1], [1, 1]]))
    cover = exceptional_cover(space)
    radical = algebra_radical(cover)
    assert len(radical) == 2  # the (1, -1) lift and n


def test_radical_cover_rejects_characteristic_three():
    from splitspin.errors import BadCharacteristic

    cover = exceptional_cover(identity_space(Field.prime(3), 1))
    with pytest.raises(BadCharacteristic):
        algebra_radical(cover)


def test_radical_wrong_kind():
    with pytest.raises(WrongAlgebraKind):
        algebra_radical(matsuo_3c(QQ, 3))


def test_is_simple_wrong_kind_and_char_two():
    from splitspin.errors import CharTwo

    with pytest.raises(WrongAlgebraKind):
        is_simple(matsuo_3c(QQ, 3), assume_spanned=True)
    char2 = split_spin(identity_space(Field.prime(2), 1), 1)
    with pytest.raises(CharTwo):
        is_simple(char2, assume_spanned=True)


def test_is_simple_grid():
    degenerate = QuadraticSpace(Matrix(QQ, [[1, 1], [1, 1]]))
    evidence = identity_space(QQ, 2).find_norm_one(budget=100, seed=0)
    evidence_deg = degenerate.find_norm_one(budget=100, seed=0)
    assert is_simple(split_spin(identity_space(QQ, 2), 3), evidence) == (True, "Simple")
    assert is_simple(split_spin(identity_space(QQ, 2), -1), evidence) == (False, "BaricMinusOne")
    assert is_simple(split_spin(identity_space(QQ, 2), 2), evidence) == (False, "BaricTwo")
    assert is_simple(split_spin(degenerate, 3), evidence_deg) == (False, "DegenerateForm")


def test_is_simple_requires_evidence(A3):
    with pytest.raises(UnverifiedSpanHypothesis):
        is_simple(A3)
    bad = QuadraticSpace(Matrix(QQ, [[-1]]))
    algebra = split_spin(bad, 3)
    with pytest.raises(UnverifiedSpanHypothesis):
        is_simple(algebra, evidence=bad.find_norm_one(budget=100, seed=0))
    assert is_simple(A3, assume_spanned=True) == (True, "Simple")


# -- automorphisms ------------------------------------------------------------------


def test_reflection_extension_is_automorphism(A3):
    space = A3.meta.space
    m = extend_orthogonal(A3, space.reflection([1, 0]))
    assert is_automorphism(A3, m)


def test_z_swap_is_not_an_automorphism(A3):
    ident = Matrix.identity(QQ, 4)
    cols = [ident.column(0), ident.column(1), ident.column(3), ident.column(2)]
    assert not is_automorphism(A3, Matrix.from_columns(QQ, cols))


def test_form_preserving_requirement():
    # a non-isometry of E does not extend to an automorphism
    A = split_spin(identity_space(QQ, 2), 3)
    stretch = Matrix.diagonal(QQ, [2, 1])
    assert not is_automorphism(A, extend_orthogonal(A, stretch))


def test_s3_invariance_in_dimension_one():
    algebra = split_spin(identity_space(QQ, 1), 3)
    assert frobenius_s3_invariant(algebra, [1])
    with pytest.raises(WrongAlgebraKind):
        frobenius_s3_invariant(split_spin(identity_space(QQ, 2), 3), [1, 0])


def test_s3_permutations_are_automorphisms():
    # the three distinguished idempotents of the dim-1 algebra may be permuted
    algebra = split_spin(identity_space(QQ, 1), 3)
    x = family_axis(algebra, [1], FAMILY_A)
    x_minus = family_axis(algebra, [-1], FAMILY_A)
    z1 = algebra.basis_by_label("z1")
    basis = Matrix.from_columns(QQ, [x.coords, x_minus.coords, z1.coords])
    inverse = basis.inverse()
    import itertools

    for perm in itertools.permutations(range(3)):
        mapped = Matrix.from_columns(QQ, [basis.column(p) for p in perm]) @ inverse
        assert is_automorphism(algebra, mapped)
