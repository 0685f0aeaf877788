"""Fusion laws, axis verification, Miyamoto involutions, Frobenius forms,
radicals and simplicity.

The Monster-type law on {1, 0, alpha, beta} and its Jordan-type sublaw on
{1, 0, eta} are the only laws constructed here.  Axis checking decomposes
the algebra into adjoint eigenspaces for exactly the law's eigenvalues: an
incomplete decomposition is reported as such (it is the signal that the
wrong law was tried), and fusion violations carry the offending eigenvalue
as a witness rather than a bare boolean.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .algebra import COVER, SPLIT_SPIN, Algebra, Element
from .errors import (
    BaricCase,
    BadCharacteristic,
    CharTwo,
    DimensionMismatch,
    EigenvalueCollision,
    IncompleteDecomposition,
    NotAnAutomorphism,
    NotIdempotent,
    NotNormOne,
    UnverifiedSpanHypothesis,
    WrongAlgebraKind,
)
from .fields import Field, Scalar
from .idempotents import FAMILY_A, family_axis, is_idempotent
from .linalg import Matrix, Vector, span_contains
from .quadratic import NormOneSearch

JORDAN = "jordan"
MONSTER = "monster"

SIMPLE = "Simple"
DEGENERATE_FORM = "DegenerateForm"
BARIC_MINUS_ONE = "BaricMinusOne"
BARIC_TWO = "BaricTwo"


@dataclass(frozen=True)
class FusionLaw:
    """Eigenvalues with a symmetric product table and a C2-grading."""

    kind: str
    eigenvalues: tuple[Scalar, ...]
    table: dict
    plus: frozenset
    minus: frozenset

    def allowed(self, lam: Scalar, mu: Scalar) -> frozenset:
        key = (lam, mu) if (lam, mu) in self.table else (mu, lam)
        return self.table[key]

    def __repr__(self):
        vals = ", ".join(str(v) for v in self.eigenvalues)
        return f"FusionLaw({self.kind}: {vals})"


def _check_distinct(named_values: list[tuple[str, Scalar]]):
    for i in range(len(named_values)):
        for j in range(i + 1, len(named_values)):
            n1, v1 = named_values[i]
            n2, v2 = named_values[j]
            if v1 == v2:
                raise EigenvalueCollision(f"{n1} = {v1} collides with {n2} = {v2}")


def jordan_law(field: Field, eta) -> FusionLaw:
    """The Jordan-type law on {1, 0, eta}: eta is the graded eigenvalue."""
    one, zero = field.one(), field.zero()
    eta = field.scalar(eta)
    _check_distinct([("1", one), ("0", zero), ("eta", eta)])
    empty = frozenset()
    table = {
        (one, one): frozenset([one]),
        (one, zero): empty,
        (one, eta): frozenset([eta]),
        (zero, zero): frozenset([zero]),
        (zero, eta): frozenset([eta]),
        (eta, eta): frozenset([one, zero]),
    }
    return FusionLaw(JORDAN, (one, zero, eta), table, frozenset([one, zero]), frozenset([eta]))


def monster_law(field: Field, alpha, beta) -> FusionLaw:
    """The Monster-type law on {1, 0, alpha, beta}: beta is the graded
    eigenvalue, alpha * alpha = {1, 0} and beta * beta = {1, 0, alpha}."""
    one, zero = field.one(), field.zero()
    alpha = field.scalar(alpha)
    beta = field.scalar(beta)
    _check_distinct([("1", one), ("0", zero), ("alpha", alpha), ("beta", beta)])
    empty = frozenset()
    table = {
        (one, one): frozenset([one]),
        (one, zero): empty,
        (one, alpha): frozenset([alpha]),
        (one, beta): frozenset([beta]),
        (zero, zero): frozenset([zero]),
        (zero, alpha): frozenset([alpha]),
        (zero, beta): frozenset([beta]),
        (alpha, alpha): frozenset([one, zero]),
        (alpha, beta): frozenset([beta]),
        (beta, beta): frozenset([one, zero, alpha]),
    }
    return FusionLaw(
        MONSTER,
        (one, zero, alpha, beta),
        table,
        frozenset([one, zero, alpha]),
        frozenset([beta]),
    )


def fusion_law(field: Field, kind: str, params: Sequence) -> FusionLaw:
    if kind == JORDAN:
        (eta,) = params
        return jordan_law(field, eta)
    if kind == MONSTER:
        alpha, beta = params
        return monster_law(field, alpha, beta)
    raise ValueError(f"unknown fusion law kind {kind!r}")


@dataclass
class AxisReport:
    """Per-axis verdict: eigenspace dimensions, primitivity, fusion
    violations (lambda, mu, offending eigenvalue) and the Miyamoto matrix
    (None when the grading fails to give an automorphism)."""

    axis: Element
    law: FusionLaw
    dims: dict
    primitive: bool
    violations: tuple
    miyamoto: Matrix | None
    eigenbasis: dict

    @property
    def ok(self) -> bool:
        return self.primitive and not self.violations and self.miyamoto is not None


def check_axis(algebra: Algebra, x: Element, law: FusionLaw) -> AxisReport:
    """Full axis verification of the idempotent x against the law.

    Raises IncompleteDecomposition when the adjoint eigenspaces for the
    law's eigenvalues do not fill the algebra.
    """
    if x.is_zero or not is_idempotent(x):
        raise NotIdempotent("axis candidates must be nonzero idempotents")
    spaces, complete = algebra.eigendecompose(x, law.eigenvalues)
    dims = {lam: len(basis) for lam, basis in spaces.items()}
    if not complete:
        raise IncompleteDecomposition(
            f"eigenspace dimensions {tuple(dims.values())} sum to "
            f"{sum(dims.values())} < {algebra.dim}: an eigenvalue lies outside the law",
            dims=dims,
        )
    primitive = dims[law.eigenvalues[0]] == 1

    # change of basis to the concatenated eigenbasis
    columns = [v.coords for lam in law.eigenvalues for v in spaces[lam]]
    basis_change = Matrix.from_columns(algebra.field, columns)
    inverse = basis_change.inverse()
    assert inverse is not None  # completeness makes the eigenbasis a basis

    offsets = {}
    offset = 0
    for lam in law.eigenvalues:
        offsets[lam] = (offset, offset + dims[lam])
        offset += dims[lam]

    violations = []
    seen = set()
    for i, lam in enumerate(law.eigenvalues):
        for mu in law.eigenvalues[i:]:
            allowed = law.allowed(lam, mu)
            for u in spaces[lam]:
                for v in spaces[mu]:
                    coords = inverse.apply((u * v).coords)
                    for nu in law.eigenvalues:
                        if nu in allowed:
                            continue
                        lo, hi = offsets[nu]
                        if any(coords[t] for t in range(lo, hi)):
                            key = (lam, mu, nu)
                            if key not in seen:
                                seen.add(key)
                                violations.append(key)

    miyamoto_matrix = _grading_involution(algebra, law, spaces, basis_change, inverse)
    return AxisReport(
        axis=x,
        law=law,
        dims=dims,
        primitive=primitive,
        violations=tuple(violations),
        miyamoto=miyamoto_matrix,
        eigenbasis=spaces,
    )


def _grading_involution(algebra, law, spaces, basis_change, inverse) -> Matrix | None:
    signs = []
    for lam in law.eigenvalues:
        sign = algebra.field.one() if lam in law.plus else -algebra.field.one()
        signs.extend([sign] * len(spaces[lam]))
    diag = Matrix.diagonal(algebra.field, signs)
    candidate = basis_change @ diag @ inverse
    ident = Matrix.identity(algebra.field, algebra.dim)
    if candidate @ candidate != ident:
        return None
    if not is_automorphism(algebra, candidate):
        return None
    return candidate


def miyamoto(algebra: Algebra, x: Element, law: FusionLaw) -> Matrix:
    """The involution fixing the plus part and negating the minus part,
    verified to be an algebra automorphism."""
    report = check_axis(algebra, x, law)
    if report.miyamoto is None:
        raise NotAnAutomorphism("the plus/minus flip does not preserve products")
    return report.miyamoto


def extend_orthogonal(algebra: Algebra, m_on_e: Matrix) -> Matrix:
    """Extend a linear map on E to the whole algebra, fixing the two
    distinguished basis vectors outside E."""
    if algebra.meta.space is None:
        raise WrongAlgebraKind("algebra has no quadratic part")
    k = algebra.e_dim
    if m_on_e.rows != k or m_on_e.cols != k:
        raise DimensionMismatch("map must act on E")
    n = algebra.dim
    zero, one = algebra.field.zero(), algebra.field.one()
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i < k and j < k:
                row.append(m_on_e.entries[i][j])
            else:
                row.append(one if i == j else zero)
        rows.append(row)
    return Matrix(algebra.field, rows)


def axes_with_involution(algebra: Algebra, e) -> tuple[Element, Element, Element, Element]:
    """The four axes x, x^-, 1-x, 1-x^- sharing the Miyamoto involution
    -r_e (extended by the identity on the z-part); each one is verified."""
    if algebra.meta.kind != SPLIT_SPIN:
        raise WrongAlgebraKind("the four-axis property concerns the split spin algebra")
    if algebra.field.characteristic == 2:
        raise CharTwo("axes require characteristic != 2")
    space = algebra.meta.space
    e = space.vector(e)
    if not space.bform(e, e).is_one:
        raise NotNormOne("axes are attached to norm-one vectors")
    alpha = algebra.meta.alpha
    field = algebra.field
    half = field.half()
    law_a = monster_law(field, alpha, half)
    law_b = monster_law(field, field.one() - alpha, half)
    x = family_axis(algebra, e, FAMILY_A)
    x_minus = family_axis(algebra, tuple(-c for c in e), FAMILY_A)
    one_elt = algebra.identity()
    y = one_elt - x
    y_minus = one_elt - x_minus
    expected = extend_orthogonal(algebra, space.neg_reflection(e))
    for axis, law in ((x, law_a), (x_minus, law_a), (y, law_b), (y_minus, law_b)):
        tau = miyamoto(algebra, axis, law)
        assert tau == expected, "Miyamoto involution differs from the negated reflection"
    return x, x_minus, y, y_minus


@dataclass
class FrobeniusForm:
    """A symmetric bilinear form associating with the product:
    (a, bc) = (ab, c), verified on all basis triples at construction."""

    algebra: Algebra
    gram: Matrix
    radical_basis: tuple[Element, ...]

    def evaluate(self, u: Element, v: Element) -> Scalar:
        return _form_on(self.gram, u.coords, v.coords)


def frobenius(algebra: Algebra) -> FrobeniusForm:
    """The Frobenius form of a split spin or cover algebra.

    Split spin: (e, f) = (alpha+1)(2-alpha) b(e, f), (z1, z1) = alpha+1,
    (z2, z2) = 2-alpha, everything else orthogonal.  Cover: (e, f) = 3 b(e, f),
    (z1, z1) = 1, and n is isotropic and orthogonal to everything.
    """
    kind = algebra.meta.kind
    if kind not in (SPLIT_SPIN, COVER):
        raise WrongAlgebraKind(f"no Frobenius form constructor for a {kind} algebra")
    field = algebra.field
    space = algebra.meta.space
    k = space.dim
    n = algebra.dim
    zero = field.zero()
    rows = [[zero] * n for _ in range(n)]
    if kind == SPLIT_SPIN:
        alpha = algebra.meta.alpha
        e_scale = (alpha + 1) * (2 - alpha)
        for i in range(k):
            for j in range(k):
                rows[i][j] = e_scale * space.gram.entries[i][j]
        rows[k][k] = alpha + 1
        rows[k + 1][k + 1] = 2 - alpha
    else:
        three = field.scalar(3)
        for i in range(k):
            for j in range(k):
                rows[i][j] = three * space.gram.entries[i][j]
        rows[k][k] = field.one()
    gram = Matrix(field, rows)
    if all(x.is_zero for row in gram.entries for x in row):
        raise BadCharacteristic("the Frobenius form vanishes identically here")

    # associativity (a, bc) = (ab, c) on every ordered basis triple
    for i in range(n):
        for j in range(n):
            for t in range(n):
                lhs = _form_on(gram, _basis_vec(algebra, i), algebra.table[j][t])
                rhs = _form_on(gram, algebra.table[i][j], _basis_vec(algebra, t))
                if lhs != rhs:
                    raise AssertionError(
                        f"Frobenius associativity fails on basis triple ({i}, {j}, {t})"
                    )
    radical = tuple(algebra.element(v) for v in gram.kernel())
    return FrobeniusForm(algebra, gram, radical)


def _basis_vec(algebra: Algebra, i: int) -> Vector:
    return algebra.basis(i).coords


def _form_on(gram: Matrix, u: Vector, v: Vector) -> Scalar:
    acc = gram.field.zero()
    gv = gram.apply(v)
    for a, b in zip(u, gv):
        if a and b:
            acc = acc + a * b
    return acc


def _verify_ideal(algebra: Algebra, vectors: Sequence[Vector]) -> bool:
    vecs = [v for v in vectors]
    for v in vecs:
        for kk in range(algebra.dim):
            prod = algebra._mul_coords(v, _basis_vec(algebra, kk))
            if not span_contains(algebra.field, vecs, prod):
                return False
    return True


def algebra_radical(algebra: Algebra) -> tuple[Element, ...]:
    """Basis of the radical: the lift of E-perp (split spin, alpha outside
    {-1, 2}) or E-perp + <n> (cover).  Raises BaricCase for alpha in {-1, 2},
    carrying the rank-one-form radical E + F z1 (resp. E + F z2)."""
    kind = algebra.meta.kind
    field = algebra.field
    if kind == SPLIT_SPIN:
        alpha = algebra.meta.alpha
        k = algebra.e_dim
        if alpha == field.scalar(-1) or alpha == field.scalar(2):
            which = k if alpha == field.scalar(-1) else k + 1
            vecs = [_basis_vec(algebra, i) for i in range(k)] + [_basis_vec(algebra, which)]
            assert _verify_ideal(algebra, vecs)
            tag = "alpha=-1" if alpha == field.scalar(-1) else "alpha=2"
            raise BaricCase(tag, tuple(algebra.element(v) for v in vecs))
        lifted = [_lift(algebra, v) for v in algebra.meta.space.radical()]
        assert _verify_ideal(algebra, lifted)
        return tuple(algebra.element(v) for v in lifted)
    if kind == COVER:
        if field.characteristic in (2, 3):
            raise BadCharacteristic("cover radical requires characteristic outside {2, 3}")
        k = algebra.e_dim
        lifted = [_lift(algebra, v) for v in algebra.meta.space.radical()]
        lifted.append(_basis_vec(algebra, k + 1))  # n
        assert _verify_ideal(algebra, lifted)
        return tuple(algebra.element(v) for v in lifted)
    raise WrongAlgebraKind(f"no radical description for a {kind} algebra")


def _lift(algebra: Algebra, e_vec: Vector) -> Vector:
    zero = algebra.field.zero()
    return tuple(e_vec) + (zero, zero)


def is_simple(
    algebra: Algebra,
    evidence: NormOneSearch | None = None,
    assume_spanned: bool = False,
) -> tuple[bool, str]:
    """Simplicity of the split spin algebra: simple iff b is non-degenerate
    and alpha is outside {-1, 2}.

    The criterion presumes E is spanned by norm-one vectors; pass a
    NormOneSearch with spans=True as evidence, or assume_spanned=True to
    assert it.
    """
    if algebra.meta.kind != SPLIT_SPIN:
        raise WrongAlgebraKind("simplicity criterion concerns the split spin algebra")
    if algebra.field.characteristic == 2:
        raise CharTwo("simplicity criterion requires characteristic != 2")
    if not assume_spanned:
        if evidence is None:
            raise UnverifiedSpanHypothesis("no evidence that norm-one vectors span E")
        if not evidence.spans:
            raise UnverifiedSpanHypothesis(
                f"norm-one search ({evidence.status}) did not establish a spanning set"
            )
    field = algebra.field
    alpha = algebra.meta.alpha
    if alpha == field.scalar(-1):
        return False, BARIC_MINUS_ONE
    if alpha == field.scalar(2):
        return False, BARIC_TWO
    if algebra.meta.space.is_degenerate():
        return False, DEGENERATE_FORM
    return True, SIMPLE


def is_automorphism(algebra: Algebra, m: Matrix) -> bool:
    """Whether the matrix is invertible and multiplicative on basis pairs."""
    if m.rows != algebra.dim or m.cols != algebra.dim:
        raise DimensionMismatch("matrix must be square of the algebra dimension")
    ok, _ = algebra.check_isomorphism(algebra, m)
    return ok


def frobenius_s3_invariant(algebra: Algebra, e) -> bool:
    """For one-dimensional E and a norm-one e, the three idempotents
    x, x^-, z1 play symmetric roles: the Frobenius form is invariant under
    all six permutations of that basis."""
    if algebra.meta.kind != SPLIT_SPIN or algebra.e_dim != 1:
        raise WrongAlgebraKind("the permutation invariance concerns dim(E) = 1")
    space = algebra.meta.space
    e = space.vector(e)
    x = family_axis(algebra, e, FAMILY_A)
    x_minus = family_axis(algebra, tuple(-c for c in e), FAMILY_A)
    z1 = algebra.basis_by_label("z1")
    basis = Matrix.from_columns(algebra.field, [x.coords, x_minus.coords, z1.coords])
    inverse = basis.inverse()
    if inverse is None:
        return False
    gram = frobenius(algebra).gram
    import itertools as _it

    for perm in _it.permutations(range(3)):
        perm_cols = [basis.column(perm[j]) for j in range(3)]
        mapped = Matrix.from_columns(algebra.field, perm_cols) @ inverse
        if mapped.transpose() @ gram @ mapped != gram:
            return False
    return True


def sample_orthogonal_extension(algebra: Algebra, rng: random.Random) -> Matrix:
    """A random O(E, b)-element extended to the algebra (fixing the z-part)."""
    return extend_orthogonal(algebra, algebra.meta.space.sample_orthogonal(rng))
