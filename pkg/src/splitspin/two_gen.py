"""The two-generated case: Yabe-basis data, the rho matrix, and axet
(closed axis set) sizes and orbit structure.

E is two-dimensional, spanned by norm-one vectors e and f with mu = b(e, f).
The two generating axes are x and y, attached to e and f.  The composite
rho of the axis swap with the Miyamoto involution of x acts on E with
matrix [[2 mu, -1], [1, 0]] (row-vector convention), and the size of the
closed axis set X equals the order of rho.  Over the rationals that order
is decided exactly from the trace; over F_p the orders p and 2p occur at
mu = 1 and mu = -1 and everything else is found by direct powering.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import COVER, SPLIT_SPIN, Algebra, Element, exceptional_cover, split_spin
from .axial import miyamoto, monster_law
from .errors import (
    BadCharacteristic,
    CapExceeded,
    CharTwo,
    MuOne,
    SpecialAlpha,
    WrongAlgebraKind,
)
from .fields import Field, Scalar
from .idempotents import FAMILY_A, FAMILY_EXC, family_axis
from .linalg import Matrix, Vector
from .quadratic import QuadraticSpace

VARIANT_SPLIT = "split_spin"
VARIANT_COVER = "cover"

FINITE = "finite"
INFINITE = "infinite"
EXCEEDS_CAP = "exceeds_cap"

SINGLE = "single"
TWO_HALVES = "two_halves"


@dataclass(frozen=True)
class OrbitSize:
    kind: str
    order: int | None = None

    @classmethod
    def finite(cls, n: int) -> OrbitSize:
        return cls(FINITE, n)

    @classmethod
    def infinite(cls) -> OrbitSize:
        return cls(INFINITE)

    @classmethod
    def exceeds_cap(cls) -> OrbitSize:
        return cls(EXCEEDS_CAP)

    @property
    def is_finite(self) -> bool:
        return self.kind == FINITE


@dataclass(frozen=True)
class TwoGenConfig:
    """Two norm-one generators with b(e, f) = mu; the cover variant forces
    alpha = -1."""

    field: Field
    mu: Scalar
    alpha: Scalar | None = None
    variant: str = VARIANT_SPLIT

    def __post_init__(self):
        object.__setattr__(self, "mu", self.field.scalar(self.mu))
        if self.variant not in (VARIANT_SPLIT, VARIANT_COVER):
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.variant == VARIANT_COVER:
            minus_one = -self.field.one()
            if self.alpha is not None and self.field.scalar(self.alpha) != minus_one:
                raise ValueError("the cover variant has alpha = -1")
            object.__setattr__(self, "alpha", minus_one)
        else:
            if self.alpha is None:
                raise ValueError("alpha is required for the split spin variant")
            object.__setattr__(self, "alpha", self.field.scalar(self.alpha))

    def space(self) -> QuadraticSpace:
        one = self.field.one()
        return QuadraticSpace(Matrix(self.field, [[one, self.mu], [self.mu, one]]))


def default_two_gen_alpha(field: Field) -> Scalar:
    """A small alpha valid for two-generated axes (outside {0, 1, 1/2}).

    Axet sizes do not depend on alpha, so this default lets orbit commands
    run without one.
    """
    if field.characteristic == 2:
        raise CharTwo("two-generated axes require characteristic != 2")
    excluded = {field.zero(), field.one(), field.half()}
    for candidate in range(2, 9):
        value = field.scalar(candidate)
        if value not in excluded:
            return value
    # F_3 is {0, 1, 1/2}: no alpha admits the two-generated axes there
    raise ValueError(f"no valid alpha exists over {field!r}")


def build_two_gen(cfg: TwoGenConfig) -> tuple[Algebra, Element, Element]:
    """The algebra together with its two generating axes x and y."""
    field = cfg.field
    if field.characteristic == 2:
        raise CharTwo("two-generated axes require characteristic != 2")
    space = cfg.space()
    if cfg.variant == VARIANT_COVER:
        if field.characteristic == 3:
            raise BadCharacteristic("the cover requires characteristic != 3")
        algebra = exceptional_cover(space)
        family = FAMILY_EXC
    else:
        if cfg.alpha in (field.zero(), field.one(), field.half()):
            raise ValueError("alpha in {0, 1, 1/2} gives a Jordan algebra, not a two-generated axial pair")
        algebra = split_spin(space, cfg.alpha)
        family = FAMILY_A
    e = space.vector([1, 0])
    f = space.vector([0, 1])
    x = family_axis(algebra, e, family)
    y = family_axis(algebra, f, family)
    return algebra, x, y


@dataclass
class YabeData:
    """The basis (a0, a1, a_minus1, q) together with delta = -2 mu - 1 and
    the structure constants of the algebra expressed in that basis."""

    a0: Element
    a1: Element
    a_minus1: Element
    q: Element
    delta: Scalar
    structure_constants: tuple  # 4 x 4 x 4 coordinates in the (a0, a1, a_minus1, q) basis
    spans_algebra: bool


def yabe_data(algebra: Algebra, x: Element, y: Element) -> YabeData:
    """Construct a0 = x, a1 = y, a_minus1 = y^{tau_x} and the distinguished
    q, and express every pairwise product in that basis.

    Split spin: q = alpha (alpha+1)(mu-1)/4 times the identity; rejected for
    alpha = -1 (the two axes only generate a proper subalgebra).  Cover:
    q = (1-mu)/4 times n.  Both reject mu = 1.
    """
    kind = algebra.meta.kind
    if kind not in (SPLIT_SPIN, COVER):
        raise WrongAlgebraKind("Yabe data concerns the split spin algebra or its cover")
    field = algebra.field
    space = algebra.meta.space
    if space.dim != 2:
        raise ValueError("the Yabe basis lives in the two-generated case (dim E = 2)")
    for axis in (x, y):
        if (axis * axis).coords != axis.coords:
            raise ValueError("generators must be idempotent axes")
    two = field.scalar(2)
    e = tuple(two * c for c in algebra.e_part(x))
    f = tuple(two * c for c in algebra.e_part(y))
    mu = space.bform(e, f)
    if mu.is_one:
        raise MuOne("mu = 1: x and y generate a two-dimensional Jordan subalgebra")
    alpha = algebra.meta.alpha
    half = field.half()
    if kind == SPLIT_SPIN:
        if alpha == -field.one():
            raise SpecialAlpha("alpha = -1: x and y do not generate the split spin algebra")
        law = monster_law(field, alpha, half)
        q = algebra.identity() * (alpha * (alpha + 1) * (mu - 1) / 4)
    else:
        law = monster_law(field, -field.one(), half)
        q = algebra.basis_by_label("n") * ((1 - mu) / 4)
    tau_x = miyamoto(algebra, x, law)
    a_minus1 = algebra.element(tau_x.apply(y.coords))
    delta = -two * mu - 1
    basis = Matrix.from_columns(field, [x.coords, y.coords, a_minus1.coords, q.coords])
    inverse = basis.inverse()
    spans = inverse is not None and algebra.dim == 4
    assert spans, "the Yabe basis must span the four-dimensional algebra"
    elements = (x, y, a_minus1, q)
    constants = tuple(
        tuple(inverse.apply((elements[i] * elements[j]).coords) for j in range(4))
        for i in range(4)
    )
    return YabeData(x, y, a_minus1, q, delta, constants, spans)


def rho(mu: Scalar) -> Matrix:
    """The matrix [[2 mu, -1], [1, 0]] of the swap-then-reflect composite
    acting on row vectors of E; trace 2 mu, determinant 1."""
    field = mu.field
    one, zero = field.one(), field.zero()
    return Matrix(field, [[2 * mu, -one], [one, zero]])


def rho_order(field: Field, mu, cap: int | None = None) -> OrbitSize:
    """The multiplicative order of rho(mu), certified exactly.

    Over the rationals, rho has determinant one and is never plus or minus
    the identity, so finite order happens exactly for trace in {-1, 0, 1}
    (orders 3, 4, 6); trace +-2 is the non-diagonalisable unipotent case,
    of infinite order in characteristic zero.  Over F_p, mu = 1 gives order
    p and mu = -1 order 2p; every other order is found by direct powering
    (default cap 2 p**2 exceeds every possible order).
    """
    mu = field.scalar(mu)
    if field.p is None:
        trace = (2 * mu).value
        orders = {-1: 3, 0: 4, 1: 6}
        if trace in orders:
            return OrbitSize.finite(orders[trace])
        return OrbitSize.infinite()
    p = field.p
    if mu.is_one:
        return OrbitSize.finite(p)
    if mu == -field.one():
        return OrbitSize.finite(2 * p)
    cap = 2 * p * p if cap is None else cap
    if cap < 1:
        raise ValueError("cap must be at least 1")
    m = rho(mu)
    ident = Matrix.identity(field, 2)
    acc = m
    for k in range(1, cap + 1):
        if acc == ident:
            return OrbitSize.finite(k)
        acc = acc @ m
    return OrbitSize.exceeds_cap()


@dataclass
class AxetResult:
    """The closed axis set X: its size, the axis E-vectors in discovery
    order (finite case), the D-orbit split and the index of D in the
    dihedral overgroup (1 exactly when |X| is odd)."""

    size: OrbitSize
    orbit: tuple[Vector, ...] | None
    d_orbit_split: str
    d_hat_index: int
    orbit_x: tuple[Vector, ...] | None = None
    orbit_y: tuple[Vector, ...] | None = None


def axet(algebra: Algebra, x: Element, y: Element, cap: int | None = None) -> AxetResult:
    """Enumerate X by closing the two axis E-vectors under the negated
    reflections of every axis found, and cross-check |X| against the order
    of rho.

    When the order of rho is certified infinite the enumeration is skipped
    and the result says so; a finite order beyond the cap raises CapExceeded.
    """
    field = algebra.field
    space = algebra.meta.space
    if space.dim != 2:
        raise ValueError("axet enumeration concerns the two-generated case (dim E = 2)")
    two = field.scalar(2)
    e = tuple(two * c for c in algebra.e_part(x))
    f = tuple(two * c for c in algebra.e_part(y))
    mu = space.bform(e, f)
    order = rho_order(field, mu)
    if order.kind == INFINITE:
        return AxetResult(OrbitSize.infinite(), None, TWO_HALVES, 2)
    if order.kind == EXCEEDS_CAP or (cap is not None and order.order > cap):
        raise CapExceeded(
            f"axet enumeration needs {order.order if order.is_finite else 'unbounded'} "
            f"elements, beyond cap {cap}"
        )

    reflections = {}

    def neg_reflection_of(vec: Vector) -> Matrix:
        if vec not in reflections:
            reflections[vec] = space.neg_reflection(vec)
        return reflections[vec]

    def close(seeds: list[Vector], generators: list[Vector] | None) -> list[Vector]:
        # generators None: use the reflections of every vector found so far
        found = list(seeds)
        seen = set(found)
        queue = list(found)
        while queue:
            current = queue.pop(0)
            gens = found if generators is None else generators
            for g in list(gens):
                image = neg_reflection_of(g).apply(current)
                if image not in seen:
                    assert space.bform(image, image).is_one, "orbit left the norm-one set"
                    seen.add(image)
                    found.append(image)
                    queue.append(image)
        return found

    orbit = close([e, f], None)
    assert len(orbit) == order.order, (
        f"orbit size {len(orbit)} disagrees with the rho order {order.order}"
    )
    # D is generated by the two original involutions only
    orbit_x = close([e], [e, f])
    orbit_y = close([f], [e, f])
    n = len(orbit)
    if set(orbit_x) == set(orbit):
        split = SINGLE
        assert set(orbit_y) == set(orbit)
    else:
        split = TWO_HALVES
        assert set(orbit_x).isdisjoint(orbit_y)
        assert len(orbit_x) == len(orbit_y) == n // 2
        assert set(orbit_x) | set(orbit_y) == set(orbit)
    index = 1 if n % 2 == 1 else 2
    assert (split == SINGLE) == (n % 2 == 1), "odd size must mean a single D-orbit"
    return AxetResult(order, tuple(orbit), split, index, tuple(orbit_x), tuple(orbit_y))
