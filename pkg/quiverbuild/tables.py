"""
Character tables with exact cyclotomic values, and the quiver they determine.

Values live in Q(zeta_m), stored as rational polynomials in ``z`` reduced
modulo the m-th cyclotomic polynomial.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from sympy import QQ, Poly, Rational, cyclotomic_poly, symbols

from charfield.characters import all_characters
from core.exceptions import InvalidInput, NonIntegerResult, ShapeError

from .quivers import make_quiver

logger = logging.getLogger(__name__)

z = symbols('z')


class Cyclotomics:
    """Arithmetic in Q(zeta_m)."""

    def __init__(self, m):
        if m < 1:
            raise InvalidInput(f"cyclotomic exponent must be positive, got {m}")
        self.m = m
        self.modulus = Poly(cyclotomic_poly(m, z), z, domain=QQ)

    def reduce(self, poly):
        return poly.rem(self.modulus)

    def element(self, value):
        """An integer, a rational, or a coefficient list ``[c_0, c_1, ...]`` meaning sum c_k zeta^k."""
        if isinstance(value, (list, tuple)):
            expr = sum((Rational(str(Fraction(c))) * z ** k for k, c in enumerate(value)), Rational(0))
        else:
            expr = Rational(str(Fraction(value)))
        return self.reduce(Poly(expr, z, domain=QQ))

    def root_power(self, k):
        return self.reduce(Poly(z ** (k % self.m), z, domain=QQ))

    def zero(self):
        return Poly(0, z, domain=QQ)

    def conjugate(self, a):
        """zeta -> zeta^(m-1)."""
        return self.reduce(a.compose(Poly(z ** (self.m - 1), z, domain=QQ)))

    def to_rational(self, a):
        """The rational number ``a`` is, or None when it is irrational."""
        if a.is_zero:
            return Rational(0)
        if a.degree() > 0:
            return None
        return Rational(a.LC())

    def coefficients(self, a):
        """Coefficients, lowest power first; integers stay integers, other rationals become strings."""
        if a.is_zero:
            return 0
        coeffs = list(reversed(a.all_coeffs()))
        if len(coeffs) == 1 and coeffs[0].is_integer:
            return int(coeffs[0])
        return [int(c) if c.is_integer else str(c) for c in coeffs]


@dataclass(frozen=True, eq=False)
class CharacterTable:
    """
    Irreducible characters of H by conjugacy class, plus the character of a module M.
    Rows are checked for orthonormality on construction.
    """
    exponent: int
    class_names: tuple
    class_sizes: tuple
    names: tuple
    rows: tuple
    module: tuple = None

    def __post_init__(self):
        width = len(self.class_sizes)
        if len(self.class_names) != width:
            raise ShapeError("class names and class sizes differ in length")
        if len(self.names) != len(self.rows):
            raise ShapeError("character names and rows differ in length")
        if any(len(row) != width for row in self.rows):
            raise ShapeError(f"every character needs {width} values")
        if self.module is not None and len(self.module) != width:
            raise ShapeError(f"the module character needs {width} values")
        for i, chi in enumerate(self.rows):
            for j, psi in enumerate(self.rows):
                if cyclotomic_inner_product(self, chi, psi) != int(i == j):
                    raise InvalidInput(f"characters {self.names[i]} and {self.names[j]} are not orthonormal")

    @cached_property
    def ring(self):
        return Cyclotomics(self.exponent)

    @property
    def order(self):
        return sum(self.class_sizes)

    @property
    def degrees(self):
        return tuple(self.ring.to_rational(row[0]) for row in self.rows)

    def row(self, name):
        return self.rows[self.names.index(name)]

    def product(self, chi, psi):
        return tuple(self.ring.reduce(a * b) for a, b in zip(chi, psi))

    @classmethod
    def from_values(cls, exponent, classes, characters, module=None):
        """
        ``classes`` is a list of (name, size); ``characters`` a list of (name, values)
        with values as accepted by ``Cyclotomics.element``.
        """
        ring = Cyclotomics(exponent)
        return cls(
            exponent=exponent,
            class_names=tuple(name for name, _ in classes),
            class_sizes=tuple(int(size) for _, size in classes),
            names=tuple(name for name, _ in characters),
            rows=tuple(tuple(ring.element(v) for v in values) for _, values in characters),
            module=None if module is None else tuple(ring.element(v) for v in module),
        )


def cyclotomic_inner_product(table, chi, psi):
    """(1/|H|) sum_C |C| conj(chi(C)) psi(C), which must be a nonnegative integer."""
    ring = table.ring
    total = ring.zero()
    for size, a, b in zip(table.class_sizes, chi, psi):
        total = total + ring.reduce(ring.conjugate(a) * b) * size
    value = ring.to_rational(ring.reduce(total))
    if value is None:
        raise NonIntegerResult("inner product is not rational")
    value = value / table.order
    if not value.is_integer or value < 0:
        raise NonIntegerResult(f"inner product {value} is not a nonnegative integer")
    return int(value)


def quiver_from_character_table(table):
    """
    Arrow counts lambda -> mu = <mu, chi_M chi_lambda>; no relations are known here,
    so the result is marked quiver-only. Arrows between a pair are labelled (0, k).
    """
    if table.module is None:
        raise InvalidInput("the character table does not designate a module character")
    triples = []
    for s, chi in enumerate(table.rows):
        twisted = table.product(table.module, chi)
        for t, mu in enumerate(table.rows):
            count = cyclotomic_inner_product(table, mu, twisted)
            triples.extend((s, t, (0, k)) for k in range(1, count + 1))
    logger.debug("character table quiver: %d vertices, %d arrows", len(table.rows), len(triples))
    return make_quiver(table.names, triples)


def dual_group_table(hgroup, eigenchars):
    """
    The character table of abelian H (classes = elements) with M the sum of the
    eigencharacters, for cross-checking against the bound quiver.
    """
    exponent = hgroup.exponent
    ring = Cyclotomics(exponent)
    elements = list(hgroup.elements())
    orders = hgroup.generator_orders

    def value(chi, h):
        return ring.root_power(sum(c * x * (exponent // d) for c, x, d in zip(chi.exponents, h, orders)))

    characters = all_characters(hgroup)
    rows = tuple(tuple(value(chi, h) for h in elements) for chi in characters)
    module = []
    for h in elements:
        total = ring.zero()
        for _, chi in eigenchars:
            total = total + value(chi, h)
        module.append(ring.reduce(total))
    return CharacterTable(
        exponent=exponent,
        class_names=tuple(','.join(map(str, h)) or '1' for h in elements),
        class_sizes=(1,) * len(elements),
        names=tuple(chi.label() for chi in characters),
        rows=rows,
        module=tuple(module),
    )
