"""
Linear characters of a finite abelian group H, as exponent tuples.

A character ``c`` of H = prod C_{d_g} sends the g-th generator to
``zeta_{d_g}^{c_g}``. Tensor product is componentwise addition, so all
character algebra stays in integers.
"""
import itertools
import math
from dataclasses import dataclass

from core.exceptions import ShapeError


@dataclass(frozen=True, order=True)
class Character:
    exponents: tuple
    orders: tuple

    def __post_init__(self):
        if len(self.exponents) != len(self.orders):
            raise ShapeError("character exponents and generator orders differ in length")
        object.__setattr__(self, 'orders', tuple(int(d) for d in self.orders))
        object.__setattr__(
            self, 'exponents', tuple(int(c) % d for c, d in zip(self.exponents, self.orders)),
        )

    @classmethod
    def trivial(cls, orders):
        return cls((0,) * len(orders), tuple(orders))

    def _check(self, other):
        if self.orders != other.orders:
            raise ShapeError("characters of different groups")

    def __add__(self, other):
        """Tensor product."""
        self._check(other)
        return Character(tuple(a + b for a, b in zip(self.exponents, other.exponents)), self.orders)

    def __sub__(self, other):
        self._check(other)
        return Character(tuple(a - b for a, b in zip(self.exponents, other.exponents)), self.orders)

    def __neg__(self):
        return Character(tuple(-a for a in self.exponents), self.orders)

    def __mul__(self, k):
        """k-th tensor power."""
        return Character(tuple(a * k for a in self.exponents), self.orders)

    __rmul__ = __mul__

    @property
    def is_trivial(self):
        return not any(self.exponents)

    @property
    def order(self):
        return math.lcm(*(d // math.gcd(c, d) for c, d in zip(self.exponents, self.orders))) if self.orders else 1

    def frobenius(self, p):
        return self * p

    def value(self, h, field):
        """Value at the H-element with exponent tuple ``h``, inside ``field``."""
        exponent = field.exponent
        k = sum(c * x * (exponent // d) for c, x, d in zip(self.exponents, h, self.orders))
        return field.power(k)

    def label(self):
        return '(' + ','.join(str(c) for c in self.exponents) + ')'

    def __str__(self):
        return self.label()


def all_characters(hgroup):
    """Every character of H, in lexicographic order of exponent tuples."""
    orders = hgroup.generator_orders
    return [Character(c, orders) for c in itertools.product(*[range(d) for d in orders])]


@dataclass(frozen=True)
class FrobeniusOrbit:
    characters: tuple

    @property
    def size(self):
        return len(self.characters)


def frobenius_orbits(chars, p):
    """
    Orbits of chi -> chi^p through the distinct characters of ``chars``.

    Each orbit starts at its least member and lists successive Frobenius images.
    """
    remaining = sorted(set(chars))
    seen = set()
    orbits = []
    for chi in remaining:
        if chi in seen:
            continue
        orbit = [chi]
        nxt = chi.frobenius(p)
        while nxt != chi:
            orbit.append(nxt)
            nxt = nxt.frobenius(p)
        seen.update(orbit)
        orbits.append(FrobeniusOrbit(tuple(orbit)))
    return orbits
