import logging
from dataclasses import dataclass
from functools import lru_cache

import galois
from sympy import isprime, n_order

from core.exceptions import InvalidInput, NotCoprime

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FField:
    """
    GF(p^m) with a fixed primitive ``exponent``-th root of unity ``zeta``.

    ``m`` is the multiplicative order of p modulo the exponent, so the field is
    the smallest one of characteristic p holding every such root.
    """
    p: int
    m: int
    exponent: int
    field: type
    zeta: object

    @property
    def order(self):
        return self.p ** self.m

    @property
    def modulus(self):
        return self.field.irreducible_poly

    def root(self, d):
        """A primitive d-th root of unity, ``zeta^(exponent / d)``."""
        if self.exponent % d:
            raise InvalidInput(f"{d} does not divide the exponent {self.exponent}")
        return self.zeta ** (self.exponent // d)

    def power(self, k):
        return self.zeta ** (k % self.exponent)

    def embed(self, matrix):
        """An integer matrix read mod p, as a matrix over this field."""
        return self.field([[int(x) % self.p for x in row] for row in matrix])


@lru_cache(maxsize=None)
def build_splitting_field(p, exponent):
    if not isprime(p):
        raise InvalidInput(f"p = {p} is not prime")
    if exponent < 1:
        raise InvalidInput(f"exponent must be positive, got {exponent}")
    if exponent % p == 0:
        raise NotCoprime(f"p = {p} divides the exponent {exponent}")

    m = 1 if exponent == 1 else int(n_order(p, exponent))
    if m == 1:
        field = galois.GF(p)
    else:
        field = galois.GF(p ** m, irreducible_poly=galois.irreducible_poly(p, m, method='min'))
    generator = field.primitive_elements[0]
    zeta = generator ** ((p ** m - 1) // exponent)
    logger.debug("splitting field GF(%d^%d) for exponent %d, zeta = %s", p, m, exponent, zeta)
    return FField(p=p, m=m, exponent=exponent, field=field, zeta=zeta)
