"""
Finite abelian p-groups given blockwise as products of homocyclic groups,
their block-preserving endomorphisms, and subgroups in column Howell form.

All arithmetic is over Z/p^e, one block at a time.
"""
import itertools
import logging
import math
from dataclasses import dataclass, field
from functools import cached_property

from sympy import Matrix, factorint, isprime

from core.conf import toolkit_setting
from core.exceptions import GroupTooLarge, InvalidInput, InvalidModulus, ShapeError

logger = logging.getLogger(__name__)


def prime_power(modulus):
    """Split ``modulus`` into ``(p, e)`` with ``modulus == p**e``, ``e >= 1``."""
    if modulus < 2:
        raise InvalidModulus(f"modulus {modulus} is not a prime power")
    factors = factorint(modulus)
    if len(factors) != 1:
        raise InvalidModulus(f"modulus {modulus} is not a prime power")
    (p, e), = factors.items()
    return p, e


def valuation(x, p):
    """p-adic valuation of a nonzero integer."""
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def _mat_mul(a, b, modulus):
    product = (Matrix(a) * Matrix(b)).applyfunc(lambda x: x % modulus)
    return tuple(tuple(int(x) for x in row) for row in product.tolist())


def _identity(t):
    return tuple(tuple(int(r == c) for c in range(t)) for r in range(t))


@dataclass(frozen=True)
class AbelianPGroup:
    """
    ``prod (C_{p^e})^t`` over the blocks ``(e, t)``, exponents strictly increasing.
    The empty block list is the trivial group.
    """
    p: int
    blocks: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'blocks', tuple((int(e), int(t)) for e, t in self.blocks))
        if not isprime(self.p):
            raise InvalidInput(f"p = {self.p} is not prime")
        previous = 0
        for e, t in self.blocks:
            if e <= previous:
                raise InvalidInput(f"block exponents must be positive and strictly increasing, got {self.blocks}")
            if t < 1:
                raise InvalidInput(f"block multiplicities must be positive, got {self.blocks}")
            previous = e
        cap = toolkit_setting('MAX_GROUP_ORDER')
        if self.order > cap:
            raise GroupTooLarge(f"|P| = {self.order} exceeds the supported cap {cap}")

    @property
    def order(self):
        return math.prod(self.p ** (e * t) for e, t in self.blocks)

    @property
    def rank(self):
        return sum(t for _, t in self.blocks)

    @property
    def moduli(self):
        return tuple(self.p ** e for e, _ in self.blocks)

    @property
    def exponent(self):
        return self.p ** self.blocks[-1][0] if self.blocks else 1

    def elements(self):
        """Every element as a tuple of per-block exponent tuples (oracle use only)."""
        per_block = [
            itertools.product(range(self.p ** e), repeat=t) for e, t in self.blocks
        ]
        return itertools.product(*[list(b) for b in per_block])

    def __str__(self):
        if not self.blocks:
            return '1'
        return ' x '.join(
            f"(C_{self.p ** e})^{t}" if t > 1 else f"C_{self.p ** e}" for e, t in self.blocks
        )


@dataclass(frozen=True)
class BlockMatrix:
    """A block-diagonal endomorphism: one ``t x t`` integer matrix per block, reduced mod ``p^e``."""
    moduli: tuple
    blocks: tuple

    @classmethod
    def for_group(cls, group, blocks):
        blocks = list(blocks)
        if len(blocks) != len(group.blocks):
            raise ShapeError(f"expected {len(group.blocks)} blocks, got {len(blocks)}")
        reduced = []
        for index, ((e, t), matrix) in enumerate(zip(group.blocks, blocks)):
            modulus = group.p ** e
            if len(matrix) != t or any(len(row) != t for row in matrix):
                raise ShapeError(f"block {index}: expected a {t}x{t} matrix")
            reduced.append(tuple(tuple(int(x) % modulus for x in row) for row in matrix))
        return cls(group.moduli, tuple(reduced))

    @classmethod
    def identity(cls, group):
        return cls(group.moduli, tuple(_identity(t) for _, t in group.blocks))

    @classmethod
    def zero(cls, group):
        return cls(group.moduli, tuple(tuple((0,) * t for _ in range(t)) for _, t in group.blocks))

    def _check_compatible(self, other):
        if self.moduli != other.moduli or [len(b) for b in self.blocks] != [len(b) for b in other.blocks]:
            raise ShapeError("block matrices live on different groups")

    def __add__(self, other):
        self._check_compatible(other)
        return BlockMatrix(self.moduli, tuple(
            tuple(tuple((x + y) % m for x, y in zip(ra, rb)) for ra, rb in zip(a, b))
            for m, a, b in zip(self.moduli, self.blocks, other.blocks)
        ))

    def __sub__(self, other):
        self._check_compatible(other)
        return BlockMatrix(self.moduli, tuple(
            tuple(tuple((x - y) % m for x, y in zip(ra, rb)) for ra, rb in zip(a, b))
            for m, a, b in zip(self.moduli, self.blocks, other.blocks)
        ))

    def __matmul__(self, other):
        self._check_compatible(other)
        return BlockMatrix(self.moduli, tuple(
            _mat_mul(a, b, m) for m, a, b in zip(self.moduli, self.blocks, other.blocks)
        ))

    def __pow__(self, k):
        result = BlockMatrix(self.moduli, tuple(_identity(len(b)) for b in self.blocks))
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_identity(self):
        return all(b == _identity(len(b)) for b in self.blocks)

    def apply(self, element):
        """Image of an element given as per-block exponent tuples (column convention)."""
        return tuple(
            tuple(sum(row[c] * x[c] for c in range(len(x))) % m for row in block)
            for m, block, x in zip(self.moduli, self.blocks, element)
        )

    def mod_p(self, p):
        return tuple(tuple(tuple(x % p for x in row) for row in block) for block in self.blocks)

    def to_lists(self):
        return [[list(row) for row in block] for block in self.blocks]


@dataclass(frozen=True)
class HowellForm:
    """
    Canonical column Howell basis of a submodule of ``(Z/p^e)^t``.

    Column ``j`` has zeros above ``pivot_rows[j]``, the entry ``p^pivot_valuations[j]``
    on its pivot row, and every other column is reduced modulo that pivot there.
    """
    modulus: int
    nrows: int
    columns: tuple
    pivot_rows: tuple
    pivot_valuations: tuple

    @property
    def rank(self):
        return len(self.columns)

    @property
    def order(self):
        p, e = prime_power(self.modulus)
        return math.prod(p ** (e - k) for k in self.pivot_valuations)

    def as_matrix(self):
        return tuple(tuple(col[r] for col in self.columns) for r in range(self.nrows))

    def contains(self, vector):
        p, _ = prime_power(self.modulus)
        v = [int(x) % self.modulus for x in vector]
        pivots = dict(zip(self.pivot_rows, zip(self.pivot_valuations, self.columns)))
        for r in range(self.nrows):
            if not v[r]:
                continue
            if r not in pivots:
                return False
            k, column = pivots[r]
            if v[r] % (p ** k):
                return False
            factor = v[r] // p ** k
            v = [(x - factor * y) % self.modulus for x, y in zip(v, column)]
        return not any(v)


def howell_form(matrix, modulus):
    """
    Column Howell form of the span of the columns of ``matrix`` over ``Z/modulus``.

    ``matrix`` is a list of rows. Pivots are chosen by least valuation, ties going
    to the lowest column index; the resulting basis is unique for the span.
    """
    p, e = prime_power(modulus)
    rows = [list(r) for r in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    if any(len(r) != ncols for r in rows):
        raise ShapeError("matrix rows have different lengths")

    vecs = [[rows[r][c] % modulus for r in range(nrows)] for c in range(ncols)]
    vecs = [v for v in vecs if any(v)]
    basis = []
    for r in range(nrows):
        live = [i for i, v in enumerate(vecs) if v[r]]
        if not live:
            continue
        idx = min(live, key=lambda i: (valuation(vecs[i][r], p), i))
        k = valuation(vecs[idx][r], p)
        inverse = pow(vecs[idx][r] // p ** k, -1, modulus)
        pivot = [(x * inverse) % modulus for x in vecs[idx]]
        remaining = []
        for i, v in enumerate(vecs):
            if i == idx:
                continue
            if v[r]:
                factor = v[r] // p ** k
                v = [(x - factor * y) % modulus for x, y in zip(v, pivot)]
            if any(v):
                remaining.append(v)
        if k:
            # p^(e-k) * pivot vanishes on row r but may survive below it
            saturated = [(x * p ** (e - k)) % modulus for x in pivot]
            if any(saturated):
                remaining.append(saturated)
        basis.append((r, k, pivot))
        vecs = remaining
        logger.debug("howell mod %d: pivot at row %d with valuation %d", modulus, r, k)

    columns = [col for _, _, col in basis]
    for j, (rj, kj, bj) in enumerate(basis):
        for i in range(j):
            factor = columns[i][rj] // p ** kj
            if factor:
                columns[i] = [(x - factor * y) % modulus for x, y in zip(columns[i], bj)]
    return HowellForm(
        modulus=modulus,
        nrows=nrows,
        columns=tuple(tuple(c) for c in columns),
        pivot_rows=tuple(r for r, _, _ in basis),
        pivot_valuations=tuple(k for _, k, _ in basis),
    )


def _block_invariant_factors(form):
    """Cyclic factor orders of one block component, read off from |p^i S|."""
    if not form.columns:
        return []
    p, e = prime_power(form.modulus)
    orders = []
    for i in range(e + 1):
        scaled = [[(x * p ** i) % form.modulus for x in row] for row in form.as_matrix()]
        orders.append(howell_form(scaled, form.modulus).order)
    # at_least[j]: number of cyclic factors of order >= p^(j+1)
    at_least = [valuation(orders[j] // orders[j + 1], p) if orders[j] != orders[j + 1] else 0
                for j in range(e)]
    at_least.append(0)
    factors = []
    for j in range(e):
        factors.extend([p ** (j + 1)] * (at_least[j] - at_least[j + 1]))
    return factors


@dataclass(frozen=True)
class SubgroupData:
    """A subgroup of ``ambient`` that splits along the blocks: one Howell form per block."""
    ambient: AbelianPGroup
    forms: tuple
    invariant_factors: tuple = field(default=None)

    def __post_init__(self):
        if self.invariant_factors is None:
            factors = sorted(f for form in self.forms for f in _block_invariant_factors(form))
            object.__setattr__(self, 'invariant_factors', tuple(factors))

    @property
    def ranks(self):
        return tuple(form.rank for form in self.forms)

    @property
    def order(self):
        return math.prod(form.order for form in self.forms)

    @property
    def is_trivial(self):
        return self.order == 1

    @property
    def is_cyclic(self):
        return len(self.invariant_factors) <= 1

    def contains(self, element):
        return all(form.contains(x) for form, x in zip(self.forms, element))

    def generators(self):
        """Howell columns as elements of the ambient group (zero outside their block)."""
        zero = [tuple([0] * t) for _, t in self.ambient.blocks]
        for i, form in enumerate(self.forms):
            for column in form.columns:
                element = list(zero)
                element[i] = column
                yield tuple(element)

    @cached_property
    def is_whole(self):
        return self.order == self.ambient.order


def _check_map(m, group):
    if m.moduli != group.moduli or [len(b) for b in m.blocks] != [t for _, t in group.blocks]:
        raise ShapeError("map does not match the block shape of the group")


def image_subgroup(maps, group):
    """The subgroup generated by the images of all ``maps``, block by block."""
    maps = list(maps)
    for m in maps:
        _check_map(m, group)
    forms = []
    for i, (e, t) in enumerate(group.blocks):
        rows = [[x for m in maps for x in m.blocks[i][r]] for r in range(t)]
        forms.append(howell_form(rows, group.p ** e))
    return SubgroupData(group, tuple(forms))


def joint_kernel(maps, group):
    """Common kernel of ``maps``: solves ``M x = 0`` for the stacked maps via the Howell property."""
    maps = list(maps)
    for m in maps:
        _check_map(m, group)
    forms = []
    for i, (e, t) in enumerate(group.blocks):
        modulus = group.p ** e
        stacked = [list(row) for m in maps for row in m.blocks[i]]
        top = len(stacked)
        augmented = stacked + [list(row) for row in _identity(t)]
        form = howell_form(augmented, modulus)
        kernel_columns = [
            col[top:] for col, r in zip(form.columns, form.pivot_rows) if r >= top
        ]
        rows = [[col[r] for col in kernel_columns] for r in range(t)]
        forms.append(howell_form(rows, modulus))
    return SubgroupData(group, tuple(forms))


def kernel_subgroup(m, group):
    return joint_kernel([m], group)


def invariant_factors(subgroup):
    """Isomorphism type of ``subgroup`` as the sorted orders of its cyclic factors."""
    return subgroup.invariant_factors


def subgroup_sum(a, b):
    """``a + b`` inside the common ambient group."""
    if a.ambient != b.ambient:
        raise ShapeError("subgroups of different groups")
    forms = []
    for fa, fb in zip(a.forms, b.forms):
        rows = [list(ra) + list(rb) for ra, rb in zip(fa.as_matrix(), fb.as_matrix())]
        forms.append(howell_form(rows, fa.modulus))
    return SubgroupData(a.ambient, tuple(forms))


def subgroup_order(subgroup):
    return subgroup.order


def contains(subgroup, element):
    """Howell membership test for an element given as per-block exponent tuples."""
    return subgroup.contains(element)


def exponent_tuples(group):
    """All elements of ``group``; refuses groups above the oracle cap."""
    cap = toolkit_setting('ORACLE_MAX_ORDER')
    if group.order > cap:
        raise GroupTooLarge(f"|P| = {group.order} is above the oracle cap {cap}")
    return list(group.elements())
