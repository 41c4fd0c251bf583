"""Finite fields GF(p^k) and permutation constructions of the listed families.

Field elements are residue polynomials (coefficients low degree first) modulo
the lexicographically least monic irreducible polynomial, where candidates are
ordered by the integer sum(c_i p^i) of their lower coefficients.  Polynomial
arithmetic is sympy's ``galoistools`` (dense lists, high degree first).

Matrix groups act on projective points written with their last non-zero
coordinate equal to 1; points are ordered lexicographically by the integer
encodings of their coordinates, so constructed permutations are reproducible.
"""
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial, gcd, prod

from sympy import factorint, primefactors
from sympy.combinatorics import Permutation
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (gf_add, gf_gcdex, gf_irreducible_p, gf_mul, gf_neg, gf_pow_mod,
                                     gf_rem, gf_strip, gf_sub)

import config
from errors import FieldError, ParameterOverflowError, UnsupportedFamilyError
from lists import is_prime
from names import Family, GroupName, render
from perm import PermGroup, contains, group_order, parse_cycles

logger = logging.getLogger(__name__)


# --- fields -----------------------------------------------------------------

def _digits(value, p, k):
    out = []
    for _ in range(k):
        value, digit = divmod(value, p)
        out.append(digit)
    return out


@dataclass(frozen=True)
class Field:
    p: int
    k: int
    modulus: tuple

    @property
    def order(self):
        return self.p ** self.k

    @cached_property
    def _modulus_dense(self):
        return [ZZ(c) for c in reversed(self.modulus)]

    def element(self, value):
        """Element from its integer encoding or its coefficient sequence (low degree first)."""
        if isinstance(value, int):
            coeffs = _digits(value % self.order, self.p, self.k)
        else:
            coeffs = [int(c) % self.p for c in value]
            if len(coeffs) > self.k:
                return FieldElement._from_dense(self, [ZZ(c) for c in reversed(coeffs)])
            coeffs += [0] * (self.k - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def elements(self):
        return [self.element(i) for i in range(self.order)]

    @cached_property
    def zero(self):
        return self.element(0)

    @cached_property
    def one(self):
        return self.element(1)

    @cached_property
    def gen(self):
        """The residue class of x (equals 0 in GF(p) with modulus x)."""
        return self.element([0, 1])

    @cached_property
    def primitive_element(self):
        exponents = [(self.order - 1) // ell for ell in primefactors(self.order - 1)]
        for a in self.elements()[1:]:
            if all(a ** e != self.one for e in exponents):
                return a
        raise FieldError(f"no primitive element in GF({self.order})")

    def __str__(self):
        return f"GF({self.p}^{self.k})"


@dataclass(frozen=True)
class FieldElement:
    field: Field
    coeffs: tuple

    @classmethod
    def _from_dense(cls, field, dense):
        reduced = gf_rem(gf_strip(dense), field._modulus_dense, field.p, ZZ)
        coeffs = [int(c) for c in reversed(reduced)]
        coeffs += [0] * (field.k - len(coeffs))
        return cls(field, tuple(coeffs))

    @property
    def _dense(self):
        return gf_strip([ZZ(c) for c in reversed(self.coeffs)])

    def _other(self, other):
        if isinstance(other, int):
            return self.field.element(other)
        if other.field != self.field:
            raise FieldError(f"field mismatch: {self.field} vs {other.field}")
        return other

    def __add__(self, other):
        other = self._other(other)
        return FieldElement._from_dense(self.field, gf_add(self._dense, other._dense, self.field.p, ZZ))

    def __sub__(self, other):
        other = self._other(other)
        return FieldElement._from_dense(self.field, gf_sub(self._dense, other._dense, self.field.p, ZZ))

    def __neg__(self):
        return FieldElement._from_dense(self.field, gf_neg(self._dense, self.field.p, ZZ))

    def __mul__(self, other):
        other = self._other(other)
        return FieldElement._from_dense(self.field, gf_mul(self._dense, other._dense, self.field.p, ZZ))

    __radd__ = __add__
    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero:
            raise FieldError("inversion of zero")
        s, _, h = gf_gcdex(self._dense, self.field._modulus_dense, self.field.p, ZZ)
        if [int(c) for c in h] != [1]:
            raise FieldError(f"{self} is not invertible; modulus is not irreducible")
        return FieldElement._from_dense(self.field, s)

    def __truediv__(self, other):
        return self * self._other(other).inverse()

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** -exponent
        if exponent == 0:
            return self.field.one
        return FieldElement._from_dense(
            self.field, gf_pow_mod(self._dense, exponent, self.field._modulus_dense, self.field.p, ZZ))

    def frobenius(self):
        return self ** self.field.p

    @property
    def is_zero(self):
        return not any(self.coeffs)

    def __int__(self):
        return sum(c * self.field.p ** i for i, c in enumerate(self.coeffs))

    def __repr__(self):
        terms = [f"{c}" if i == 0 else f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) or "0"


@lru_cache(maxsize=None)
def field_make(p, k):
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if k < 1:
        raise FieldError(f"extension degree {k} must be positive")
    if p ** k > config.MAX_PARAMETER:
        raise ParameterOverflowError(f"GF({p}^{k}) exceeds 2^63-1 elements")
    for m in range(p ** k):
        lower = _digits(m, p, k)
        dense = [ZZ(1)] + [ZZ(c) for c in reversed(lower)]
        if gf_irreducible_p(dense, p, ZZ):
            logger.debug(f"GF({p}^{k}): modulus coefficients {lower + [1]}")
            return Field(p, k, tuple(lower + [1]))
    raise FieldError(f"no irreducible polynomial of degree {k} over GF({p})")


def field_arith(a, b=None, op="add"):
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** b
    if op == "frobenius":
        return a.frobenius()
    raise ValueError(f"unknown field operation {op!r}")


# --- matrices and projective actions ----------------------------------------

@dataclass(frozen=True)
class MatrixRep:
    dim: int
    rows: tuple

    @classmethod
    def of(cls, field, rows):
        rows = tuple(tuple(x if isinstance(x, FieldElement) else field.element(x) for x in row) for row in rows)
        return cls(len(rows), rows)

    @property
    def field(self):
        return self.rows[0][0].field

    def apply(self, vector):
        return tuple(sum((a * v for a, v in zip(row, vector)), self.field.zero) for row in self.rows)

    def __mul__(self, other):
        cols = list(zip(*other.rows))
        return MatrixRep(self.dim, tuple(
            tuple(sum((a * b for a, b in zip(row, col)), self.field.zero) for col in cols) for row in self.rows))

    def transpose(self):
        return MatrixRep(self.dim, tuple(zip(*self.rows)))

    def frobenius(self):
        return MatrixRep(self.dim, tuple(tuple(x.frobenius() for x in row) for row in self.rows))

    def det(self):
        rows = [list(row) for row in self.rows]
        result = self.field.one
        for col in range(self.dim):
            pivot = next((r for r in range(col, self.dim) if not rows[r][col].is_zero), None)
            if pivot is None:
                return self.field.zero
            if pivot != col:
                rows[col], rows[pivot] = rows[pivot], rows[col]
                result = -result
            result = result * rows[col][col]
            inv = rows[col][col].inverse()
            for r in range(col + 1, self.dim):
                factor = rows[r][col] * inv
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
        return result


def normalize_point(vector):
    """Scale so the last non-zero coordinate is 1."""
    for x in reversed(vector):
        if not x.is_zero:
            inv = x.inverse()
            return tuple(v * inv for v in vector)
    raise FieldError("zero vector has no projective point")


def _key(vector):
    return tuple(int(x) for x in vector)


def projective_points(field, dim):
    points = []
    for last in range(dim):
        for head in range(field.order ** last):
            coords = [field.element(c) for c in _digits(head, field.order, last)]
            points.append(tuple(coords + [field.one] + [field.zero] * (dim - last - 1)))
    return sorted(points, key=_key)


def matrix_permutation(matrix, points, projective=True):
    index = {_key(v): i for i, v in enumerate(points)}
    images = []
    for v in points:
        w = matrix.apply(v)
        if projective:
            w = normalize_point(w)
        try:
            images.append(index[_key(w)])
        except KeyError:
            raise FieldError(f"matrix does not preserve the point set: {v} -> {w}")
    return Permutation(images)


def preserves_hermitian_form(matrix, form):
    """A^T J A^(q) == J for the hermitian form J over GF(q^2)."""
    q = int(round(matrix.field.order ** 0.5))
    twisted = MatrixRep(matrix.dim, tuple(tuple(x ** q for x in row) for row in matrix.rows))
    return matrix.transpose() * form * twisted == form


def _reduce_generators(perms, degree):
    """Drop permutations already generated by the earlier ones."""
    kept = []
    for g in perms:
        if g.is_Identity:
            continue
        if kept and contains(PermGroup(kept, degree), g):
            continue
        kept.append(g)
    return kept


# --- generating matrices ----------------------------------------------------

def sl2_generators(field):
    w = field.primitive_element
    return [
        MatrixRep.of(field, [[1, 1], [0, 1]]),
        MatrixRep.of(field, [[field.one, w], [field.zero, field.one]]),
        MatrixRep.of(field, [[w, field.zero], [field.zero, w.inverse()]]),
        MatrixRep.of(field, [[0, 1], [-field.one, field.zero]]),
    ]


def sl3_generators(field):
    w = field.primitive_element
    o, z = field.one, field.zero
    return [
        MatrixRep.of(field, [[1, 1, 0], [0, 1, 0], [0, 0, 1]]),
        MatrixRep.of(field, [[o, w, z], [z, o, z], [z, z, o]]),
        MatrixRep.of(field, [[w, z, z], [z, w.inverse(), z], [z, z, o]]),
        MatrixRep.of(field, [[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
        MatrixRep.of(field, [[z, o, z], [-o, z, z], [z, z, o]]),
    ]


def hermitian_form(field):
    return MatrixRep.of(field, [[0, 0, 1], [0, 1, 0], [1, 0, 0]])


def su3_generators(field, q):
    """Unipotent radical of a Borel subgroup plus the antidiagonal Weyl element."""
    def bar(a):
        return a ** q
    o, z = field.one, field.zero
    unipotent = []
    for a in field.elements():
        for b in field.elements():
            if (a.is_zero and b.is_zero) or not (b + bar(b) + a * bar(a)).is_zero:
                continue
            unipotent.append(MatrixRep.of(field, [[o, a, b], [z, o, -bar(a)], [z, z, o]]))
    weyl = MatrixRep.of(field, [[z, z, o], [z, -o, z], [o, z, z]])
    return unipotent, weyl


def suzuki_twist(q):
    """theta = 2^(m+1) for q = 2^(2m+1); theta^2 acts as squaring."""
    m = (q.bit_length() - 2) // 2
    return 2 ** (m + 1)


def suzuki_generators(field, theta):
    o, z = field.one, field.zero

    def translation(a, b):
        corner = a * b + a ** (theta + 2) + b ** theta
        return MatrixRep.of(field, [
            [o, z, z, z],
            [a, o, z, z],
            [b, a ** theta, o, z],
            [corner, b + a ** (theta + 1), a, o],
        ])

    k = field.primitive_element
    torus = MatrixRep.of(field, [[o, z, z, z], [z, k, z, z], [z, z, k ** (theta + 1), z], [z, z, z, k ** (theta + 2)]])
    reversal = MatrixRep.of(field, [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]])
    return [translation(o, z), translation(z, o), torus, reversal]


def suzuki_ovoid(field, theta):
    points = [(field.zero, field.zero, field.zero, field.one)]
    for x in field.elements():
        for y in field.elements():
            z = x * y + x ** (theta + 2) + y ** theta
            points.append(normalize_point((field.one, x, y, z)))
    return sorted(points, key=_key)


# --- constructions ----------------------------------------------------------

def _cycle(points):
    return "(" + ",".join(str(i) for i in points) + ")"


def _alternating(n):
    if n < 3:
        return PermGroup([], max(n, 1))
    long_cycle = range(1, n + 1) if n % 2 else range(2, n + 1)
    return PermGroup([parse_cycles("(1,2,3)", n), parse_cycles(_cycle(long_cycle), n)], n)


def _symmetric(n):
    if n < 2:
        return PermGroup([], 1)
    return PermGroup([parse_cycles("(1,2)", n), parse_cycles(_cycle(range(1, n + 1)), n)], n)


def _projective_group(matrices, points):
    return PermGroup([matrix_permutation(m, points) for m in matrices], len(points))


def _field_of(name):
    return field_make(name.p, name.s)


def _within_limit(name, value, limit):
    if value > limit:
        raise UnsupportedFamilyError(f"{render(name)}: parameter {value} out of range (max {limit})")


@lru_cache(maxsize=None)
def construct(name):
    limits = config.CONSTRUCT_LIMITS
    family = name.family
    if family is Family.ALTERNATING:
        _within_limit(name, name.n, limits["alternating_max_n"])
        group = _alternating(name.n)
    elif family is Family.SYMMETRIC:
        _within_limit(name, name.n, limits["symmetric_max_n"])
        group = _symmetric(name.n)
    elif family is Family.LINEAR and name.n == 2:
        _within_limit(name, name.q, limits["l2_max_q"])
        field = _field_of(name)
        group = _projective_group(sl2_generators(field), projective_points(field, 2))
    elif family is Family.LINEAR and name.n == 3:
        _within_limit(name, name.q, limits["l3_max_q"])
        field = _field_of(name)
        group = _projective_group(sl3_generators(field), projective_points(field, 3))
    elif family is Family.UNITARY and name.n == 3 and name.q in limits["unitary_fields"]:
        field = field_make(name.p, 2 * name.s)
        form = hermitian_form(field)
        points = [v for v in projective_points(field, 3)
                  if (v[0] * v[2] ** name.q + v[1] * v[1] ** name.q + v[2] * v[0] ** name.q).is_zero]
        unipotent, weyl = su3_generators(field, name.q)
        gens = _reduce_generators([matrix_permutation(m, points) for m in unipotent], len(points))
        group = PermGroup(gens + [matrix_permutation(weyl, points)], len(points))
        logger.debug(f"U3({name.q}): {len(points)} isotropic points, form {form.rows}")
    elif family is Family.SUZUKI:
        _within_limit(name, name.q, limits["suzuki_max_q"])
        field = _field_of(name)
        theta = suzuki_twist(name.q)
        group = _projective_group(suzuki_generators(field, theta), suzuki_ovoid(field, theta))
    else:
        raise UnsupportedFamilyError(f"constructor not supported for {render(name)}")
    logger.info(f"Constructed {render(name)}: degree {group.degree}, {len(group.generators)} generators")
    return group


def special_linear_on_vectors(q):
    """SL(2,q) on the q^2-1 non-zero vectors of GF(q)^2 (faithful, not projective)."""
    (p, s), = factorint(q).items()
    field = field_make(p, s)
    vectors = sorted(((a, b) for a in field.elements() for b in field.elements()
                      if not (a.is_zero and b.is_zero)), key=_key)
    return PermGroup([matrix_permutation(m, vectors, projective=False) for m in sl2_generators(field)],
                     len(vectors))


# --- orders -----------------------------------------------------------------

SPORADIC_ORDERS = {
    "M11": 7920,
    "M12": 95040,
    "J1": 175560,
    "M22": 443520,
    "J2": 604800,
    "M23": 10200960,
    "HS": 44352000,
    "J3": 50232960,
    "M24": 244823040,
    "McL": 898128000,
    "He": 4030387200,
    "Ru": 145926144000,
    "Suz": 448345497600,
    "O'N": 460815505920,
    "Co3": 495766656000,
    "Co2": 42305421312000,
    "Fi22": 64561751654400,
    "HN": 273030912000000,
    "Ly": 51765179004000000,
    "Th": 90745943887872000,
    "Fi23": 4089470473293004800,
    "Co1": 4157776806543360000,
    "J4": 86775571046077562880,
    "Fi24'": 1255205709190661721292800,
    "B": 4154781481226426191177580544000000,
    "M": 808017424794512875886459904961710757005754368000000000,
}
TITS_ORDER = 17971200


def _minus(q, exponents):
    return prod(q ** i - 1 for i in exponents)


def expected_order(name):
    f, n, q = name.family, name.n, name.q
    if f is Family.ALTERNATING:
        return factorial(n) // 2
    if f is Family.SYMMETRIC:
        return factorial(n)
    if f is Family.CYCLIC:
        return n
    if f is Family.LINEAR:
        return q ** (n * (n - 1) // 2) * _minus(q, range(2, n + 1)) // gcd(n, q - 1)
    if f is Family.UNITARY:
        return q ** (n * (n - 1) // 2) * prod(q ** i - (-1) ** i for i in range(2, n + 1)) // gcd(n, q + 1)
    if f in (Family.SYMPLECTIC, Family.ORTHOGONAL_ODD):
        m = n // 2
        return q ** (m * m) * _minus(q, range(2, 2 * m + 1, 2)) // gcd(2, q - 1)
    if f in (Family.ORTHOGONAL_PLUS, Family.ORTHOGONAL_MINUS):
        m = n // 2
        sign = 1 if f is Family.ORTHOGONAL_PLUS else -1
        return (q ** (m * (m - 1)) * (q ** m - sign) * _minus(q, range(2, 2 * m - 1, 2))
                // gcd(4, q ** m - sign))
    if f is Family.G2:
        return q ** 6 * _minus(q, (6, 2))
    if f is Family.F4:
        return q ** 24 * _minus(q, (12, 8, 6, 2))
    if f is Family.E6:
        return q ** 36 * _minus(q, (12, 9, 8, 6, 5, 2)) // gcd(3, q - 1)
    if f is Family.E7:
        return q ** 63 * _minus(q, (18, 14, 12, 10, 8, 6, 2)) // gcd(2, q - 1)
    if f is Family.E8:
        return q ** 120 * _minus(q, (30, 24, 20, 18, 14, 12, 8, 2))
    if f is Family.SUZUKI:
        return q ** 2 * (q ** 2 + 1) * (q - 1)
    if f is Family.REE_G2:
        return q ** 3 * (q ** 3 + 1) * (q - 1)
    if f is Family.REE_F4:
        return q ** 12 * (q ** 6 + 1) * (q ** 4 - 1) * (q ** 3 + 1) * (q - 1)
    if f is Family.TRIALITY_D4:
        return q ** 12 * (q ** 8 + q ** 4 + 1) * (q ** 6 - 1) * (q ** 2 - 1)
    if f is Family.TWISTED_E6:
        return (q ** 36 * (q ** 12 - 1) * (q ** 9 + 1) * (q ** 8 - 1) * (q ** 6 - 1) * (q ** 5 + 1)
                * (q ** 2 - 1) // gcd(3, q + 1))
    if f is Family.TITS:
        return TITS_ORDER
    if f is Family.SPORADIC:
        return SPORADIC_ORDERS[name.label]
    raise UnsupportedFamilyError(f"no order formula for {render(name)}")


def check_construction(name):
    """(computed order, formula order) for a constructible name."""
    return group_order(construct(name)), expected_order(name)


if __name__ == "__main__":
    from names import parse_name
    for text in ("L2(7)", "L3(3)", "U3(3)", "Sz(8)"):
        name = parse_name(text)
        print(text, "->", check_construction(name))
