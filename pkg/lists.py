"""Arithmetic membership in the minimal simple groups (List 1) and in List 3.

List 1 (minimal simple groups):
  1. L2(2^p), p prime
  2. L2(3^p), p odd prime
  3. L2(p), p prime, p > 3, p = +-2 (mod 5)
  4. Sz(2^p), p odd prime
  5. L3(3)

List 3 (simple groups whose insoluble proper subgroups are minimal simple
modulo their Frattini subgroup):
  1. L2(2^(rs)), r and s primes
  2. L2(3^(rs)), r and s odd primes
  3. L2(p), p prime, p = +-1 (mod 5)
  4. L2(p^r), r odd prime, p = 5 or p prime with p = +-2 (mod 5), p >= 5
  5. A6 (= L2(9)), U3(3), Sz(2^(rs)) with r and s odd primes

r = s is allowed throughout.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from sympy import factorint, isprime

from names import Family, GroupName, normalize, render

logger = logging.getLogger(__name__)


def is_prime(n):
    """Deterministic below 2^64 (trial division, then a fixed Miller-Rabin base set)."""
    return bool(isprime(n))


class Shape(Enum):
    PRIME = "prime"
    SEMIPRIME = "semiprime"
    OTHER = "other"


@dataclass(frozen=True)
class ExponentShape:
    value: int
    classification: Shape
    factors: Tuple[int, ...] = ()

    @property
    def is_prime(self):
        return self.classification is Shape.PRIME

    @property
    def is_semiprime(self):
        return self.classification is Shape.SEMIPRIME


def exponent_shape(n):
    factors = sorted(p for p, e in factorint(n).items() for _ in range(e)) if n > 1 else []
    if len(factors) == 1:
        return ExponentShape(n, Shape.PRIME, (n,))
    if len(factors) == 2:
        return ExponentShape(n, Shape.SEMIPRIME, tuple(factors))
    return ExponentShape(n, Shape.OTHER)


class ListName(Enum):
    LIST1 = "List1"
    LIST3 = "List3"
    NONE = "none"


@dataclass(frozen=True)
class ListVerdict:
    member: bool
    list: ListName
    item: Optional[int]
    reason: str


def _yes(which, item, reason):
    return ListVerdict(True, which, item, reason)


def _no(reason):
    return ListVerdict(False, ListName.NONE, None, reason)


def _l2_form(name):
    """(p, s) of an L2 avatar, or None; A5 is read as L2(2^2)."""
    if name.family is Family.LINEAR and name.n == 2:
        return name.p, name.s
    if name.family is Family.ALTERNATING and name.n == 5:
        return 2, 2
    return None


def _odd_primes(shape):
    return shape.is_semiprime and all(f % 2 for f in shape.factors)


def _product(shape):
    r, s = shape.factors
    return f"{shape.value} = {r}·{s}"


def in_list1(name):
    name = normalize(name)
    label = render(name)
    l2 = _l2_form(name)
    if name.family is Family.ALTERNATING and name.n == 5:
        return _yes(ListName.LIST1, 1, "A5 = L2(2^2), 2 prime")
    if l2:
        p, s = l2
        if p == 2 and is_prime(s):
            return _yes(ListName.LIST1, 1, f"q = 2^{s}, {s} prime")
        if p == 3 and s % 2 and is_prime(s):
            return _yes(ListName.LIST1, 2, f"q = 3^{s}, {s} odd prime")
        if s == 1 and p > 3 and p % 5 in (2, 3):
            return _yes(ListName.LIST1, 3, f"q = {p} prime, {p} = {'+2' if p % 5 == 2 else '-2'} (mod 5)")
        return _no(f"{label}: q = {p}^{s} matches no List 1 item")
    if name.family is Family.SUZUKI:
        if is_prime(name.s):
            return _yes(ListName.LIST1, 4, f"q = 2^{name.s}, {name.s} odd prime")
        return _no(f"{label}: exponent {name.s} is not prime")
    if name.family is Family.LINEAR and (name.n, name.q) == (3, 3):
        return _yes(ListName.LIST1, 5, "L3(3)")
    return _no(f"{label} is not a minimal simple group")


def in_list3(name):
    name = normalize(name)
    label = render(name)
    if name.family is Family.ALTERNATING and name.n == 6:
        return _yes(ListName.LIST3, 5, "A6 = L2(9)")
    if name.family is Family.UNITARY and (name.n, name.q) == (3, 3):
        return _yes(ListName.LIST3, 5, "U3(3)")
    if name.family is Family.SUZUKI:
        shape = exponent_shape(name.s)
        if _odd_primes(shape):
            return _yes(ListName.LIST3, 5, f"q = 2^{name.s}, {_product(shape)}, r,s odd primes")
        return _no(f"{label}: exponent {name.s} is not a product of two odd primes")
    if name.family is Family.LINEAR and name.n == 2:
        p, s = name.p, name.s
        shape = exponent_shape(s)
        if p == 2 and shape.is_semiprime:
            return _yes(ListName.LIST3, 1, f"q = 2^{s}, {_product(shape)}, r,s prime")
        if p == 3 and _odd_primes(shape):
            return _yes(ListName.LIST3, 2, f"q = 3^{s}, {_product(shape)}, r,s odd primes")
        if s == 1 and p % 5 in (1, 4):
            return _yes(ListName.LIST3, 3, f"q = {p} prime, {p} = {'+1' if p % 5 == 1 else '-1'} (mod 5)")
        if p >= 5 and shape.is_prime and s % 2 and (p == 5 or p % 5 in (2, 3)):
            return _yes(ListName.LIST3, 4, f"q = {p}^{s}, {s} odd prime, p = {p}")
        return _no(f"{label}: q = {p}^{s} matches no List 3 item")
    return _no(f"{label} is not in List 3")


def classify(name):
    """Both verdicts for a name, normalized first."""
    name = normalize(name)
    first, third = in_list1(name), in_list3(name)
    logger.debug(f"{render(name)}: List 1 {first.member}, List 3 {third.member}")
    return name, first, third


if __name__ == "__main__":
    from names import parse_name
    for text in ("L2(7)", "Sz(32)", "L2(64)", "L2(125)", "L2(25)", "A5"):
        name, first, third = classify(parse_name(text))
        print(text, "->", name, first, third)
