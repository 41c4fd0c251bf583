"""Subgroup lattices of small permutation groups.

Subgroups are found up to conjugacy by cyclic extension: starting from the
trivial group, each class representative H is joined with one cyclic subgroup
not contained in H (one per orbit of its normalizer on the cyclic subgroups)
and closed.  A non-cyclic subgroup is the join of a maximal subgroup of it and
one cyclic subgroup, so the search reaches every class.  All work is on element
sets (``perm.element_tuples``), which bounds the method to a few thousand
elements.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import count
from math import gcd
from typing import Optional, Tuple

from sympy import primefactors

import config
from errors import LatticeError, LimitExceededError, NotNormalError, NotSimpleNameError
from gf import SPORADIC_ORDERS, TITS_ORDER, expected_order
from lists import is_prime
from names import Family, GroupName, make_name, normalize, render
from perm import (PermGroup, af_closure, af_conj, af_generators, af_inv, af_mul,
                  element_tuples, group_order, is_soluble)

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class SubgroupClass:
    index: int
    representative: PermGroup
    order: int
    class_size: int
    is_normal: bool
    is_maximal: bool
    soluble: bool
    elements: frozenset = field(repr=False)
    conjugates: Tuple[frozenset, ...] = field(repr=False)
    ambient_order: int = field(default=0, repr=False)

    @property
    def normalizer_order(self):
        return self.ambient_order // self.class_size

    def to_json(self):
        return {
            "index": self.index,
            "order": self.order,
            "class_size": self.class_size,
            "is_normal": self.is_normal,
            "is_maximal": self.is_maximal,
            "soluble": self.soluble,
        }


@dataclass(eq=False)
class SubgroupLattice:
    ambient: PermGroup
    order: int
    classes: list
    inclusion: frozenset  # (i, j): class i lies in some conjugate of class j, i != j

    @property
    def trivial(self):
        return self.classes[0]

    @property
    def top(self):
        return self.classes[-1]

    def above(self, i):
        return [j for j in range(len(self.classes)) if (i, j) in self.inclusion]

    def below(self, j):
        return [i for i in range(len(self.classes)) if (i, j) in self.inclusion]

    def subgroup_count(self):
        return sum(c.class_size for c in self.classes)

    def to_json(self):
        return {
            "degree": self.ambient.degree,
            "order": self.order,
            "classes": [c.to_json() for c in self.classes],
            "inclusion": sorted([i, j] for i, j in self.inclusion),
        }


@dataclass
class _Record:
    elements: frozenset
    gens: list
    orbit: dict  # conjugate -> conjugator x with conjugate = x^-1 H x


def _cyclic_representatives(elems):
    """Map each non-identity element to the least generator of its cyclic subgroup."""
    one = tuple(range(len(next(iter(elems)))))
    canon = {}
    for x in sorted(elems):
        if x in canon or x == one:
            continue
        powers = [x]
        y = af_mul(x, x)
        while y != one:
            powers.append(y)
            y = af_mul(y, x)
        n = len(powers) + 1
        generators = [powers[k - 1] for k in range(1, n) if gcd(k, n) == 1]
        least = min(generators)
        for y in generators:
            canon[y] = least
    return canon


def _enumerate(G, elems):
    one = tuple(range(G.degree))
    g_gens = [(g, af_inv(g)) for g in G.gen_tuples]
    inverse = {x: af_inv(x) for x in elems}
    canon = _cyclic_representatives(elems)
    cyclic_reps = sorted(set(canon.values()))
    ordered = sorted(elems)

    records = []
    seen = {}

    def register(subgroup, gens):
        orbit = {subgroup: one}
        frontier = [subgroup]
        while frontier:
            fresh = []
            for K in frontier:
                x = orbit[K]
                for g, g_inv in g_gens:
                    L = frozenset(af_conj(h, g, g_inv) for h in K)
                    if L not in orbit:
                        orbit[L] = af_mul(x, g)
                        fresh.append(L)
            frontier = fresh
        for K in orbit:
            seen[K] = len(records)
        records.append(_Record(subgroup, gens, orbit))

    register(frozenset([one]), [])
    i = 0
    while i < len(records):
        rec = records[i]
        i += 1
        H = rec.elements
        if len(H) == len(elems):
            continue
        if len(rec.orbit) == 1:
            n_gens = [g for g, _ in g_gens]
        else:
            normalizer = frozenset(x for x in ordered
                                   if all(af_conj(h, x, inverse[x]) in H for h in rec.gens))
            n_gens = af_generators(normalizer, G.degree)
        visited = set()
        for c in cyclic_reps:
            if c in H or c in visited:
                continue
            orbit = [c]
            visited.add(c)
            for y in orbit:
                for n in n_gens:
                    z = canon[af_conj(y, n, inverse[n])]
                    if z not in visited:
                        visited.add(z)
                        orbit.append(z)
            K = af_closure(rec.gens + [c], H)
            if K not in seen:
                register(K, rec.gens + [c])
    return records


def _build_lattice(G):
    order = group_order(G)
    elems = element_tuples(G, order)
    records = _enumerate(G, elems)

    staged = []
    for rec in records:
        best = min(rec.orbit, key=lambda K: tuple(sorted(K)))
        x = rec.orbit[best]
        x_inv = af_inv(x)
        gens = [af_conj(h, x, x_inv) for h in rec.gens]
        staged.append((len(best), tuple(sorted(best)), best, gens, tuple(rec.orbit)))
    staged.sort(key=lambda item: (item[0], item[1]))
    if staged[-1][0] != order:
        logger.error(f"Subgroup search stopped at order {staged[-1][0]} in a group of order {order}")
        raise LatticeError(f"subgroup search did not reach the whole group (order {order})")

    inclusion = set()
    for j, (big_order, _, _, _, big_conjugates) in enumerate(staged):
        for i, (small_order, _, small, _, _) in enumerate(staged[:j]):
            if small_order == big_order or big_order % small_order:
                continue
            if any(small <= K for K in big_conjugates):
                inclusion.add((i, j))

    top = len(staged) - 1
    classes = []
    for i, (sub_order, _, subset, gens, conjugates) in enumerate(staged):
        rep = G if i == top else PermGroup.from_tuples(gens, G.degree, subset)
        maximal = i != top and all(j == top for j in range(len(staged)) if (i, j) in inclusion)
        classes.append(SubgroupClass(
            index=i,
            representative=rep,
            order=sub_order,
            class_size=len(conjugates),
            is_normal=len(conjugates) == 1,
            is_maximal=maximal,
            soluble=is_soluble(rep),
            elements=subset,
            conjugates=conjugates,
            ambient_order=order,
        ))
    lattice = SubgroupLattice(G, order, classes, frozenset(inclusion))
    logger.debug(f"Lattice of order {order}: {len(classes)} classes, "
                 f"{lattice.subgroup_count()} subgroups, {len(inclusion)} inclusions")
    return lattice


def subgroup_classes(G, limit=config.DEFAULT_ORDER_LIMIT):
    order = group_order(G)
    if order > limit:
        raise LimitExceededError(f"order exceeds limit: {order} > {limit}")
    return G.cached("lattice", lambda: _build_lattice(G))


def maximal_subgroups(G, limit=config.DEFAULT_ORDER_LIMIT):
    return [c for c in subgroup_classes(G, limit).classes if c.is_maximal]


def normal_subgroups(G, limit=config.DEFAULT_ORDER_LIMIT):
    return [c for c in subgroup_classes(G, limit).classes if c.is_normal]


def is_simple(G, limit=config.DEFAULT_ORDER_LIMIT):
    return group_order(G) > 1 and len(normal_subgroups(G, limit)) == 2


def frattini(G, limit=config.DEFAULT_ORDER_LIMIT):
    """Intersection of every conjugate of every maximal subgroup."""
    def compute():
        lattice = subgroup_classes(G, limit)
        result = None
        for c in lattice.classes:
            if not c.is_maximal:
                continue
            for K in c.conjugates:
                result = K if result is None else result & K
        if result is None:
            result = lattice.top.elements
        logger.debug(f"Frattini subgroup of a group of order {lattice.order} has order {len(result)}")
        return PermGroup.from_elements(result, G.degree)
    return G.cached("frattini", compute)


def _check_normal(G, N, limit):
    elems = element_tuples(G, limit)
    n_elems = element_tuples(N, limit)
    if N.degree != G.degree or not n_elems <= elems:
        raise NotNormalError("not a subgroup of the ambient group")
    for g in G.gen_tuples:
        g_inv = af_inv(g)
        for n in N.gen_tuples:
            if af_conj(n, g, g_inv) not in n_elems:
                raise NotNormalError("subgroup is not normal")
    return elems, n_elems


def quotient(G, N, limit=config.DEFAULT_ORDER_LIMIT):
    """G acting on the right cosets of N, cosets indexed by their least element."""
    elems, n_elems = _check_normal(G, N, limit)
    index = len(elems) // len(n_elems)
    if index > config.QUOTIENT_DEGREE_LIMIT:
        raise LimitExceededError(f"index {index} exceeds quotient degree limit {config.QUOTIENT_DEGREE_LIMIT}")
    coset_of = {}
    reps = []
    for x in sorted(elems):
        if x in coset_of:
            continue
        for n in n_elems:
            coset_of[af_mul(n, x)] = len(reps)
        reps.append(x)
    gens = [tuple(coset_of[af_mul(r, g)] for r in reps) for g in G.gen_tuples]
    gens = [g for g in gens if g != tuple(range(index))]
    logger.debug(f"Quotient by a normal subgroup of order {len(n_elems)}: {index} cosets")
    return PermGroup.from_tuples(gens, index)


def quotient_element_orders(G, N, limit=config.DEFAULT_ORDER_LIMIT):
    """Element orders of G/N, one entry per coset."""
    elems, n_elems = _check_normal(G, N, limit)
    done = set()
    orders = Counter()
    for x in sorted(elems):
        if x in done:
            continue
        done.update(af_mul(n, x) for n in n_elems)
        k, y = 1, x
        while y not in n_elems:
            y = af_mul(y, x)
            k += 1
        orders[k] += 1
    return orders


# --- simple factors ---------------------------------------------------------

class FactorKind(Enum):
    CYCLIC_PRIME = "cyclic_prime"
    IDENTIFIED = "identified"
    AMBIGUOUS = "ambiguous"
    UNIDENTIFIED = "unidentified"


@dataclass(frozen=True)
class FactorDescriptor:
    order: int
    kind: FactorKind
    name: Optional[GroupName] = None
    candidates: Tuple[GroupName, ...] = ()
    element_orders: Tuple[Tuple[int, int], ...] = ()

    @property
    def label(self):
        if self.name is not None:
            return render(self.name)
        return f"?{self.order}"

    def to_json(self):
        data = {"order": self.order, "kind": self.kind.value, "name": self.label}
        if self.candidates:
            data["candidates"] = [render(c) for c in self.candidates]
        if self.element_orders:
            data["element_orders"] = {str(k): v for k, v in self.element_orders}
        return data


def _prime_powers():
    for q in count(2):
        if len(primefactors(q)) == 1:
            yield q


_RANKED_FAMILIES = (
    (Family.LINEAR, range(2, 10)),
    (Family.UNITARY, range(3, 10)),
    (Family.SYMPLECTIC, range(4, 12, 2)),
    (Family.ORTHOGONAL_ODD, range(7, 12, 2)),
    (Family.ORTHOGONAL_PLUS, range(8, 12, 2)),
    (Family.ORTHOGONAL_MINUS, range(8, 12, 2)),
)
_UNRANKED_FAMILIES = (
    Family.G2, Family.F4, Family.E6, Family.E7, Family.E8, Family.SUZUKI,
    Family.REE_G2, Family.REE_F4, Family.TRIALITY_D4, Family.TWISTED_E6,
)


def _add(table, family, n=None, q=None, label=None):
    try:
        name = normalize(make_name(family, n=n, q=q, label=label))
    except NotSimpleNameError:
        return
    entries = table.setdefault(expected_order(name), [])
    if name not in entries:
        entries.append(name)


@lru_cache(maxsize=None)
def simple_order_table(bound=config.IDENTIFY_ORDER_BOUND):
    """order -> names of the nonabelian simple groups of that order, up to ``bound``."""
    table = {}
    for n in count(5):
        if expected_order(GroupName(Family.ALTERNATING, n=n)) > bound:
            break
        _add(table, Family.ALTERNATING, n=n)
    families = [(f, n) for f, ns in _RANKED_FAMILIES for n in ns] + [(f, None) for f in _UNRANKED_FAMILIES]
    for family, n in families:
        for q in _prime_powers():
            if expected_order(GroupName(family, n=n, q=q)) > bound:
                break
            _add(table, family, n=n, q=q)
    for label, order in SPORADIC_ORDERS.items():
        if order <= bound:
            table.setdefault(order, []).append(GroupName(Family.SPORADIC, label=label))
    if TITS_ORDER <= bound:
        table.setdefault(TITS_ORDER, []).append(GroupName(Family.TITS))
    logger.debug(f"Simple order table up to {bound}: {len(table)} orders")
    return {order: tuple(sorted(names, key=render)) for order, names in table.items()}


def identify_simple(order, element_orders=None):
    orders = tuple(sorted((element_orders or {}).items()))
    if is_prime(order):
        return FactorDescriptor(order, FactorKind.CYCLIC_PRIME, make_name(Family.CYCLIC, n=order))
    if order > config.IDENTIFY_ORDER_BOUND:
        return FactorDescriptor(order, FactorKind.UNIDENTIFIED, element_orders=orders)
    candidates = simple_order_table().get(order, ())
    if not candidates:
        return FactorDescriptor(order, FactorKind.UNIDENTIFIED, element_orders=orders)
    if len(candidates) == 1:
        return FactorDescriptor(order, FactorKind.IDENTIFIED, candidates[0], element_orders=orders)
    if order == 20160 and element_orders:
        alternating = 15 in element_orders
        name = next(c for c in candidates if (c.family is Family.ALTERNATING) == alternating)
        return FactorDescriptor(order, FactorKind.IDENTIFIED, name, candidates, orders)
    logger.warning(f"Order {order} matches {len(candidates)} simple groups; left ambiguous")
    return FactorDescriptor(order, FactorKind.AMBIGUOUS, candidates=candidates, element_orders=orders)


def _maximal_normal(lattice, reverse):
    proper = [c for c in lattice.classes if c.is_normal and c.order < lattice.order]
    if not proper:
        raise LatticeError(f"no proper normal subgroup in a group of order {lattice.order}")
    maximal = [c for c in proper if not any(c.elements < d.elements for d in proper)]
    if reverse:
        return min(maximal, key=lambda c: (c.order, -c.index))
    return max(maximal, key=lambda c: (c.order, -c.index))


def composition_factors(G, limit=config.DEFAULT_ORDER_LIMIT, reverse=False):
    """Factors of a composition series, top first.

    Each step takes a maximal normal proper subgroup: the largest one (earliest
    in canonical order on ties), or with ``reverse`` the smallest one (latest
    on ties).
    """
    factors = []
    current = G
    while True:
        order = group_order(current)
        if order == 1:
            break
        if is_prime(order):
            factors.append(identify_simple(order))
            break
        lattice = subgroup_classes(current, limit)
        chosen = _maximal_normal(lattice, reverse)
        if chosen.order >= order or group_order(chosen.representative) != chosen.order:
            raise LatticeError(f"no proper normal subgroup below order {order}")
        index = order // chosen.order
        if is_prime(index):
            factors.append(identify_simple(index))
        else:
            factors.append(identify_simple(index, quotient_element_orders(current, chosen.representative, limit)))
        current = chosen.representative
    logger.debug(f"Composition factors: {[f.label for f in factors]}")
    return factors
