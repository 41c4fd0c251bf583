"""Permutation groups.

Elements are sympy ``Permutation`` objects (0-based internally, 1-based in every
text format).  Products apply the left factor first: ``compose(p, q)`` maps
``i`` to ``q(p(i))``, which is also sympy's ``p*q``.

Order, membership and stabilizer chains come from sympy's Schreier-Sims.  The
exhaustive routines (``elements`` and the ``af_*`` helpers) work on plain tuples
of images and serve the subgroup lattice and the test oracles.
"""
import logging
import re
import threading
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import lcm

from sympy.combinatorics import Permutation, PermutationGroup

from errors import CycleFormatError, DegreeMismatchError, LimitExceededError, NotInGroupError

logger = logging.getLogger(__name__)

_CYCLE = re.compile(r"\(([^()]*)\)")


def identity(degree):
    return Permutation(list(range(degree)))


def from_images(images, one_based=True):
    images = [int(x) - 1 for x in images] if one_based else [int(x) for x in images]
    if sorted(images) != list(range(len(images))):
        raise CycleFormatError(f"not a bijection: {images}")
    return Permutation(images)


def images(p):
    return [x + 1 for x in p.array_form]


def _check_degrees(p, q):
    if p.size != q.size:
        raise DegreeMismatchError(f"degree mismatch: {p.size} != {q.size}")


def compose(p, q):
    _check_degrees(p, q)
    return p * q


def inverse(p):
    return ~p


def commutator(a, b):
    return ~a * ~b * a * b


# --- array-form helpers -----------------------------------------------------

def af_mul(a, b):
    return tuple([b[x] for x in a])


def af_inv(a):
    result = [0] * len(a)
    for i, x in enumerate(a):
        result[x] = i
    return tuple(result)


def af_conj(h, g, g_inv):
    """g^-1 h g."""
    return tuple([g[h[x]] for x in g_inv])


def af_order(a):
    seen = [False] * len(a)
    order = 1
    for start in range(len(a)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = a[x]
            length += 1
        order = lcm(order, length)
    return order


def af_closure(generators, seed):
    """Subgroup generated by ``seed`` (a subgroup, as a set) and ``generators``."""
    found = set(seed)
    frontier = list(found)
    while frontier:
        fresh = []
        for x in frontier:
            for g in generators:
                y = tuple([g[i] for i in x])
                if y not in found:
                    found.add(y)
                    fresh.append(y)
        frontier = fresh
    return frozenset(found)


def af_generators(elements, degree):
    """Greedy generating set of a subgroup given as a set of tuples."""
    cur = frozenset([tuple(range(degree))])
    gens = []
    for x in sorted(elements):
        if x not in cur:
            gens.append(x)
            cur = af_closure(gens, cur)
            if len(cur) == len(elements):
                break
    return gens


# --- groups -----------------------------------------------------------------

class PermGroup:
    """Group generated by permutations of {1..degree}.

    Derived data (order, stabilizer chain, element set, subgroup lattice) is
    cached on first use; the cache is guarded so concurrent callers on the
    same group see one computation.
    """

    def __init__(self, generators=(), degree=None):
        generators = list(generators)
        if degree is None:
            if not generators:
                raise ValueError("degree required for a group without generators")
            degree = generators[0].size
        for g in generators:
            if g.size != degree:
                raise DegreeMismatchError(f"generator of degree {g.size} in a group of degree {degree}")
        self.degree = degree
        self.generators = tuple(g for g in generators if not g.is_Identity)
        self._lock = threading.RLock()
        self._cache = {}

    @classmethod
    def from_tuples(cls, generators, degree, elements=None):
        group = cls([Permutation(list(g)) for g in generators], degree)
        if elements is not None:
            group._cache["elements"] = frozenset(elements)
            group._cache["order"] = len(elements)
        return group

    @classmethod
    def from_elements(cls, elements, degree):
        return cls.from_tuples(af_generators(elements, degree), degree, elements)

    def cached(self, key, factory):
        with self._lock:
            if key not in self._cache:
                self._cache[key] = factory()
            return self._cache[key]

    def as_sympy(self):
        return self.cached("sympy", lambda: PermutationGroup(list(self.generators) or [identity(self.degree)]))

    @property
    def gen_tuples(self):
        return [tuple(g.array_form) for g in self.generators]

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, generators={len(self.generators)})"


def group_order(G):
    def compute():
        group = G.as_sympy()
        group.schreier_sims()
        order = int(group.order())
        logger.debug(f"Schreier-Sims: degree {G.degree}, base {group.base}, order {order}")
        return order
    return G.cached("order", compute)


def stabilizer_chain(G):
    """(base points, basic orbit lengths), 1-based points."""
    def compute():
        group = G.as_sympy()
        group.schreier_sims()
        return [b + 1 for b in group.base], [len(orbit) for orbit in group.basic_orbits]
    return G.cached("chain", compute)


def contains(G, p):
    if p.size != G.degree:
        raise DegreeMismatchError(f"degree mismatch: {p.size} != {G.degree}")
    if p.is_Identity:
        return True
    with G._lock:
        return bool(G.as_sympy().contains(p))


def normal_closure(G, S):
    gens = []
    for s in S:
        if not contains(G, s):
            raise NotInGroupError(f"{format_cycles(s)} is not an element of the group")
        if not s.is_Identity:
            gens.append(s)
    if not gens:
        return PermGroup([], G.degree)
    closure = PermutationGroup(gens)
    changed = True
    while changed:
        changed = False
        for z in list(closure.generators):
            for g in G.generators:
                c = ~g * z * g
                if not closure.contains(c):
                    gens.append(c)
                    closure = PermutationGroup(gens)
                    changed = True
    return PermGroup(gens, G.degree)


@dataclass(frozen=True)
class SeriesStep:
    subgroup: PermGroup
    order: int


def derived_series(G):
    def compute():
        current = G
        series = [SeriesStep(G, group_order(G))]
        while series[-1].order > 1:
            commutators = [commutator(a, b) for a, b in combinations(current.generators, 2)]
            derived = normal_closure(current, commutators)
            step = SeriesStep(derived, group_order(derived))
            series.append(step)
            if step.order == series[-2].order:
                break
            current = derived
        logger.debug(f"Derived series orders: {[s.order for s in series]}")
        return series
    return G.cached("derived_series", compute)


def is_soluble(G):
    return derived_series(G)[-1].order == 1


def element_tuples(G, limit):
    order = group_order(G)
    if order > limit:
        raise LimitExceededError(f"order exceeds limit: {order} > {limit}")
    return G.cached("elements", lambda: af_closure(G.gen_tuples, [tuple(range(G.degree))]))


def elements(G, limit):
    return {Permutation(list(x)) for x in element_tuples(G, limit)}


def element_orders(G, limit):
    return Counter(af_order(x) for x in element_tuples(G, limit))


def direct_product(G, H):
    """G x H acting on the disjoint union of their points (G first)."""
    degree = G.degree + H.degree
    gens = [Permutation(g.array_form + list(range(G.degree, degree))) for g in G.generators]
    gens += [Permutation(list(range(G.degree)) + [x + G.degree for x in h.array_form]) for h in H.generators]
    return PermGroup(gens, degree)


# --- text formats -----------------------------------------------------------

def _parse_cycle_list(text):
    text = "".join(text.split())
    if not text:
        raise CycleFormatError("empty permutation")
    if _CYCLE.sub("", text):
        raise CycleFormatError(f"unparsable cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE.findall(text):
        if not body:
            continue
        try:
            points = [int(x) for x in body.split(",")]
        except ValueError:
            raise CycleFormatError(f"bad point in cycle ({body})")
        if min(points) < 1 or len(set(points)) != len(points):
            raise CycleFormatError(f"invalid cycle ({body})")
        cycles.append(points)
    return cycles


def _cycles_to_perm(cycles, degree):
    result = list(range(degree))
    for cycle in cycles:
        if max(cycle) > degree:
            raise CycleFormatError(f"point {max(cycle)} exceeds degree {degree}")
        step = list(range(degree))
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            step[a - 1] = b - 1
        result = [step[x] for x in result]
    return Permutation(result)


def parse_cycles(text, degree=None):
    """``(1,2,3)(4,5)`` -> Permutation; ``()`` is the identity."""
    cycles = _parse_cycle_list(text)
    if degree is None:
        degree = max((max(c) for c in cycles), default=1)
    return _cycles_to_perm(cycles, degree)


def format_cycles(p):
    af = p.array_form
    seen = set()
    out = []
    for start in range(len(af)):
        if start in seen or af[start] == start:
            continue
        cycle = [start]
        x = af[start]
        while x != start:
            seen.add(x)
            cycle.append(x)
            x = af[x]
        out.append("(" + ",".join(str(i + 1) for i in cycle) + ")")
    return "".join(out) or "()"


def parse_generators(text):
    """Generator file: one permutation per line, ``#`` comments, optional ``degree N``."""
    degree = None
    parsed = []
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("degree"):
            try:
                degree = int(line.split()[1])
            except (IndexError, ValueError):
                raise CycleFormatError(f"line {number}: bad degree header {raw!r}")
            if degree < 1:
                raise CycleFormatError(f"line {number}: degree must be positive")
            continue
        try:
            parsed.append(_parse_cycle_list(line))
        except CycleFormatError as e:
            raise CycleFormatError(f"line {number}: {e}")
    if degree is None:
        degree = max((max(c) for cycles in parsed for c in cycles), default=1)
    return PermGroup([_cycles_to_perm(cycles, degree) for cycles in parsed], degree)


def read_generator_file(path):
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as e:
        logger.error(f"Error reading generator file {path}: {e}")
        raise CycleFormatError(f"cannot read {path}: {e}")
    return parse_generators(text)


def format_generators(G, header=None):
    lines = [f"# {key}: {value}" for key, value in (header or {}).items()]
    lines.append(f"degree {G.degree}")
    lines.extend(format_cycles(g) for g in G.generators)
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    a5 = PermGroup([parse_cycles("(1,2,3)", 5), parse_cycles("(1,2,3,4,5)")])
    print("A5 order:", group_order(a5))
    print("Contains (1,2)(3,4):", contains(a5, parse_cycles("(1,2)(3,4)", 5)))
    print("Derived series:", [s.order for s in derived_series(a5)])
