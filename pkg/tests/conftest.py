import pytest

from corpus import build_group
from gf import construct
from names import parse_name
from perm import PermGroup, af_closure, element_tuples, parse_cycles


def named(text):
    return construct(parse_name(text))


def all_subgroups(G, limit=200):
    """Every subgroup of G as an element set, built as joins of cyclic subgroups."""
    elems = element_tuples(G, limit)
    one = tuple(range(G.degree))
    cyclic = {}
    for x in sorted(elems):
        cyclic.setdefault(af_closure([x], [one]), x)
    gens = {C: [x] for C, x in cyclic.items()}
    gens[frozenset([one])] = []
    frontier = list(gens)
    while frontier:
        fresh = []
        for H in frontier:
            for C, x in cyclic.items():
                if C <= H:
                    continue
                K = af_closure(gens[H] + [x], H)
                if K not in gens:
                    gens[K] = gens[H] + [x]
                    fresh.append(K)
        frontier = fresh
    return set(gens)


@pytest.fixture
def brute_subgroups():
    return all_subgroups


@pytest.fixture
def s4():
    return named("S4")


@pytest.fixture
def a5():
    return named("A5")


@pytest.fixture
def s5():
    return named("S5")


@pytest.fixture
def a6():
    return named("A6")


@pytest.fixture
def c4():
    return PermGroup([parse_cycles("(1,2,3,4)")], 4)


@pytest.fixture
def c6():
    return PermGroup([parse_cycles("(1,2,3,4,5,6)")], 6)


@pytest.fixture
def q8():
    return build_group("Q8")[0]


@pytest.fixture
def sl25():
    return build_group("SL(2,5)")[0]


@pytest.fixture
def a5xc2():
    return build_group("A5xC2")[0]
