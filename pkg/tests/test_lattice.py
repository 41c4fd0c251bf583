import json
import random
from collections import Counter

import pytest

from errors import LatticeError, LimitExceededError, NotNormalError
from lattice import (FactorKind, _maximal_normal, composition_factors, frattini, identify_simple,
                     maximal_subgroups, normal_subgroups, quotient, quotient_element_orders, simple_order_table,
                     subgroup_classes)
from names import render
from perm import (PermGroup, af_closure, af_conj, af_generators, af_inv, element_orders, element_tuples,
                  group_order, is_soluble)


def conjugacy_profile(G, subgroups):
    """Sorted (order, class size) per conjugacy class."""
    elems = element_tuples(G, 200)
    remaining = set(subgroups)
    profile = []
    while remaining:
        H = remaining.pop()
        orbit = {frozenset(af_conj(h, g, af_inv(g)) for h in H) for g in elems}
        remaining -= orbit
        profile.append((len(H), len(orbit)))
    return sorted(profile)


def lattice_profile(lattice):
    return sorted((c.order, c.class_size) for c in lattice.classes)


class TestSubgroupClasses:
    def test_s4(self, s4):
        lattice = subgroup_classes(s4)
        assert len(lattice.classes) == 11
        assert lattice.subgroup_count() == 30

    def test_a5(self, a5):
        lattice = subgroup_classes(a5)
        assert len(lattice.classes) == 9
        assert lattice.subgroup_count() == 59
        assert [c.order for c in lattice.classes] == [1, 2, 3, 4, 5, 6, 10, 12, 60]

    def test_groups_not_generated_by_prime_order_elements(self, c4, q8):
        assert [c.order for c in subgroup_classes(c4).classes] == [1, 2, 4]
        assert [c.order for c in subgroup_classes(q8).classes] == [1, 2, 4, 4, 4, 8]
        assert subgroup_classes(q8).top.representative is q8

    def test_c6(self, c6):
        lattice = subgroup_classes(c6)
        assert [c.order for c in lattice.classes] == [1, 2, 3, 6]
        assert all(c.is_normal for c in lattice.classes)

    def test_s5(self, s5):
        lattice = subgroup_classes(s5)
        assert len(lattice.classes) == 19
        assert lattice.subgroup_count() == 156

    def test_trivial_and_ambient_classes(self, s4):
        lattice = subgroup_classes(s4)
        assert lattice.trivial.order == 1
        assert lattice.top.order == 24
        assert lattice.top.representative is s4

    def test_limit(self, a5):
        with pytest.raises(LimitExceededError, match="order exceeds limit"):
            subgroup_classes(a5, 50)

    def test_trivial_group(self):
        lattice = subgroup_classes(PermGroup([], 3))
        assert len(lattice.classes) == 1
        assert maximal_subgroups(PermGroup([], 3)) == []

    @pytest.mark.parametrize("fixture", ["s4", "a5", "c4", "c6", "q8", "s5", "a5xc2", "sl25"])
    def test_matches_subset_join_enumeration(self, fixture, request, brute_subgroups):
        G = request.getfixturevalue(fixture)
        subgroups = brute_subgroups(G)
        lattice = subgroup_classes(G)
        assert lattice.subgroup_count() == len(subgroups)
        assert lattice_profile(lattice) == conjugacy_profile(G, subgroups)

    def test_lagrange_and_orbit_stabilizer(self, s4):
        lattice = subgroup_classes(s4)
        elems = element_tuples(s4, 24)
        for c in lattice.classes:
            assert 24 % c.order == 0
            normalizer = [g for g in elems if frozenset(af_conj(h, g, af_inv(g)) for h in c.elements) == c.elements]
            assert len(normalizer) == c.normalizer_order
            assert c.class_size * len(normalizer) == 24

    def test_inclusion_respects_divisibility(self, s5):
        lattice = subgroup_classes(s5)
        for i, j in lattice.inclusion:
            assert lattice.classes[j].order % lattice.classes[i].order == 0
            assert lattice.classes[i].order < lattice.classes[j].order

    def test_canonical_order_is_deterministic(self, a5):
        again = subgroup_classes(PermGroup(list(a5.generators), 5))
        assert lattice_profile(again) == lattice_profile(subgroup_classes(a5))
        assert [sorted(c.elements) for c in again.classes] == [sorted(c.elements) for c in subgroup_classes(a5).classes]

    def test_soluble_is_hereditary(self, s4):
        assert all(c.soluble for c in subgroup_classes(s4).classes)

    def test_json_export(self, s4):
        data = subgroup_classes(s4).to_json()
        text = json.dumps(data)
        assert json.loads(text)["order"] == 24
        assert len(data["classes"]) == 11
        assert all(len(pair) == 2 for pair in data["inclusion"])


class TestMaximalAndNormal:
    def test_a5_maximals(self, a5):
        maxes = maximal_subgroups(a5)
        assert sorted(m.order for m in maxes) == [6, 10, 12]
        assert {m.order: m.class_size for m in maxes} == {12: 5, 10: 6, 6: 10}

    def test_s5_maximals(self, s5):
        assert sorted(m.order for m in maximal_subgroups(s5)) == [12, 20, 24, 60]

    def test_sl25_maximals(self, sl25):
        assert sorted(m.order for m in maximal_subgroups(sl25)) == [12, 20, 24]

    def test_cyclic_of_prime_power_order(self, c4):
        assert [m.order for m in maximal_subgroups(c4)] == [2]

    def test_s4_and_c6_maximals(self, s4, c6):
        assert sorted(m.order for m in maximal_subgroups(s4)) == [6, 8, 12]
        assert sorted(m.order for m in maximal_subgroups(c6)) == [2, 3]

    def test_normal_subgroups(self, a5, s4, c6):
        assert [c.order for c in normal_subgroups(a5)] == [1, 60]
        assert [c.order for c in normal_subgroups(s4)] == [1, 4, 12, 24]
        assert len(normal_subgroups(c6)) == 4


class TestFrattini:
    def test_s4(self, s4):
        assert group_order(frattini(s4)) == 1

    def test_q8(self, q8):
        assert group_order(frattini(q8)) == 2

    def test_c4(self, c4):
        assert group_order(frattini(c4)) == 2

    def test_sl25(self, sl25):
        assert group_order(frattini(sl25)) == 2

    def test_nongenerators(self, sl25):
        rng = random.Random(9)
        elems = sorted(element_tuples(sl25, 200))
        phi = element_tuples(frattini(sl25), 200)
        phi_gens = af_generators(phi, sl25.degree)
        one = tuple(range(sl25.degree))
        for _ in range(50):
            S = rng.sample(elems, 2)
            with_phi = af_closure(S + phi_gens, [one])
            if len(with_phi) == 120:
                assert len(af_closure(S, [one])) == 120


class TestQuotient:
    def test_s4_by_v4(self, s4):
        v4 = next(c for c in normal_subgroups(s4) if c.order == 4).representative
        q = quotient(s4, v4)
        assert q.degree == 6
        assert group_order(q) == 6
        assert element_orders(q, 6) == Counter({1: 1, 2: 3, 3: 2})

    def test_by_whole_group(self, s4):
        assert group_order(quotient(s4, s4)) == 1

    def test_sl25_modulo_frattini(self, sl25):
        q = quotient(sl25, frattini(sl25))
        assert group_order(q) == 60
        assert not is_soluble(q)

    def test_not_normal(self, s4):
        c2 = next(c for c in subgroup_classes(s4).classes if c.order == 2 and not c.is_normal)
        with pytest.raises(NotNormalError):
            quotient(s4, c2.representative)

    def test_solubility_splits(self, s4, s5):
        for G, order in ((s4, 4), (s5, 60)):
            N = next(c for c in normal_subgroups(G) if c.order == order).representative
            assert is_soluble(G) == (is_soluble(N) and is_soluble(quotient(G, N)))

    def test_quotient_element_orders(self, s5):
        a5 = next(c for c in normal_subgroups(s5) if c.order == 60).representative
        assert quotient_element_orders(s5, a5) == Counter({1: 1, 2: 1})


class TestCompositionFactors:
    def test_s4(self, s4):
        factors = composition_factors(s4)
        assert [f.order for f in factors] == [2, 3, 2, 2]
        assert all(f.kind is FactorKind.CYCLIC_PRIME for f in factors)

    def test_a5(self, a5):
        factors = composition_factors(a5)
        assert len(factors) == 1
        assert factors[0].kind is FactorKind.IDENTIFIED and factors[0].label == "A5"

    def test_s5(self, s5):
        assert [f.label for f in composition_factors(s5)] == ["C2", "A5"]

    @pytest.mark.parametrize("fixture,labels", [("c4", ["C2", "C2"]), ("q8", ["C2", "C2", "C2"])])
    def test_terminates_on_prime_power_groups(self, fixture, labels, request):
        assert [f.label for f in composition_factors(request.getfixturevalue(fixture))] == labels

    @pytest.mark.parametrize("fixture", ["s4", "s5", "c4", "c6", "q8", "a5xc2", "sl25"])
    def test_jordan_holder(self, fixture, request):
        G = request.getfixturevalue(fixture)
        forward = composition_factors(G)
        backward = composition_factors(G, reverse=True)
        assert Counter(f.label for f in forward) == Counter(f.label for f in backward)
        product = 1
        for f in forward:
            product *= f.order
        assert product == group_order(G)

    def test_no_proper_normal_subgroup(self):
        with pytest.raises(LatticeError):
            _maximal_normal(subgroup_classes(PermGroup([], 3)), reverse=False)

    def test_reverse_changes_the_series(self, a5xc2):
        assert [f.label for f in composition_factors(a5xc2)] == ["C2", "A5"]
        assert [f.label for f in composition_factors(a5xc2, reverse=True)] == ["A5", "C2"]

    @pytest.mark.parametrize("fixture", ["s4", "s5", "a5xc2", "sl25", "q8"])
    def test_soluble_iff_prime_factors(self, fixture, request):
        G = request.getfixturevalue(fixture)
        prime = all(f.kind is FactorKind.CYCLIC_PRIME for f in composition_factors(G))
        assert prime == is_soluble(G)


class TestIdentify:
    def test_prime(self):
        assert identify_simple(7).kind is FactorKind.CYCLIC_PRIME

    def test_unique_orders(self):
        assert render(identify_simple(168).name) == "L2(7)"
        assert render(identify_simple(60).name) == "A5"
        assert render(identify_simple(360).name) == "A6"
        assert render(identify_simple(7920).name) == "M11"
        assert render(identify_simple(29120).name) == "Sz(8)"

    def test_order_20160(self):
        assert render(identify_simple(20160, Counter({15: 2688, 1: 1})).name) == "A8"
        assert render(identify_simple(20160, Counter({7: 5760, 1: 1})).name) == "L3(4)"
        ambiguous = identify_simple(20160)
        assert ambiguous.kind is FactorKind.AMBIGUOUS
        assert sorted(render(c) for c in ambiguous.candidates) == ["A8", "L3(4)"]

    def test_unidentified(self):
        assert identify_simple(1000).kind is FactorKind.UNIDENTIFIED
        assert identify_simple(2 * 10 ** 6).kind is FactorKind.UNIDENTIFIED

    def test_table_has_single_collision(self):
        collisions = [order for order, names in simple_order_table().items() if len(names) > 1]
        assert collisions == [20160]
        assert sorted(simple_order_table())[:5] == [60, 168, 360, 504, 660]
