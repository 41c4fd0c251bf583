import json

import pytest

from errors import LimitExceededError
from gf import construct
from lattice import maximal_subgroups, normal_subgroups, subgroup_classes
from lists import in_list1, in_list3
from names import canonical, parse_name
from perm import PermGroup, group_order, is_soluble
from verdict import CASE3_NOTE, Case, condition_holds, corollary_check, cross_validate, theorem_case, verify


def named(text):
    return construct(parse_name(text))


def literal_condition(G, subgroups):
    """Every proper subgroup of every maximal subgroup is soluble, read off the full subgroup set."""
    whole = max(subgroups, key=len)
    maximals = [M for M in subgroups if M != whole and not any(M < T < whole for T in subgroups)]
    soluble = {}
    for M in maximals:
        for K in subgroups:
            if K < M and K not in soluble:
                soluble[K] = is_soluble(PermGroup.from_elements(K, G.degree))
            if K < M and not soluble[K]:
                return False
    return True


class TestCondition:
    def test_a5_and_s5_hold(self, a5, s5):
        assert condition_holds(a5).holds
        report = condition_holds(s5)
        assert report.holds and report.witness is None

    def test_s6_fails(self):
        report = condition_holds(named("S6"))
        assert not report.holds
        assert report.witness.subgroup_order == 60

    @pytest.mark.slow
    def test_a7_fails(self):
        report = condition_holds(named("A7"), 2600)
        assert not report.holds
        assert report.witness.subgroup_order == 60
        assert report.witness.maximal_order in (120, 360)

    @pytest.mark.parametrize("fixture", ["s4", "a5", "s5", "c4", "q8", "sl25", "a5xc2"])
    def test_two_levels_match_literal_definition(self, fixture, request, brute_subgroups):
        G = request.getfixturevalue(fixture)
        assert condition_holds(G).holds == literal_condition(G, brute_subgroups(G))

    def test_literal_definition_on_l2_7(self, brute_subgroups):
        G = named("L2(7)")
        assert condition_holds(G).holds == literal_condition(G, brute_subgroups(G)) is True


class TestTheoremCase:
    def test_soluble(self, s4):
        assert theorem_case(s4).case is Case.SOLUBLE

    @pytest.mark.parametrize("fixture", ["c4", "q8"])
    def test_soluble_prime_power_groups(self, fixture, request):
        assert theorem_case(request.getfixturevalue(fixture)).case is Case.SOLUBLE

    @pytest.mark.parametrize("text", ["A5", "L2(7)", "L2(8)"])
    def test_case2_simple(self, text):
        G = named(text)
        report = theorem_case(G)
        assert report.case is Case.MINIMAL_SIMPLE_QUOTIENT
        assert report.frattini_order == 1
        assert all(M.soluble for M in maximal_subgroups(G))
        assert in_list1(canonical(report.quotient_name)).member

    def test_case2_sl25(self, sl25):
        report = theorem_case(sl25)
        assert report.case is Case.MINIMAL_SIMPLE_QUOTIENT
        assert report.frattini_order == 2
        assert report.quotient_order == 60
        assert report.quotient_name == "A5"
        assert report.list_item == 1

    @pytest.mark.parametrize("fixture", ["s5", "a5xc2"])
    def test_case3(self, fixture, request):
        G = request.getfixturevalue(fixture)
        report = theorem_case(G)
        assert report.case is Case.PRIME_INDEX_SUBGROUP
        assert report.subgroup_order == 60 and report.subgroup_index == 2
        assert report.quotient_name == "A5"
        assert report.note == CASE3_NOTE
        assert any(c.order == 60 for c in normal_subgroups(G))

    def test_case3_logs_reading_note(self, s5, caplog):
        with caplog.at_level("WARNING"):
            theorem_case(s5)
        assert "Case 3 reading" in caplog.text

    def test_case4_a6(self, a6):
        report = theorem_case(a6)
        assert report.case is Case.LIST3_QUOTIENT
        assert report.quotient_name == "A6" and report.list_item == 5

    def test_case4_l2_11(self):
        report = theorem_case(named("L2(11)"))
        assert report.case is Case.LIST3_QUOTIENT
        assert report.quotient_name == "L2(11)" and report.list_item == 3
        assert in_list3(canonical("L2(11)")).member

    def test_violation(self):
        report = theorem_case(named("S6"))
        assert report.case is Case.VIOLATION
        assert report.details()["holds"] is False
        assert "witness" in report.details()

    @pytest.mark.slow
    def test_l2_13_is_minimal_simple(self):
        assert theorem_case(named("L2(13)")).case is Case.MINIMAL_SIMPLE_QUOTIENT

    @pytest.mark.slow
    def test_a7_violation(self):
        assert theorem_case(named("A7"), 2600).case is Case.VIOLATION

    @pytest.mark.parametrize("fixture", ["s4", "a5", "s5", "a6", "sl25", "a5xc2"])
    def test_partition(self, fixture, request):
        G = request.getfixturevalue(fixture)
        assert (theorem_case(G).case is Case.VIOLATION) == (not condition_holds(G).holds)


class TestCorollary:
    @pytest.mark.parametrize("fixture,labels", [
        ("s5", ["C2", "A5"]),
        ("sl25", ["A5", "C2"]),
        ("a5xc2", ["C2", "A5"]),
    ])
    def test_conforming(self, fixture, labels, request):
        report = corollary_check(request.getfixturevalue(fixture))
        assert report.second_maximal_soluble
        assert sorted(f.label for f in report.factors) == sorted(labels)
        assert report.conforming

    @pytest.mark.parametrize("fixture,labels", [
        ("c4", ["C2", "C2"]),
        ("q8", ["C2", "C2", "C2"]),
        ("s4", ["C2", "C3", "C2", "C2"]),
    ])
    def test_soluble_groups(self, fixture, labels, request):
        report = corollary_check(request.getfixturevalue(fixture))
        assert report.second_maximal_soluble and report.conforming
        assert sorted(f.label for f in report.factors) == sorted(labels)

    def test_s6(self):
        report = corollary_check(named("S6"))
        assert not report.second_maximal_soluble
        assert report.conforming is None

    @pytest.mark.slow
    def test_a7(self):
        assert not corollary_check(named("A7"), 2600).second_maximal_soluble


class TestCrossValidate:
    @pytest.mark.parametrize("text", ["L2(4)", "L2(7)", "L2(9)", "L2(8)", "L2(11)"])
    def test_agrees(self, text):
        assert cross_validate(parse_name(text))

    @pytest.mark.slow
    @pytest.mark.parametrize("text,limit", [("L2(13)", 2000), ("A7", 2600)])
    def test_agrees_on_larger_groups(self, text, limit):
        assert cross_validate(parse_name(text), limit)

    def test_over_limit(self):
        with pytest.raises(LimitExceededError):
            cross_validate(parse_name("A7"), 2000)


class TestReport:
    def test_schema(self, a6):
        result = verify(a6, "A6", parse_name("A6"))
        data = json.loads(json.dumps(result.to_json()))
        assert set(data) == {"input", "normalized_name", "degree", "order", "condition", "case",
                             "case_details", "corollary", "timings"}
        assert data["case"] == 4
        assert data["condition"] == {"holds": True}
        assert data["corollary"]["conforming"] is True
        assert set(data["timings"]) == {"order", "lattice", "condition", "case", "corollary"}

    @pytest.mark.parametrize("fixture,order", [("c4", 4), ("q8", 8), ("s4", 24)])
    def test_soluble_groups(self, fixture, order, request):
        data = verify(request.getfixturevalue(fixture), fixture).to_json()
        assert (data["order"], data["case"]) == (order, 1)
        assert data["condition"] == {"holds": True}
        assert data["corollary"]["conforming"] is True

    def test_normalized_name(self):
        result = verify(named("L2(9)"), "L2(9)", parse_name("L2(9)"))
        assert result.normalized_name == "A6"

    def test_over_limit(self, a6):
        with pytest.raises(LimitExceededError):
            verify(a6, "A6", limit=100)
