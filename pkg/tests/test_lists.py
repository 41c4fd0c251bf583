import pytest

from errors import NotSimpleNameError
from lists import ListName, Shape, classify, exponent_shape, in_list1, in_list3, is_prime
from names import Family, GroupName, canonical, make_name

LIST1 = [("L2(4)", 1), ("L2(32)", 1), ("L2(128)", 1), ("L2(27)", 2), ("L2(243)", 2), ("L2(7)", 3),
         ("L2(13)", 3), ("L2(17)", 3), ("L2(23)", 3), ("Sz(8)", 4), ("Sz(32)", 4), ("L3(3)", 5), ("A5", 1),
         ("L3(2)", 3)]
LIST3 = [("L2(64)", 1), ("L2(2^4)", 1), ("L2(3^9)", 2), ("L2(11)", 3), ("L2(19)", 3), ("L2(29)", 3),
         ("L2(31)", 3), ("L2(125)", 4), ("L2(7^3)", 4), ("A6", 5), ("L2(9)", 5), ("U3(3)", 5),
         ("Sz(2^9)", 5), ("Sz(2^15)", 5)]
NEITHER = ["L2(25)", "L2(49)", "L2(2^8)", "L2(3^4)", "A7", "A8", "L4(2)", "U4(3)", "L3(4)", "M11", "S4(4)"]


def trial_division(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class TestPrimes:
    def test_examples(self):
        assert is_prime(2)
        assert not is_prime(91)
        assert is_prime(2 ** 31 - 1)
        assert not is_prime(1)

    def test_agrees_with_trial_division(self):
        assert all(is_prime(n) == trial_division(n) for n in range(1, 20001))

    def test_large(self):
        assert is_prime(2 ** 61 - 1)
        assert not is_prime(2 ** 62 - 1)


class TestExponentShape:
    def test_examples(self):
        assert exponent_shape(6).factors == (2, 3)
        assert exponent_shape(6).classification is Shape.SEMIPRIME
        assert exponent_shape(9).factors == (3, 3)
        assert exponent_shape(30).classification is Shape.OTHER
        assert exponent_shape(7).classification is Shape.PRIME
        assert exponent_shape(1).classification is Shape.OTHER

    def test_factors_multiply_back(self):
        for n in range(2, 500):
            shape = exponent_shape(n)
            if shape.is_semiprime:
                r, s = shape.factors
                assert r * s == n


class TestLists:
    @pytest.mark.parametrize("text,item", LIST1)
    def test_list1(self, text, item):
        verdict = in_list1(canonical(text))
        assert verdict.member and verdict.list is ListName.LIST1 and verdict.item == item
        assert not in_list3(canonical(text)).member

    @pytest.mark.parametrize("text,item", LIST3)
    def test_list3(self, text, item):
        verdict = in_list3(canonical(text))
        assert verdict.member and verdict.list is ListName.LIST3 and verdict.item == item
        assert not in_list1(canonical(text)).member

    @pytest.mark.parametrize("text", NEITHER)
    def test_neither(self, text):
        _, first, third = classify(canonical(text))
        assert not first.member and not third.member
        assert first.list is ListName.NONE and first.item is None

    def test_reasons(self):
        assert "6 = 2·3" in in_list3(canonical("L2(2^6)")).reason
        assert "7 = +2 (mod 5)" in in_list1(canonical("L2(7)")).reason

    def test_disjoint_over_small_fields(self):
        checked = 0
        for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
            s = 1
            while p ** s <= 2 ** 25:
                for family, n in ((Family.LINEAR, 2), (Family.SUZUKI, None)):
                    try:
                        name = make_name(family, n=n, q=p ** s)
                    except NotSimpleNameError:
                        continue
                    _, first, third = classify(name)
                    assert not (first.member and third.member)
                    checked += 1
                s += 1
        assert checked > 50

    def test_coincidences_go_through_normalization(self):
        assert in_list3(canonical("L2(3^2)")).item == 5
        assert in_list3(canonical("L2(3^9)")).item == 2
        assert in_list1(GroupName(Family.ALTERNATING, n=5)).item == 1
