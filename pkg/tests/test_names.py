import random

import pytest

from errors import GroupNameError, NotPrimePowerError, NotSimpleNameError, ParameterOverflowError
from names import Family, canonical, make_name, normalize, parse_name, render


class TestParse:
    def test_suzuki(self):
        name = parse_name("Sz(32)")
        assert (name.family, name.q, name.p, name.s) == (Family.SUZUKI, 32, 2, 5)

    def test_power_notation(self):
        name = parse_name("L2(2^6)")
        assert (name.family, name.n, name.q, name.p, name.s) == (Family.LINEAR, 2, 64, 2, 6)

    def test_not_prime_power(self):
        with pytest.raises(NotPrimePowerError, match="not a prime power"):
            parse_name("L2(6)")

    def test_symmetric_versus_symplectic(self):
        assert parse_name("S5").family is Family.SYMMETRIC
        assert parse_name("S4(4)").family is Family.SYMPLECTIC

    def test_tits_and_sporadic(self):
        assert parse_name("2F4(2)'").family is Family.TITS
        assert parse_name("M11").label == "M11"
        assert parse_name("ON").label == "O'N"

    def test_orthogonal_signs(self):
        assert parse_name("O8+(3)").family is Family.ORTHOGONAL_PLUS
        assert parse_name("O7(3)").family is Family.ORTHOGONAL_ODD
        with pytest.raises(GroupNameError):
            parse_name("O8(3)")

    @pytest.mark.parametrize("text", [
        "L2(2)", "L2(3)", "U3(2)", "S4(2)", "S4(3)", "A4", "G2(2)", "Sz(2)", "Sz(2^4)", "2G2(3)", "2F4(2)",
        "U2(4)", "S3(4)", "O6+(2)", "C6",
    ])
    def test_domain_exclusions(self, text):
        with pytest.raises(NotSimpleNameError, match="not a simple-group name"):
            parse_name(text)

    @pytest.mark.parametrize("text", ["", "L(4)", "X5", "L2()", "L2(4", "Sz(2^x)"])
    def test_unparsable(self, text):
        with pytest.raises(GroupNameError):
            parse_name(text)

    def test_overflow(self):
        with pytest.raises(ParameterOverflowError):
            parse_name("L2(2^63)")
        with pytest.raises(ParameterOverflowError):
            parse_name("L2(9223372036854775808)")


class TestNormalize:
    def test_coincidences(self):
        assert render(canonical("L2(9)")) == "A6"
        assert render(canonical("L4(2)")) == "A8"
        assert render(canonical("L2(4)")) == "A5"
        assert render(canonical("L2(5)")) == "A5"
        assert render(canonical("L3(2)")) == "L2(7)"
        assert render(canonical("Sz(8)")) == "Sz(8)"

    def test_idempotent(self):
        for text in ("L2(4)", "L3(2)", "L2(9)", "U3(3)", "A7"):
            once = canonical(text)
            assert normalize(once) == once

    def test_raw_is_kept(self):
        assert canonical("L2(9)").raw == "L2(9)"


class TestRender:
    def test_examples(self):
        assert render(make_name(Family.LINEAR, n=2, q=64)) == "L2(64)"
        assert render(make_name(Family.SUZUKI, q=32)) == "Sz(32)"
        assert render(make_name(Family.ALTERNATING, n=6)) == "A6"

    def test_round_trip_random_names(self):
        rng = random.Random(5)
        candidates = []
        for p in (2, 3, 5, 7, 11):
            for s in range(1, 6):
                candidates += [(Family.LINEAR, rng.randint(2, 6), p ** s), (Family.UNITARY, rng.randint(3, 6), p ** s)]
        candidates += [(Family.SUZUKI, None, 2 ** s) for s in (3, 5, 7, 9)]
        candidates += [(Family.ALTERNATING, n, None) for n in range(5, 20)]
        for family, n, q in candidates:
            try:
                name = make_name(family, n=n, q=q)
            except NotSimpleNameError:
                continue
            assert parse_name(render(name)) == name
