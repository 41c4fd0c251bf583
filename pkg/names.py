"""ATLAS-style names of (near-)simple groups.

Grammar: ``A<n>``, ``S<n>`` (symmetric), ``C<p>``, ``L<n>(q)``, ``U<n>(q)``,
``S<n>(q)`` (symplectic: the parenthesized field size disambiguates),
``O<n>(q)`` (odd n), ``O<n>+(q)``, ``O<n>-(q)``, ``G2(q)``, ``F4(q)``,
``E6(q)``, ``E7(q)``, ``E8(q)``, ``Sz(q)``, ``2G2(q)``, ``2F4(q)``, ``3D4(q)``,
``2E6(q)``, the Tits group ``2F4(2)'`` and the sporadic labels.  ``q`` is an
integer literal or ``p^e``.

Parameters must lie in the domain of the classification list of nonabelian
simple groups.  The five small coincidences L2(4), L2(5), L2(9), L3(2), L4(2)
are accepted and rewritten by ``normalize``; everything else outside the list
is rejected with ``NotSimpleNameError``.
"""
import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from sympy import factorint, isprime

import config
from errors import GroupNameError, NotPrimePowerError, NotSimpleNameError, ParameterOverflowError

logger = logging.getLogger(__name__)


class Family(Enum):
    ALTERNATING = "A"
    SYMMETRIC = "S"
    CYCLIC = "Cyclic"
    LINEAR = "L"
    UNITARY = "U"
    SYMPLECTIC = "SympS"
    ORTHOGONAL_ODD = "O_odd"
    ORTHOGONAL_PLUS = "O_plus"
    ORTHOGONAL_MINUS = "O_minus"
    G2 = "G2"
    F4 = "F4"
    E6 = "E6"
    E7 = "E7"
    E8 = "E8"
    SUZUKI = "Sz"
    REE_G2 = "Ree2G2"
    REE_F4 = "Ree2F4"
    TRIALITY_D4 = "D4_3"
    TWISTED_E6 = "E6_2"
    TITS = "Tits"
    SPORADIC = "Sporadic"


SPORADIC_LABELS = (
    "M11", "M12", "J1", "M22", "J2", "M23", "HS", "J3", "M24", "McL", "He", "Ru", "Suz",
    "O'N", "Co3", "Co2", "Fi22", "HN", "Ly", "Th", "Fi23", "Co1", "J4", "Fi24'", "B", "M",
)
_SPORADIC_ALIASES = {"ON": "O'N", "Fi24": "Fi24'"}

_RANKED = {"L": Family.LINEAR, "U": Family.UNITARY, "S": Family.SYMPLECTIC}
_UNRANKED = {
    "G2": Family.G2, "F4": Family.F4, "E6": Family.E6, "E7": Family.E7, "E8": Family.E8,
    "Sz": Family.SUZUKI, "2G2": Family.REE_G2, "2F4": Family.REE_F4,
    "3D4": Family.TRIALITY_D4, "2E6": Family.TWISTED_E6,
}
_ORTHOGONAL_SIGNS = {"": Family.ORTHOGONAL_ODD, "+": Family.ORTHOGONAL_PLUS, "-": Family.ORTHOGONAL_MINUS}
_BARE = {"A": Family.ALTERNATING, "S": Family.SYMMETRIC, "C": Family.CYCLIC}

_TITS_TEXT = "2F4(2)'"
_UNRANKED_RE = re.compile(r"^(2G2|2F4|3D4|2E6|G2|F4|E6|E7|E8|Sz)\(([^()]+)\)$")
_RANKED_RE = re.compile(r"^([LUS])(\d+)\(([^()]+)\)$")
_ORTHOGONAL_RE = re.compile(r"^O(\d+)([+-]?)\(([^()]+)\)$")
_BARE_RE = re.compile(r"^([ASC])(\d+)$")
_FIELD_RE = re.compile(r"^(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class GroupName:
    family: Family
    n: Optional[int] = None
    q: Optional[int] = None
    p: Optional[int] = None
    s: Optional[int] = None
    label: Optional[str] = None
    raw: str = field(default="", compare=False)

    def __str__(self):
        return render(self)


def _check_size(value):
    if value > config.MAX_PARAMETER:
        raise ParameterOverflowError(f"parameter {value} exceeds 2^63-1")
    return value


def _field_size(token):
    match = _FIELD_RE.match(token)
    if not match:
        raise GroupNameError(f"bad field size {token!r}")
    base = int(match.group(1))
    exponent = int(match.group(2)) if match.group(2) else 1
    if base > 1 and exponent > 64:
        raise ParameterOverflowError(f"field size {token} exceeds 2^63-1")
    return _check_size(base ** exponent)


def _prime_power(q):
    factors = factorint(q) if q > 1 else {}
    if len(factors) != 1:
        raise NotPrimePowerError(f"{q} is not a prime power")
    (p, s), = factors.items()
    return int(p), int(s)


def make_name(family, n=None, q=None, label=None, raw=""):
    """Build a validated GroupName; p and s are derived from q."""
    p = s = None
    if n is not None:
        _check_size(n)
    if q is not None:
        p, s = _prime_power(_check_size(q))
    name = GroupName(family, n, q, p, s, label, raw or "")
    _check_domain(name)
    return name


def _reject(name, why):
    raise NotSimpleNameError(f"{render(name)} is not a simple-group name ({why})")


def _check_domain(name):
    f, n, q, p, s = name.family, name.n, name.q, name.p, name.s
    if f is Family.ALTERNATING and n < 5:
        _reject(name, "A_n needs n >= 5")
    elif f is Family.SYMMETRIC and n < 2:
        _reject(name, "S_n needs n >= 2")
    elif f is Family.CYCLIC and not isprime(n):
        _reject(name, "cyclic factors have prime order")
    elif f is Family.LINEAR:
        if n < 2:
            _reject(name, "L_n needs n >= 2")
        if (n, q) in ((2, 2), (2, 3)):
            _reject(name, "soluble")
    elif f is Family.UNITARY:
        if n < 3:
            _reject(name, "U_n needs n >= 3")
        if (n, q) == (3, 2):
            _reject(name, "soluble")
    elif f is Family.SYMPLECTIC:
        if n < 4 or n % 2:
            _reject(name, "S_n(q) needs even n >= 4")
        if (n, q) == (4, 2):
            _reject(name, "isomorphic to the symmetric group S6")
        if (n, q) == (4, 3):
            _reject(name, "repeated: isomorphic to U4(2)")
    elif f is Family.ORTHOGONAL_ODD and (n < 7 or n % 2 == 0):
        _reject(name, "O_n(q) needs odd n >= 7")
    elif f in (Family.ORTHOGONAL_PLUS, Family.ORTHOGONAL_MINUS) and (n < 8 or n % 2):
        _reject(name, "O_n(q)^+- needs even n >= 8")
    elif f is Family.G2 and q == 2:
        _reject(name, "G2(2) is not simple")
    elif f is Family.SUZUKI and (p != 2 or s < 3 or s % 2 == 0):
        _reject(name, "Sz(q) needs q = 2^(2n+1), n >= 1")
    elif f is Family.REE_G2 and (p != 3 or s < 3 or s % 2 == 0):
        _reject(name, "2G2(q) needs q = 3^(2n+1), n >= 1")
    elif f is Family.REE_F4 and (p != 2 or s < 3 or s % 2 == 0):
        _reject(name, "2F4(q) needs q = 2^(2n+1), n >= 1; the simple group at q = 2 is 2F4(2)'")


def parse_name(text):
    raw = text
    text = "".join(str(text).split())
    if not text:
        raise GroupNameError("empty group name")
    if text == _TITS_TEXT:
        return GroupName(Family.TITS, raw=raw)
    label = _SPORADIC_ALIASES.get(text, text)
    if label in SPORADIC_LABELS:
        return GroupName(Family.SPORADIC, label=label, raw=raw)

    match = _UNRANKED_RE.match(text)
    if match:
        return make_name(_UNRANKED[match.group(1)], q=_field_size(match.group(2)), raw=raw)
    match = _RANKED_RE.match(text)
    if match:
        return make_name(_RANKED[match.group(1)], n=int(match.group(2)),
                         q=_field_size(match.group(3)), raw=raw)
    match = _ORTHOGONAL_RE.match(text)
    if match:
        n, sign = int(match.group(1)), match.group(2)
        if (sign == "") != (n % 2 == 1):
            raise GroupNameError(f"{text}: odd dimension takes no sign, even dimension needs + or -")
        return make_name(_ORTHOGONAL_SIGNS[sign], n=n, q=_field_size(match.group(3)), raw=raw)
    match = _BARE_RE.match(text)
    if match:
        return make_name(_BARE[match.group(1)], n=int(match.group(2)), raw=raw)
    raise GroupNameError(f"cannot parse group name {text!r}")


_TEMPLATES = {
    Family.ALTERNATING: "A{n}",
    Family.SYMMETRIC: "S{n}",
    Family.CYCLIC: "C{n}",
    Family.LINEAR: "L{n}({q})",
    Family.UNITARY: "U{n}({q})",
    Family.SYMPLECTIC: "S{n}({q})",
    Family.ORTHOGONAL_ODD: "O{n}({q})",
    Family.ORTHOGONAL_PLUS: "O{n}+({q})",
    Family.ORTHOGONAL_MINUS: "O{n}-({q})",
    Family.G2: "G2({q})",
    Family.F4: "F4({q})",
    Family.E6: "E6({q})",
    Family.E7: "E7({q})",
    Family.E8: "E8({q})",
    Family.SUZUKI: "Sz({q})",
    Family.REE_G2: "2G2({q})",
    Family.REE_F4: "2F4({q})",
    Family.TRIALITY_D4: "3D4({q})",
    Family.TWISTED_E6: "2E6({q})",
    Family.TITS: _TITS_TEXT,
}


def render(name):
    if name.family is Family.SPORADIC:
        return name.label
    return _TEMPLATES[name.family].format(n=name.n, q=name.q)


def _alt(n):
    return GroupName(Family.ALTERNATING, n=n)


_COINCIDENCES = {
    (Family.LINEAR, 2, 4): _alt(5),
    (Family.LINEAR, 2, 5): _alt(5),
    (Family.LINEAR, 2, 9): _alt(6),
    (Family.LINEAR, 4, 2): _alt(8),
    (Family.LINEAR, 3, 2): GroupName(Family.LINEAR, n=2, q=7, p=7, s=1),
}


def normalize(name):
    target = _COINCIDENCES.get((name.family, name.n, name.q))
    if target is None:
        return name
    logger.debug(f"Normalized {render(name)} to {render(target)}")
    return GroupName(target.family, target.n, target.q, target.p, target.s, target.label, name.raw)


def canonical(text):
    return normalize(parse_name(text))


if __name__ == "__main__":
    for text in ("Sz(32)", "L2(2^6)", "L2(9)", "2F4(2)'", "O8+(3)"):
        name = parse_name(text)
        print(text, "->", name, "->", normalize(name))
