"""Executable form of the classification: the two-level solubility condition,
the four-case assignment, the composition-factor check and the cross-validation
of brute force against the arithmetic lists.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import config
from errors import LimitExceededError, UnidentifiedQuotientError
from gf import construct, expected_order
from lattice import (FactorKind, composition_factors, frattini, identify_simple, is_simple,
                     maximal_subgroups, normal_subgroups, quotient, subgroup_classes)
from lists import classify, in_list1, in_list3, is_prime
from names import normalize, render
from perm import element_orders, group_order, is_soluble
from utils import timed

logger = logging.getLogger(__name__)

CASE3_NOTE = ("case 3 is read as G0/Phi(G0) minimal simple; "
              "the quotient G/Phi(G0) named by the literal statement is not simple for such G")


class Case(Enum):
    SOLUBLE = 1
    MINIMAL_SIMPLE_QUOTIENT = 2
    PRIME_INDEX_SUBGROUP = 3
    LIST3_QUOTIENT = 4
    VIOLATION = "violation"


@dataclass(frozen=True)
class Witness:
    maximal_index: int
    maximal_order: int
    subgroup_index: int
    subgroup_order: int

    def to_json(self):
        return {
            "maximal": {"class": self.maximal_index, "order": self.maximal_order},
            "insoluble_second_maximal": {"class": self.subgroup_index, "order": self.subgroup_order},
        }


@dataclass(frozen=True)
class ConditionReport:
    holds: bool
    witness: Optional[Witness] = None
    levels: int = 2

    def to_json(self):
        data = {"holds": self.holds}
        if self.witness:
            data["witness"] = self.witness.to_json()
        return data


@dataclass(frozen=True)
class TheoremCaseReport:
    case: Case
    condition: ConditionReport
    frattini_order: Optional[int] = None
    quotient_order: Optional[int] = None
    quotient_name: Optional[str] = None
    list_item: Optional[int] = None
    reason: Optional[str] = None
    subgroup_order: Optional[int] = None
    subgroup_index: Optional[int] = None
    note: Optional[str] = None

    def details(self):
        if self.case is Case.VIOLATION:
            return self.condition.to_json()
        keys = ("frattini_order", "quotient_order", "quotient_name", "list_item", "reason",
                "subgroup_order", "subgroup_index", "note")
        return {k: getattr(self, k) for k in keys if getattr(self, k) is not None}


@dataclass(frozen=True)
class CorollaryReport:
    second_maximal_soluble: bool
    factors: tuple = ()
    conforming: Optional[bool] = None

    def to_json(self):
        return {
            "second_maximal_soluble": self.second_maximal_soluble,
            "factors": [f.to_json() for f in self.factors],
            "conforming": self.conforming,
        }


def condition_holds(G, limit=config.DEFAULT_ORDER_LIMIT):
    """Every maximal subgroup of every insoluble maximal subgroup is soluble.

    Soluble maximals need no check, and proper subgroups of M all lie in
    maximal subgroups of M, so two levels of the lattice decide the condition.
    """
    for M in maximal_subgroups(G, limit):
        if M.soluble:
            continue
        for H in maximal_subgroups(M.representative, limit):
            if not H.soluble:
                witness = Witness(M.index, M.order, H.index, H.order)
                logger.debug(f"Condition fails: maximal of order {M.order} has an insoluble maximal of order {H.order}")
                return ConditionReport(False, witness)
    return ConditionReport(True)


def _modulo_frattini(X, limit):
    """(|Phi(X)|, X/Phi(X)); X itself when Phi(X) is trivial."""
    phi = frattini(X, limit)
    phi_order = group_order(phi)
    if phi_order == 1:
        return phi_order, X
    return phi_order, quotient(X, phi, limit)


def _identify(E, limit, what):
    order = group_order(E)
    factor = identify_simple(order, element_orders(E, limit))
    if factor.kind is not FactorKind.IDENTIFIED:
        logger.error(f"Cannot identify {what} of order {order}: {factor.kind.value}")
        raise UnidentifiedQuotientError(f"unidentified quotient: {what} of order {order} ({factor.kind.value})")
    return normalize(factor.name)


def _case3_candidates(G, limit):
    order = group_order(G)
    normals = [c for c in normal_subgroups(G, limit) if c.order < order and is_prime(order // c.order)]
    return sorted(normals, key=lambda c: (-c.order, c.index))


def theorem_case(G, limit=config.DEFAULT_ORDER_LIMIT):
    condition = condition_holds(G, limit)
    if not condition.holds:
        logger.info("Condition violated; no case applies")
        return TheoremCaseReport(Case.VIOLATION, condition)
    if is_soluble(G):
        logger.info("Case 1: soluble")
        return TheoremCaseReport(Case.SOLUBLE, condition)

    if all(M.soluble for M in maximal_subgroups(G, limit)):
        phi_order, E = _modulo_frattini(G, limit)
        name = _identify(E, limit, "G/Phi(G)")
        verdict = in_list1(name)
        if not verdict.member:
            raise UnidentifiedQuotientError(f"G/Phi(G) = {render(name)} is not minimal simple")
        logger.info(f"Case 2: G/Phi(G) = {render(name)}, |Phi(G)| = {phi_order}")
        return TheoremCaseReport(Case.MINIMAL_SIMPLE_QUOTIENT, condition, phi_order, group_order(E),
                                 render(name), verdict.item, verdict.reason)

    for G0 in _case3_candidates(G, limit):
        if G0.soluble:
            continue
        phi_order, E = _modulo_frattini(G0.representative, limit)
        if not is_simple(E, limit):
            continue
        name = _identify(E, limit, "G0/Phi(G0)")
        verdict = in_list1(name)
        if verdict.member:
            logger.warning(f"Case 3 reading: {CASE3_NOTE}")
            logger.info(f"Case 3: G0 of index {group_order(G) // G0.order}, G0/Phi(G0) = {render(name)}")
            return TheoremCaseReport(Case.PRIME_INDEX_SUBGROUP, condition, phi_order, group_order(E),
                                     render(name), verdict.item, verdict.reason,
                                     G0.order, group_order(G) // G0.order, CASE3_NOTE)

    phi_order, E = _modulo_frattini(G, limit)
    if not is_simple(E, limit):
        raise UnidentifiedQuotientError(f"unidentified quotient: G/Phi(G) of order {group_order(E)} is not simple")
    name = _identify(E, limit, "G/Phi(G)")
    verdict = in_list3(name)
    if not verdict.member:
        raise UnidentifiedQuotientError(f"G/Phi(G) = {render(name)} is not in List 3")
    logger.info(f"Case 4: G/Phi(G) = {render(name)}, |Phi(G)| = {phi_order}")
    return TheoremCaseReport(Case.LIST3_QUOTIENT, condition, phi_order, group_order(E),
                             render(name), verdict.item, verdict.reason)


def _conforms(factor):
    if factor.kind is FactorKind.CYCLIC_PRIME:
        return True
    if factor.kind is not FactorKind.IDENTIFIED:
        return False
    return in_list1(factor.name).member or in_list3(factor.name).member


def corollary_check(G, limit=config.DEFAULT_ORDER_LIMIT):
    condition = condition_holds(G, limit)
    if not condition.holds:
        return CorollaryReport(False)
    factors = tuple(composition_factors(G, limit))
    conforming = all(_conforms(f) for f in factors)
    if not conforming:
        logger.error(f"Non-conforming composition factors: {[f.label for f in factors]}")
    return CorollaryReport(True, factors, conforming)


def cross_validate(name, limit=config.DEFAULT_ORDER_LIMIT):
    """Brute-force condition on construct(name) agrees with List 1 or List 3 membership."""
    order = expected_order(name)
    if order > limit:
        raise LimitExceededError(f"order exceeds limit: {order} > {limit}")
    G = construct(name)
    report = condition_holds(G, limit)
    normalized, first, third = classify(name)
    listed = first.member or third.member
    agree = report.holds == listed
    if agree:
        logger.info(f"{render(normalized)}: condition {report.holds}, listed {listed}")
    else:
        logger.error(f"{render(normalized)}: condition {report.holds} but listed {listed}")
    return agree


@dataclass
class Verification:
    input: str
    normalized_name: Optional[str]
    degree: int
    order: int
    condition: ConditionReport
    case: TheoremCaseReport
    corollary: CorollaryReport
    timings: dict = field(default_factory=dict)

    def to_json(self):
        data = {"input": self.input}
        if self.normalized_name:
            data["normalized_name"] = self.normalized_name
        data.update({
            "degree": self.degree,
            "order": self.order,
            "condition": self.condition.to_json(),
            "case": self.case.case.value,
            "case_details": self.case.details(),
            "corollary": self.corollary.to_json(),
            "timings": self.timings,
        })
        return data


def verify(G, label, name=None, limit=config.DEFAULT_ORDER_LIMIT):
    """Full report for one group; ``name`` is its GroupName when it was built from one."""
    timings = {}
    with timed(timings, "order"):
        order = group_order(G)
    if order > limit:
        raise LimitExceededError(f"order exceeds limit: {order} > {limit}")
    with timed(timings, "lattice"):
        subgroup_classes(G, limit)
    with timed(timings, "condition"):
        condition = condition_holds(G, limit)
    with timed(timings, "case"):
        case = theorem_case(G, limit)
    with timed(timings, "corollary"):
        corollary = corollary_check(G, limit)
    normalized = render(normalize(name)) if name is not None else None
    return Verification(label, normalized, G.degree, order, condition, case, corollary, timings)
