"""Acceptance corpus: a fixed manifest of checks plus optional generator files.

Rows run independently; ``run_corpus`` keeps manifest order whatever the
completion order of the worker threads.
"""
import logging
import os
import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from glob import glob
from typing import Optional

import config
from errors import CycleFormatError, LimitExceededError, MingrpError, NotSimpleNameError
from gf import construct, expected_order, special_linear_on_vectors
from lattice import identify_simple
from lists import ListName, classify
from names import parse_name, render
from perm import PermGroup, direct_product, element_orders, group_order, parse_cycles, parse_generators
from utils import round_seconds
from verdict import Case, corollary_check, cross_validate, theorem_case

logger = logging.getLogger(__name__)

_EXPECT = re.compile(r"^#\s*expect:\s*(case\s*([1-4])|violation)\s*$", re.IGNORECASE | re.MULTILINE)


def _a5_times_c2():
    a5 = construct(parse_name("A5"))
    return direct_product(a5, PermGroup([parse_cycles("(1,2)")], 2))


def _quaternion():
    return PermGroup([parse_cycles("(1,2,4,6)(3,8,7,5)"), parse_cycles("(1,3,4,7)(2,5,6,8)")], 8)


EXTRA_GROUPS = {
    "SL(2,5)": lambda: special_linear_on_vectors(5),
    "A5xC2": _a5_times_c2,
    "Q8": _quaternion,
}


def build_group(label):
    """(group, GroupName or None) for a corpus label."""
    if label in EXTRA_GROUPS:
        return EXTRA_GROUPS[label](), None
    name = parse_name(label)
    return construct(name), name


class RowKind(Enum):
    CLASSIFY = "classify"
    CONSTRUCT = "construct"
    IDENTIFY = "identify"
    CASE = "case"
    CROSS = "cross_validate"
    COROLLARY = "corollary"


class Status(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class CorpusRow:
    label: str
    kind: RowKind
    expect: object = None
    limit: Optional[int] = None  # order limit this row needs when none is given
    gens_text: Optional[str] = None


@dataclass(frozen=True)
class RowResult:
    label: str
    kind: RowKind
    status: Status
    detail: str
    seconds: float

    def to_json(self):
        return {"label": self.label, "kind": self.kind.value, "status": self.status.value,
                "detail": self.detail, "seconds": self.seconds}


_LIST1 = ("L2(4)", "L2(32)", "L2(128)", "L2(27)", "L2(243)", "L2(7)", "L2(13)", "L2(17)", "L2(23)",
          "Sz(8)", "Sz(32)", "L3(3)", "A5")
_LIST3 = ("L2(64)", "L2(2^4)", "L2(3^9)", "L2(11)", "L2(19)", "L2(29)", "L2(31)", "L2(125)", "L2(7^3)",
          "A6", "U3(3)", "Sz(2^9)", "Sz(2^15)")
_NEITHER = ("L2(25)", "L2(49)", "L2(2^8)", "L2(3^4)", "A7", "A8", "U4(3)")
_CONSTRUCTED = ("A5", "A6", "A7", "A8", "A9", "S5", "S6",
                "L2(4)", "L2(5)", "L2(7)", "L2(8)", "L2(9)", "L2(11)", "L2(13)", "L2(16)", "L2(25)",
                "L2(27)", "L2(32)", "L3(3)", "U3(3)", "Sz(8)", "Sz(32)")
_CASES = (
    ("S4", Case.SOLUBLE, None),
    ("A5", Case.MINIMAL_SIMPLE_QUOTIENT, None),
    ("SL(2,5)", Case.MINIMAL_SIMPLE_QUOTIENT, None),
    ("L2(7)", Case.MINIMAL_SIMPLE_QUOTIENT, None),
    ("L2(8)", Case.MINIMAL_SIMPLE_QUOTIENT, None),
    ("L2(13)", Case.MINIMAL_SIMPLE_QUOTIENT, None),
    ("S5", Case.PRIME_INDEX_SUBGROUP, None),
    ("A5xC2", Case.PRIME_INDEX_SUBGROUP, None),
    ("A6", Case.LIST3_QUOTIENT, None),
    ("L2(11)", Case.LIST3_QUOTIENT, None),
    ("A7", Case.VIOLATION, 2600),
    ("S6", Case.VIOLATION, None),
)
_CROSS = ("L2(4)", "L2(7)", "L2(9)", "L2(8)", "L2(11)", "L2(13)")
_COROLLARY = (("S5", True, None), ("SL(2,5)", True, None), ("A5xC2", True, None),
              ("A7", False, 2600), ("S6", False, None))

CORPUS = (
    [CorpusRow(label, RowKind.CLASSIFY, ListName.LIST1) for label in _LIST1]
    + [CorpusRow(label, RowKind.CLASSIFY, ListName.LIST3) for label in _LIST3]
    + [CorpusRow(label, RowKind.CLASSIFY, ListName.NONE) for label in _NEITHER]
    + [CorpusRow("Sz(2^4)", RowKind.CLASSIFY, "reject")]
    + [CorpusRow(label, RowKind.IDENTIFY, label) for label in ("L3(4)", "A8")]
    + [CorpusRow(label, RowKind.CONSTRUCT) for label in _CONSTRUCTED]
    + [CorpusRow(label, RowKind.CASE, case, limit) for label, case, limit in _CASES]
    + [CorpusRow(label, RowKind.CROSS, True) for label in _CROSS]
    + [CorpusRow(label, RowKind.COROLLARY, soluble, limit) for label, soluble, limit in _COROLLARY]
)


def _expected_case(text):
    match = _EXPECT.search(text)
    if not match:
        raise CycleFormatError("missing '# expect: case N' or '# expect: violation' header")
    return Case(int(match.group(2))) if match.group(2) else Case.VIOLATION


def load_corpus_dir(path):
    """One CASE row per ``*.gens`` file, in file-name order."""
    rows = []
    for file_path in sorted(glob(os.path.join(path, "*.gens"))):
        try:
            with open(file_path, encoding="utf-8") as handle:
                text = handle.read()
        except OSError as e:
            logger.error(f"Error reading corpus file {file_path}: {e}")
            text = ""
        rows.append(CorpusRow(os.path.basename(file_path), RowKind.CASE, gens_text=text))
    return rows


def _check_classify(row):
    try:
        name, first, third = classify(parse_name(row.label))
    except NotSimpleNameError as e:
        return row.expect == "reject", f"rejected: {e}"
    listed = first if first.member else third
    return listed.list == row.expect, f"{render(name)}: {listed.list.value} {listed.reason}"


def _check_construct(row, limit):
    name = parse_name(row.label)
    computed, formula = group_order(construct(name)), expected_order(name)
    return computed == formula, f"order {computed}, formula {formula}"


def _check_identify(row, limit):
    G, _ = build_group(row.label)
    order = group_order(G)
    factor = identify_simple(order, element_orders(G, order))
    name, first, third = classify(factor.name) if factor.name else (None, None, None)
    ok = factor.name is not None and render(factor.name) == row.expect
    ok = ok and not first.member and not third.member
    return ok, f"order {order}: {factor.kind.value} {factor.label}"


def _group_within(G, limit):
    order = group_order(G)
    if order > limit:
        raise LimitExceededError(f"order exceeds limit: {order} > {limit}")


def _check_case(row, limit):
    if row.gens_text is not None:
        expect = _expected_case(row.gens_text)
        G = parse_generators(row.gens_text)
    else:
        expect = row.expect
        G, _ = build_group(row.label)
    _group_within(G, limit)
    report = theorem_case(G, limit)
    return report.case is expect, f"case {report.case.value}"


def _check_cross(row, limit):
    agree = cross_validate(parse_name(row.label), limit)
    return agree is row.expect, "agree" if agree else "disagree"


def _check_corollary(row, limit):
    G, _ = build_group(row.label)
    _group_within(G, limit)
    report = corollary_check(G, limit)
    ok = report.second_maximal_soluble is row.expect
    if report.second_maximal_soluble:
        ok = ok and report.conforming
    factors = ", ".join(f.label for f in report.factors)
    return ok, f"second maximals soluble {report.second_maximal_soluble}; factors [{factors}]"


_CHECKS = {
    RowKind.CONSTRUCT: _check_construct,
    RowKind.IDENTIFY: _check_identify,
    RowKind.CASE: _check_case,
    RowKind.CROSS: _check_cross,
    RowKind.COROLLARY: _check_corollary,
}


def run_row(row, limit=None):
    """``limit`` overrides the row's own limit; without either the default applies."""
    effective = limit or row.limit or config.DEFAULT_ORDER_LIMIT
    start = time.perf_counter()
    try:
        if row.kind is RowKind.CLASSIFY:
            ok, detail = _check_classify(row)
        else:
            ok, detail = _CHECKS[row.kind](row, effective)
        status = Status.PASS if ok else Status.FAIL
    except LimitExceededError as e:
        status, detail = Status.SKIPPED, str(e)
    except MingrpError as e:
        logger.error(f"Corpus row {row.label} failed: {e}")
        status, detail = Status.FAIL, str(e)
    except Exception as e:
        logger.error(f"Unexpected error in corpus row {row.label}: {e}")
        status, detail = Status.FAIL, f"{type(e).__name__}: {e}"
    seconds = round_seconds(time.perf_counter() - start)
    logger.debug(f"{row.kind.value} {row.label}: {status.value} ({detail})")
    return RowResult(row.label, row.kind, status, detail, seconds)


def run_corpus(limit=None, jobs=1, corpus_dir=None):
    rows = list(CORPUS)
    if corpus_dir:
        rows += load_corpus_dir(corpus_dir)
    logger.info(f"Running {len(rows)} corpus rows with {jobs} worker(s)")
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        return list(pool.map(lambda row: run_row(row, limit), rows))
