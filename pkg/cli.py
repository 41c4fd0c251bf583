"""``mingrp`` command line: classify, construct, verify, corpus."""
import argparse
import json
import logging
import sys
from typing import Optional, Sequence

import config
from corpus import Status, run_corpus
from errors import MingrpError
from gf import construct
from lattice import subgroup_classes
from lists import classify
from names import parse_name, render
from perm import format_cycles, format_generators, group_order, images, read_generator_file
from verdict import Case, verify

logger = logging.getLogger(__name__)


def _yes_no(flag):
    return "yes" if flag else "no"


def _dump(data):
    return json.dumps(data, indent=config.JSON_INDENT, ensure_ascii=False) + "\n"


def _verdict_json(verdict):
    return {"member": verdict.member, "list": verdict.list.value, "item": verdict.item, "reason": verdict.reason}


def cmd_classify(args):
    name, first, third = classify(parse_name(args.name))
    if args.json:
        return 0, _dump({"input": args.name, "normalized_name": render(name),
                         "list1": _verdict_json(first), "list3": _verdict_json(third)})
    lines = [args.name, f"  normalized: {render(name)}"]
    for title, verdict in (("List 1", first), ("List 3", third)):
        if verdict.member:
            lines.append(f"  {title}: yes, item {verdict.item} ({verdict.reason})")
        else:
            lines.append(f"  {title}: no ({verdict.reason})")
    return 0, "\n".join(lines) + "\n"


def cmd_construct(args):
    name = parse_name(args.name)
    G = construct(name)
    header = {"name": render(name), "degree": G.degree, "order": group_order(G)}
    if args.format == "json":
        return 0, _dump({**header, "generators": [format_cycles(g) for g in G.generators]})
    if args.format == "images":
        lines = [f"# {key}: {value}" for key, value in header.items()]
        lines += [" ".join(str(x) for x in images(g)) for g in G.generators]
        return 0, "\n".join(lines) + "\n"
    return 0, format_generators(G, header)


def _render_verification(result):
    lines = [f"input: {result.input}"]
    if result.normalized_name:
        lines.append(f"normalized name: {result.normalized_name}")
    lines.append(f"degree {result.degree}, order {result.order}")
    witness = result.condition.witness
    if witness:
        lines.append(f"condition: fails (maximal class {witness.maximal_index} of order {witness.maximal_order} "
                     f"has insoluble maximal class {witness.subgroup_index} of order {witness.subgroup_order})")
    else:
        lines.append("condition: holds")
    case = result.case
    if case.case is Case.VIOLATION:
        lines.append("case: violation")
    else:
        details = ", ".join(f"{k}={v}" for k, v in case.details().items() if k != "note")
        lines.append(f"case: {case.case.value}" + (f" ({details})" if details else ""))
        if case.note:
            lines.append(f"note: {case.note}")
    corollary = result.corollary
    lines.append(f"second maximals soluble: {_yes_no(corollary.second_maximal_soluble)}")
    if corollary.second_maximal_soluble:
        lines.append("composition factors: " + ", ".join(f.label for f in corollary.factors))
        lines.append(f"conforming: {_yes_no(corollary.conforming)}")
    return "\n".join(lines) + "\n"


def cmd_verify(args):
    if args.gens:
        G, name, label = read_generator_file(args.gens), None, args.gens
    else:
        name = parse_name(args.name)
        G, label = construct(name), args.name
    result = verify(G, label, name, args.limit)
    code = 1 if result.case.case is Case.VIOLATION else 0
    if args.json:
        data = result.to_json()
        if args.lattice:
            data["lattice"] = subgroup_classes(G, args.limit).to_json()
        return code, _dump(data)
    return code, _render_verification(result)


def cmd_corpus(args):
    results = run_corpus(args.limit, args.jobs, args.corpus_dir)
    counts = {status: sum(r.status is status for r in results) for status in Status}
    code = 1 if counts[Status.FAIL] else 0
    if args.json:
        summary = {status.value.lower(): n for status, n in counts.items()}
        return code, _dump({"rows": [r.to_json() for r in results], "summary": summary})
    lines = [f"{r.status.value:<8} {r.kind.value:<15} {r.label:<12} {r.detail} [{r.seconds}s]" for r in results]
    lines.append(f"{counts[Status.PASS]} passed, {counts[Status.FAIL]} failed, {counts[Status.SKIPPED]} skipped")
    return code, "\n".join(lines) + "\n"


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mingrp",
        description="Groups whose maximal subgroups have only soluble proper subgroups.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr.")
    parser.add_argument("--output", metavar="FILE", help="Write the report to FILE instead of stdout.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("classify", help="List 1 / List 3 membership of a group name.")
    p.add_argument("name")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_classify)

    p = subparsers.add_parser("construct", help="Permutation generators of a named group.")
    p.add_argument("name")
    p.add_argument("--format", choices=("cycles", "images", "json"), default="cycles")
    p.set_defaults(handler=cmd_construct)

    p = subparsers.add_parser("verify", help="Assign a concrete group to a case of the classification.")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("name", nargs="?")
    source.add_argument("--gens", metavar="FILE", help="Generator file in cycle notation.")
    p.add_argument("--limit", type=_positive, default=config.DEFAULT_ORDER_LIMIT, help="Order limit.")
    p.add_argument("--json", action="store_true")
    p.add_argument("--lattice", action="store_true", help="Include the subgroup lattice in the JSON report.")
    p.set_defaults(handler=cmd_verify)

    p = subparsers.add_parser("corpus", help="Run the acceptance corpus.")
    p.add_argument("--limit", type=_positive, default=None,
                   help=f"Order limit for every row (default: per row, else {config.DEFAULT_ORDER_LIMIT}).")
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=_positive, default=1, help="Worker threads.")
    p.add_argument("--corpus-dir", metavar="DIR", help="Extra *.gens files with an '# expect:' header.")
    p.set_defaults(handler=cmd_corpus)
    return parser


def _write(text, output):
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        for handler in logging.getLogger().handlers:
            if isinstance(handler, logging.StreamHandler) and not isinstance(handler, logging.FileHandler):
                handler.setLevel(logging.DEBUG)
    try:
        code, text = args.handler(args)
    except MingrpError as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    try:
        _write(text, args.output)
    except OSError as e:
        logger.error(f"Error writing report to {args.output}: {e}")
        return 1
    return code
