"""Command line entry point.

Exit codes: 0 success, 1 a computed negative answer (not a member, criterion
fails), 2 bad input or a computation that could not finish.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .division import divide
from .exceptions import PRGroebnerError
from .groebner import buchberger, criterion_check, minimize
from .oracle import member_bruteforce
from .parse import ProblemFile, parse, parse_element
from .render import element_to_json, format_element, leading_to_json
from .resolution import resolve
from .syzygy import collapse_same_lm, syzygy_basis

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2


def _trace_json(trace):
    return [{"step": str(s), "indicator": "".join(str(b) for b in ind)} for s, ind in trace]


def _division_payload(result, with_trace: bool) -> dict:
    out = {
        "quotients": [element_to_json(q) for q in result.quotients],
        "remainder": element_to_json(result.remainder),
    }
    if with_trace:
        out["trace"] = _trace_json(result.trace)
    return out


def _print_division_text(result, with_trace: bool, out) -> None:
    for j, q in enumerate(result.quotients, start=1):
        print(f"q{j} = {format_element(q)}", file=out)
    print(f"remainder = {format_element(result.remainder)}", file=out)
    if with_trace:
        for s, ind in result.trace:
            print(f"step {s}: {''.join(str(b) for b in ind)}", file=out)


def _basis(problem: ProblemFile, minimal: bool):
    gb = buchberger(problem.generators)
    return minimize(gb) if minimal else gb


def cmd_groebner(problem, args, out) -> int:
    gb = _basis(problem, args.minimize)
    traces = None
    if args.trace:
        traces = [divide(g, gb.elements) for g in problem.generators]
    if args.json:
        payload = {
            "command": "groebner",
            "minimized": args.minimize,
            "basis": [element_to_json(g) for g in gb],
        }
        if traces is not None:
            payload["input_reductions"] = [_division_payload(r, True) for r in traces]
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        for i, g in enumerate(gb, start=1):
            print(f"f{i} = {format_element(g)}", file=out)
        if traces is not None:
            for i, r in enumerate(traces, start=1):
                print(f"# input {i}", file=out)
                _print_division_text(r, True, out)
    return EXIT_OK


def cmd_check(problem, args, out) -> int:
    result = criterion_check(problem.generators)
    if args.json:
        payload = {
            "command": "check",
            "groebner": result.passed,
            "witnesses": [
                {"kind": c.kind, "indices": [str(i + 1) for i in c.indices],
                 "remainder": element_to_json(r)}
                for c, r in result.witnesses
            ],
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        if result.passed:
            print("criterion holds: generators form a Groebner basis", file=out)
        else:
            print("criterion fails", file=out)
            for c, r in result.witnesses:
                idx = ",".join(str(i + 1) for i in c.indices)
                print(f"  {c.kind}({idx}) -> {format_element(r)}", file=out)
    return EXIT_OK if result.passed else EXIT_NEGATIVE


def cmd_reduce(problem, args, out) -> int:
    target = parse_element(args.target, problem.module)
    result = divide(target, problem.generators)
    if args.json:
        payload = {"command": "reduce", **_division_payload(result, args.trace)}
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        _print_division_text(result, args.trace, out)
    return EXIT_OK


def cmd_member(problem, args, out) -> int:
    target = parse_element(args.target, problem.module)
    gb = _basis(problem, True)
    result = divide(target, gb.elements)
    member = result.remainder.is_zero()
    if args.json:
        payload = {"command": "member", "member": member,
                   "basis": [element_to_json(g) for g in gb],
                   **_division_payload(result, args.trace)}
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        print("member" if member else "not-member", file=out)
        if args.trace:
            _print_division_text(result, True, out)
    return EXIT_OK if member else EXIT_NEGATIVE


def cmd_syzygy(problem, args, out) -> int:
    gb = _basis(problem, True)
    relations, _ = syzygy_basis(gb)
    if args.collapse:
        relations = collapse_same_lm(relations)
    if args.json:
        payload = {
            "command": "syzygy",
            "basis": [element_to_json(g) for g in gb],
            "relations": [
                {"kind": r.kind, "indices": [str(i) for i in r.indices],
                 "element": element_to_json(r.element),
                 "leading": leading_to_json(r.element)}
                for r in relations
            ],
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        for i, g in enumerate(gb, start=1):
            print(f"f{i} = {format_element(g)}", file=out)
        for r in relations:
            idx = "".join(str(i) for i in r.indices)
            text = format_element(r.element)
            lead = format_element(r.element.leading_term())
            print(f"r{idx} = {text}    [LT {lead}]", file=out)
    return EXIT_OK


def cmd_resolve(problem, args, out) -> int:
    res = resolve(problem.generators, args.max_length, collapse=args.collapse)
    if args.json:
        payload = {
            "command": "resolve",
            "ranks": [str(r) for r in res.ranks],
            "status": res.status,
            "period_start": None if res.period_start is None else str(res.period_start),
            "differentials": [[element_to_json(c) for c in d] for d in res.differentials],
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        print(f"ranks: {' '.join(str(r) for r in res.ranks)}", file=out)
        tail = f" (from F{res.period_start})" if res.period_start is not None else ""
        print(f"status: {res.status}{tail}", file=out)
        for k, d in enumerate(res.differentials):
            print(f"d{k}:", file=out)
            for c in d:
                print(f"  {format_element(c)}", file=out)
    return EXIT_OK


def cmd_oracle_member(problem, args, out) -> int:
    target = parse_element(args.target, problem.module)
    verdict = member_bruteforce(target, problem.generators, args.bound)
    print("member" if verdict.member else f"not-member-up-to-bound {args.bound}", file=out)
    if verdict.member:
        for j, p in enumerate(verdict.witness, start=1):
            print(f"p{j} = {format_element(p)}", file=out)
    return EXIT_OK if verdict.member else EXIT_NEGATIVE


COMMANDS = {
    "groebner": cmd_groebner,
    "check": cmd_check,
    "reduce": cmd_reduce,
    "member": cmd_member,
    "syzygy": cmd_syzygy,
    "resolve": cmd_resolve,
    "oracle-member": cmd_oracle_member,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prgroebner",
        description="Groebner bases, syzygies and free resolutions over products of Z and Z/N.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, help_text, json_flag=True):
        p = sub.add_parser(name, help=help_text) if help_text else sub.add_parser(name)
        p.add_argument("file", help="problem file ('-' for stdin)")
        if json_flag:
            p.add_argument("--json", action="store_true", help="JSON output")
        return p

    p = add("groebner", "compute a Groebner basis")
    p.add_argument("--minimize", action="store_true")
    p.add_argument("--trace", action="store_true", help="show reductions of the inputs")
    add("check", "run Buchberger's criterion on the generators as given")
    for name, text in (("reduce", "divide a target by the generators"),
                       ("member", "decide membership via a Groebner basis")):
        p = add(name, text)
        p.add_argument("--target", required=True)
        p.add_argument("--trace", action="store_true")
    p = add("syzygy", "syzygies of the minimized Groebner basis")
    p.add_argument("--collapse", action="store_true")
    p = add("resolve", "free resolution")
    p.add_argument("--max-length", type=int, required=True, dest="max_length")
    p.add_argument("--collapse", action="store_true")
    # debugging aid, deliberately left out of the help listing
    p = add("oracle-member", None, json_flag=False)
    p.add_argument("--target", required=True)
    p.add_argument("--bound", type=int, default=2)
    sub._choices_actions = [a for a in sub._choices_actions if a.dest != "oracle-member"]
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        problem = parse(_read(args.file))
        return COMMANDS[args.command](problem, args, out)
    except (OSError, PRGroebnerError) as exc:
        # parse errors, iteration ceilings and oracle refusals all land here
        print(f"error: {exc}", file=err)
        return EXIT_INPUT


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
