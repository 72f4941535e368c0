"""
Command-line entry point for gtsij.

    gtsij gt size --k 1,3,5
    gtsij asm enumerate --n 3
    gtsij gamma verify --k 0,2 --x auto
    gtsij acceptance --level quick --report-dir reports

Elements cross the command line as s-expressions (see
gtsij.core.elements.serialize); JSON output wraps them as strings.
Exit codes: 0 success, 1 a check failed, 2 usage or interface error,
3 element budget exceeded.
"""
import argparse
import json
import logging
import sys
from typing import Any, List, Optional, Sequence, Tuple

from gtsij.catalog import CATALOG, SijParams, build, statistic_pairs
from gtsij.config import RunConfig, load_config
from gtsij.core.elements import Arrow, parse_element, serialize
from gtsij.core.signed_set import SignedSet, set_element_budget
from gtsij.core.statistics import check_compatibility
from gtsij.core.sijection import Side, SidedElement, Sijection
from gtsij.core.verify import describe, graph_edges, to_dot, verify_sijection
from gtsij.errors import BudgetExceededError, GtsijError, InterfaceError, ParseError
from gtsij.gamma.weighted import ar_sgt_weighted_sum, gmt_weighted_sum
from gtsij.patterns.ggt import ggt, ggt_size_formula, load_params
from gtsij.patterns.gt import (
    gt,
    gt_element,
    gt_enumerate,
    gt_size_formula,
    restricted_count,
    restricted_set,
    row_profiles,
)
from gtsij.triangles.arrows import SignMode
from gtsij.triangles.asm import asm_enumerate, asm_from_text, asm_to_mt, eta_inv_asm, eta_inv_mt
from gtsij.triangles.monotone import (
    eta_inv_gmt,
    eta_inv_mt_element,
    eta_inv_sgt,
    eta_mt,
    gmt,
    gmt_parts,
    mt,
    sgt,
    sgt_parts,
)

# Set up logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


# Parsing and formatting helpers

def parse_ints(text: str) -> Tuple[int, ...]:
    """`1,3,5` or `1 3 5` -> (1, 3, 5)."""
    fields = [f for f in text.replace(",", " ").split() if f]
    if not fields:
        raise ParseError(f"Expected a list of integers, got {text!r}")
    try:
        return tuple(int(f) for f in fields)
    except ValueError:
        raise ParseError(f"Expected a list of integers, got {text!r}")


def parse_profile(text: str) -> Tuple[Tuple[int, ...], ...]:
    """Rows separated by '/', e.g. `1/1,3/1,3,5`."""
    return tuple(parse_ints(row) for row in text.split("/"))


def parse_x(text: Optional[str]) -> Optional[int]:
    """`auto` (X+) -> None, otherwise an integer."""
    if text is None or text == "auto":
        return None
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"--x takes 'auto' or an integer, got {text!r}")


def format_rows(rows: Sequence[Sequence[int]]) -> str:
    return " / ".join(",".join(str(v) for v in row) for row in rows)


def format_arrows(arrows: Sequence[Arrow]) -> str:
    return ",".join(a.value for a in arrows) or "-"


def sign_text(sign: int) -> str:
    return "+" if sign == 1 else "-"


def read_text(path: str) -> str:
    try:
        with open(path, "r") as f:
            return f.read()
    except OSError as exc:
        raise InterfaceError(f"Cannot read {path}: {exc}")


def emit(args: argparse.Namespace, lines: List[str], data: Any) -> None:
    """Print `data` as JSON or `lines` as text, depending on the output format."""
    if args.format == "json":
        print(json.dumps(data, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _size_report(args: argparse.Namespace, s: SignedSet, expected: Optional[int] = None) -> int:
    data = {"size": s.size, "plus": len(s.plus), "minus": len(s.minus)}
    if expected is not None:
        data["formula"] = expected
    emit(args, [str(s.size)], data)
    if expected is not None and expected != s.size:
        logging.error(f"Enumerated size {s.size} differs from the closed form {expected}")
        return EXIT_FAILURE
    return EXIT_OK


# Subcommands

def cmd_gt(args: argparse.Namespace) -> int:
    k = parse_ints(args.k)
    if args.action == "size":
        return _size_report(args, gt(k), gt_size_formula(k))
    if args.action == "enumerate":
        patterns = gt_enumerate(k)
        emit(
            args,
            [f"{sign_text(sign)} {format_rows(rows)}" for rows, sign in patterns],
            [{"sign": sign, "rows": rows, "element": serialize(gt_element(rows))} for rows, sign in patterns],
        )
        return EXIT_OK
    profiles = [parse_profile(args.profile)] if args.profile else row_profiles(k)
    lines, data, status = [], [], EXIT_OK
    for profile in profiles:
        size = restricted_set(k, profile).size
        expected = restricted_count(k, profile)
        if size != expected:
            logging.error(f"Profile {format_rows(profile)}: enumerated {size}, closed form {expected}")
            status = EXIT_FAILURE
        lines.append(f"{format_rows(profile)}: {size}")
        data.append({"profile": profile, "size": size, "formula": expected})
    emit(args, lines, data)
    return status


def cmd_ggt(args: argparse.Namespace) -> int:
    k = parse_ints(args.k)
    params = load_params(args.params, len(k))
    return _size_report(args, ggt(k, params), ggt_size_formula(k, params))


def cmd_asm(args: argparse.Namespace) -> int:
    if args.action == "enumerate":
        if args.n is None:
            raise InterfaceError("asm enumerate needs --n")
        matrices = asm_enumerate(args.n)
        emit(
            args,
            ["; ".join(" ".join(str(v) for v in row) for row in matrix) for matrix in matrices],
            [[list(row) for row in matrix] for matrix in matrices],
        )
        return EXIT_OK
    if not args.file:
        raise InterfaceError("asm to-mt needs --file")
    matrix = asm_from_text(read_text(args.file))
    rows = asm_to_mt(matrix)
    emit(args, [format_rows(rows)], {"rows": rows, "eta_inv": eta_inv_mt(rows)})
    return EXIT_OK


def cmd_mt(args: argparse.Namespace) -> int:
    k = parse_ints(args.k)
    triangles = mt(k)
    rows = [eta_mt(k, e) for e in triangles.elements()]
    emit(
        args,
        [format_rows(r) for r in rows],
        [{"rows": r, "element": serialize(e)} for r, e in zip(rows, triangles.elements())],
    )
    return EXIT_OK


def cmd_gmt(args: argparse.Namespace) -> int:
    k = parse_ints(args.k)
    s = gmt(k, SignMode.parse(args.mode))
    if args.action == "size":
        return _size_report(args, s)
    lines, data = [], []
    for e, sign in s.signed_elements():
        rows, arrows = gmt_parts(k, e)
        lines.append(f"{sign_text(sign)} {format_rows(rows)} | " + " / ".join(format_arrows(a) for a in arrows))
        data.append({
            "sign": sign,
            "rows": rows,
            "arrows": [[a.value for a in row] for row in arrows],
            "element": serialize(e),
        })
    emit(args, lines, data)
    return EXIT_OK


def cmd_sgt(args: argparse.Namespace) -> int:
    k = parse_ints(args.k)
    s = sgt(k, SignMode.parse(args.mode))
    if args.action == "size":
        return _size_report(args, s)
    lines, data = [], []
    for e, sign in s.signed_elements():
        rows, pattern = sgt_parts(k, e)
        lines.append(f"{sign_text(sign)} {format_rows(rows)} | {format_arrows(pattern)}")
        data.append({"sign": sign, "rows": rows, "pattern": [a.value for a in pattern], "element": serialize(e)})
    emit(args, lines, data)
    return EXIT_OK


def _member(s: SignedSet, text: str, what: str):
    element = parse_element(text.strip())
    if element not in s:
        raise InterfaceError(f"{serialize(element)} is not an element of {what}")
    return element


def cmd_inv(args: argparse.Namespace) -> int:
    text = read_text(args.input)
    if args.kind == "asm":
        value = eta_inv_asm(asm_from_text(text))
    else:
        if not args.k:
            raise InterfaceError(f"inv --kind {args.kind} needs --k")
        k = parse_ints(args.k)
        if args.kind == "mt":
            value = eta_inv_mt_element(k, _member(mt(k), text, f"MT{k}"))
        elif args.kind == "gmt":
            mode = SignMode.parse(args.mode)
            value = eta_inv_gmt(k, _member(gmt(k, mode), text, f"GMT{k}"))
        else:
            value = eta_inv_sgt(_member(sgt(k, SignMode.parse(args.mode)), text, f"SGT{k}"))
    emit(args, [str(value)], {"eta_inv": value})
    return EXIT_OK


def _sij_params(args: argparse.Namespace) -> SijParams:
    return SijParams(
        k=parse_ints(args.k) if args.k else (),
        a=parse_ints(args.a) if args.a else (),
        b=parse_ints(args.b) if args.b else (),
        c=args.c,
        x=parse_x(args.x),
        i=args.i,
        mode=args.mode,
    )


def verify_named(name: str, params: SijParams, phi: Sijection) -> Tuple[bool, str, dict]:
    """Validity plus every compatibility `name` promises; returns (ok, text, data)."""
    report = verify_sijection(phi)
    data = {"valid": report.valid, "checked": report.checked, "reason": report.reason,
            "witness": describe(report.witness), "compatibility": []}
    if not report.valid:
        return False, report.summary(), data
    compatible, failures = [], []
    for on_domain, on_codomain in statistic_pairs(name, params, phi):
        result = check_compatibility(phi, on_domain, on_codomain)
        data["compatibility"].append({
            "statistic": result.statistic,
            "compatible": result.compatible,
            "witness": describe(result.witness),
        })
        if result.compatible:
            compatible.append(result.statistic)
        else:
            failures.append(result.summary())
    if failures:
        return False, "valid; " + "; ".join(failures), data
    text = "valid; compatible: " + ", ".join(compatible) if compatible else "valid"
    return True, text, data


def _graph(args: argparse.Namespace, name: str, phi: Sijection) -> int:
    if args.format == "dot":
        print(to_dot(phi, name), end="")
        return EXIT_OK
    edges = graph_edges(phi)
    emit(
        args,
        [f"{describe(a)} -- {describe(b)}" for a, b in edges],
        [[describe(a), describe(b)] for a, b in edges],
    )
    return EXIT_OK


def cmd_sij(args: argparse.Namespace) -> int:
    params = _sij_params(args)
    phi = build(args.name, params)
    if args.action == "graph":
        return _graph(args, args.name, phi)
    ok, text, data = verify_named(args.name, params, phi)
    emit(args, [text], data)
    return EXIT_OK if ok else EXIT_FAILURE


def _read_items(text: str) -> List[SidedElement]:
    """Lines `[domain|codomain] <element>`; the side defaults to domain."""
    items = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        side = Side.DOM
        head = line.split(None, 1)
        if head[0] in ("domain", "codomain") and len(head) == 2:
            side = Side.DOM if head[0] == "domain" else Side.COD
            line = head[1]
        items.append(SidedElement(side, parse_element(line)))
    return items


def cmd_gamma(args: argparse.Namespace) -> int:
    params = SijParams(k=parse_ints(args.k), x=parse_x(args.x))
    phi = build("gamma", params)
    if args.action == "verify":
        ok, text, data = verify_named("gamma", params, phi)
        emit(args, [text], data)
        return EXIT_OK if ok else EXIT_FAILURE
    if args.format == "dot":
        return _graph(args, "gamma", phi)
    items = _read_items(read_text(args.input)) if args.input else [i for i in phi.items() if i.side is Side.DOM]
    pairs = [(item, phi.apply(item)) for item in items]
    emit(
        args,
        [f"{describe(a)} -> {describe(b)}" for a, b in pairs],
        [{"from": describe(a), "to": describe(b)} for a, b in pairs],
    )
    return EXIT_OK


def cmd_weighted(args: argparse.Namespace) -> int:
    k = parse_ints(args.k)
    if args.side == "both":
        left, right = gmt_weighted_sum(k), ar_sgt_weighted_sum(k)
        equal = left == right
        emit(args, ["equal" if equal else "different"], {"equal": equal, "gmt": left.lines(), "arsgt": right.lines()})
        return EXIT_OK if equal else EXIT_FAILURE
    poly = gmt_weighted_sum(k) if args.side == "gmt" else ar_sgt_weighted_sum(k)
    emit(args, poly.lines() or ["0"], {"terms": poly.lines()})
    return EXIT_OK


def cmd_acceptance(args: argparse.Namespace, config: RunConfig) -> int:
    from gtsij.acceptance import run_acceptance

    if args.report_dir:
        config.report_dir = args.report_dir
    result = run_acceptance(args.level, config)
    emit(args, result.lines(), result.to_records())
    return EXIT_OK if result.passed else EXIT_FAILURE


# Parser

def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps a flag given before the subcommand from being reset by the sub-parser
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--config", help="YAML configuration file (default: config/config.yml)")
    common.add_argument("--budget", type=int, help="Max support elements per signed set")
    common.add_argument("--format", choices=["text", "json", "dot"], help="Output format")
    common.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    common.add_argument("--quiet", action="store_true", help="Log warnings and errors only")

    parser = argparse.ArgumentParser(
        prog="gtsij", description="Sijections between Gelfand-Tsetlin patterns, monotone triangles and ASMs.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("gt", parents=[common], help="Gelfand-Tsetlin patterns")
    p.add_argument("action", choices=["size", "enumerate", "restrict"])
    p.add_argument("--k", required=True, help="Bottom row, e.g. 1,3,5")
    p.add_argument("--profile", help="Row profile for restrict, e.g. 1/1,3/1,3,5")

    p = sub.add_parser("ggt", parents=[common], help="Generalized GT patterns")
    p.add_argument("action", choices=["size"])
    p.add_argument("--k", required=True)
    p.add_argument("--params", required=True, help="File of 'i j p q' lines")

    p = sub.add_parser("asm", parents=[common], help="Alternating sign matrices")
    p.add_argument("action", choices=["enumerate", "to-mt"])
    p.add_argument("--n", type=int)
    p.add_argument("--file", help="Matrix file: one row of integers per line")

    p = sub.add_parser("mt", parents=[common], help="Monotone triangles")
    p.add_argument("action", choices=["enumerate"])
    p.add_argument("--k", required=True)

    for name, text in (("gmt", "Generalized monotone triangles"), ("sgt", "Shifted GT patterns")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("action", choices=["size", "enumerate"])
        p.add_argument("--k", required=True)
        p.add_argument("--mode", choices=["fk", "af"], default="fk", help="Sign of double arrows")

    p = sub.add_parser("inv", parents=[common], help="Inversion number of one object")
    p.add_argument("--kind", choices=["asm", "mt", "gmt", "sgt"], required=True)
    p.add_argument("--k")
    p.add_argument("--in", dest="input", required=True, help="Matrix file or element s-expression")
    p.add_argument("--mode", choices=["fk", "af"], default="fk")

    p = sub.add_parser("sij", parents=[common], help="Verify or draw a named sijection")
    p.add_argument("action", choices=["verify", "graph"])
    p.add_argument("--name", choices=sorted(CATALOG), required=True)
    for flag in ("--k", "--a", "--b"):
        p.add_argument(flag, help="Comma separated integers")
    p.add_argument("--c", type=int)
    p.add_argument("--x", help="'auto' or an integer")
    p.add_argument("--i", type=int, help="1-based position")
    p.add_argument("--mode", choices=["fk", "af"], default="fk")

    p = sub.add_parser("gamma", parents=[common], help="The sijection GMT(k) <=> SGT(k)")
    p.add_argument("action", choices=["apply", "verify"])
    p.add_argument("--k", required=True)
    p.add_argument("--x", default="auto", help="'auto' (max(k)+n) or an integer")
    p.add_argument("--in", dest="input", help="Lines '[domain|codomain] <element>'")

    p = sub.add_parser("weighted", parents=[common], help="Weighted enumeration (mode af)")
    p.add_argument("action", choices=["sum"])
    p.add_argument("--side", choices=["gmt", "arsgt", "both"], required=True)
    p.add_argument("--k", required=True)

    p = sub.add_parser("acceptance", parents=[common], help="Run the acceptance suites")
    p.add_argument("--level", choices=["quick", "full"], default="quick")
    p.add_argument("--report-dir", help="Directory for the suite report")
    return parser


COMMANDS = {
    "gt": cmd_gt,
    "ggt": cmd_ggt,
    "asm": cmd_asm,
    "mt": cmd_mt,
    "gmt": cmd_gmt,
    "sgt": cmd_sgt,
    "inv": cmd_inv,
    "sij": cmd_sij,
    "gamma": cmd_gamma,
    "weighted": cmd_weighted,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if args.command is None:
        parser.print_help()
        return EXIT_USAGE
    for option, default in (("config", None), ("budget", None), ("format", None), ("verbose", False), ("quiet", False)):
        if not hasattr(args, option):
            setattr(args, option, default)

    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    elif args.quiet:
        logging.getLogger().setLevel(logging.WARNING)

    try:
        config = load_config(args.config)
        if args.budget is not None:
            config.element_budget = args.budget
            config.__post_init__()
        if args.format is None:
            args.format = config.output_format
        set_element_budget(config.element_budget)
        if args.command == "acceptance":
            return cmd_acceptance(args, config)
        return COMMANDS[args.command](args)
    except BudgetExceededError:
        # Already logged where the budget was refused
        return EXIT_BUDGET
    except InterfaceError as exc:
        logging.error(f"{exc}")
        return EXIT_USAGE
    except GtsijError as exc:
        logging.error(f"Internal error: {exc}")
        return EXIT_FAILURE


if __name__ == '__main__':
    sys.exit(main())
