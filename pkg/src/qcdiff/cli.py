"""Command-line front end: simulate, expand, render.

Exit codes: 0 success, 1 parse/validation error, 2 numeric invariant breach
(state norm drift), 3 expansion verification failure.
"""
from __future__ import annotations

import argparse
import sys
import warnings

from .circuit import Circuit
from .expansion import ExpansionMode, expand_circuit, expand_gate, verify_expansion
from .render import render_report
from .report import BAR_MODES, build_report, report_to_json
from .serialization import CircuitParseError, parse_circuit, serialize_circuit
from .statevector import NormDriftError

VERIFY_TOL = 1e-10


def _read_source(source: str) -> str:
    if source.startswith("circuit="):
        return source
    if source == "-":
        return sys.stdin.read()
    with open(source, encoding="utf-8") as fh:
        return fh.read()


def _load_circuit(source: str) -> Circuit:
    return parse_circuit(_read_source(source))


def _bool_flag(value: str) -> bool:
    lowered = value.lower()
    if lowered in ("true", "1", "yes"):
        return True
    if lowered in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {value!r}")


def _add_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("source", help='circuit file, "-" for stdin, or a '
                                       '"circuit=..." query string')


def _add_display_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--layout", type=int, default=None, metavar="K",
                        help="column bits of the wrapped grid (default max(0, n-4))")
    parser.add_argument("--bars", choices=BAR_MODES, default="probability",
                        help="bar-length mode")
    parser.add_argument("--decades", type=int, default=6,
                        help="visible decades in log bar mode")


def cmd_simulate(args: argparse.Namespace) -> int:
    circuit = _load_circuit(args.source)
    report = build_report(circuit, layout_k=args.layout, bars=args.bars,
                          decades=args.decades)
    sys.stdout.write(report_to_json(report) + "\n")
    return 0


def cmd_expand(args: argparse.Namespace) -> int:
    circuit = _load_circuit(args.source)
    mode = ExpansionMode(use_generalized=(args.expand == "generalized"),
                         keep_global_phase=args.keep_global_phase)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        expanded = expand_circuit(circuit, mode)
        if args.verify:
            worst = 0.0
            for layer in circuit.layers:
                for placement in layer.gates:
                    if placement.kind.is_core:
                        continue
                    result = expand_gate(placement, mode)
                    worst = max(worst, verify_expansion(placement, result,
                                                        mode.keep_global_phase))
            if worst > VERIFY_TOL:
                print(f"expansion verification failed: max deviation {worst:.3e} "
                      f"> {VERIFY_TOL}", file=sys.stderr)
                return 3
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    sys.stdout.write(serialize_circuit(expanded) + "\n")
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    circuit = _load_circuit(args.source)
    report = build_report(circuit, layout_k=args.layout, bars=args.bars,
                          decades=args.decades)
    document = render_report(report)
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(document)
    else:
        sys.stdout.write(document)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcdiff",
        description="Simulate quantum circuits layer-by-layer with "
                    "difference annotations and pairwise qubit analytics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("simulate", help="emit a SimulationReport as JSON")
    _add_source(p_sim)
    _add_display_options(p_sim)
    p_sim.set_defaults(func=cmd_simulate)

    p_exp = sub.add_parser("expand", help="rewrite non-core gates into core sequences")
    _add_source(p_exp)
    p_exp.add_argument("--expand", choices=("basic", "generalized"), default="basic",
                       help="expansion table to use")
    p_exp.add_argument("--keep-global-phase", type=_bool_flag, default=True,
                       metavar="BOOL", help="keep GlobalPhase gates in expansions")
    p_exp.add_argument("--verify", action="store_true",
                       help="check every rewritten gate against its matrix")
    p_exp.set_defaults(func=cmd_expand)

    p_ren = sub.add_parser("render", help="render a static SVG of the simulation")
    _add_source(p_ren)
    _add_display_options(p_ren)
    p_ren.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    p_ren.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CircuitParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except NormDriftError as e:
        print(f"numeric error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
