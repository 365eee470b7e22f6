#!/usr/bin/env python3
"""Order 1 invariants of spherical curves

Reads signed Gauss codes (.gc files), computes the universal order 1 invariant
F and everything derived from it, evaluates singularity symbols and runs the
verification suites over enumerated curve corpora.

Exit codes: 0 success, 1 malformed input, 2 not realizable, 3 verification failure
(including an identity that fails while building a report).
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

import settings
from codec import MalformedCode, emit_json, emit_json_line, parse_gauss
from curvemap import NotRealizable, build_map, canonical_form, regular_homotopy_class
from enumeration import MAX_PRACTICAL_CROSSINGS, census, census_to_jsonl, corpus_upto
from invariants import InvariantViolation, universal_report
from symbols import format_symbol, f1_of_symbol, parse_symbol, reduce_to_basis, symbol_class
from verify import SUITES, run_all, run_suite

logger = logging.getLogger('curve-invariants')

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_NOT_REALIZABLE = 2
EXIT_VERIFY_FAILED = 3

COMMANDS = ('validate', 'invariants', 'enumerate', 'census', 'symbol', 'verify')


@dataclass
class Config:
    command: str
    inputs: List[Path] = field(default_factory=list)
    out: Optional[Path] = None
    max_crossings: int = settings.MAX_CROSSINGS
    k1: Fraction = settings.K1
    k2: Fraction = settings.K2
    fmt: str = 'json'
    dedup: bool = True
    suite: Optional[str] = None
    symbol_op: Optional[str] = None
    symbol_text: Optional[str] = None
    verbose: bool = False
    log_file: str = settings.LOG_FILE

    def validate(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.fmt not in ('json', 'text'):
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.command in ('enumerate', 'census', 'verify') and not 0 <= self.max_crossings <= MAX_PRACTICAL_CROSSINGS:
            raise ValueError(f"--max-crossings must be in 0..{MAX_PRACTICAL_CROSSINGS}")
        if self.command == 'census' and self.out is None:
            raise ValueError("census needs --out")
        if self.command in ('validate', 'invariants') and not self.inputs:
            raise ValueError(f"{self.command} needs at least one .gc file")
        return self


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # bad command lines are malformed input, not a realizability verdict
        self.print_usage(sys.stderr)
        self.exit(EXIT_MALFORMED, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog='curve-invariants', description='Order 1 invariants of spherical curves')
    parser.add_argument('--format', dest='fmt', choices=['json', 'text'], default='json', help='Output format (default: json)')
    parser.add_argument('--k1', type=Fraction, default=settings.K1, help='Normalization constant on psi1 for Arnold invariants (default: CURVES_K1 or 0)')
    parser.add_argument('--k2', type=Fraction, default=settings.K2, help='Normalization constant on psi2 for Arnold invariants (default: CURVES_K2 or 0)')
    parser.add_argument('--verbose', action='store_true', help='Log debug detail')
    parser.add_argument('--log-file', type=str, default=settings.LOG_FILE, help='Log file path (default: CURVES_LOG_FILE or curve_invariants.log)')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('validate', help='Parse .gc files and check that they are realizable on the sphere')
    p.add_argument('files', nargs='+', type=Path)

    p = sub.add_parser('invariants', help='Print the invariant report of .gc files')
    p.add_argument('files', nargs='+', type=Path)

    p = sub.add_parser('enumerate', help='List all curves up to a crossing bound')
    p.add_argument('--max-crossings', type=int, default=settings.MAX_CROSSINGS, help='Crossing bound (default: CURVES_MAX_CROSSINGS or 4)')
    p.add_argument('--dedup', dest='dedup', action='store_true', default=True, help='One curve per sphere isotopy class (default)')
    p.add_argument('--no-dedup', dest='dedup', action='store_false', help='Every realizable signed code up to rotation')

    p = sub.add_parser('census', help='Write one JSON line per curve class')
    p.add_argument('--max-crossings', type=int, default=settings.MAX_CROSSINGS, help='Crossing bound (default: CURVES_MAX_CROSSINGS or 4)')
    p.add_argument('--out', type=Path, required=True, help='Output .jsonl path')

    p = sub.add_parser('symbol', help='Evaluate a singularity symbol such as J+[0,1] or S[2^,0,-1]')
    p.add_argument('op', choices=['f1', 'reduce', 'class'])
    p.add_argument('text')

    p = sub.add_parser('verify', help='Run a verification suite')
    p.add_argument('--suite', type=str.upper, choices=list(SUITES) + ['ALL'], default='ALL', help='Suite name or all (default: all)')
    p.add_argument('--max-crossings', type=int, default=settings.MAX_CROSSINGS, help='Crossing bound, or index range for RELATIONS and VANISH')
    return parser


def config_from_args(args) -> Config:
    return Config(
        command=args.command,
        inputs=list(getattr(args, 'files', []) or []),
        out=getattr(args, 'out', None),
        max_crossings=getattr(args, 'max_crossings', settings.MAX_CROSSINGS),
        k1=args.k1,
        k2=args.k2,
        fmt=args.fmt,
        dedup=getattr(args, 'dedup', True),
        suite=getattr(args, 'suite', None),
        symbol_op=getattr(args, 'op', None),
        symbol_text=getattr(args, 'text', None),
        verbose=args.verbose,
        log_file=args.log_file,
    ).validate()


def configure_logging(config: Config):
    # stdout carries only the declared output; diagnostics go to stderr and the log file
    log_handlers = [
        logging.FileHandler(config.log_file),
        logging.StreamHandler(sys.stderr)
    ]
    level = logging.DEBUG if config.verbose else logging.INFO
    logging.basicConfig(level=level, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s', handlers=log_handlers, force=True)


def _load(path: Path):
    text = Path(path).read_text()
    return build_map(parse_gauss(text))


def cmd_validate(config: Config) -> int:
    for path in config.inputs:
        cmap = _load(path)
        if config.fmt == 'text':
            print(f"{path}: ok, {cmap.n_crossings} crossings, class {regular_homotopy_class(cmap)}")
        else:
            print(emit_json_line({'file': str(path), 'code': str(canonical_form(cmap)),
                                  'crossings': cmap.n_crossings, 'class': regular_homotopy_class(cmap)}))
    return EXIT_OK


def _report_text(report) -> str:
    lines = [
        f"code: {report.code}",
        f"crossings: {report.crossings}",
        f"class: {report.homotopy_class}",
        f"F: {report.value}",
        f"psi: {' '.join(str(x) for x in report.psi)}",
        f"eta: {' '.join(str(x) for x in report.eta)}",
        f"Jplus: {report.jplus}",
        f"Jminus: {report.jminus}",
        f"St: {report.st}",
    ]
    return '\n'.join(lines)


def cmd_invariants(config: Config) -> int:
    for path in config.inputs:
        report = universal_report(_load(path), config.k1, config.k2)
        if config.fmt == 'text':
            print(_report_text(report))
        else:
            sys.stdout.write(emit_json(report))
    return EXIT_OK


def cmd_enumerate(config: Config) -> int:
    corpus = corpus_upto(config.max_crossings, dedup=config.dedup)
    for canon, cmap in corpus:
        if config.fmt == 'text':
            print(canon)
        else:
            print(emit_json_line({'code': str(canon), 'crossings': cmap.n_crossings,
                                  'class': regular_homotopy_class(cmap)}))
    logger.info(f"{len(corpus)} curves with at most {config.max_crossings} crossings")
    return EXIT_OK


def cmd_census(config: Config) -> int:
    table = census(config.max_crossings, config.k1, config.k2)
    rows = census_to_jsonl(table, config.out)
    if config.fmt == 'text':
        print(f"{rows} classes written to {config.out}")
    else:
        print(emit_json_line({'rows': rows, 'out': str(config.out)}))
    return EXIT_OK


def cmd_symbol(config: Config) -> int:
    symbol = parse_symbol(config.symbol_text)
    if config.symbol_op == 'f1':
        value = f1_of_symbol(symbol)
        payload = {'symbol': format_symbol(symbol), 'X': value.x_rows(), 'Y': value.y_rows()}
        text = str(value)
    elif config.symbol_op == 'reduce':
        coords = reduce_to_basis(symbol)
        payload = {'symbol': format_symbol(symbol),
                   'basis': [[format_symbol(k), c] for k, c in coords.sorted_items()]}
        text = ' + '.join(f"{c}*{format_symbol(k)}" if c != 1 else format_symbol(k)
                          for k, c in coords.sorted_items()) or '0'
    else:
        payload = {'symbol': format_symbol(symbol), 'class': symbol_class(symbol)}
        text = symbol_class(symbol)
    if config.fmt == 'text':
        print(text)
    else:
        sys.stdout.write(emit_json(payload))
    return EXIT_OK


def cmd_verify(config: Config) -> int:
    if config.suite in (None, 'ALL'):
        reports = run_all(config.max_crossings)
    else:
        reports = [run_suite(config.suite, config.max_crossings)]
    for report in reports:
        if config.fmt == 'text':
            print(report.summary())
            for note in report.notes:
                print(f"  {note}")
            for instance, expected, got in report.failures:
                print(f"  FAIL {instance}: expected {expected}, got {got}")
        else:
            print(json.dumps({'suite': report.name, 'instances': report.instances, 'ok': report.ok,
                              'failures': [list(f) for f in report.failures], 'notes': report.notes},
                             sort_keys=True))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VERIFY_FAILED


HANDLERS = {
    'validate': cmd_validate,
    'invariants': cmd_invariants,
    'enumerate': cmd_enumerate,
    'census': cmd_census,
    'symbol': cmd_symbol,
    'verify': cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MALFORMED
    configure_logging(config)

    try:
        return HANDLERS[config.command](config)
    except MalformedCode as e:
        print(f"malformed: {e}", file=sys.stderr)
        return EXIT_MALFORMED
    except NotRealizable as e:
        print(f"not realizable: {e}", file=sys.stderr)
        return EXIT_NOT_REALIZABLE
    except InvariantViolation as e:
        logger.exception(f"Internal error in {config.command}: {e}")
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MALFORMED
    except Exception as e:
        logger.exception(f"Unexpected failure in {config.command}: {e}")
        return EXIT_MALFORMED


if __name__ == '__main__':
    sys.exit(main())
