#!/usr/bin/env python3
"""Run every verification suite and write the failures of each to a CSV under reports/.

Suites that pass leave no CSV. Exit status is 3 when any suite fails.
"""
from pathlib import Path
import argparse
import logging
import sys

proj = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(proj))

from verify import SUITES, run_suite  # noqa: E402

parser = argparse.ArgumentParser(description='Run verification suites and save failure tables.')
parser.add_argument('-n', '--max-crossings', type=int, default=4,
                    help='Crossing bound, or index range for RELATIONS and VANISH (default: 4)')
parser.add_argument('-s', '--suites', default=','.join(SUITES),
                    help="Comma-separated suite names (default: all)")
parser.add_argument('-o', '--output-dir', type=Path, default=Path('reports'),
                    help='Directory for failure CSVs (default: reports)')
args = parser.parse_args()

logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')

names = [s.strip().upper() for s in args.suites.split(',') if s.strip()]
failed = []
for name in names:
    report = run_suite(name, args.max_crossings)
    print(report.summary())
    for note in report.notes:
        print(f'  {note}')
    if not report.ok:
        failed.append(name)
        args.output_dir.mkdir(parents=True, exist_ok=True)
        out = args.output_dir / f'{name.lower()}_failures.csv'
        report.to_frame().to_csv(out, index=False)
        print(f'  failures written to {out}')

if failed:
    print('Failed suites:', ', '.join(failed))
    sys.exit(3)
print('All suites passed.')
