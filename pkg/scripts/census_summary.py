#!/usr/bin/env python3
"""Summarize a census .jsonl written by `curve-invariants.py census`.

Prints class counts per crossing number and the spread of St, J+ and J- values.
"""
from fractions import Fraction
from pathlib import Path
import argparse
import sys

import pandas as pd


def load_census(path):
    table = pd.read_json(path, lines=True, dtype={'Jplus': str, 'Jminus': str, 'St': str})
    for col in ('Jplus', 'Jminus', 'St'):
        table[col] = table[col].map(Fraction)
    return table


def summarize(table: pd.DataFrame) -> pd.DataFrame:
    grouped = table.groupby(['crossings', 'class'])
    out = grouped.size().rename('curves').to_frame()
    for col in ('St', 'Jplus', 'Jminus'):
        out[f'{col}_min'] = grouped[col].min().map(str)
        out[f'{col}_max'] = grouped[col].max().map(str)
    return out.reset_index()


def main(argv=None):
    parser = argparse.ArgumentParser(description='Summarize a census .jsonl file.')
    parser.add_argument('census', type=Path, help='Census file (one JSON object per line)')
    parser.add_argument('--csv', type=Path, default=None, help='Also write the summary to this CSV path')
    args = parser.parse_args(argv)

    if not args.census.exists():
        print(f'No census file at {args.census}')
        return 1
    summary = summarize(load_census(args.census))
    print(summary.to_string(index=False))
    if args.csv:
        summary.to_csv(args.csv, index=False)
        print('Summary written to', args.csv)
    return 0


if __name__ == '__main__':
    sys.exit(main())
