"""Exhaustive enumeration of stable spherical curves and of their singular sites.

Words are double-occurrence words normalized by first appearance and reduced to
one representative per cyclic rotation; every sign assignment is tried and kept
when the signed code builds a spherical map.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from pathlib import Path
from typing import Iterator, List, Tuple

import pandas as pd

from codec import SignedGaussCode, emit_json_line
from curvemap import CurveMap, NotRealizable, build_map, canonical_form, faces
from invariants import universal_report
from singular import SiteDescriptor, tangency_sites, triple_sites

logger = logging.getLogger(__name__)

MAX_PRACTICAL_CROSSINGS = 6


@dataclass
class Corpus:
    n_max: int
    dedup: bool
    entries: List[Tuple[SignedGaussCode, CurveMap]] = field(default_factory=list)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def maps(self) -> List[CurveMap]:
        return [cmap for _, cmap in self.entries]


def _normalize(word: Tuple[int, ...]) -> Tuple[int, ...]:
    relabel = {}
    for label in word:
        relabel.setdefault(label, len(relabel) + 1)
    return tuple(relabel[label] for label in word)


def gauss_words(n: int) -> Iterator[Tuple[int, ...]]:
    """First-appearance normalized double-occurrence words of length 2n."""
    if n == 0:
        yield ()
        return

    def extend(word, open_labels, next_label):
        if len(word) == 2 * n:
            yield tuple(word)
            return
        if next_label <= n:
            yield from extend(word + [next_label], open_labels + [next_label], next_label + 1)
        for label in open_labels:
            rest = [x for x in open_labels if x != label]
            yield from extend(word + [label], rest, next_label)

    yield from extend([], [], 1)


def rotation_representatives(n: int) -> List[Tuple[int, ...]]:
    """Words that are least among the normalized forms of their rotations."""
    reps = []
    for word in gauss_words(n):
        rotations = (_normalize(word[r:] + word[:r]) for r in range(len(word)))
        if word == min(rotations, default=word):
            reps.append(word)
    return reps


def enumerate_curves(n: int, dedup: bool = True) -> Corpus:
    """All realizable signed codes with exactly n crossings."""
    if not 0 <= n <= MAX_PRACTICAL_CROSSINGS:
        raise ValueError(f"crossing count must be in 0..{MAX_PRACTICAL_CROSSINGS}, got {n}")
    corpus = Corpus(n_max=n, dedup=dedup)
    seen = set()
    rejected = 0
    for word in rotation_representatives(n):
        for signs in product((1, -1), repeat=n):
            code = SignedGaussCode(word, {label: s for label, s in zip(range(1, n + 1), signs)})
            try:
                cmap = build_map(code)
            except NotRealizable:
                rejected += 1
                continue
            canon = canonical_form(cmap)
            if dedup:
                if canon in seen:
                    continue
                seen.add(canon)
            corpus.entries.append((canon, cmap))
    logger.debug(f"n={n}: {len(corpus)} curves kept, {rejected} sign choices not spherical")
    return corpus


@lru_cache(maxsize=None)
def _corpus_upto(n: int, dedup: bool) -> Corpus:
    merged = Corpus(n_max=n, dedup=dedup)
    for k in range(n + 1):
        merged.entries.extend(enumerate_curves(k, dedup).entries)
    logger.info(f"corpus up to {n} crossings ({'dedup' if dedup else 'all codes'}): {len(merged)} curves")
    return merged


def corpus_upto(n: int, dedup: bool = True) -> Corpus:
    return _corpus_upto(n, dedup)


def enumerate_sites(cmap: CurveMap) -> List[SiteDescriptor]:
    table = faces(cmap)
    return tangency_sites(cmap, table) + triple_sites(cmap, table)


def census(n: int, k1=0, k2=0) -> pd.DataFrame:
    """One row per curve class with at most n crossings."""
    rows = []
    for _, cmap in corpus_upto(n, dedup=True):
        report = universal_report(cmap, k1, k2)
        row = report.to_dict()
        row['F'] = str(report.value)
        rows.append(row)
    table = pd.DataFrame(rows, columns=['code', 'crossings', 'class', 'F', 'X', 'Y', 'psi', 'eta',
                                        'Jplus', 'Jminus', 'St'])
    logger.info(f"census up to {n} crossings: {len(table)} classes")
    return table


def census_to_jsonl(table: pd.DataFrame, path: Path) -> int:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    records = table.to_dict(orient='records')
    with open(path, 'w') as f:
        for record in records:
            f.write(emit_json_line(record) + '\n')
    logger.info(f"wrote {len(records)} census rows to {path}")
    return len(records)
