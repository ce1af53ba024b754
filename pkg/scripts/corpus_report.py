#!/usr/bin/env python3
"""Metrical statistics for a text corpus.

Runs verse-mode identification over a file and prints the meter frequency
histogram, split into exact and fuzzy identifications — handy for spotting
anomalies in single-meter works.

    python scripts/corpus_report.py tests/data/meghaduta_excerpt.txt
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from vrtta import meterdb, pipeline


@dataclass
class ReportConfig:
    corpus: str
    mode: str = "verse"
    k: int = 10
    db_path: str | None = None


def run(config: ReportConfig) -> int:
    db = meterdb.load_path(config.db_path)
    text = Path(config.corpus).read_text(encoding="utf-8")
    result = pipeline.identify_document(text, db, mode=config.mode, k=config.k)
    stats = result.stats

    print(f"lines: {stats.lines_total}")
    print(f"  exact: {stats.lines_exact}")
    print(f"  fuzzy: {stats.lines_fuzzy}")
    print(f"  unidentified: {stats.lines_unidentified}")
    print()
    width = max((len(name) for name in stats.histogram), default=0)
    for name, counts in sorted(
        stats.histogram.items(), key=lambda kv: -sum(kv[1].values())
    ):
        total = counts["exact"] + counts["fuzzy"]
        print(f"  {name:<{width}}  {total:4d}  "
              f"(exact {counts['exact']}, fuzzy {counts['fuzzy']})")

    if config.mode == "verse":
        meters = [v.verse_meter or "?" for v in result.verses]
        print()
        print(f"verses: {len(meters)}")
        for name in sorted(set(meters)):
            print(f"  {name}: {meters.count(name)}")
    return 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("corpus")
    parser.add_argument("--mode", choices=("line", "verse"), default="verse")
    parser.add_argument("--k", type=int, default=10)
    parser.add_argument("--db", dest="db_path")
    args = parser.parse_args()
    return run(ReportConfig(**vars(args)))


if __name__ == "__main__":
    sys.exit(main())
