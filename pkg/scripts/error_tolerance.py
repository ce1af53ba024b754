#!/usr/bin/env python3
"""Randomized error-tolerance experiment.

Takes a corpus of clean verses (blank-line separated), injects one random
single-character corruption per trial (vowel length toggle, character
deletion, or cluster split), and measures how often verse-mode
identification still reports the expected meter.

    python scripts/error_tolerance.py tests/data/meghaduta_excerpt.txt \
        --meter मन्दाक्रान्ता --trials 500 --seed 7
"""

from __future__ import annotations

import argparse
import random
import sys
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from vrtta import meterdb, pipeline, prosody


@dataclass
class ExperimentConfig:
    corpus: str
    meter: str
    trials: int = 100
    seed: int = 271828
    k: int = 10
    db_path: str | None = None


TOGGLES = {"ि": "ी", "ी": "ि", "ु": "ू", "ू": "ु", "ृ": "ॄ", "ॄ": "ृ",
           "इ": "ई", "ई": "इ", "उ": "ऊ", "ऊ": "उ"}
PROTECTED = set("।॥\n")


def corrupt(text: str, rnd: random.Random) -> tuple[str, str]:
    modes = []
    toggle_at = [i for i, c in enumerate(text) if c in TOGGLES]
    if toggle_at:
        modes.append("vowel")
    delete_at = [i for i, c in enumerate(text)
                 if c not in PROTECTED and not c.isspace()]
    if delete_at:
        modes.append("delete")
    split_at = [i for i, c in enumerate(text) if c == prosody.HALANTA]
    if split_at:
        modes.append("split")
    mode = rnd.choice(modes)
    if mode == "vowel":
        i = rnd.choice(toggle_at)
        return text[:i] + TOGGLES[text[i]] + text[i + 1:], mode
    if mode == "delete":
        i = rnd.choice(delete_at)
        return text[:i] + text[i + 1:], mode
    i = rnd.choice(split_at)
    return text[:i] + text[i + 1:], mode


def run(config: ExperimentConfig) -> int:
    db = meterdb.load_path(config.db_path)
    text = Path(config.corpus).read_text(encoding="utf-8")
    blocks = [b for b in text.split("\n\n") if b.strip()]
    if not blocks:
        print("no verses found", file=sys.stderr)
        return 1

    clean_ok = 0
    for block in blocks:
        result = pipeline.identify_document(block, db, mode="verse", k=config.k)
        if result.verses and result.verses[0].verse_meter == config.meter:
            clean_ok += 1
    print(f"clean verses identified as {config.meter}: {clean_ok}/{len(blocks)}")

    rnd = random.Random(config.seed)
    hits = 0
    by_mode: Counter[str] = Counter()
    miss_by_mode: Counter[str] = Counter()
    for t in range(config.trials):
        block = blocks[t % len(blocks)]
        corrupted, mode = corrupt(block, rnd)
        by_mode[mode] += 1
        result = pipeline.identify_document(
            corrupted, db, mode="verse", k=config.k
        )
        if result.verses and result.verses[0].verse_meter == config.meter:
            hits += 1
        else:
            miss_by_mode[mode] += 1
    rate = 100.0 * hits / config.trials
    print(f"corrupted trials correct: {hits}/{config.trials} ({rate:.1f}%)")
    for mode in sorted(by_mode):
        misses = miss_by_mode.get(mode, 0)
        print(f"  {mode}: {by_mode[mode] - misses}/{by_mode[mode]} correct")
    return 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("corpus", help="blank-line separated verse file")
    parser.add_argument("--meter", required=True, help="expected meter name")
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--seed", type=int, default=271828)
    parser.add_argument("--k", type=int, default=10)
    parser.add_argument("--db", dest="db_path")
    args = parser.parse_args()
    return run(ExperimentConfig(**vars(args)))


if __name__ == "__main__":
    sys.exit(main())
