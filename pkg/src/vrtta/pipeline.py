"""Document processing: line/verse splitting, identification, export.

Input text is split into lines on the standard end markers (newline,
danda, double danda, full stop).  Verse blocks come from blank lines when
the document has any; otherwise each double danda closes a block.

Line mode identifies each line on its own.  Verse mode pools the
candidate meters of all padas and picks the one whose cumulative cost
over the verse is smallest; each pada's match list is then reordered so
the verse meter comes first.  A line that direct-matched a two-pada
(merged) entry consumes two pada indices in that scoring.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from . import matcher
from .matcher import Match
from .meterdb import MetricalDatabase, PadaPattern
from .prosody import (
    GanaSignature,
    LgSignature,
    Syllable,
    Warning_,
    matra_count,
    scan_line,
    to_gana,
)
from .translit import NormalizedText, Scheme

LINE_MARKERS = re.compile(r"[\n।॥.]")


@dataclass
class Line:
    raw: str
    text: str
    span: tuple[int, int]


@dataclass
class Document:
    verses: list[list[Line]]

    @property
    def lines(self) -> list[Line]:
        return [line for verse in self.verses for line in verse]


@dataclass
class LineResult:
    line: Line
    syllables: list[Syllable]
    lg: LgSignature
    gana: GanaSignature
    syllable_count: int
    matra_count: int
    direct_matches: list[Match] = field(default_factory=list)
    fuzzy_matches: list[Match] = field(default_factory=list)
    warnings: list[Warning_] = field(default_factory=list)
    # set in verse mode: verse meter first, then the line's own matches
    ordered_matches: list[Match] | None = None

    @property
    def matches(self) -> list[Match]:
        if self.ordered_matches is not None:
            return self.ordered_matches
        return self.direct_matches + self.fuzzy_matches

    @property
    def chosen(self) -> Match | None:
        if self.ordered_matches is not None:
            return self.ordered_matches[0] if self.ordered_matches else None
        for kind in ("exact", "multiple", "pattern"):
            for m in self.direct_matches:
                if m.kind == kind:
                    return m
        if self.fuzzy_matches:
            return self.fuzzy_matches[0]
        return None

    @property
    def consumes_two_padas(self) -> bool:
        return any(
            m.kind == "multiple"
            or (m.pada_label or "").startswith("Pāda") and "-" in (m.pada_label or "")
            for m in self.direct_matches
        )


@dataclass
class VerseResult:
    lines: list[LineResult]
    verse_meter: str | None = None
    verse_cost: int | None = None
    pada_costs: list[int] = field(default_factory=list)
    verse_matches: list[Match] = field(default_factory=list)


@dataclass
class Stats:
    lines_total: int = 0
    lines_exact: int = 0
    lines_fuzzy: int = 0
    lines_unidentified: int = 0
    histogram: dict[str, dict[str, int]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "lines_total": self.lines_total,
            "lines_exact": self.lines_exact,
            "lines_fuzzy": self.lines_fuzzy,
            "lines_unidentified": self.lines_unidentified,
            "histogram": {
                name: dict(counts)
                for name, counts in sorted(self.histogram.items())
            },
        }


@dataclass
class Result:
    mode: str
    scheme: str
    verses: list[VerseResult]
    stats: Stats

    @property
    def line_results(self) -> list[LineResult]:
        return [lr for verse in self.verses for lr in verse.lines]


###############################################################################
# Splitting


def _split_block(block: str, offset: int) -> list[Line]:
    lines: list[Line] = []
    start = 0
    for match in LINE_MARKERS.finditer(block + "\n"):
        fragment = block[start : match.start()]
        if fragment.strip():
            lead = len(fragment) - len(fragment.lstrip())
            text = fragment.strip()
            lines.append(
                Line(
                    raw=fragment,
                    text=text,
                    span=(offset + start + lead, offset + start + lead + len(text)),
                )
            )
        start = match.end()
    return lines


def split_document(text: NormalizedText | str) -> Document:
    """Split normalized text into verse blocks of lines."""
    body = text.devanagari if isinstance(text, NormalizedText) else text
    raw_lines = body.split("\n")
    has_blank = any(not rl.strip() for rl in raw_lines) and any(
        rl.strip() for rl in raw_lines
    )

    verses: list[list[Line]] = []
    if has_blank:
        block: list[str] = []
        offsets: list[int] = []
        pos = 0
        for rl in raw_lines:
            if rl.strip():
                block.append(rl)
                offsets.append(pos)
            elif block:
                verses.append(_flush_block(block, offsets))
                block, offsets = [], []
            pos += len(rl) + 1
        if block:
            verses.append(_flush_block(block, offsets))
    else:
        current: list[Line] = []
        start = 0
        for match in re.finditer(r"[\n।॥.]", body + "\n"):
            fragment = body[start : match.start()]
            if fragment.strip():
                lead = len(fragment) - len(fragment.lstrip())
                text_ = fragment.strip()
                current.append(
                    Line(fragment, text_, (start + lead, start + lead + len(text_)))
                )
            if match.group() == "॥" and current:
                verses.append(current)
                current = []
            start = match.end()
        if current:
            verses.append(current)
    return Document([v for v in verses if v])


def _flush_block(block: list[str], offsets: list[int]) -> list[Line]:
    lines: list[Line] = []
    for raw, offset in zip(block, offsets):
        lines.extend(_split_block(raw, offset))
    return lines


###############################################################################
# Identification


def identify_line(
    line: Line, db: MetricalDatabase, k: int = matcher.DEFAULT_TOP_K
) -> LineResult:
    warnings: list[Warning_] = []
    syllables, lg = scan_line(line.text, warnings)
    result = LineResult(
        line=line,
        syllables=syllables,
        lg=lg,
        gana=to_gana(lg),
        syllable_count=len(syllables),
        matra_count=matra_count(lg),
        warnings=warnings,
    )
    if not syllables:
        return result
    result.direct_matches = matcher.find_direct_match(lg, db)
    result.direct_matches += matcher.find_pattern_match(lg, db)
    if not result.direct_matches:
        result.fuzzy_matches = matcher.find_fuzzy_match(lg, syllables, db, k)
    return result


def _pada_targets(
    meter_name: str, line_results: list[LineResult], db: MetricalDatabase
) -> list[PadaPattern]:
    """Expected pattern per line for one candidate meter."""
    meter = db.meters[meter_name]
    targets: list[PadaPattern] = []
    index = 0
    for lr in line_results:
        pattern = meter.pattern_for_pada(index)
        if lr.consumes_two_padas:
            pattern = pattern.concat(meter.pattern_for_pada(index + 1))
            index += 2
        else:
            index += 1
        targets.append(pattern)
    return targets


def identify_verse(
    line_results: list[LineResult],
    db: MetricalDatabase,
    k: int = matcher.DEFAULT_TOP_K,
) -> VerseResult:
    """Pick the meter minimizing cumulative cost over the verse."""
    result = VerseResult(lines=line_results)
    pool: set[str] = set()
    for lr in line_results:
        for m in lr.direct_matches:
            pool.add(m.meter_name)
        for m in lr.fuzzy_matches:
            pool.add(m.meter_name)
    pool = {name for name in pool if name in db.meters}
    if not pool:
        return result

    best: tuple[int, str] | None = None
    best_costs: list[int] = []
    for name in sorted(pool):
        targets = _pada_targets(name, line_results, db)
        costs = []
        for lr, target in zip(line_results, targets):
            if any(m.meter_name == name for m in lr.direct_matches):
                costs.append(0)
            else:
                costs.append(matcher.transform_cost(lr.lg.text, target))
        total = sum(costs)
        if best is None or (total, name) < best:
            best = (total, name)
            best_costs = costs
    assert best is not None
    result.verse_meter = best[1]
    result.verse_cost = best[0]
    result.pada_costs = best_costs

    # Re-render each pada so the verse meter's reading is listed first.
    targets = _pada_targets(result.verse_meter, line_results, db)
    for lr, target, cost in zip(line_results, targets, best_costs):
        verse_match = _verse_match(result.verse_meter, lr, target, cost, db)
        result.verse_matches.append(verse_match)
        others = [
            m
            for m in lr.direct_matches + lr.fuzzy_matches
            if m.meter_name != result.verse_meter
        ]
        lr.ordered_matches = [verse_match] + others
    return result


def _verse_match(
    name: str, lr: LineResult, target: PadaPattern, cost: int, db: MetricalDatabase
) -> Match:
    direct = next(
        (m for m in lr.direct_matches if m.meter_name == name), None
    )
    if direct is not None and cost == 0:
        return direct
    if cost == 0:
        kind = "exact" if target.fixed else "pattern"
        return Match(name, None, kind, cost=0, similarity=1.0, target=target.text)
    _, ops = matcher.transform(lr.lg.text, target)
    return Match(
        name,
        None,
        "fuzzy",
        cost=cost,
        similarity=matcher.similarity(cost, len(target)),
        target=target.text,
        edit_ops=ops,
        suggestion=matcher.render_suggestion(lr.syllables, ops, target),
    )


def collect_stats(line_results: list[LineResult]) -> Stats:
    stats = Stats()
    for lr in line_results:
        stats.lines_total += 1
        chosen = lr.chosen
        if chosen is None:
            stats.lines_unidentified += 1
            continue
        bucket = "fuzzy" if chosen.kind == "fuzzy" else "exact"
        if bucket == "fuzzy":
            stats.lines_fuzzy += 1
        else:
            stats.lines_exact += 1
        entry = stats.histogram.setdefault(
            chosen.display_name, {"exact": 0, "fuzzy": 0}
        )
        entry[bucket] += 1
    return stats


###############################################################################
# Orchestration


def identify_document(
    text: str,
    db: MetricalDatabase,
    mode: str = "verse",
    scheme: Scheme | str = "auto",
    k: int = matcher.DEFAULT_TOP_K,
) -> Result:
    """Full pipeline: normalize, split, identify, aggregate."""
    from . import translit

    if isinstance(scheme, str) and scheme != "auto":
        scheme = Scheme(scheme)
    detected = translit.detect_scheme(text) if scheme == "auto" else scheme
    normalized = translit.to_devanagari(text, detected)
    document = split_document(normalized)

    verses: list[VerseResult] = []
    for verse_lines in document.verses:
        line_results = [identify_line(line, db, k) for line in verse_lines]
        if mode == "verse":
            verses.append(identify_verse(line_results, db, k))
        else:
            verses.append(VerseResult(lines=line_results))
    stats = collect_stats([lr for v in verses for lr in v.lines])
    return Result(mode=mode, scheme=detected.value, verses=verses, stats=stats)


###############################################################################
# Export


def _match_dict(m: Match) -> dict:
    return {
        "name": m.display_name,
        "kind": m.kind,
        "cost": m.cost,
        "similarity": m.similarity,
        "suggestion_cells": m.suggestion.cells if m.suggestion else None,
    }


def _line_dict(lr: LineResult) -> dict:
    return {
        "text": lr.line.text,
        "lg": lr.lg.text,
        "gana": lr.gana.text,
        "syllables": [s.display for s in lr.syllables],
        "syllable_count": lr.syllable_count,
        "matra_count": lr.matra_count,
        "matches": [_match_dict(m) for m in lr.matches],
    }


def to_dict(result: Result) -> dict:
    return {
        "mode": result.mode,
        "scheme": result.scheme,
        "verses": [
            {
                "lines": [_line_dict(lr) for lr in verse.lines],
                "verse_meter": verse.verse_meter,
                "verse_cost": verse.verse_cost,
            }
            for verse in result.verses
        ],
        "stats": result.stats.to_dict(),
    }


def _compact_meter(lr: LineResult) -> str:
    chosen = lr.chosen
    if chosen is None:
        return "?"
    if chosen.kind == "fuzzy" or chosen.cost:
        unit = "edit" if chosen.cost == 1 else "edits"
        return f"{chosen.display_name} ({chosen.cost} {unit})"
    return chosen.display_name


def compact_lines(result: Result) -> list[str]:
    return [
        f"{lr.line.text} | {lr.lg.text} | {lr.gana.text} | {_compact_meter(lr)}"
        for lr in result.line_results
    ]


def export(result: Result, format: str = "detailed") -> str:
    """Serialize a result; 'detailed' is JSON, 'compact' one row per pada."""
    if format == "detailed":
        return json.dumps(to_dict(result), ensure_ascii=False, indent=2) + "\n"
    if format == "compact":
        return "".join(line + "\n" for line in compact_lines(result))
    raise ValueError(f"unknown format: {format}")


def stats_footer(stats: Stats) -> str:
    rows = [
        "stats: lines={} exact={} fuzzy={} unidentified={}".format(
            stats.lines_total,
            stats.lines_exact,
            stats.lines_fuzzy,
            stats.lines_unidentified,
        )
    ]
    for name, counts in sorted(stats.histogram.items()):
        rows.append(f"  {name}: exact={counts['exact']} fuzzy={counts['fuzzy']}")
    return "".join(row + "\n" for row in rows)
