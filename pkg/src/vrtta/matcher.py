"""Signature matching: exact lookups, positional patterns, fuzzy top-k.

Direct matching queries the exact indices and, when the line ends in a
natural laghu, retries with the final weight read as guru (meters never
forbid a guru at pada end, so the toggle is a safe fallback and is only
consulted when the plain lookup misses).

Fuzzy matching ranks every per-pada pattern by a generalized Levenshtein
distance in which substituting into a free ``[LG]`` position is free.
Candidates are ordered by cost, then similarity, then name, and the top-k
each get a rendered suggestion that marks the edits on the original
syllables with the ``i(...)``/``r(...)``/``d(...)`` notation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .meterdb import MeterRef, MetricalDatabase, PadaPattern
from .prosody import LgSignature, Syllable, toggle_vowel_length

DEFAULT_TOP_K = 10


class ZeroTargetLength(ValueError):
    pass


@dataclass(frozen=True)
class EditOp:
    """One step of an edit script against the query syllables."""

    kind: str  # 'replace' | 'insert' | 'delete'
    src_index: int
    target_weight: str | None = None  # None for delete


@dataclass
class Suggestion:
    """Per-syllable cells with edit markers, plus a by-word grouping."""

    cells: list[str]
    word_groups: list[list[str]]

    def __str__(self) -> str:
        return str(self.word_groups)


@dataclass
class Match:
    meter_name: str
    pada_label: str | None
    kind: str  # 'exact' | 'multiple' | 'pattern' | 'fuzzy'
    cost: int = 0
    similarity: float = 1.0
    target: str = ""
    edit_ops: list[EditOp] = field(default_factory=list)
    suggestion: Suggestion | None = None

    @property
    def display_name(self) -> str:
        if self.pada_label:
            return f"{self.meter_name} ({self.pada_label})"
        return self.meter_name


###############################################################################
# Edit distance against a pattern


def _substitution_cost(weight: str, position: str) -> int:
    return 0 if weight in position else 1


def transform_cost(query: str, target: PadaPattern) -> int:
    """Minimum edit cost only (two-row DP, no script)."""
    positions = target.positions
    m, n = len(query), len(positions)
    prev = list(range(n + 1))
    for i in range(1, m + 1):
        qc = query[i - 1]
        cur = [i] + [0] * n
        for j in range(1, n + 1):
            sub = prev[j - 1] + (0 if qc in positions[j - 1] else 1)
            dele = prev[j] + 1
            ins = cur[j - 1] + 1
            best = sub
            if dele < best:
                best = dele
            if ins < best:
                best = ins
            cur[j] = best
        prev = cur
    return prev[n]


def transform(query: str, target: PadaPattern) -> tuple[int, list[EditOp]]:
    """Edit cost and one optimal script turning query into target.

    Ties are broken deterministically: replace is preferred over delete,
    delete over insert.  Insertions into a free position carry weight L.
    """
    positions = target.positions
    m, n = len(query), len(positions)
    dp = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        dp[i][0] = i
    for j in range(n + 1):
        dp[0][j] = j
    for i in range(1, m + 1):
        qc = query[i - 1]
        row = dp[i]
        above = dp[i - 1]
        for j in range(1, n + 1):
            sub = above[j - 1] + (0 if qc in positions[j - 1] else 1)
            dele = above[j] + 1
            ins = row[j - 1] + 1
            row[j] = min(sub, dele, ins)

    def weight_at(j: int) -> str:
        pos = positions[j]
        return pos if pos in ("L", "G") else "L"

    ops: list[EditOp] = []
    i, j = m, n
    while i > 0 or j > 0:
        if i > 0 and j > 0:
            sub = _substitution_cost(query[i - 1], positions[j - 1])
            if dp[i][j] == dp[i - 1][j - 1] + sub:
                if sub:
                    ops.append(EditOp("replace", i - 1, weight_at(j - 1)))
                i -= 1
                j -= 1
                continue
        if i > 0 and dp[i][j] == dp[i - 1][j] + 1:
            ops.append(EditOp("delete", i - 1))
            i -= 1
            continue
        ops.append(EditOp("insert", i, weight_at(j - 1)))
        j -= 1
    ops.reverse()
    return dp[m][n], ops


def apply_ops(query: str, ops: list[EditOp]) -> str:
    """Resulting weight string after running an edit script on a query."""
    out: list[str] = []
    i = 0
    for op in ops:
        while i < op.src_index:
            out.append(query[i])
            i += 1
        if op.kind == "replace":
            out.append(op.target_weight or "")
            i += 1
        elif op.kind == "delete":
            i += 1
        else:
            out.append(op.target_weight or "")
    out.extend(query[i:])
    return "".join(out)


def similarity(cost: int, target_len: int) -> float:
    """1 minus the edit cost normalized by the target length, floored at 0."""
    if target_len < 1:
        raise ZeroTargetLength("target pattern is empty")
    return max(0.0, 1.0 - cost / target_len)


###############################################################################
# Suggestion rendering


def _replace_marker(syl: Syllable, weight: str) -> str:
    alt = None
    vowel = syl.vowel
    if weight == "G" and vowel in ("इ", "उ", "ऋ"):
        alt = toggle_vowel_length(syl.display)
    elif weight == "L" and vowel in ("ई", "ऊ", "ॠ"):
        alt = toggle_vowel_length(syl.display)
    marker = f"r({syl.display})[{weight}]"
    return marker + (f"{{{alt}}}" if alt else "")


def render_suggestion(
    syllables: list[Syllable], ops: list[EditOp], target: PadaPattern
) -> Suggestion:
    """Format the query syllables with insert/replace/delete markers."""
    cells: list[str] = []
    words: list[int] = []

    def word_of(index: int) -> int:
        if not syllables:
            return 0
        index = min(index, len(syllables) - 1)
        return syllables[index].word_index

    i = 0
    for op in ops:
        while i < op.src_index:
            cells.append(syllables[i].display)
            words.append(syllables[i].word_index)
            i += 1
        if op.kind == "replace":
            cells.append(_replace_marker(syllables[i], op.target_weight or ""))
            words.append(syllables[i].word_index)
            i += 1
        elif op.kind == "delete":
            cells.append(f"d({syllables[i].display})")
            words.append(syllables[i].word_index)
            i += 1
        else:
            cells.append(f"i({op.target_weight})")
            words.append(word_of(op.src_index))
    while i < len(syllables):
        cells.append(syllables[i].display)
        words.append(syllables[i].word_index)
        i += 1

    groups: list[list[str]] = []
    current_word: int | None = None
    for cell, word in zip(cells, words):
        if word != current_word:
            groups.append([])
            current_word = word
        groups[-1].append(cell)
    return Suggestion(cells, groups)


###############################################################################
# Match finders


def _refs_to_matches(refs: list[MeterRef], kind: str) -> list[Match]:
    return [Match(r.name, r.label, kind) for r in refs]


def find_direct_match(sig: LgSignature, db: MetricalDatabase) -> list[Match]:
    """Exact lookups in both indices, with the padanta-laghu fallback."""
    matches = _refs_to_matches(db.lookup_exact_refs(sig.text, "single"), "exact")
    matches += _refs_to_matches(
        db.lookup_exact_refs(sig.text, "multiple"), "multiple"
    )
    if not matches and sig.padanta_laghu:
        toggled = sig.with_final_guru().text
        matches = _refs_to_matches(db.lookup_exact_refs(toggled, "single"), "exact")
        matches += _refs_to_matches(
            db.lookup_exact_refs(toggled, "multiple"), "multiple"
        )
    return matches


def find_pattern_match(sig: LgSignature, db: MetricalDatabase) -> list[Match]:
    """Positional-pattern lookups, with the same padanta-laghu fallback."""
    hits = db.lookup_pattern_refs(sig.text)
    if not hits and sig.padanta_laghu:
        hits = db.lookup_pattern_refs(sig.with_final_guru().text)
    return [Match(ref.name, ref.label, "pattern") for _, ref in hits]


def find_fuzzy_match(
    sig: LgSignature,
    syllables: list[Syllable],
    db: MetricalDatabase,
    k: int = DEFAULT_TOP_K,
) -> list[Match]:
    """Top-k nearest per-pada patterns with rendered suggestions."""
    if k < 1:
        raise ValueError("k must be at least 1")
    scored: list[tuple[int, float, str, MeterRef, PadaPattern]] = []
    for ref, pattern in db.fuzzy_candidates():
        cost = transform_cost(sig.text, pattern)
        sim = similarity(cost, len(pattern))
        scored.append((cost, -sim, ref.display, ref, pattern))
    scored.sort(key=lambda item: item[:3])
    out: list[Match] = []
    for cost, negsim, _, ref, pattern in scored[:k]:
        _, ops = transform(sig.text, pattern)
        out.append(
            Match(
                ref.name,
                ref.label,
                "fuzzy",
                cost=cost,
                similarity=-negsim,
                target=pattern.text,
                edit_ops=ops,
                suggestion=render_suggestion(syllables, ops, pattern),
            )
        )
    return out
