"""Meter definitions and the exact/positional lookup indices.

Definitions live in a small tab-separated file: Devanagari name, IAST
name, per-pada spec, kind.  The per-pada spec is a semicolon-separated
list where each element is either a gana formula (e.g. ``यययय``) or a
Latin positional pattern in which fixed positions are written ``L``/``G``
and free positions ``[LG]`` (e.g. the anustubh padas).  Comment lines
start with ``#``.

Loading builds three indices: ``single`` maps each fixed per-pada
signature to its meters, ``multiple`` maps the concatenation of every two
consecutive padas (a fail-safe for lines that merge two padas), and
``patterns`` holds the positional entries for length-and-position lookup.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources

from .prosody import from_gana

DEFAULT_DB_ENV = "VRTTA_DB"


class ParseError(ValueError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class DuplicateMeterName(ValueError):
    pass


class InvalidGanaFormula(ValueError):
    pass


###############################################################################


@dataclass(frozen=True)
class PadaPattern:
    """Per-pada weight constraints; each position is 'L', 'G' or 'LG'."""

    positions: tuple[str, ...]

    @property
    def fixed(self) -> bool:
        return all(p != "LG" for p in self.positions)

    @property
    def text(self) -> str:
        return "".join(p if p != "LG" else "[LG]" for p in self.positions)

    def __len__(self) -> int:
        return len(self.positions)

    def matches(self, sig: str) -> bool:
        if len(sig) != len(self.positions):
            return False
        return all(w in p for w, p in zip(sig, self.positions))

    def concat(self, other: "PadaPattern") -> "PadaPattern":
        return PadaPattern(self.positions + other.positions)

    @classmethod
    def from_signature(cls, sig: str) -> "PadaPattern":
        return cls(tuple(sig))

    @classmethod
    def parse(cls, text: str) -> "PadaPattern":
        positions: list[str] = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch in "LG":
                positions.append(ch)
                i += 1
            elif text.startswith("[LG]", i):
                positions.append("LG")
                i += 4
            else:
                raise ValueError(f"bad pattern at {i}: {text!r}")
        return cls(tuple(positions))


@dataclass(frozen=True)
class MeterRef:
    """A meter name plus the pada label it was indexed under, if any."""

    name: str
    label: str | None = None

    @property
    def display(self) -> str:
        return f"{self.name} ({self.label})" if self.label else self.name


@dataclass(frozen=True)
class MeterDef:
    name: str
    name_latin: str
    pada_patterns: tuple[PadaPattern, ...]
    gana_formulas: tuple[str | None, ...]
    kind: str = "Varṇavṛtta"

    def pattern_for_pada(self, index: int) -> PadaPattern:
        return self.pada_patterns[index % len(self.pada_patterns)]

    def gana_display(self) -> str:
        parts = [g for g in self.gana_formulas if g]
        return ";".join(dict.fromkeys(parts))

    def pada_label(self, index: int) -> str | None:
        if len(self.pada_patterns) == 1:
            return None
        return f"Pāda {index + 1}"


@dataclass
class MetricalDatabase:
    single: dict[str, list[MeterRef]] = field(default_factory=dict)
    multiple: dict[str, list[MeterRef]] = field(default_factory=dict)
    patterns: list[tuple[PadaPattern, MeterRef]] = field(default_factory=list)
    meters: dict[str, MeterDef] = field(default_factory=dict)

    def lookup_exact(self, sig: str, which: str = "single") -> list[str]:
        index = self.single if which == "single" else self.multiple
        return [ref.display for ref in index.get(sig, [])]

    def lookup_exact_refs(self, sig: str, which: str = "single") -> list[MeterRef]:
        index = self.single if which == "single" else self.multiple
        return list(index.get(sig, []))

    def lookup_pattern(self, sig: str) -> list[tuple[str, str | None]]:
        return [
            (ref.name, ref.label)
            for pattern, ref in self.patterns
            if pattern.matches(sig)
        ]

    def lookup_pattern_refs(self, sig: str) -> list[tuple[PadaPattern, MeterRef]]:
        return [(p, ref) for p, ref in self.patterns if p.matches(sig)]

    def fuzzy_candidates(self) -> list[tuple[MeterRef, PadaPattern]]:
        """Every distinct per-pada pattern of every meter, label included."""
        out: list[tuple[MeterRef, PadaPattern]] = []
        for name in sorted(self.meters):
            meter = self.meters[name]
            seen: set[tuple[str, ...]] = set()
            for i, pattern in enumerate(meter.pada_patterns):
                if pattern.positions in seen:
                    continue
                seen.add(pattern.positions)
                out.append((MeterRef(name, meter.pada_label(i)), pattern))
        return out


###############################################################################
# Loading


def _parse_pada_spec(spec: str) -> tuple[tuple[PadaPattern, ...], tuple[str | None, ...]]:
    patterns: list[PadaPattern] = []
    formulas: list[str | None] = []
    for element in spec.split(";"):
        element = element.strip()
        if not element:
            continue
        if any(c in "LG[" for c in element):
            patterns.append(PadaPattern.parse(element))
            formulas.append(None)
        else:
            sig = from_gana(element)
            patterns.append(PadaPattern.from_signature(sig.text))
            formulas.append(element)
    if not patterns:
        raise ValueError("empty pada spec")
    if len(patterns) > 4:
        raise ValueError("more than four padas")
    return tuple(patterns), tuple(formulas)


def _add(index: dict[str, list[MeterRef]], key: str, ref: MeterRef) -> None:
    index.setdefault(key, [])
    if ref not in index[key]:
        index[key].append(ref)
        index[key].sort(key=lambda r: r.display)


def load(definition_source: str) -> MetricalDatabase:
    """Build a MetricalDatabase from definition-file content."""
    db = MetricalDatabase()
    for lineno, raw in enumerate(definition_source.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in raw.split("\t")]
        if len(parts) < 3:
            raise ParseError(lineno, "expected name, iast, pada spec")
        name, name_latin, spec = parts[0], parts[1], parts[2]
        kind = parts[3] if len(parts) > 3 and parts[3] else "Varṇavṛtta"
        if not name:
            raise ParseError(lineno, "empty meter name")
        if name in db.meters:
            raise DuplicateMeterName(name)
        try:
            patterns, formulas = _parse_pada_spec(spec)
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from exc
        for pattern, formula in zip(patterns, formulas):
            if formula is not None and pattern.fixed:
                if from_gana(formula).text != "".join(pattern.positions):
                    raise InvalidGanaFormula(f"{name}: {formula}")
        meter = MeterDef(name, name_latin, patterns, formulas, kind)
        db.meters[name] = meter

        for i, pattern in enumerate(meter.pada_patterns):
            ref = MeterRef(name, meter.pada_label(i))
            if pattern.fixed:
                _add(db.single, pattern.text, ref)
            elif not any(
                p.positions == pattern.positions and r == ref
                for p, r in db.patterns
            ):
                db.patterns.append((pattern, ref))

        count = len(meter.pada_patterns)
        seen_pairs: set[tuple[tuple[str, ...], str | None]] = set()
        for i in range(count if count > 1 else 1):
            a = meter.pada_patterns[i % count]
            b = meter.pada_patterns[(i + 1) % count]
            pair = a.concat(b)
            label = None
            if count > 1:
                label = f"Pāda {i % count + 1}-{(i + 1) % count + 1}"
            key = (pair.positions, label)
            if key in seen_pairs:
                continue
            seen_pairs.add(key)
            ref = MeterRef(name, label)
            if pair.fixed:
                _add(db.multiple, pair.text, ref)
            elif not any(
                p.positions == pair.positions and r == ref
                for p, r in db.patterns
            ):
                db.patterns.append((pair, ref))
    return db


def default_db_path() -> str:
    override = os.environ.get(DEFAULT_DB_ENV)
    if override:
        return override
    return str(resources.files("vrtta").joinpath("data/meters.tsv"))


def load_path(path: str | None = None) -> MetricalDatabase:
    """Load a definition file from disk (default: the shipped database)."""
    target = path or default_db_path()
    with open(target, encoding="utf-8") as handle:
        return load(handle.read())
