"""Transliteration between Devanagari, IAST, Harvard-Kyoto and SLP1.

The engine works internally on composition-normalized Devanagari.  Input
in a romanization is detected and converted with longest-match-first
tables; characters outside a table pass through verbatim and are recorded
so later stages can warn about them.

Detection order is fixed: Devanagari code points win, then IAST
diacritics, then SLP1-exclusive letters, and Harvard-Kyoto is the
fallback.  HK and SLP1 overlap on a few letters, so the caller may always
force a scheme explicitly.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from enum import Enum


class Scheme(str, Enum):
    DEVANAGARI = "devanagari"
    IAST = "iast"
    HK = "hk"
    SLP1 = "slp1"


class EmptyInput(ValueError):
    pass


@dataclass(frozen=True)
class NormalizedText:
    """Input resolved to canonical Devanagari."""

    devanagari: str
    source_scheme: Scheme
    original: str
    passthrough: tuple[tuple[int, str], ...] = field(default_factory=tuple)


###############################################################################
# Sound inventory, scheme by scheme.  Order matters only for readability;
# lookup is longest-match-first.

_DEVA_VOWELS = ["अ", "आ", "इ", "ई", "उ", "ऊ", "ऋ", "ॠ", "ऌ", "ॡ",
                "ए", "ऐ", "ओ", "औ"]
_DEVA_MATRAS = ["", "ा", "ि", "ी", "ु", "ू", "ृ", "ॄ", "ॢ", "ॣ",
                "े", "ै", "ो", "ौ"]
_DEVA_CONSONANTS = [
    "क", "ख", "ग", "घ", "ङ",
    "च", "छ", "ज", "झ", "ञ",
    "ट", "ठ", "ड", "ढ", "ण",
    "त", "थ", "द", "ध", "न",
    "प", "फ", "ब", "भ", "म",
    "य", "र", "ल", "व",
    "श", "ष", "स", "ह", "ळ",
]

_VOWELS = {
    Scheme.IAST: ["a", "ā", "i", "ī", "u", "ū", "ṛ", "ṝ", "ḷ", "ḹ",
                  "e", "ai", "o", "au"],
    Scheme.HK: ["a", "A", "i", "I", "u", "U", "R", "RR", "lR", "lRR",
                "e", "ai", "o", "au"],
    Scheme.SLP1: ["a", "A", "i", "I", "u", "U", "f", "F", "x", "X",
                  "e", "E", "o", "O"],
}

_CONSONANTS = {
    Scheme.IAST: ["k", "kh", "g", "gh", "ṅ", "c", "ch", "j", "jh", "ñ",
                  "ṭ", "ṭh", "ḍ", "ḍh", "ṇ", "t", "th", "d", "dh", "n",
                  "p", "ph", "b", "bh", "m", "y", "r", "l", "v",
                  "ś", "ṣ", "s", "h", "ḻ"],
    Scheme.HK: ["k", "kh", "g", "gh", "G", "c", "ch", "j", "jh", "J",
                "T", "Th", "D", "Dh", "N", "t", "th", "d", "dh", "n",
                "p", "ph", "b", "bh", "m", "y", "r", "l", "v",
                "z", "S", "s", "h", "L"],
    Scheme.SLP1: ["k", "K", "g", "G", "N", "c", "C", "j", "J", "Y",
                  "w", "W", "q", "Q", "R", "t", "T", "d", "D", "n",
                  "p", "P", "b", "B", "m", "y", "r", "l", "v",
                  "S", "z", "s", "h", "L"],
}

# anusvara, visarga, candrabindu, avagraha, danda, double danda
_MARKS_DEVA = ["ं", "ः", "ँ", "ऽ", "।", "॥"]
_MARKS = {
    Scheme.IAST: ["ṃ", "ḥ", "m̐", "'", "|", "||"],
    Scheme.HK: ["M", "H", "~", "'", "|", "||"],
    Scheme.SLP1: ["M", "H", "~", "'", "|", "||"],
}

IAST_DIACRITICS = set("āīūṛṝḷṃḥśṣṭḍṇṅñ")
SLP1_EXCLUSIVE = set("fFxXEOwWqQRYz")

_DEVANAGARI_BLOCK = range(0x0900, 0x0980)

# Scheme-neutral characters of the Devanagari block: the line markers
# '।'/'॥' and the digits appear in romanized text too, so their presence
# alone must not make detection report Devanagari.
_SCRIPT_NEUTRAL = set("।॥॰०१२३४५६७८९")


def _roman_tables(scheme: Scheme):
    """(vowel -> (independent, matra), consonant -> base, mark -> deva)."""
    vowels = {
        r: (_DEVA_VOWELS[i], _DEVA_MATRAS[i])
        for i, r in enumerate(_VOWELS[scheme])
    }
    consonants = dict(zip(_CONSONANTS[scheme], _DEVA_CONSONANTS))
    marks = dict(zip(_MARKS[scheme], _MARKS_DEVA))
    return vowels, consonants, marks


def _token_list(scheme: Scheme) -> list[str]:
    vowels, consonants, marks = _roman_tables(scheme)
    tokens = list(vowels) + list(consonants) + list(marks)
    return sorted(tokens, key=len, reverse=True)


_TABLES = {s: _roman_tables(s) for s in (Scheme.IAST, Scheme.HK, Scheme.SLP1)}
_TOKENS = {s: _token_list(s) for s in (Scheme.IAST, Scheme.HK, Scheme.SLP1)}

HALANTA = "्"


###############################################################################
# Detection


def detect_scheme(text: str) -> Scheme:
    """Guess the transliteration scheme of a whole document."""
    if not text.strip():
        raise EmptyInput("input is empty")
    for ch in text:
        if ord(ch) in _DEVANAGARI_BLOCK and ch not in _SCRIPT_NEUTRAL:
            return Scheme.DEVANAGARI
    letters = {ch for ch in unicodedata.normalize("NFC", text)
               if ch.isalpha()}
    if letters & IAST_DIACRITICS:
        return Scheme.IAST
    if letters & SLP1_EXCLUSIVE:
        return Scheme.SLP1
    return Scheme.HK


###############################################################################
# Roman -> Devanagari


def to_devanagari(text: str, scheme: Scheme) -> NormalizedText:
    """Convert text in the given scheme to normalized Devanagari.

    Unknown characters pass through verbatim and are recorded as
    pass-through spans (offset in the output, character).
    """
    original = text
    text = unicodedata.normalize("NFC", text)
    if scheme == Scheme.DEVANAGARI:
        return NormalizedText(text, scheme, original)

    vowels, consonants, marks = _TABLES[scheme]
    tokens = _TOKENS[scheme]
    out: list[str] = []
    passthrough: list[tuple[int, str]] = []
    pending_consonant = False
    i = 0
    n = len(text)
    while i < n:
        tok = None
        for t in tokens:
            if text.startswith(t, i):
                tok = t
                break
        if tok is None:
            ch = text[i]
            if pending_consonant:
                out.append(HALANTA)
                pending_consonant = False
            if not ch.isspace() and not ch.isdigit():
                passthrough.append((sum(len(s) for s in out), ch))
            out.append(ch)
            i += 1
            continue
        if tok in consonants:
            if pending_consonant:
                out.append(HALANTA)
            out.append(consonants[tok])
            pending_consonant = True
        elif tok in vowels:
            independent, matra = vowels[tok]
            if pending_consonant:
                out.append(matra)
                pending_consonant = False
            else:
                out.append(independent)
        else:
            if pending_consonant:
                out.append(HALANTA)
                pending_consonant = False
            out.append(marks[tok])
        i += len(tok)
    if pending_consonant:
        out.append(HALANTA)
    deva = unicodedata.normalize("NFC", "".join(out))
    return NormalizedText(deva, scheme, original, tuple(passthrough))


###############################################################################
# Devanagari -> Roman


def from_devanagari(text: str, scheme: Scheme) -> str:
    """Render Devanagari text in the given scheme (inverse of to_devanagari)."""
    text = unicodedata.normalize("NFC", text)
    if scheme == Scheme.DEVANAGARI:
        return text

    vowels, consonants, marks = _TABLES[scheme]
    deva_vowel = {d: r for r, (d, _) in vowels.items()}
    deva_matra = {m: r for r, (_, m) in vowels.items() if m}
    deva_consonant = {d: r for r, d in consonants.items()}
    deva_mark = {d: r for r, d in marks.items()}
    a_roman = _VOWELS[scheme][0]

    out: list[str] = []
    n = len(text)
    i = 0
    while i < n:
        ch = text[i]
        if ch in deva_consonant:
            out.append(deva_consonant[ch])
            nxt = text[i + 1] if i + 1 < n else ""
            if nxt in deva_matra:
                out.append(deva_matra[nxt])
                i += 2
                continue
            if nxt == HALANTA:
                i += 2
                continue
            out.append(a_roman)
            i += 1
        elif ch in deva_vowel:
            out.append(deva_vowel[ch])
            i += 1
        elif ch == "॥":
            out.append(deva_mark["॥"])
            i += 1
        elif ch in deva_mark:
            out.append(deva_mark[ch])
            i += 1
        else:
            out.append(ch)
            i += 1
    return "".join(out)
