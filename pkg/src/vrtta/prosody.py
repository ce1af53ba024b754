"""Scansion of Devanagari text: varna split, syllables, weights, ganas.

The pipeline for one line (pada) is

    text -> varnas -> syllables (akshara) -> L/G weights -> gana letters

Weights follow the classical rules: a syllable is guru when its vowel is
long, when it carries anusvara/visarga/candrabindu, or when the next
syllable begins with a conjunct of two or more consonants.  Spaces inside
a line are transparent: a word-final dead consonant joins the onset of
the following syllable, so inserting or removing spaces never changes the
weight sequence.  The final syllable keeps its natural weight; a trailing
laghu is recorded on the signature (``padanta_laghu``) so the matcher can
apply the guru fallback.
"""

from __future__ import annotations

from dataclasses import dataclass

###############################################################################
# Devanagari alphabet

VOWELS = "अआइईउऊऋॠऌॡएऐओऔ"
MATRAS = "ािीुूृॄॢॣेैोौ"

# MATRAS[i] renders VOWELS[i + 1]; अ has no sign.
MATRA_TO_VOWEL = {m: VOWELS[i + 1] for i, m in enumerate(MATRAS)}
VOWEL_TO_MATRA = {v: m for m, v in MATRA_TO_VOWEL.items()}

LONG_VOWELS = set("आईऊॠॡएऐओऔ")
SHORT_VOWELS = set(VOWELS) - LONG_VOWELS

CONSONANTS = set("कखगघङचछजझञटठडढणतथदधनपफबभमयरलवशषसहळऱऴ")

HALANTA = "्"
ANUSVARA = "ं"
VISARGA = "ः"
CANDRABINDU = "ँ"
MODIFIERS = {ANUSVARA, VISARGA, CANDRABINDU}

AVAGRAHA = "ऽ"
OM = "ॐ"
DANDA = "।"
DOUBLE_DANDA = "॥"
NUKTA = "़"

DEVANAGARI_DIGITS = "०१२३४५६७८९"

# Structural characters carry no phonetic value and are kept only in the
# surface form of the syllable they sit next to.
_STRUCTURAL = set(AVAGRAHA + DANDA + DOUBLE_DANDA + DEVANAGARI_DIGITS + "॰'’")
_STRUCTURAL.update("0123456789")

_DEVANAGARI_BLOCK = range(0x0900, 0x0980)


def toggle_vowel_length(syllable: str) -> str | None:
    """Swap a short vowel for its long counterpart (or back) in a syllable.

    Only the इ/ई, उ/ऊ and ऋ/ॠ pairs toggle, as independent vowels or as
    their dependent signs.  Returns None when no toggle applies.
    """
    pairs = {"इ": "ई", "उ": "ऊ", "ऋ": "ॠ", "ि": "ी", "ु": "ू", "ृ": "ॄ"}
    pairs.update({v: k for k, v in pairs.items()})
    for i, ch in enumerate(syllable):
        if ch in pairs:
            return syllable[:i] + pairs[ch] + syllable[i + 1 :]
    return None


###############################################################################
# Domain types


@dataclass(frozen=True)
class Varna:
    """One phonetic unit: a dead consonant (क्), a vowel (आ) or a modifier."""

    kind: str  # 'consonant' | 'vowel' | 'modifier'
    glyph: str

    def __str__(self) -> str:
        return self.glyph


@dataclass
class Syllable:
    """A vowel-terminated group of varnas with its surface form."""

    varnas: list[Varna]
    display: str
    index: int
    word_index: int = 0

    @property
    def vowel(self) -> str | None:
        for v in self.varnas:
            if v.kind == "vowel":
                return v.glyph
        return None

    @property
    def onset_size(self) -> int:
        n = 0
        for v in self.varnas:
            if v.kind != "consonant":
                break
            n += 1
        return n

    @property
    def modifiers(self) -> list[str]:
        return [v.glyph for v in self.varnas if v.kind == "modifier"]

    def __str__(self) -> str:
        return self.display


@dataclass(frozen=True)
class LgSignature:
    """Weight sequence of a line, e.g. ``LGGLGGLGGLGG``."""

    text: str
    padanta_laghu: bool = False

    def __post_init__(self) -> None:
        if set(self.text) - {"L", "G"}:
            raise ValueError(f"signature may contain only L/G: {self.text!r}")

    def __len__(self) -> int:
        return len(self.text)

    def __str__(self) -> str:
        return self.text

    def with_final_guru(self) -> "LgSignature":
        if not self.text:
            return self
        return LgSignature(self.text[:-1] + "G")


@dataclass(frozen=True)
class GanaSignature:
    """Gana letters plus up to two residual single-weight letters (ल/ग)."""

    text: str

    def __str__(self) -> str:
        return self.text


@dataclass
class Warning_:
    """A non-fatal problem met while scanning a line."""

    position: int
    char: str
    message: str


# The eight ganas of the classical scheme; य is anchored at LGG and the
# remaining letters follow the standard assignment.
GANA_TO_WEIGHTS = {
    "म": "GGG",
    "य": "LGG",
    "र": "GLG",
    "स": "LLG",
    "त": "GGL",
    "ज": "LGL",
    "भ": "GLL",
    "न": "LLL",
}
RESIDUAL_TO_WEIGHT = {"ल": "L", "ग": "G"}
WEIGHTS_TO_GANA = {v: k for k, v in GANA_TO_WEIGHTS.items()}
WEIGHT_TO_RESIDUAL = {"L": "ल", "G": "ग"}


class UnknownGanaLetter(ValueError):
    pass


###############################################################################
# Varna split


def split_varnas(
    text: str, warnings: list[Warning_] | None = None
) -> list[Varna]:
    """Split Devanagari text into its varnas.

    Consonants come out dead (with explicit halanta); a consonant without
    vowel sign or halanta contributes the inherent अ; vowel signs map to
    their independent vowels.  Whitespace and structural characters are
    skipped; anything unrecognized is reported as a warning and skipped.
    """
    out: list[Varna] = []
    for i, ch in enumerate(text):
        if ch in CONSONANTS:
            out.append(Varna("consonant", ch + HALANTA))
            nxt = text[i + 1] if i + 1 < len(text) else ""
            if nxt not in MATRA_TO_VOWEL and nxt != HALANTA:
                out.append(Varna("vowel", "अ"))
        elif ch in MATRA_TO_VOWEL:
            out.append(Varna("vowel", MATRA_TO_VOWEL[ch]))
        elif ch in VOWELS:
            out.append(Varna("vowel", ch))
        elif ch in MODIFIERS:
            out.append(Varna("modifier", ch))
        elif ch == OM:
            out.append(Varna("vowel", "ओ"))
            out.append(Varna("modifier", ANUSVARA))
        elif ch == HALANTA or ch.isspace() or ch in _STRUCTURAL:
            continue
        elif ord(ch) in _DEVANAGARI_BLOCK:
            continue  # accents, nukta and similar signs: no phonetic value
        else:
            if warnings is not None:
                warnings.append(Warning_(i, ch, "unknown character"))
    return out


###############################################################################
# Syllabification


def _classify(ch: str) -> str:
    if ch in CONSONANTS:
        return "consonant"
    if ch in MATRA_TO_VOWEL:
        return "matra"
    if ch in VOWELS:
        return "vowel"
    if ch == HALANTA:
        return "halanta"
    if ch in MODIFIERS:
        return "modifier"
    if ch == OM:
        return "om"
    if ch.isspace():
        return "space"
    if ch in _STRUCTURAL:
        return "structural"
    if ord(ch) in _DEVANAGARI_BLOCK:
        return "structural"
    return "unknown"


def syllabify(
    text: str, warnings: list[Warning_] | None = None
) -> list[Syllable]:
    """Split one line into syllables.

    A syllable boundary falls after each vowel plus its trailing
    modifiers.  Leading consonant clusters (also across spaces, i.e. dead
    word-final consonants) attach to the following vowel's syllable; a
    line-final vowel-less cluster attaches to the last syllable.  Every
    non-space character of the line lands in exactly one display, so the
    concatenation of displays equals the line with whitespace removed.
    """
    syllables: list[Syllable] = []
    pending_varnas: list[Varna] = []
    pending_surface = ""
    word = 0
    seen_content = False
    prev_space = False
    i = 0
    n = len(text)

    def attach_structural(ch: str) -> None:
        nonlocal pending_surface
        if not pending_surface and syllables:
            syllables[-1].display += ch
        else:
            pending_surface += ch

    def close(vowel: str, surface: str, mods_from: int) -> int:
        """Open a syllable at the current vowel, absorb modifiers."""
        nonlocal pending_varnas, pending_surface
        varnas = pending_varnas + [Varna("vowel", vowel)]
        j = mods_from
        while j < n and _classify(text[j]) == "modifier":
            varnas.append(Varna("modifier", text[j]))
            surface += text[j]
            j += 1
        syllables.append(
            Syllable(varnas, pending_surface + surface, len(syllables), word)
        )
        pending_varnas = []
        pending_surface = ""
        return j

    while i < n:
        ch = text[i]
        kind = _classify(ch)
        if kind == "space":
            if seen_content and not prev_space:
                word += 1
            prev_space = True
            i += 1
            continue
        seen_content = True
        prev_space = False
        if kind == "consonant":
            nxt = text[i + 1] if i + 1 < n else ""
            if nxt in MATRA_TO_VOWEL:
                pending_varnas.append(Varna("consonant", ch + HALANTA))
                i = close(MATRA_TO_VOWEL[nxt], ch + nxt, i + 2)
            elif nxt == HALANTA:
                pending_varnas.append(Varna("consonant", ch + HALANTA))
                pending_surface += ch + HALANTA
                i += 2
            else:
                pending_varnas.append(Varna("consonant", ch + HALANTA))
                i = close("अ", ch, i + 1)
        elif kind == "vowel":
            i = close(ch, ch, i + 1)
        elif kind == "om":
            pending_varnas.append(Varna("vowel", "ओ"))
            syllables.append(
                Syllable(
                    pending_varnas + [Varna("modifier", ANUSVARA)],
                    pending_surface + ch,
                    len(syllables),
                    word,
                )
            )
            pending_varnas = []
            pending_surface = ""
            i += 1
        elif kind == "matra":
            # A bare vowel sign is malformed input; read it as its vowel.
            i = close(MATRA_TO_VOWEL[ch], ch, i + 1)
        elif kind == "modifier":
            # Modifier with no preceding vowel in reach: keep the surface.
            attach_structural(ch)
            i += 1
        elif kind in ("structural", "halanta"):
            attach_structural(ch)
            i += 1
        else:
            if warnings is not None:
                warnings.append(Warning_(i, ch, "unknown character"))
            attach_structural(ch)
            i += 1

    if pending_surface:
        if syllables:
            syllables[-1].display += pending_surface
            syllables[-1].varnas.extend(pending_varnas)
        elif warnings is not None:
            warnings.append(
                Warning_(0, pending_surface, "no vowel in line fragment")
            )
    return syllables


###############################################################################
# Weights


def weigh(syllables: list[Syllable]) -> LgSignature:
    """Assign L/G weights to the syllables of one line.

    Guru iff: long vowel, or anusvara/visarga/candrabindu, or the next
    syllable's onset is a cluster of two or more consonants.  The final
    syllable keeps its natural weight; ``padanta_laghu`` is set when it
    comes out laghu.
    """
    weights = []
    for i, syl in enumerate(syllables):
        vowel = syl.vowel
        if vowel in LONG_VOWELS:
            weights.append("G")
        elif syl.modifiers:
            weights.append("G")
        elif i + 1 < len(syllables) and syllables[i + 1].onset_size >= 2:
            weights.append("G")
        else:
            weights.append("L")
    text = "".join(weights)
    return LgSignature(text, padanta_laghu=bool(text) and text[-1] == "L")


def scan_line(
    text: str, warnings: list[Warning_] | None = None
) -> tuple[list[Syllable], LgSignature]:
    """Convenience wrapper: syllabify then weigh."""
    syllables = syllabify(text, warnings)
    return syllables, weigh(syllables)


###############################################################################
# Ganas


def to_gana(sig: LgSignature | str) -> GanaSignature:
    """Greedy left-to-right grouping into gana triples plus residuals."""
    text = sig.text if isinstance(sig, LgSignature) else sig
    out = []
    for i in range(0, len(text) - len(text) % 3, 3):
        out.append(WEIGHTS_TO_GANA[text[i : i + 3]])
    for w in text[len(text) - len(text) % 3 :]:
        out.append(WEIGHT_TO_RESIDUAL[w])
    return GanaSignature("".join(out))


def from_gana(ganas: GanaSignature | str) -> LgSignature:
    """Decode gana letters (with residual ल/ग) back into a weight string."""
    text = ganas.text if isinstance(ganas, GanaSignature) else ganas
    out = []
    for ch in text:
        if ch in GANA_TO_WEIGHTS:
            out.append(GANA_TO_WEIGHTS[ch])
        elif ch in RESIDUAL_TO_WEIGHT:
            out.append(RESIDUAL_TO_WEIGHT[ch])
        else:
            raise UnknownGanaLetter(f"not a gana letter: {ch!r}")
    return LgSignature("".join(out))


def matra_count(sig: LgSignature | str) -> int:
    """Metrical morae: laghu counts one, guru counts two."""
    text = sig.text if isinstance(sig, LgSignature) else sig
    return len(text) + text.count("G")
