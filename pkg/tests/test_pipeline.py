from __future__ import annotations

import json

import pytest

from vrtta import pipeline
from vrtta.pipeline import (
    collect_stats,
    compact_lines,
    export,
    identify_document,
    identify_line,
    identify_verse,
    split_document,
    stats_footer,
    to_dict,
)


# synthetic padas with fully controlled signatures: गा = G, ग = L (open)
SHALINI_PADA = "गा गा गा गा गा ग गा गा ग गा गा"  # GGGGGLGGLGG
CORRUPT_PADA = "गा गा गा गा ग ग ग गा गा ग गा गा"  # GGGGLLLGGLGG
FIGURE_VERSE = "।".join([CORRUPT_PADA] + [SHALINI_PADA] * 3) + "॥"
NAMASTE_LINE = "नमस्ते सदा वत्सले मातृभुमे"


###############################################################################
# split_document


def test_split_markers_and_blank_line_grouping():
    doc = split_document("a।b॥\n\nc")
    assert [[line.text for line in verse] for verse in doc.verses] == [
        ["a", "b"],
        ["c"],
    ]


def test_split_single_line():
    doc = split_document("single line")
    assert [[line.text for line in verse] for verse in doc.verses] == [
        ["single line"]
    ]


def test_split_four_padas_without_blank_lines():
    doc = split_document("w।x।y।z॥")
    assert [[line.text for line in verse] for verse in doc.verses] == [
        ["w", "x", "y", "z"]
    ]


def test_split_double_danda_closes_verses():
    doc = split_document("a।b॥c।d॥")
    assert [[line.text for line in verse] for verse in doc.verses] == [
        ["a", "b"],
        ["c", "d"],
    ]


def test_split_consumes_markers_and_drops_empties():
    doc = split_document("a॥॥।।b.")
    assert [line.text for line in doc.lines] == ["a", "b"]


def test_split_idempotent_on_reserialized_output():
    doc = split_document("a।b॥\n\nc।d")
    text = "\n\n".join(
        "\n".join(line.text for line in verse) for verse in doc.verses
    )
    again = split_document(text)
    assert [[l.text for l in v] for v in again.verses] == [
        [l.text for l in v] for v in doc.verses
    ]


###############################################################################
# identify_line


def test_identify_line_exact_skips_fuzzy(db):
    doc = split_document(SHALINI_PADA)
    lr = identify_line(doc.lines[0], db)
    assert lr.chosen is not None
    assert lr.chosen.meter_name == "शालिनी"
    assert lr.chosen.kind == "exact"
    assert lr.fuzzy_matches == []


def test_identify_line_fuzzy_when_no_direct(db):
    doc = split_document(NAMASTE_LINE)
    lr = identify_line(doc.lines[0], db)
    assert lr.direct_matches == []
    assert lr.chosen.kind == "fuzzy"
    assert lr.chosen.meter_name == "भुजङ्गप्रयात"
    assert lr.chosen.cost == 1


def test_identify_line_digits_only_unidentified(db):
    doc = split_document("१२३४")
    lr = identify_line(doc.lines[0], db)
    assert lr.syllable_count == 0
    assert lr.chosen is None
    assert lr.fuzzy_matches == []


def test_identify_line_counts(db):
    doc = split_document(NAMASTE_LINE)
    lr = identify_line(doc.lines[0], db)
    assert lr.syllable_count == 12
    assert lr.matra_count == len(lr.lg.text) + lr.lg.text.count("G")


###############################################################################
# identify_verse


def test_verse_mode_beats_line_mode_on_figure_construction(db):
    line_result = identify_document(FIGURE_VERSE, db, mode="line")
    pada1 = line_result.verses[0].lines[0]
    assert pada1.chosen.meter_name == "वातोर्मी"
    assert pada1.chosen.cost == 1

    verse_result = identify_document(FIGURE_VERSE, db, mode="verse")
    verse = verse_result.verses[0]
    assert verse.verse_meter == "शालिनी"
    assert verse.verse_cost == 2
    assert verse.pada_costs == [2, 0, 0, 0]
    first = verse.lines[0].matches[0]
    assert first.meter_name == "शालिनी" and first.cost == 2


def test_verse_meter_minimizes_cumulative_cost(db):
    verse_result = identify_document(FIGURE_VERSE, db, mode="verse")
    verse = verse_result.verses[0]
    lrs = verse.lines
    for name in sorted(db.meters):
        targets = pipeline._pada_targets(name, lrs, db)
        total = 0
        for lr, target in zip(lrs, targets):
            if any(m.meter_name == name for m in lr.direct_matches):
                continue
            from vrtta.matcher import transform_cost

            total += transform_cost(lr.lg.text, target)
        assert verse.verse_cost <= total


def test_verse_all_exact(db):
    text = "।".join([SHALINI_PADA] * 4) + "॥"
    result = identify_document(text, db, mode="verse")
    verse = result.verses[0]
    assert verse.verse_meter == "शालिनी"
    assert verse.verse_cost == 0
    assert all(lr.chosen.kind == "exact" for lr in verse.lines)


def test_verse_anustubh_half_verse(db):
    # pada 1: xxxx LG xx ; pada 2: xxxx LGL x  (x free -> use ga=G)
    pada1 = "गा गा गा गा ग गा गा गा"  # GGGGLGGG
    pada2 = "गा गा गा गा ग गा ग गा"  # GGGGLGLG
    result = identify_document(pada1 + "।" + pada2 + "॥", db, mode="verse")
    verse = result.verses[0]
    assert verse.verse_meter == "अनुष्टुभ्"
    assert verse.verse_cost == 0


def test_verse_empty_pool(db):
    result = identify_document("१२३", db, mode="verse")
    verse = result.verses[0]
    assert verse.verse_meter is None and verse.verse_cost is None


def test_verse_meter_listed_first_even_over_foreign_exact_match(db):
    # pada 1 is an exact Vatormi; padas 2-4 exact Shalini. Verse meter is
    # Shalini (cumulative cost 1 vs 3) and must head pada 1's match list.
    vatormi_pada = "गा गा गा गा ग ग गा गा ग गा गा"  # GGGGLLGGLGG
    text = "।".join([vatormi_pada] + [SHALINI_PADA] * 3) + "॥"
    result = identify_document(text, db, mode="verse")
    verse = result.verses[0]
    assert verse.verse_meter == "शालिनी"
    assert verse.verse_cost == 1
    pada1 = verse.lines[0]
    assert pada1.matches[0].meter_name == "शालिनी"
    assert pada1.matches[0].cost == 1
    assert "वातोर्मी" in [m.meter_name for m in pada1.matches[1:]]
    assert pada1.chosen.meter_name == "शालिनी"


def test_verse_double_pada_line_consumes_two_indices(db):
    merged = SHALINI_PADA + " " + SHALINI_PADA
    text = merged + "।" + SHALINI_PADA + "।" + SHALINI_PADA + "॥"
    result = identify_document(text, db, mode="verse")
    verse = result.verses[0]
    assert verse.lines[0].chosen.kind == "multiple"
    assert verse.verse_meter == "शालिनी"
    assert verse.verse_cost == 0


###############################################################################
# stats


def test_stats_counts(db):
    text = "\n".join(
        [SHALINI_PADA, SHALINI_PADA, SHALINI_PADA, NAMASTE_LINE, "१२३"]
    )
    result = identify_document(text, db, mode="line")
    stats = result.stats
    assert (
        stats.lines_total,
        stats.lines_exact,
        stats.lines_fuzzy,
        stats.lines_unidentified,
    ) == (5, 3, 1, 1)
    assert stats.histogram["शालिनी"] == {"exact": 3, "fuzzy": 0}
    assert stats.histogram["भुजङ्गप्रयात"] == {"exact": 0, "fuzzy": 1}


def test_stats_conservation(db, meghaduta_text):
    result = identify_document(meghaduta_text, db, mode="verse")
    stats = result.stats
    assert (
        stats.lines_exact + stats.lines_fuzzy + stats.lines_unidentified
        == stats.lines_total
    )


def test_stats_empty():
    stats = collect_stats([])
    assert stats.lines_total == 0
    assert stats.histogram == {}


def test_stats_mandakranta_excerpt_all_exact(db, meghaduta_text):
    result = identify_document(meghaduta_text, db, mode="verse")
    stats = result.stats
    assert stats.lines_unidentified == 0
    assert stats.lines_fuzzy == 0
    assert set(stats.histogram) == {"मन्दाक्रान्ता"}
    assert stats.histogram["मन्दाक्रान्ता"]["exact"] == stats.lines_total == 32


###############################################################################
# export


def test_export_compact_exact_row_omits_cost(db):
    result = identify_document(SHALINI_PADA, db, mode="line")
    row = compact_lines(result)[0]
    assert row == f"{SHALINI_PADA} | GGGGGLGGLGG | मततगग | शालिनी"


def test_export_compact_fuzzy_row_shows_edit_count(db):
    result = identify_document(NAMASTE_LINE, db, mode="line")
    row = compact_lines(result)[0]
    assert row.endswith("भुजङ्गप्रयात (1 edit)")


def test_export_compact_pluralizes_edits(db):
    result = identify_document(FIGURE_VERSE, db, mode="verse")
    rows = compact_lines(result)
    assert rows[0].endswith("शालिनी (2 edits)")


def test_export_detailed_round_trip(db):
    result = identify_document(FIGURE_VERSE, db, mode="verse", k=4)
    parsed = json.loads(export(result, "detailed"))
    assert parsed == to_dict(result)
    assert parsed["mode"] == "verse"
    assert parsed["scheme"] == "devanagari"
    assert parsed["verses"][0]["verse_meter"] == "शालिनी"
    assert parsed["verses"][0]["verse_cost"] == 2
    line0 = parsed["verses"][0]["lines"][0]
    assert set(line0) == {
        "text", "lg", "gana", "syllables", "syllable_count", "matra_count",
        "matches",
    }
    assert len(line0["syllables"]) == line0["syllable_count"]
    match0 = line0["matches"][0]
    assert set(match0) == {
        "name", "kind", "cost", "similarity", "suggestion_cells",
    }
    assert parsed["stats"]["lines_total"] == 4


def test_export_detailed_line_mode_has_null_verse_meter(db):
    result = identify_document(NAMASTE_LINE, db, mode="line")
    parsed = json.loads(export(result, "detailed"))
    assert parsed["verses"][0]["verse_meter"] is None
    assert parsed["verses"][0]["verse_cost"] is None


def test_stats_footer_format(db):
    result = identify_document(SHALINI_PADA, db, mode="line")
    footer = stats_footer(result.stats)
    assert footer.startswith("stats: lines=1 exact=1 fuzzy=0 unidentified=0")
    assert "शालिनी: exact=1 fuzzy=0" in footer


def test_export_rejects_unknown_format(db):
    result = identify_document(SHALINI_PADA, db, mode="line")
    with pytest.raises(ValueError):
        export(result, "xml")
