import { describe, expect, it } from "vitest";

import {
  escapeHtml,
  mapMeterNames,
  matchLabel,
  renderCell,
  renderFuzzyTable,
  renderResults,
  renderScansion,
  renderStats,
  similarityPercent,
} from "../src/render.js";
import type { IdentifyResponse, LineOut, MatchOut } from "../src/types.js";

const fuzzyMatch: MatchOut = {
  name: "भुजङ्गप्रयात",
  kind: "fuzzy",
  cost: 1,
  similarity: 0.9166666666666666,
  suggestion_cells: [
    "न", "म", "स्ते", "स", "दा", "व", "त्स", "ले", "मा", "तृ",
    "r(भु)[G]{भू}", "मे",
  ],
};

const fuzzyLine: LineOut = {
  text: "नमस्ते सदा वत्सले मातृभुमे",
  lg: "LGGLGGLGGLLG",
  gana: "यययस",
  syllables: ["न", "म", "स्ते", "स", "दा", "व", "त्स", "ले", "मा", "तृ", "भु", "मे"],
  syllable_count: 12,
  matra_count: 20,
  matches: [fuzzyMatch],
};

const exactLine: LineOut = {
  text: "x",
  lg: "GGGGGLGGLGG",
  gana: "मततगग",
  syllables: ["गा"],
  syllable_count: 11,
  matra_count: 20,
  matches: [
    {
      name: "शालिनी",
      kind: "exact",
      cost: 0,
      similarity: 1,
      suggestion_cells: null,
    },
  ],
};

describe("labels", () => {
  it("formats fuzzy identifications with the edit count", () => {
    expect(matchLabel(fuzzyMatch)).toBe("भुजङ्गप्रयात (1 edit)");
  });

  it("pluralizes edits", () => {
    expect(matchLabel({ ...fuzzyMatch, cost: 2 })).toBe("भुजङ्गप्रयात (2 edits)");
  });

  it("leaves exact identifications bare", () => {
    expect(matchLabel(exactLine.matches[0])).toBe("शालिनी");
  });

  it("renders similarity as a one-decimal percentage", () => {
    expect(similarityPercent(0.9166666666666666)).toBe("91.7%");
    expect(similarityPercent(0.8333333333333334)).toBe("83.3%");
  });
});

describe("cells", () => {
  it("escapes html", () => {
    expect(escapeHtml("<b>&</b>")).toBe("&lt;b&gt;&amp;&lt;/b&gt;");
  });

  it("highlights replace markers and keeps raw notation on hover", () => {
    const html = renderCell("r(भु)[G]{भू}");
    expect(html).toContain("marker-replace");
    expect(html).toContain('title="r(भु)[G]{भू}"');
    expect(html).toContain("भू");
  });

  it("highlights insert and delete markers distinctly", () => {
    expect(renderCell("i(G)")).toContain("marker-insert");
    expect(renderCell("d(स्त)")).toContain("marker-delete");
  });

  it("renders plain cells without marker classes", () => {
    expect(renderCell("स्ते")).not.toContain("marker");
  });
});

describe("scansion and tables", () => {
  it("shows the worked-example header with similarity", () => {
    const scansion = renderScansion(fuzzyLine);
    expect(scansion).toContain("भुजङ्गप्रयात (1 edit)");
    expect(scansion).toContain("Fuzzy");
    const table = renderFuzzyTable(fuzzyLine, () => "यययय");
    expect(table).toContain("91.7%");
    expect(table).toContain("यययय");
    expect(table).toContain("marker-replace");
  });

  it("renders one akshara column per syllable", () => {
    const scansion = renderScansion(fuzzyLine);
    expect(scansion.match(/class="akshara"/g)?.length).toBe(12);
    expect(scansion).toContain("12 syllables");
    expect(scansion).toContain("20 mātrās");
  });

  it("omits the fuzzy table for exact identifications", () => {
    expect(renderFuzzyTable(exactLine, () => "")).toBe("");
  });

  it("renders stats totals and histogram", () => {
    const html = renderStats({
      lines_total: 5,
      lines_exact: 3,
      lines_fuzzy: 1,
      lines_unidentified: 1,
      histogram: { "शालिनी": { exact: 3, fuzzy: 0 } },
    });
    expect(html).toContain("lines: 5");
    expect(html).toContain("शालिनी");
  });
});

describe("full response rendering", () => {
  const response: IdentifyResponse = {
    mode: "verse",
    scheme: "devanagari",
    verses: [
      {
        lines: [exactLine],
        verse_meter: "शालिनी",
        verse_cost: 0,
      },
    ],
    stats: {
      lines_total: 1,
      lines_exact: 1,
      lines_fuzzy: 0,
      lines_unidentified: 0,
      histogram: { "शालिनी": { exact: 1, fuzzy: 0 } },
    },
  };

  it("renders verse headers with the verse meter", () => {
    const html = renderResults(response);
    expect(html).toContain("Verse 1");
    expect(html).toContain("शालिनी");
    expect(html).not.toContain("Fuzzy Matches");
  });

  it("maps meter names for display without touching structure", () => {
    const mapped = mapMeterNames(response, (name) =>
      name === "शालिनी" ? "Śālinī" : name,
    );
    expect(mapped.verses[0].verse_meter).toBe("Śālinī");
    expect(mapped.verses[0].lines[0].matches[0].name).toBe("Śālinī");
    expect(mapped.stats.histogram["Śālinī"]).toEqual({ exact: 1, fuzzy: 0 });
    // original untouched
    expect(response.verses[0].verse_meter).toBe("शालिनी");
  });

  it("preserves pada labels while mapping", () => {
    const labelled: IdentifyResponse = JSON.parse(JSON.stringify(response));
    labelled.verses[0].lines[0].matches[0].name = "अनुष्टुभ् (Pāda 1)";
    const mapped = mapMeterNames(labelled, (name) =>
      name === "अनुष्टुभ्" ? "Anuṣṭubh" : name,
    );
    expect(mapped.verses[0].lines[0].matches[0].name).toBe("Anuṣṭubh (Pāda 1)");
  });
});
