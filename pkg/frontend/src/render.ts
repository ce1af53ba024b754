/** Pure HTML renderers.
 *
 * Everything here maps response data to strings; no DOM access and no
 * metrical computation. Edit markers get distinct styling per kind, with
 * the raw marker notation preserved in the title attribute (hover).
 */

import { parseCell } from "./markers.js";
import type {
  IdentifyResponse,
  LineOut,
  MatchOut,
  StatsOut,
  VerseOut,
} from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function similarityPercent(similarity: number): string {
  return `${(similarity * 100).toFixed(1)}%`;
}

/** "भुजङ्गप्रयात (1 edit)" — cost suffix only for non-exact identifications. */
export function matchLabel(match: MatchOut): string {
  if (match.kind === "fuzzy" || match.cost > 0) {
    const unit = match.cost === 1 ? "edit" : "edits";
    return `${match.name} (${match.cost} ${unit})`;
  }
  return match.name;
}

export function renderCell(cell: string): string {
  const parsed = parseCell(cell);
  const title = escapeHtml(cell);
  switch (parsed.kind) {
    case "plain":
      return `<span class="cell">${escapeHtml(parsed.text)}</span>`;
    case "insert":
      return (
        `<span class="cell marker marker-insert" title="${title}">` +
        `+${parsed.weight}</span>`
      );
    case "replace": {
      const alt = parsed.alt
        ? ` → <b>${escapeHtml(parsed.alt)}</b>`
        : ` → ${parsed.weight}`;
      return (
        `<span class="cell marker marker-replace" title="${title}">` +
        `${escapeHtml(parsed.original)}${alt}</span>`
      );
    }
    case "delete":
      return (
        `<span class="cell marker marker-delete" title="${title}">` +
        `${escapeHtml(parsed.original)}</span>`
      );
  }
}

export function renderSuggestionCells(cells: string[] | null): string {
  if (!cells) return "";
  return `<span class="cells">${cells.map(renderCell).join("")}</span>`;
}

/** Scansion block for one line: akshara strip plus the summary columns. */
export function renderScansion(line: LineOut): string {
  const top = line.matches[0] ?? null;
  const chanda = top ? matchLabel(top) : "?";
  const fuzzyTag = top && top.kind === "fuzzy" ? " <em>- Fuzzy</em>" : "";
  const strip = line.syllables
    .map(
      (syl, i) =>
        `<td><div class="akshara">${escapeHtml(syl)}</div>` +
        `<div class="weight">${line.lg[i] ?? ""}</div></td>`,
    )
    .join("");
  return [
    `<div class="scansion">`,
    `<div class="line-text">${escapeHtml(line.text)}</div>`,
    `<table class="akshara-strip"><tbody><tr>${strip}</tr></tbody></table>`,
    `<dl class="summary">`,
    `<dt>Gaṇa</dt><dd>${escapeHtml(line.gana)}</dd>`,
    `<dt>Counts</dt><dd>${line.syllable_count} syllables, ` +
      `${line.matra_count} mātrās</dd>`,
    `<dt>Chanda</dt><dd class="chanda">${escapeHtml(chanda)}${fuzzyTag}</dd>`,
    `</dl>`,
    `</div>`,
  ].join("\n");
}

/** Ranked fuzzy-match table; omitted entirely when nothing is fuzzy. */
export function renderFuzzyTable(
  line: LineOut,
  meterGana: (name: string) => string,
): string {
  const fuzzy = line.matches.filter((m) => m.kind === "fuzzy");
  if (fuzzy.length === 0) return "";
  const rows = fuzzy
    .map((match, i) => {
      const bare = match.name.replace(/ \(.*\)$/, "");
      return (
        `<tr><td>${i + 1}</td>` +
        `<td>${escapeHtml(match.name)}</td>` +
        `<td>${escapeHtml(meterGana(bare))}</td>` +
        `<td>${match.cost}</td>` +
        `<td>${similarityPercent(match.similarity)}</td>` +
        `<td>${renderSuggestionCells(match.suggestion_cells)}</td></tr>`
      );
    })
    .join("\n");
  return [
    `<table class="fuzzy-table">`,
    `<caption>Fuzzy Matches</caption>`,
    `<thead><tr><th>#</th><th>Chanda</th><th>Gaṇa</th><th>Cost</th>` +
      `<th>Similarity</th><th>Suggestion</th></tr></thead>`,
    `<tbody>${rows}</tbody>`,
    `</table>`,
  ].join("\n");
}

export function renderVerse(
  verse: VerseOut,
  index: number,
  mode: string,
  meterGana: (name: string) => string,
): string {
  const parts: string[] = [`<section class="verse">`];
  if (mode === "verse" && verse.verse_meter) {
    const cost = verse.verse_cost ?? 0;
    const label =
      cost > 0
        ? `${verse.verse_meter} (${cost} ${cost === 1 ? "edit" : "edits"})`
        : verse.verse_meter;
    parts.push(
      `<h2>Verse ${index + 1}: <span class="verse-meter">` +
        `${escapeHtml(label)}</span></h2>`,
    );
  } else {
    parts.push(`<h2>Verse ${index + 1}</h2>`);
  }
  for (const line of verse.lines) {
    parts.push(renderScansion(line));
    parts.push(renderFuzzyTable(line, meterGana));
  }
  parts.push(`</section>`);
  return parts.filter(Boolean).join("\n");
}

export function renderStats(stats: StatsOut): string {
  const rows = Object.keys(stats.histogram)
    .sort()
    .map((name) => {
      const entry = stats.histogram[name];
      return (
        `<tr><td>${escapeHtml(name)}</td>` +
        `<td>${entry.exact}</td><td>${entry.fuzzy}</td></tr>`
      );
    })
    .join("\n");
  return [
    `<div class="stats">`,
    `<p>lines: ${stats.lines_total}, exact: ${stats.lines_exact}, ` +
      `fuzzy: ${stats.lines_fuzzy}, ` +
      `unidentified: ${stats.lines_unidentified}</p>`,
    `<table><thead><tr><th>Meter</th><th>Exact</th><th>Fuzzy</th>` +
      `</tr></thead><tbody>${rows}</tbody></table>`,
    `</div>`,
  ].join("\n");
}

export function renderResults(
  response: IdentifyResponse,
  meterGana: (name: string) => string = () => "",
): string {
  const verses = response.verses
    .map((verse, i) => renderVerse(verse, i, response.mode, meterGana))
    .join("\n");
  return `${verses}\n${renderStats(response.stats)}`;
}

/** Display-only meter name mapping (e.g. Devanagari -> IAST); label
 * suffixes like " (Pāda 1)" are preserved. Downloads always use the
 * original response, so this never touches exported bytes. */
export function mapMeterNames(
  response: IdentifyResponse,
  mapper: (bareName: string) => string,
): IdentifyResponse {
  const mapName = (name: string): string => {
    const match = /^(.*?)( \(.*\))?$/.exec(name);
    if (!match) return name;
    return mapper(match[1]) + (match[2] ?? "");
  };
  return {
    ...response,
    verses: response.verses.map((verse) => ({
      ...verse,
      verse_meter: verse.verse_meter ? mapName(verse.verse_meter) : null,
      lines: verse.lines.map((line) => ({
        ...line,
        matches: line.matches.map((m) => ({ ...m, name: mapName(m.name) })),
      })),
    })),
    stats: {
      ...response.stats,
      histogram: Object.fromEntries(
        Object.entries(response.stats.histogram).map(([name, entry]) => [
          mapName(name),
          entry,
        ]),
      ),
    },
  };
}
