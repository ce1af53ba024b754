/** Compact export built from the detailed response.
 *
 * Must stay byte-identical to the command-line tool's compact output:
 * one row per pada, "text | lg | gana | meter", where the meter column
 * carries "(n edit[s])" whenever the identification is not exact.
 */

import type { IdentifyResponse, LineOut } from "./types.js";

function meterColumn(line: LineOut): string {
  const chosen = line.matches[0];
  if (!chosen) return "?";
  if (chosen.kind === "fuzzy" || chosen.cost > 0) {
    const unit = chosen.cost === 1 ? "edit" : "edits";
    return `${chosen.name} (${chosen.cost} ${unit})`;
  }
  return chosen.name;
}

export function compactExport(response: IdentifyResponse): string {
  const rows: string[] = [];
  for (const verse of response.verses) {
    for (const line of verse.lines) {
      rows.push(`${line.text} | ${line.lg} | ${line.gana} | ${meterColumn(line)}`);
    }
  }
  return rows.map((row) => row + "\n").join("");
}
