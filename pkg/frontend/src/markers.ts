/** Parsing of suggestion cells.
 *
 * A cell is either a plain syllable or one of the edit markers the
 * service renders: i(L), i(G); r(syllable)[L|G] with an optional
 * {replacement}; d(syllable).
 */

export type ParsedCell =
  | { kind: "plain"; text: string }
  | { kind: "insert"; weight: "L" | "G" }
  | { kind: "replace"; original: string; weight: "L" | "G"; alt: string | null }
  | { kind: "delete"; original: string };

const INSERT = /^i\((L|G)\)$/;
const REPLACE = /^r\((.+?)\)\[(L|G)\](?:\{(.+?)\})?$/;
const DELETE = /^d\((.+)\)$/;

export function parseCell(cell: string): ParsedCell {
  const insert = INSERT.exec(cell);
  if (insert) {
    return { kind: "insert", weight: insert[1] as "L" | "G" };
  }
  const replace = REPLACE.exec(cell);
  if (replace) {
    return {
      kind: "replace",
      original: replace[1],
      weight: replace[2] as "L" | "G",
      alt: replace[3] ?? null,
    };
  }
  const del = DELETE.exec(cell);
  if (del) {
    return { kind: "delete", original: del[1] };
  }
  return { kind: "plain", text: cell };
}

export function isMarker(cell: string): boolean {
  return parseCell(cell).kind !== "plain";
}

/** The first replace marker carrying a concrete fix, if any. */
export function firstFix(
  cells: string[] | null,
): { original: string; replacement: string } | null {
  for (const cell of cells ?? []) {
    const parsed = parseCell(cell);
    if (parsed.kind === "replace" && parsed.alt) {
      return { original: parsed.original, replacement: parsed.alt };
    }
  }
  return null;
}
