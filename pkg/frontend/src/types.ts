/** Wire types for the identification service (detailed export structure). */

export type MatchKind = "exact" | "multiple" | "pattern" | "fuzzy";

export interface MatchOut {
  name: string;
  kind: MatchKind;
  cost: number;
  similarity: number;
  suggestion_cells: string[] | null;
}

export interface LineOut {
  text: string;
  lg: string;
  gana: string;
  syllables: string[];
  syllable_count: number;
  matra_count: number;
  matches: MatchOut[];
}

export interface VerseOut {
  lines: LineOut[];
  verse_meter: string | null;
  verse_cost: number | null;
}

export interface HistogramEntry {
  exact: number;
  fuzzy: number;
}

export interface StatsOut {
  lines_total: number;
  lines_exact: number;
  lines_fuzzy: number;
  lines_unidentified: number;
  histogram: Record<string, HistogramEntry>;
}

export interface IdentifyResponse {
  mode: string;
  scheme: string;
  verses: VerseOut[];
  stats: StatsOut;
}

export interface IdentifyRequest {
  text: string;
  mode: "line" | "verse";
  scheme?: string;
  k?: number;
}

export interface MeterInfo {
  name: string;
  name_iast: string;
  patterns: string[];
  syllable_counts: number[];
  gana: string;
}

export interface HealthOut {
  status: string;
  version?: string;
}
