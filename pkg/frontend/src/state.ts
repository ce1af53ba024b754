/** View state and request sequencing.
 *
 * At most one response is ever applied per submission round: every
 * submit gets a sequence number, and a resolving request is discarded
 * when a newer one has already been issued or applied, so stale
 * responses can never overwrite newer ones. Errors are surfaced without
 * clearing the editor or the last good response.
 */

import type { ApiClient } from "./api.js";
import type { IdentifyResponse } from "./types.js";

export type OutputScheme = "match" | "devanagari" | "iast";

export interface ViewState {
  input: string;
  mode: "line" | "verse";
  outputScheme: OutputScheme;
  k: number;
  response: IdentifyResponse | null;
  raw: string | null;
  error: string | null;
}

export function initialState(): ViewState {
  return {
    input: "",
    mode: "verse",
    outputScheme: "match",
    k: 10,
    response: null,
    raw: null,
    error: null,
  };
}

export class IdentifyStore {
  private state: ViewState = initialState();
  private issued = 0;
  private applied = 0;

  constructor(private api: Pick<ApiClient, "identify">) {}

  get view(): ViewState {
    return this.state;
  }

  setInput(text: string): void {
    this.state = { ...this.state, input: text };
  }

  setMode(mode: "line" | "verse"): void {
    this.state = { ...this.state, mode };
  }

  setOutputScheme(scheme: OutputScheme): void {
    this.state = { ...this.state, outputScheme: scheme };
  }

  /** Replace the first occurrence of a flagged syllable with its fix. */
  applyFix(original: string, replacement: string): void {
    const at = this.state.input.indexOf(original);
    if (at < 0) return;
    this.state = {
      ...this.state,
      input:
        this.state.input.slice(0, at) +
        replacement +
        this.state.input.slice(at + original.length),
    };
  }

  async submit(): Promise<ViewState> {
    const { input, mode, k } = this.state;
    if (!input.trim()) {
      this.state = { ...this.state, error: "input is empty" };
      return this.state;
    }
    const seq = ++this.issued;
    try {
      const { body, raw } = await this.api.identify({
        text: input,
        mode,
        scheme: "auto",
        k,
      });
      if (seq < this.issued || seq <= this.applied) {
        return this.state; // a newer submission owns the view
      }
      this.applied = seq;
      this.state = { ...this.state, response: body, raw, error: null };
    } catch (error) {
      if (seq >= this.issued) {
        this.state = { ...this.state, error: String(error) };
      }
    }
    return this.state;
  }

  /** Byte-exact detailed export (the raw service response). */
  detailedExport(): string | null {
    return this.state.raw;
  }

  canDownload(): boolean {
    return this.state.raw !== null;
  }
}
