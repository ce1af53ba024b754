/** End-to-end: drives the real identification service.
 *
 * Spawns the Python service, submits the worked-example line through the
 * store, applies the displayed fix, and checks the download paths —
 * including byte-identity with the direct service response and parity
 * with the command-line compact output.
 */

import { spawn, spawnSync, type ChildProcess } from "node:child_process";
import { mkdtempSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join, resolve } from "node:path";
import { fileURLToPath } from "node:url";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { compactExport } from "../src/compact.js";
import { firstFix } from "../src/markers.js";
import { renderResults } from "../src/render.js";
import { IdentifyStore } from "../src/state.js";

const REPO_ROOT = resolve(fileURLToPath(import.meta.url), "../../..");
const NAMASTE_LINE = "नमस्ते सदा वत्सले मातृभुमे";

const PY_ENV = {
  ...process.env,
  PYTHONPATH: [join(REPO_ROOT, "src"), process.env.PYTHONPATH ?? ""]
    .filter(Boolean)
    .join(":"),
};

let service: ChildProcess;
let baseUrl: string;

async function waitForHealth(url: string, tries = 100): Promise<void> {
  for (let i = 0; i < tries; i++) {
    try {
      const response = await fetch(`${url}/health`);
      if (response.status === 200) return;
    } catch {
      /* not up yet */
    }
    await new Promise((r) => setTimeout(r, 150));
  }
  throw new Error(`service at ${url} never became healthy`);
}

beforeAll(async () => {
  const port = 21000 + (process.pid % 9000);
  baseUrl = `http://127.0.0.1:${port}`;
  service = spawn(
    "python3",
    ["scripts/serve.py", "--port", String(port)],
    { cwd: REPO_ROOT, stdio: "ignore", env: PY_ENV },
  );
  await waitForHealth(baseUrl);
});

afterAll(() => {
  service?.kill();
});

describe("compose-check-fix loop against the live service", () => {
  it("runs the worked example, applies the fix, verifies downloads", async () => {
    const api = new ApiClient(baseUrl);
    const meters = await api.meters();
    expect(meters.length).toBeGreaterThanOrEqual(20);
    const ganaByName = new Map(meters.map((m) => [m.name, m.gana]));
    const meterGana = (name: string) => ganaByName.get(name) ?? "";

    const store = new IdentifyStore(api);
    store.setInput(NAMASTE_LINE);
    store.setMode("line");
    await store.submit();

    const view = store.view;
    expect(view.error).toBeNull();
    expect(view.response).not.toBeNull();
    const html = renderResults(view.response!, meterGana);
    expect(html).toContain("भुजङ्गप्रयात (1 edit)");
    expect(html).toContain("91.7%");
    expect(html).toContain("Fuzzy Matches");
    expect(html).toContain("यययय"); // gana of the top match, via /meters

    // the displayed fix is भु -> भू on the 11th syllable
    const top = view.response!.verses[0].lines[0].matches[0];
    const fix = firstFix(top.suggestion_cells);
    expect(fix).toEqual({ original: "भु", replacement: "भू" });

    store.applyFix(fix!.original, fix!.replacement);
    expect(store.view.input).toBe("नमस्ते सदा वत्सले मातृभूमे");
    await store.submit();

    const fixedView = store.view;
    const fixedTop = fixedView.response!.verses[0].lines[0].matches[0];
    expect(fixedTop.kind).toBe("exact");
    expect(fixedTop.name).toBe("भुजङ्गप्रयात");
    const fixedHtml = renderResults(fixedView.response!, meterGana);
    expect(fixedHtml).not.toContain("Fuzzy Matches");
    expect(fixedHtml).not.toContain("marker-");

    // detailed download is byte-identical to the direct service response
    const direct = await fetch(`${baseUrl}/identify`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({
        text: fixedView.input,
        mode: "line",
        scheme: "auto",
        k: 10,
      }),
    });
    const directBytes = await direct.text();
    expect(store.detailedExport()).toBe(directBytes);

    // compact download matches the command-line compact output
    const dir = mkdtempSync(join(tmpdir(), "vrtta-ui-"));
    try {
      const inputFile = join(dir, "input.txt");
      writeFileSync(inputFile, fixedView.input, "utf-8");
      const cli = spawnSync(
        "python3",
        ["-m", "vrtta.cli", inputFile, "--mode", "line",
         "--format", "compact"],
        { cwd: REPO_ROOT, encoding: "utf-8", env: PY_ENV },
      );
      expect(cli.status).toBe(0);
      expect(compactExport(fixedView.response!)).toBe(cli.stdout);
    } finally {
      rmSync(dir, { recursive: true, force: true });
    }
  });

  it("stale responses never overwrite newer ones (live)", async () => {
    const api = new ApiClient(baseUrl);
    const store = new IdentifyStore(api);
    store.setInput("गा गा गा गा गा ग गा गा ग गा गा");
    store.setMode("line");
    const slow = store.submit();
    store.setInput(NAMASTE_LINE);
    const fast = store.submit();
    await Promise.all([slow, fast]);
    const text = store.view.response!.verses[0].lines[0].text;
    expect(text).toBe(NAMASTE_LINE);
  });

  it("surfaces service errors inline without clearing state", async () => {
    const api = new ApiClient(baseUrl);
    const store = new IdentifyStore(api);
    store.setInput(NAMASTE_LINE);
    store.setMode("line");
    await store.submit();
    expect(store.view.raw).not.toBeNull();
    const before = store.view.raw;

    store.setInput("   ");
    await store.submit();
    expect(store.view.error).toContain("empty");
    expect(store.view.raw).toBe(before);
  });
});
