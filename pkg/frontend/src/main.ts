/** DOM bootstrap: wires the editor, controls and result pane together.
 *
 * All rendering goes through the pure functions in render.ts; this file
 * only moves strings in and out of the document.
 */

import { ApiClient } from "./api.js";
import { compactExport } from "./compact.js";
import { saveTextFile } from "./download.js";
import { mapMeterNames, renderResults } from "./render.js";
import { IdentifyStore } from "./state.js";
import type { MeterInfo } from "./types.js";

function serviceBaseUrl(): string {
  const meta = document.querySelector('meta[name="service-base-url"]');
  const fromMeta = meta?.getAttribute("content");
  const params = new URLSearchParams(window.location.search);
  return params.get("service") ?? fromMeta ?? "http://127.0.0.1:8000";
}

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

async function start(): Promise<void> {
  const api = new ApiClient(serviceBaseUrl());
  const store = new IdentifyStore(api);

  const input = byId<HTMLTextAreaElement>("input-text");
  const results = byId<HTMLDivElement>("results");
  const status = byId<HTMLParagraphElement>("status");
  const identifyBtn = byId<HTMLButtonElement>("identify");
  const downloadDetailed = byId<HTMLButtonElement>("download-detailed");
  const downloadCompact = byId<HTMLButtonElement>("download-compact");
  const schemeSelect = byId<HTMLSelectElement>("output-scheme");

  let meters: MeterInfo[] = [];
  try {
    meters = await api.meters();
    status.textContent = `${meters.length} meters loaded`;
  } catch (error) {
    status.textContent = `service unreachable: ${String(error)}`;
  }
  const ganaByName = new Map(meters.map((m) => [m.name, m.gana]));
  const iastByName = new Map(meters.map((m) => [m.name, m.name_iast]));

  const meterGana = (name: string): string => ganaByName.get(name) ?? "";
  const iastName = (name: string): string => iastByName.get(name) ?? name;

  function redraw(): void {
    const view = store.view;
    if (view.error) {
      status.textContent = view.error;
    } else if (view.response) {
      status.textContent = `scheme: ${view.response.scheme}`;
    }
    if (!view.response) return;
    const display =
      view.outputScheme === "iast"
        ? mapMeterNames(view.response, iastName)
        : view.response;
    results.innerHTML = renderResults(display, meterGana);
    const enabled = store.canDownload();
    downloadDetailed.disabled = !enabled;
    downloadCompact.disabled = !enabled;
    for (const marker of results.querySelectorAll(".marker-replace")) {
      marker.addEventListener("click", () => {
        const raw = marker.getAttribute("title") ?? "";
        const match = /^r\((.+?)\)\[(?:L|G)\]\{(.+?)\}$/.exec(raw);
        if (!match) return;
        store.applyFix(match[1], match[2]);
        input.value = store.view.input;
        void submit();
      });
    }
  }

  async function submit(): Promise<void> {
    store.setInput(input.value);
    const mode = (
      document.querySelector('input[name="mode"]:checked') as HTMLInputElement
    )?.value;
    store.setMode(mode === "line" ? "line" : "verse");
    status.textContent = "identifying…";
    await store.submit();
    redraw();
  }

  identifyBtn.addEventListener("click", () => void submit());
  schemeSelect.addEventListener("change", () => {
    store.setOutputScheme(
      schemeSelect.value === "iast" ? "iast" : "match",
    );
    redraw();
  });
  downloadDetailed.addEventListener("click", () => {
    const text = store.detailedExport();
    if (text !== null) saveTextFile("identification.json", text);
  });
  downloadCompact.addEventListener("click", () => {
    const view = store.view;
    if (view.response) {
      saveTextFile("identification.txt", compactExport(view.response));
    }
  });

  downloadDetailed.disabled = true;
  downloadCompact.disabled = true;
}

void start();
