/**
 * Test harness: mounts the app into jsdom and fakes the gateway with
 * engine-generated fixture payloads keyed by (query, scope) / selection.
 */

import { vi } from "vitest";
import { App, AppElements } from "../src/app.js";
import { ApiClient } from "../src/api.js";
import fixtures from "./fixtures/tiny5.json";

export interface Harness {
  app: App;
  els: AppElements;
  fetchSpy: ReturnType<typeof vi.fn>;
  pushedUrls: string[];
}

function jsonResponse(payload: unknown, status = 200): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "content-type": "application/json" },
  });
}

/** fetch stand-in answering from the fixture file like the real gateway. */
export function fakeFetch(url: string | URL | Request): Promise<Response> {
  const u = new URL(String(url), "http://test.local");
  const q = u.searchParams.get("q") ?? "";
  const scope = u.searchParams.get("scope") ?? "";
  if (!q.trim()) return Promise.resolve(jsonResponse({ error: "empty query" }, 400));
  if (u.pathname === "/api/heatmap") {
    const payload = (fixtures.heatmaps as Record<string, unknown>)[`${q}|${scope}`];
    if (!payload) return Promise.resolve(jsonResponse({ error: "no fixture" }, 500));
    return Promise.resolve(jsonResponse(payload));
  }
  if (u.pathname === "/api/documents") {
    const terms = u.searchParams.get("terms") ?? "";
    const payload = (fixtures.documents as Record<string, unknown>)[`${q}|${scope}|${terms}`];
    if (!payload) return Promise.resolve(jsonResponse({ error: "no fixture" }, 500));
    return Promise.resolve(jsonResponse(payload));
  }
  return Promise.resolve(jsonResponse({ error: "not found" }, 404));
}

export function mountApp(): Harness {
  document.body.innerHTML = `
    <form id="search-form"><input id="query-input" type="text" /></form>
    <nav id="breadcrumb"></nav>
    <div id="error-banner" hidden></div>
    <section id="grid"></section>
    <aside id="doc-panel" hidden></aside>
  `;
  const els: AppElements = {
    form: document.getElementById("search-form") as HTMLFormElement,
    queryInput: document.getElementById("query-input") as HTMLInputElement,
    breadcrumb: document.getElementById("breadcrumb") as HTMLElement,
    grid: document.getElementById("grid") as HTMLElement,
    docPanel: document.getElementById("doc-panel") as HTMLElement,
    errorBanner: document.getElementById("error-banner") as HTMLElement,
  };
  const fetchSpy = vi.fn(fakeFetch);
  vi.stubGlobal("fetch", fetchSpy);
  const pushedUrls: string[] = [];
  const app = new App(els, new ApiClient(""), (search) => pushedUrls.push(search));
  return { app, els, fetchSpy, pushedUrls };
}

/** All applicable (non-disabled) cell elements of the current grid. */
export function gridCells(els: AppElements): HTMLElement[] {
  return Array.from(els.grid.querySelectorAll("td.cell:not(.disabled)"));
}

export function disabledCells(els: AppElements): HTMLElement[] {
  return Array.from(els.grid.querySelectorAll("td.cell.disabled"));
}
