/**
 * Session behavior: URL-encoded state, breadcrumb chips, focus flow, and
 * replaying a click path by loading its final URL.
 */

import { describe, expect, it, vi } from "vitest";
import { decodeSession, encodeSession, extendScope, removeFromScope } from "../src/state.js";
import { gridCells, mountApp } from "./helpers.js";

describe("session state encoding", () => {
  it("round-trips query and scope through the URL", () => {
    const url = encodeSession("violence", ["a", "b"]);
    expect(url).toBe("?q=violence&scope=a%2Cb");
    expect(decodeSession(url)).toEqual({ query: "violence", scope: ["a", "b"] });
  });

  it("omits empty scope and rejects empty query", () => {
    expect(encodeSession("violence", [])).toBe("?q=violence");
    expect(decodeSession("?q=")).toBeNull();
    expect(decodeSession("")).toBeNull();
  });

  it("scope helpers dedupe and remove", () => {
    expect(extendScope(["a"], ["a", "b"])).toEqual(["a", "b"]);
    expect(removeFromScope(["a", "b"], "a")).toEqual(["b"]);
  });
});

describe("query submission", () => {
  it("renders the base grid for a fresh query and updates the URL", async () => {
    const { app, els, pushedUrls } = mountApp();
    await app.submitQuery("violence");
    expect(els.grid.querySelectorAll("th.col-header").length).toBe(3);
    expect(pushedUrls.at(-1)).toBe("?q=violence");
    expect(els.breadcrumb.querySelectorAll(".chip").length).toBe(0);
  });

  it("rejects an empty submission without a request", async () => {
    const { app, els, fetchSpy } = mountApp();
    await app.submitQuery("   ");
    expect(fetchSpy).not.toHaveBeenCalled();
    expect(els.errorBanner.hidden).toBe(false);
  });

  it("keeps the previous grid when a map request fails", async () => {
    const { app, els } = mountApp();
    await app.submitQuery("violence");
    const before = els.grid.innerHTML;
    await app.submitQuery("no-fixture-query");
    expect(els.grid.innerHTML).toBe(before);
    expect(els.errorBanner.hidden).toBe(false);
    expect(els.errorBanner.querySelector(".retry-button")).not.toBeNull();
  });
});

describe("cell click and focus", () => {
  it("opens the document panel for the clicked combination", async () => {
    const { app, els } = mountApp();
    await app.submitQuery("violence");
    // first applicable cell is (row b, col a) -> selection [a, b]
    gridCells(els)[0].click();
    await vi.waitFor(() => expect(els.docPanel.hidden).toBe(false));
    expect(els.docPanel.textContent).toContain("a + b");
    expect(els.docPanel.querySelectorAll(".doc-item").length).toBe(2);
    expect(els.docPanel.textContent).toContain("violence report");
  });

  it("focus extends the scope with both terms and adds breadcrumb chips", async () => {
    const { app, els, pushedUrls } = mountApp();
    await app.submitQuery("violence");
    gridCells(els)[0].click();
    await vi.waitFor(() => expect(els.docPanel.hidden).toBe(false));
    (els.docPanel.querySelector(".focus-button") as HTMLButtonElement).click();
    await vi.waitFor(() => expect(pushedUrls.at(-1)).toBe("?q=violence&scope=a%2Cb"));
    const chips = Array.from(els.breadcrumb.querySelectorAll(".chip")).map(
      (c) => (c as HTMLElement).dataset.term,
    );
    expect(chips).toEqual(["a", "b"]);
    // scoped map over {c} only
    const cols = Array.from(els.grid.querySelectorAll("th.col-header .term")).map(
      (e) => e.textContent,
    );
    expect(cols).toEqual(["c"]);
  });

  it("removing a chip re-requests the map without that term", async () => {
    const { app, els, pushedUrls } = mountApp();
    await app.submitQuery("violence");
    gridCells(els)[0].click();
    await vi.waitFor(() => expect(els.docPanel.hidden).toBe(false));
    (els.docPanel.querySelector(".focus-button") as HTMLButtonElement).click();
    await vi.waitFor(() => expect(els.breadcrumb.querySelectorAll(".chip").length).toBe(2));
    const chipA = els.breadcrumb.querySelector('.chip[data-term="a"] .chip-remove');
    (chipA as HTMLButtonElement).click();
    await vi.waitFor(() => expect(pushedUrls.at(-1)).toBe("?q=violence&scope=b"));
    const chips = Array.from(els.breadcrumb.querySelectorAll(".chip")).map(
      (c) => (c as HTMLElement).dataset.term,
    );
    expect(chips).toEqual(["b"]);
  });
});

describe("session replay", () => {
  it("loading the final URL reproduces the grid from the interactive path", async () => {
    // interactive path: query -> cell focus -> chip removal
    const interactive = mountApp();
    await interactive.app.submitQuery("violence");
    gridCells(interactive.els)[0].click();
    await vi.waitFor(() => expect(interactive.els.docPanel.hidden).toBe(false));
    (interactive.els.docPanel.querySelector(".focus-button") as HTMLButtonElement).click();
    await vi.waitFor(() =>
      expect(interactive.pushedUrls.at(-1)).toBe("?q=violence&scope=a%2Cb"),
    );
    const chipA = interactive.els.breadcrumb.querySelector('.chip[data-term="a"] .chip-remove');
    (chipA as HTMLButtonElement).click();
    await vi.waitFor(() =>
      expect(interactive.pushedUrls.at(-1)).toBe("?q=violence&scope=b"),
    );
    const finalUrl = interactive.pushedUrls.at(-1)!;
    const interactiveGrid = interactive.els.grid.innerHTML;
    const interactiveCrumbs = interactive.els.breadcrumb.innerHTML;

    // direct load of the final URL
    const direct = mountApp();
    await direct.app.start(finalUrl);
    expect(direct.els.grid.innerHTML).toBe(interactiveGrid);
    expect(direct.els.breadcrumb.innerHTML).toBe(interactiveCrumbs);
    expect(direct.els.queryInput.value).toBe("violence");
  });

  it("a deep link with scope renders breadcrumb chips immediately", async () => {
    const { app, els } = mountApp();
    await app.start("?q=violence&scope=a");
    const chips = Array.from(els.breadcrumb.querySelectorAll(".chip")).map(
      (c) => (c as HTMLElement).dataset.term,
    );
    expect(chips).toEqual(["a"]);
    const cols = Array.from(els.grid.querySelectorAll("th.col-header .term")).map(
      (e) => e.textContent,
    );
    expect(cols).toEqual(["b", "c"]);
  });
});
