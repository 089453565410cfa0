/**
 * Application controller: owns the view state, talks to the gateway, and
 * delegates all drawing to render.ts. Session state (query + scope) is
 * mirrored into the browser URL after every successful map load, so any
 * click path can be replayed by loading its final URL.
 */

import { ApiClient } from "./api.js";
import { renderBreadcrumb, renderDocPanel, renderError, renderHeatMap } from "./render.js";
import {
  ViewState,
  decodeSession,
  encodeSession,
  extendScope,
  initialState,
  removeFromScope,
} from "./state.js";

export interface AppElements {
  form: HTMLFormElement;
  queryInput: HTMLInputElement;
  breadcrumb: HTMLElement;
  grid: HTMLElement;
  docPanel: HTMLElement;
  errorBanner: HTMLElement;
}

export class App {
  readonly state: ViewState = initialState();
  private lastFailed: (() => void) | null = null;

  constructor(
    private els: AppElements,
    private api: ApiClient = new ApiClient(),
    private pushUrl: (search: string) => void = (search) =>
      history.pushState(null, "", search),
  ) {
    els.form.addEventListener("submit", (event) => {
      event.preventDefault();
      this.submitQuery(els.queryInput.value);
    });
  }

  /** Restore a session from a URL query string (deep link / replay). */
  start(search: string): Promise<void> {
    const session = decodeSession(search);
    if (!session) return Promise.resolve();
    this.els.queryInput.value = session.query;
    return this.loadMap(session.query, session.scope, false);
  }

  /** Fresh session for a newly submitted search term. */
  submitQuery(text: string): Promise<void> {
    const query = text.trim();
    if (!query) {
      renderError(this.els.errorBanner, "enter a search term");
      return Promise.resolve();
    }
    this.closePanel();
    return this.loadMap(query, [], true);
  }

  /** Cell click: browse the documents behind (column, row). */
  openCell(columnTerm: string, rowTerm: string): Promise<void> {
    return this.openPanel([columnTerm, rowTerm], 1);
  }

  /** Term click (column or row header): browse that term's documents. */
  openTerm(term: string): Promise<void> {
    return this.openPanel([term], 1);
  }

  /** Focus: fold the open panel's selection into the scope, reload map. */
  focusSelection(): Promise<void> {
    if (!this.state.docPanel) return Promise.resolve();
    const scope = extendScope(this.state.scope, this.state.docPanel.selection);
    this.closePanel();
    return this.loadMap(this.state.query, scope, true);
  }

  /** Breadcrumb chip removal: drop one term and reload within the rest. */
  removeChip(term: string): Promise<void> {
    this.closePanel();
    return this.loadMap(this.state.query, removeFromScope(this.state.scope, term), true);
  }

  private async loadMap(query: string, scope: string[], updateUrl: boolean): Promise<void> {
    this.state.loading = true;
    renderError(this.els.errorBanner, null);
    try {
      const payload = await this.api.fetchHeatMap(query, scope);
      this.state.query = query;
      this.state.scope = scope;
      this.state.heatmap = payload;
      this.state.error = null;
      if (updateUrl) this.pushUrl(encodeSession(query, scope));
      this.draw();
    } catch (err) {
      if ((err as Error).name === "AbortError") return; // superseded request
      this.state.error = (err as Error).message;
      this.lastFailed = () => void this.loadMap(query, scope, updateUrl);
      this.drawError(); // previous grid stays in place
    } finally {
      this.state.loading = false;
    }
  }

  private async openPanel(selection: string[], page: number): Promise<void> {
    try {
      const payload = await this.api.fetchDocuments(
        this.state.query,
        this.state.scope,
        selection,
        page,
      );
      this.state.docPanel = { selection, page: payload };
      this.state.error = null;
      this.drawPanel();
      renderError(this.els.errorBanner, null);
    } catch (err) {
      this.state.error = (err as Error).message;
      this.lastFailed = () => void this.openPanel(selection, page);
      this.drawError();
    }
  }

  retry(): void {
    const action = this.lastFailed;
    this.lastFailed = null;
    if (action) action();
  }

  private closePanel(): void {
    this.state.docPanel = null;
    this.els.docPanel.replaceChildren();
    this.els.docPanel.hidden = true;
  }

  private draw(): void {
    const payload = this.state.heatmap;
    if (!payload) return;
    renderHeatMap(this.els.grid, payload, {
      onCellClick: (col, row) => void this.openCell(col, row),
      onTermClick: (term) => void this.openTerm(term),
    });
    renderBreadcrumb(this.els.breadcrumb, this.state.scope, (term) => void this.removeChip(term));
  }

  private drawPanel(): void {
    if (!this.state.docPanel) return;
    const { selection, page } = this.state.docPanel;
    renderDocPanel(this.els.docPanel, selection, page, {
      onPage: (p) => void this.openPanel(selection, p),
      onFocus: () => void this.focusSelection(),
      onClose: () => this.closePanel(),
    });
  }

  private drawError(): void {
    renderError(this.els.errorBanner, this.state.error);
    if (this.lastFailed) {
      const retry = document.createElement("button");
      retry.className = "retry-button";
      retry.textContent = "retry";
      retry.addEventListener("click", () => this.retry());
      this.els.errorBanner.append(retry);
    }
  }
}
