/**
 * Application controller: owns the view state, talks to the gateway, and
 * delegates all drawing to render.ts. Session state (query + scope) is
 * mirrored into the browser URL after every successful map load, so any
 * click path can be replayed by loading its final URL.
 */
import { ApiClient } from "./api.js";
import { renderBreadcrumb, renderDocPanel, renderError, renderHeatMap } from "./render.js";
import { decodeSession, encodeSession, extendScope, initialState, removeFromScope, } from "./state.js";
export class App {
    constructor(els, api = new ApiClient(), pushUrl = (search) => history.pushState(null, "", search)) {
        this.els = els;
        this.api = api;
        this.pushUrl = pushUrl;
        this.state = initialState();
        this.lastFailed = null;
        els.form.addEventListener("submit", (event) => {
            event.preventDefault();
            this.submitQuery(els.queryInput.value);
        });
    }
    /** Restore a session from a URL query string (deep link / replay). */
    start(search) {
        const session = decodeSession(search);
        if (!session)
            return Promise.resolve();
        this.els.queryInput.value = session.query;
        return this.loadMap(session.query, session.scope, false);
    }
    /** Fresh session for a newly submitted search term. */
    submitQuery(text) {
        const query = text.trim();
        if (!query) {
            renderError(this.els.errorBanner, "enter a search term");
            return Promise.resolve();
        }
        this.closePanel();
        return this.loadMap(query, [], true);
    }
    /** Cell click: browse the documents behind (column, row). */
    openCell(columnTerm, rowTerm) {
        return this.openPanel([columnTerm, rowTerm], 1);
    }
    /** Term click (column or row header): browse that term's documents. */
    openTerm(term) {
        return this.openPanel([term], 1);
    }
    /** Focus: fold the open panel's selection into the scope, reload map. */
    focusSelection() {
        if (!this.state.docPanel)
            return Promise.resolve();
        const scope = extendScope(this.state.scope, this.state.docPanel.selection);
        this.closePanel();
        return this.loadMap(this.state.query, scope, true);
    }
    /** Breadcrumb chip removal: drop one term and reload within the rest. */
    removeChip(term) {
        this.closePanel();
        return this.loadMap(this.state.query, removeFromScope(this.state.scope, term), true);
    }
    async loadMap(query, scope, updateUrl) {
        this.state.loading = true;
        renderError(this.els.errorBanner, null);
        try {
            const payload = await this.api.fetchHeatMap(query, scope);
            this.state.query = query;
            this.state.scope = scope;
            this.state.heatmap = payload;
            this.state.error = null;
            if (updateUrl)
                this.pushUrl(encodeSession(query, scope));
            this.draw();
        }
        catch (err) {
            if (err.name === "AbortError")
                return; // superseded request
            this.state.error = err.message;
            this.lastFailed = () => void this.loadMap(query, scope, updateUrl);
            this.drawError(); // previous grid stays in place
        }
        finally {
            this.state.loading = false;
        }
    }
    async openPanel(selection, page) {
        try {
            const payload = await this.api.fetchDocuments(this.state.query, this.state.scope, selection, page);
            this.state.docPanel = { selection, page: payload };
            this.state.error = null;
            this.drawPanel();
            renderError(this.els.errorBanner, null);
        }
        catch (err) {
            this.state.error = err.message;
            this.lastFailed = () => void this.openPanel(selection, page);
            this.drawError();
        }
    }
    retry() {
        const action = this.lastFailed;
        this.lastFailed = null;
        if (action)
            action();
    }
    closePanel() {
        this.state.docPanel = null;
        this.els.docPanel.replaceChildren();
        this.els.docPanel.hidden = true;
    }
    draw() {
        const payload = this.state.heatmap;
        if (!payload)
            return;
        renderHeatMap(this.els.grid, payload, {
            onCellClick: (col, row) => void this.openCell(col, row),
            onTermClick: (term) => void this.openTerm(term),
        });
        renderBreadcrumb(this.els.breadcrumb, this.state.scope, (term) => void this.removeChip(term));
    }
    drawPanel() {
        if (!this.state.docPanel)
            return;
        const { selection, page } = this.state.docPanel;
        renderDocPanel(this.els.docPanel, selection, page, {
            onPage: (p) => void this.openPanel(selection, p),
            onFocus: () => void this.focusSelection(),
            onClose: () => this.closePanel(),
        });
    }
    drawError() {
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
