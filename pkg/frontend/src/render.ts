/**
 * DOM rendering for the heat map grid, breadcrumb, legend, and document
 * panel. Pure view code: cell backgrounds are copied byte-for-byte from
 * the payload's color field, never recomputed client-side.
 */

import { DocumentsPayload, HeatMapPayload } from "./types.js";

const BAND_LEGEND: { band: string; color: string; note: string }[] = [
  { band: "hot", color: "#FF0000", note: "most frequent combinations" },
  { band: "warm", color: "#80FF00", note: "mid-range" },
  { band: "cold", color: "#0000FF", note: "least frequent" },
];

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function termLabel(term: string, label?: string): string {
  return label ? `${label} (${term})` : term;
}

export interface GridHandlers {
  onCellClick(columnTerm: string, rowTerm: string): void;
  onTermClick(term: string): void;
}

/** Render the heat map grid into `container`, replacing its contents. */
export function renderHeatMap(
  container: HTMLElement,
  payload: HeatMapPayload,
  handlers: GridHandlers,
): void {
  container.replaceChildren();

  if (payload.columns.length === 0) {
    container.append(el("p", "empty-state", "no related terms"));
    return;
  }

  const table = el("table", "heatmap-grid");
  const head = el("tr");
  const corner = el("th", "corner");
  corner.textContent = `${payload.query_doc_count} docs`;
  head.append(corner);
  for (const col of payload.columns) {
    const th = el("th", "col-header");
    th.title = termLabel(col.term, col.label);
    th.append(el("span", "term", col.term), el("span", "count", String(col.count)));
    th.addEventListener("click", () => handlers.onTermClick(col.term));
    head.append(th);
  }
  table.append(head);

  payload.rows.forEach((row, i) => {
    const tr = el("tr");
    const th = el("th", "row-header");
    th.title = termLabel(row.term, row.label);
    th.append(el("span", "term", row.term), el("span", "count", String(row.count)));
    th.addEventListener("click", () => handlers.onTermClick(row.term));
    tr.append(th);
    payload.cells[i].forEach((cell, j) => {
      const colTerm = payload.columns[j].term;
      if (cell === null) {
        const td = el("td", "cell disabled");
        td.setAttribute("aria-disabled", "true");
        tr.append(td);
      } else {
        const td = el("td", "cell", String(cell.count));
        td.style.backgroundColor = cell.color; // server-provided, pass-through
        td.dataset.color = cell.color;
        td.dataset.band = cell.band;
        td.title = `${row.term} + ${colTerm}: ${cell.count} documents`;
        td.addEventListener("click", () => handlers.onCellClick(colTerm, row.term));
        tr.append(td);
      }
    });
    table.append(tr);
  });
  container.append(table);

  const legend = el("div", "legend");
  for (const entry of BAND_LEGEND) {
    const item = el("span", "legend-item");
    const swatch = el("span", "legend-swatch");
    swatch.style.backgroundColor = entry.color;
    item.append(swatch, el("span", undefined, `${entry.band}: ${entry.note}`));
    legend.append(item);
  }
  container.append(legend);
}

/** Render the scope breadcrumb as removable chips. */
export function renderBreadcrumb(
  container: HTMLElement,
  scope: string[],
  onRemove: (term: string) => void,
): void {
  container.replaceChildren();
  scope.forEach((term, i) => {
    if (i > 0) container.append(el("span", "crumb-sep", "›"));
    const chip = el("span", "chip");
    chip.dataset.term = term;
    chip.append(el("span", "chip-term", term));
    const remove = el("button", "chip-remove", "×");
    remove.title = `remove ${term} from scope`;
    remove.addEventListener("click", () => onRemove(term));
    chip.append(remove);
    container.append(chip);
  });
}

export interface PanelHandlers {
  onPage(page: number): void;
  onFocus(): void;
  onClose(): void;
}

/** Render the drilldown document panel for a clicked term or cell. */
export function renderDocPanel(
  container: HTMLElement,
  selection: string[],
  payload: DocumentsPayload,
  handlers: PanelHandlers,
): void {
  container.replaceChildren();
  container.hidden = false;

  const header = el("div", "panel-header");
  header.append(el("strong", undefined, selection.join(" + ")));
  header.append(el("span", "panel-total", ` ${payload.total} documents`));
  const close = el("button", "panel-close", "×");
  close.addEventListener("click", () => handlers.onClose());
  header.append(close);
  container.append(header);

  if (selection.length > 0) {
    const focus = el("button", "focus-button", "Focus map on this combination");
    focus.addEventListener("click", () => handlers.onFocus());
    container.append(focus);
  }

  const list = el("ul", "doc-list");
  for (const item of payload.items) {
    const li = el("li", "doc-item");
    li.append(el("span", "doc-id", item.id), el("span", "doc-title", item.title));
    const terms = item.terms.map((t) => t.label ?? t.term).join(", ");
    li.append(el("span", "doc-terms", terms));
    list.append(li);
  }
  container.append(list);

  const lastPage = Math.max(1, Math.ceil(payload.total / payload.page_size));
  const pager = el("div", "pager");
  const prev = el("button", "pager-prev", "previous");
  prev.disabled = payload.page <= 1;
  prev.addEventListener("click", () => handlers.onPage(payload.page - 1));
  const next = el("button", "pager-next", "next");
  next.disabled = payload.page >= lastPage;
  next.addEventListener("click", () => handlers.onPage(payload.page + 1));
  pager.append(prev, el("span", "pager-info", `page ${payload.page} / ${lastPage}`), next);
  container.append(pager);
}

/** Show an error banner without touching the current grid. */
export function renderError(container: HTMLElement, message: string | null): void {
  container.replaceChildren();
  container.hidden = message === null;
  if (message !== null) {
    container.append(el("span", "error-text", message));
  }
}
