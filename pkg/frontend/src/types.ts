/**
 * Wire types for the heat map gateway API, plus a defensive validator.
 * The client never computes counts, normalization, or colors: everything
 * rendered comes verbatim from these payloads.
 */

export interface TermCount {
  term: string;
  count: number;
  label?: string;
}

export interface Cell {
  count: number;
  normalized: number;
  color: string;
  band: "hot" | "warm" | "cold";
}

export interface HeatMapPayload {
  query: string;
  scope: string[];
  k: number;
  m: number;
  query_doc_count: number;
  columns: TermCount[];
  rows: TermCount[];
  cells: (Cell | null)[][];
}

export interface DocumentItem {
  id: string;
  title: string;
  terms: { term: string; label?: string }[];
}

export interface DocumentsPayload {
  query: string;
  scope: string[];
  terms: string[];
  total: number;
  page: number;
  page_size: number;
  items: DocumentItem[];
}

function isTermCount(x: unknown): x is TermCount {
  const t = x as TermCount;
  return !!t && typeof t.term === "string" && typeof t.count === "number";
}

function isCell(x: unknown): x is Cell {
  const c = x as Cell;
  return (
    !!c &&
    typeof c.count === "number" &&
    typeof c.normalized === "number" &&
    typeof c.color === "string" &&
    (c.band === "hot" || c.band === "warm" || c.band === "cold")
  );
}

/** Validate a heat map payload; throws on schema violations. */
export function validateHeatMap(payload: unknown): HeatMapPayload {
  const p = payload as HeatMapPayload;
  if (!p || typeof p !== "object") throw new Error("heat map payload is not an object");
  if (typeof p.query !== "string") throw new Error("missing query");
  if (!Array.isArray(p.scope)) throw new Error("missing scope");
  if (typeof p.query_doc_count !== "number") throw new Error("missing query_doc_count");
  if (!Array.isArray(p.columns) || !p.columns.every(isTermCount))
    throw new Error("invalid columns");
  if (!Array.isArray(p.rows) || !p.rows.every(isTermCount)) throw new Error("invalid rows");
  if (!Array.isArray(p.cells) || p.cells.length !== p.rows.length)
    throw new Error("cells do not match rows");
  for (const row of p.cells) {
    if (!Array.isArray(row) || row.length !== p.columns.length)
      throw new Error("cells do not match columns");
    for (const cell of row) {
      if (cell !== null && !isCell(cell)) throw new Error("invalid cell");
    }
  }
  return p;
}
