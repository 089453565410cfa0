/**
 * Wire types for the heat map gateway API, plus a defensive validator.
 * The client never computes counts, normalization, or colors: everything
 * rendered comes verbatim from these payloads.
 */
function isTermCount(x) {
    const t = x;
    return !!t && typeof t.term === "string" && typeof t.count === "number";
}
function isCell(x) {
    const c = x;
    return (!!c &&
        typeof c.count === "number" &&
        typeof c.normalized === "number" &&
        typeof c.color === "string" &&
        (c.band === "hot" || c.band === "warm" || c.band === "cold"));
}
/** Validate a heat map payload; throws on schema violations. */
export function validateHeatMap(payload) {
    const p = payload;
    if (!p || typeof p !== "object")
        throw new Error("heat map payload is not an object");
    if (typeof p.query !== "string")
        throw new Error("missing query");
    if (!Array.isArray(p.scope))
        throw new Error("missing scope");
    if (typeof p.query_doc_count !== "number")
        throw new Error("missing query_doc_count");
    if (!Array.isArray(p.columns) || !p.columns.every(isTermCount))
        throw new Error("invalid columns");
    if (!Array.isArray(p.rows) || !p.rows.every(isTermCount))
        throw new Error("invalid rows");
    if (!Array.isArray(p.cells) || p.cells.length !== p.rows.length)
        throw new Error("cells do not match rows");
    for (const row of p.cells) {
        if (!Array.isArray(row) || row.length !== p.columns.length)
            throw new Error("cells do not match columns");
        for (const cell of row) {
            if (cell !== null && !isCell(cell))
                throw new Error("invalid cell");
        }
    }
    return p;
}
