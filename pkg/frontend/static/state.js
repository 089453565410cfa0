/**
 * Session state and its URL encoding.
 *
 * The whole session (query + scope breadcrumb) lives in the query string,
 * so any grid the user reaches is shareable and replayable by loading its
 * URL. The server holds no session state.
 */
export function initialState() {
    return { query: "", scope: [], heatmap: null, docPanel: null, loading: false, error: null };
}
/** Encode (query, scope) as a query string, e.g. "?q=violence&scope=a,b". */
export function encodeSession(query, scope) {
    const params = new URLSearchParams({ q: query });
    if (scope.length > 0)
        params.set("scope", scope.join(","));
    return `?${params}`;
}
/** Decode (query, scope) from a query string; empty query -> null. */
export function decodeSession(search) {
    const params = new URLSearchParams(search);
    const query = (params.get("q") ?? "").trim();
    if (!query)
        return null;
    const scopeRaw = params.get("scope") ?? "";
    const scope = scopeRaw.split(",").map((t) => t.trim()).filter((t) => t.length > 0);
    return { query, scope };
}
/** Append terms to the scope, skipping ones already present. */
export function extendScope(scope, clicked) {
    const next = [...scope];
    for (const term of clicked) {
        if (!next.includes(term))
            next.push(term);
    }
    return next;
}
/** Remove one term (a breadcrumb chip) from the scope. */
export function removeFromScope(scope, term) {
    return scope.filter((t) => t !== term);
}
