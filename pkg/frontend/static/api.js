/**
 * Thin fetch wrappers over the gateway API.
 *
 * Map requests go through a single-flight guard: submitting a new map
 * request aborts any in-flight one, so a slow earlier response can never
 * overwrite a newer grid.
 */
import { validateHeatMap } from "./types.js";
export class ApiClient {
    constructor(baseUrl = "") {
        this.baseUrl = baseUrl;
        this.mapController = null;
    }
    async fetchHeatMap(query, scope) {
        if (this.mapController)
            this.mapController.abort();
        this.mapController = new AbortController();
        const params = new URLSearchParams({ q: query });
        if (scope.length > 0)
            params.set("scope", scope.join(","));
        const res = await fetch(`${this.baseUrl}/api/heatmap?${params}`, {
            signal: this.mapController.signal,
        });
        if (!res.ok) {
            const body = await res.json().catch(() => ({}));
            throw new Error(body.error ?? `request failed (${res.status})`);
        }
        return validateHeatMap(await res.json());
    }
    async fetchDocuments(query, scope, selection, page) {
        const params = new URLSearchParams({ q: query, page: String(page) });
        if (scope.length > 0)
            params.set("scope", scope.join(","));
        if (selection.length > 0)
            params.set("terms", selection.join(","));
        const res = await fetch(`${this.baseUrl}/api/documents?${params}`);
        if (!res.ok) {
            const body = await res.json().catch(() => ({}));
            throw new Error(body.error ?? `request failed (${res.status})`);
        }
        return (await res.json());
    }
}
