/** Browser bootstrap: wire the App to the static page and the current URL. */
import { App } from "./app.js";
function mount() {
    const app = new App({
        form: document.getElementById("search-form"),
        queryInput: document.getElementById("query-input"),
        breadcrumb: document.getElementById("breadcrumb"),
        grid: document.getElementById("grid"),
        docPanel: document.getElementById("doc-panel"),
        errorBanner: document.getElementById("error-banner"),
    });
    void app.start(window.location.search);
    window.addEventListener("popstate", () => void app.start(window.location.search));
}
if (document.readyState === "loading") {
    document.addEventListener("DOMContentLoaded", mount);
}
else {
    mount();
}
