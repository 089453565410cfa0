/** Browser bootstrap: wire the App to the static page and the current URL. */

import { App } from "./app.js";

function mount(): void {
  const app = new App({
    form: document.getElementById("search-form") as HTMLFormElement,
    queryInput: document.getElementById("query-input") as HTMLInputElement,
    breadcrumb: document.getElementById("breadcrumb") as HTMLElement,
    grid: document.getElementById("grid") as HTMLElement,
    docPanel: document.getElementById("doc-panel") as HTMLElement,
    errorBanner: document.getElementById("error-banner") as HTMLElement,
  });
  void app.start(window.location.search);
  window.addEventListener("popstate", () => void app.start(window.location.search));
}

if (document.readyState === "loading") {
  document.addEventListener("DOMContentLoaded", mount);
} else {
  mount();
}
