import { App } from "./app.js";

const root = document.getElementById("app");
if (root) {
  // Served from anywhere: same-origin by default, overridable for a
  // backend running on another port during development.
  const params = new URLSearchParams(window.location.search);
  const base = params.get("api") ?? "";
  new App(root, base);
}
