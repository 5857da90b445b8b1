import { ApiClient } from "./api.js";
import { createApp } from "./app.js";

const root = document.getElementById("app");
if (root === null) throw new Error("missing #app element");

const app = createApp(root, new ApiClient(""));

// keep the session across reloads via the URL hash
const existing = window.location.hash.replace(/^#/, "") || undefined;
app.store.subscribe(() => {
  const sid = app.store.state.sessionId;
  if (sid) window.location.hash = sid;
});
app.store.init(existing).catch(() => app.store.init());
