import { ApiClient } from "./api";
import { App } from "./app";

const root = document.getElementById("app");
if (root) {
  const app = new App(root, new ApiClient(""));
  app.start();
} else {
  console.error("missing #app mount point");
}
