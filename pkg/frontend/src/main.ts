import { ApiClient } from "./api";
import { App } from "./app";

const root = document.getElementById("app");
if (root === null) throw new Error("missing #app container");
void new App(root, new ApiClient()).start();
