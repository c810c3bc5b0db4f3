/** End-to-end checks against the real service on the bundled lexicon.

Spawns `serve` on a temporary copy of the data and drives the full app
in jsdom with real fetch.  Requires the Python package to be installed.
*/

import { afterAll, beforeAll, describe, expect, it, vi } from "vitest";
import { execFileSync, spawn } from "node:child_process";
import type { ChildProcess } from "node:child_process";
import { copyFileSync, mkdtempSync, rmSync } from "node:fs";
import net from "node:net";
import { tmpdir } from "node:os";
import path from "node:path";

import { ApiClient } from "../src/api";
import { App } from "../src/app";

let child: ChildProcess | undefined;
let dataDir: string;
let base: string;

function freePort(): Promise<number> {
  return new Promise((resolve, reject) => {
    const probe = net.createServer();
    probe.once("error", reject);
    probe.listen(0, "127.0.0.1", () => {
      const port = (probe.address() as net.AddressInfo).port;
      probe.close(() => resolve(port));
    });
  });
}

async function waitReady(timeoutMs: number): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${base}/api/stats`);
      if (response.ok) return;
    } catch {
      // not listening yet
    }
    await new Promise((resolve) => setTimeout(resolve, 150));
  }
  throw new Error(`service at ${base} did not come up`);
}

beforeAll(async () => {
  const fixture = execFileSync(
    "python3",
    ["-c", "from mujam.fixture import fixture_dir; print(fixture_dir())"],
    { encoding: "utf-8" },
  ).trim();
  dataDir = mkdtempSync(path.join(tmpdir(), "mujam-ui-"));
  for (const name of ["words.tsv", "relations.tsv"]) {
    copyFileSync(path.join(fixture, name), path.join(dataDir, name));
  }
  const port = await freePort();
  base = `http://127.0.0.1:${port}`;
  child = spawn(
    "python3",
    ["-m", "mujam.cli", "serve", "--data", dataDir,
     "--host", "127.0.0.1", "--port", String(port), "--no-autosave"],
    { stdio: "ignore" },
  );
  await waitReady(60000);
});

afterAll(() => {
  child?.kill();
  if (dataDir) rmSync(dataDir, { recursive: true, force: true });
});

async function freshApp(): Promise<App> {
  document.body.innerHTML = '<div id="app"></div>';
  const app = new App(document.getElementById("app")!, new ApiClient(base));
  await app.start();
  return app;
}

function panelLemmas(field: string): string[] {
  return Array.from(
    document.querySelectorAll(`[data-panel="${field}"] button.lemma`),
  ).map((el) => el.textContent ?? "");
}

describe("lookup against the live service", () => {
  it("populates every panel for يَد with the documented counts", async () => {
    const app = await freshApp();
    await app.lookup("يَد");
    await vi.waitFor(() =>
      expect(document.querySelector("#view h2")?.textContent).toBe("يَد"),
    );
    expect(panelLemmas("synonyms")).toHaveLength(10);
    expect(panelLemmas("antonyms")).toHaveLength(4);
    expect(panelLemmas("hypernyms")).toHaveLength(3);
    expect(panelLemmas("hyponyms")).toHaveLength(2);
    expect(panelLemmas("wholes")).toHaveLength(2);
    expect(panelLemmas("parts")).toHaveLength(8);
    expect(panelLemmas("associations")).toHaveLength(0);
    expect(
      document.querySelectorAll(".synset button.lemma"),
    ).toHaveLength(11);
  });

  it("resolves bare queries through diacritic folding", async () => {
    const app = await freshApp();
    await app.lookup("يد");
    await vi.waitFor(() =>
      expect(document.querySelector("#view h2")?.textContent).toBe("يَد"),
    );
  });

  it("navigates to a hypernym and finds يَد among its hyponyms", async () => {
    const app = await freshApp();
    await app.lookup("يَد");
    await vi.waitFor(() =>
      expect(document.querySelector("#view h2")?.textContent).toBe("يَد"),
    );
    const organ = Array.from(
      document.querySelectorAll('[data-panel="hypernyms"] button.lemma'),
    ).find((el) => (el.textContent ?? "").startsWith("عَض")) as HTMLElement;
    expect(organ).toBeDefined();
    organ.click();
    await vi.waitFor(() =>
      expect(document.querySelector("#view h2")?.textContent).toBe(
        organ.textContent,
      ),
    );
    expect(panelLemmas("hyponyms")).toContain("يَد");
  });
});

describe("curation against the live service", () => {
  it("rejects a self-relation with an inline error and no view change", async () => {
    const app = await freshApp();
    await app.lookup("يَد");
    await vi.waitFor(() =>
      expect(document.querySelector("#view h2")?.textContent).toBe("يَد"),
    );
    for (const id of ["rel-source", "rel-target"]) {
      const field = document.getElementById(id) as HTMLInputElement;
      field.value = "أ";
      field.dispatchEvent(new Event("input"));
    }
    document.getElementById("submit-relation")!.click();
    await vi.waitFor(() =>
      expect(
        (document.getElementById("form-message") as HTMLElement).dataset.code,
      ).toBe("SelfRelation"),
    );
    expect(document.querySelector("#view h2")?.textContent).toBe("يَد");
  });

  it("links two words and sees the edge from the other side", async () => {
    const app = await freshApp();
    await app.lookup("مَعْرُوف");
    await vi.waitFor(() =>
      expect(document.querySelector("#view h2")?.textContent).toBe("مَعْرُوف"),
    );
    const target = document.getElementById("rel-target") as HTMLInputElement;
    target.value = "جَمِيل";
    target.dispatchEvent(new Event("input"));
    expect(
      document.getElementById("inverse-preview")!.textContent,
    ).toContain("جَمِيل");
    document.getElementById("submit-relation")!.click();
    await vi.waitFor(() =>
      expect(
        (document.getElementById("form-message") as HTMLElement).className,
      ).toBe("success"),
    );
    await app.lookup("جَمِيل");
    await vi.waitFor(() =>
      expect(panelLemmas("synonyms")).toContain("مَعْرُوف"),
    );
  });
});
