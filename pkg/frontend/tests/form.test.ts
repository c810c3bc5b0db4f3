import { describe, expect, it, vi } from "vitest";

import { ApiError } from "../src/api";
import { CurationForm } from "../src/form";
import type { CurationHandlers } from "../src/form";
import { RELATIONS } from "./helpers";

function setup(overrides: Partial<CurationHandlers> = {}) {
  const handlers: CurationHandlers = {
    addWord: vi.fn().mockResolvedValue(undefined),
    addRelation: vi.fn().mockResolvedValue(undefined),
    ...overrides,
  };
  const form = new CurationForm(RELATIONS, handlers);
  document.body.innerHTML = "";
  document.body.appendChild(form.element);
  const field = (id: string) => document.getElementById(id) as HTMLInputElement;
  return { form, handlers, field };
}

function fill(field: (id: string) => HTMLInputElement, source: string,
              relation: string, target: string) {
  field("rel-source").value = source;
  field("rel-source").dispatchEvent(new Event("input"));
  const select = document.getElementById("rel-type") as HTMLSelectElement;
  select.value = relation;
  select.dispatchEvent(new Event("change"));
  field("rel-target").value = target;
  field("rel-target").dispatchEvent(new Event("input"));
}

const flush = () => new Promise((resolve) => setTimeout(resolve, 0));

describe("relation selector", () => {
  it("offers all seven relations with bilingual labels", () => {
    setup();
    const options = Array.from(
      (document.getElementById("rel-type") as HTMLSelectElement).options,
    );
    expect(options.map((o) => o.value)).toEqual([
      "synonym", "antonym", "hypernym", "hyponym",
      "meronym", "holonym", "association",
    ]);
    expect(options[2].textContent).toBe("الأعم (hypernyms)");
  });
});

describe("inverse preview", () => {
  it("announces the server-defined inverse edge before commit", () => {
    const { field } = setup();
    fill(field, "يَد", "hypernym", "عَضُو");
    const preview = document.getElementById("inverse-preview")!;
    expect(preview.textContent).toContain("عَضُو");
    expect(preview.textContent).toContain("يَد");
    expect(preview.textContent).toContain("hyponym");
    expect(preview.textContent).toContain("الأخص");
  });

  it("shows the same relation for symmetric types", () => {
    const { field } = setup();
    fill(field, "مَعْرُوف", "synonym", "جَمِيل");
    expect(document.getElementById("inverse-preview")!.textContent).toContain(
      "(synonym)",
    );
  });

  it("stays blank while fields are incomplete", () => {
    const { field } = setup();
    field("rel-source").value = "يَد";
    field("rel-source").dispatchEvent(new Event("input"));
    expect(document.getElementById("inverse-preview")!.textContent).toBe("");
  });
});

describe("submission", () => {
  it("passes the three fields to the relation handler", async () => {
    const { handlers, field } = setup();
    fill(field, "يَد", "meronym", "ذِرَاع");
    document.getElementById("submit-relation")!.click();
    await flush();
    expect(handlers.addRelation).toHaveBeenCalledWith("يَد", "meronym", "ذِرَاع");
    expect(document.getElementById("form-message")!.className).toBe("success");
  });

  it("creates words through the add-word row", async () => {
    const { handlers, form } = setup();
    form.prefillWord("قِطَار");
    document.getElementById("submit-word")!.click();
    await flush();
    expect(handlers.addWord).toHaveBeenCalledWith("قِطَار", "noun");
  });

  it("renders API errors inline, keyed by their code", async () => {
    const { field } = setup({
      addRelation: vi.fn().mockRejectedValue(
        new ApiError(422, {
          code: "SelfRelation",
          message: "self-relation on 'أ'",
          subject: "أ",
        }),
      ),
    });
    fill(field, "أ", "synonym", "أ");
    document.getElementById("submit-relation")!.click();
    await flush();
    const message = document.getElementById("form-message")!;
    expect(message.dataset.code).toBe("SelfRelation");
    expect(message.className).toBe("error");
    expect(message.textContent).toContain("self-relation");
  });

  it("names the missing word on WordNotFound", async () => {
    const { field } = setup({
      addRelation: vi.fn().mockRejectedValue(
        new ApiError(404, {
          code: "WordNotFound",
          message: "word not found: 'قطار'",
          subject: "قطار",
        }),
      ),
    });
    fill(field, "يَد", "synonym", "قطار");
    document.getElementById("submit-relation")!.click();
    await flush();
    expect(document.getElementById("form-message")!.textContent).toContain("قطار");
  });

  it("reports network failure as its own state", async () => {
    const { field } = setup({
      addRelation: vi.fn().mockRejectedValue(new TypeError("fetch failed")),
    });
    fill(field, "يَد", "synonym", "كَف");
    document.getElementById("submit-relation")!.click();
    await flush();
    expect(document.getElementById("form-message")!.dataset.code).toBe(
      "NetworkFailure",
    );
  });

  it("allows at most one in-flight mutation", async () => {
    let release: () => void = () => {};
    const gate = new Promise<void>((resolve) => { release = resolve; });
    const slow = vi.fn().mockReturnValue(gate);
    const { field } = setup({ addRelation: slow });
    fill(field, "يَد", "synonym", "كَف");
    const submit = document.getElementById("submit-relation")!;
    submit.click();
    submit.click();
    submit.click();
    release();
    await flush();
    expect(slow).toHaveBeenCalledTimes(1);
  });
});
