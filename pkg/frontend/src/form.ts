/** Curation forms: create a word, link two words.

The relation selector and the inverse-preview line are driven entirely
by the server's relation metadata; the client owns no relation algebra.
At most one mutation is in flight at a time.
*/

import type { RelationMeta } from "./types";
import { ApiError } from "./api";

export interface CurationHandlers {
  addWord(lemma: string, pos: string): Promise<void>;
  addRelation(source: string, relation: string, target: string): Promise<void>;
}

export class CurationForm {
  readonly element: HTMLElement;
  private readonly meta: Map<string, RelationMeta>;
  private readonly handlers: CurationHandlers;
  private busy = false;

  private wordLemma!: HTMLInputElement;
  private wordPos!: HTMLInputElement;
  private source!: HTMLInputElement;
  private relation!: HTMLSelectElement;
  private target!: HTMLInputElement;
  private preview!: HTMLParagraphElement;
  private message!: HTMLParagraphElement;

  constructor(relations: RelationMeta[], handlers: CurationHandlers) {
    this.meta = new Map(relations.map((rel) => [rel.name, rel]));
    this.handlers = handlers;
    this.element = this.build(relations);
  }

  private build(relations: RelationMeta[]): HTMLElement {
    const root = document.createElement("section");
    root.className = "curation";
    root.dir = "rtl";

    const wordRow = document.createElement("div");
    wordRow.className = "row add-word";
    this.wordLemma = input("new-lemma", "كلمة جديدة");
    this.wordPos = input("new-pos", "نوعها (noun / verb / particle)");
    this.wordPos.value = "noun";
    const wordButton = button("أضف الكلمة", () => this.submitWord());
    wordButton.id = "submit-word";
    wordRow.append(this.wordLemma, this.wordPos, wordButton);
    root.appendChild(wordRow);

    const relationRow = document.createElement("div");
    relationRow.className = "row add-relation";
    this.source = input("rel-source", "الكلمة الأولى");
    this.relation = document.createElement("select");
    this.relation.id = "rel-type";
    for (const rel of relations) {
      const option = document.createElement("option");
      option.value = rel.name;
      option.textContent = `${rel.label_ar} (${rel.label_en})`;
      this.relation.appendChild(option);
    }
    this.target = input("rel-target", "الكلمة الثانية");
    const relationButton = button("اربط", () => this.submitRelation());
    relationButton.id = "submit-relation";
    relationRow.append(this.source, this.relation, this.target, relationButton);
    root.appendChild(relationRow);

    this.preview = document.createElement("p");
    this.preview.id = "inverse-preview";
    this.preview.className = "preview";
    root.appendChild(this.preview);

    this.message = document.createElement("p");
    this.message.id = "form-message";
    root.appendChild(this.message);

    for (const field of [this.source, this.target]) {
      field.addEventListener("input", () => this.updatePreview());
    }
    this.relation.addEventListener("change", () => this.updatePreview());
    return root;
  }

  /** Prefill the create-word row (the empty-state affordance lands here). */
  prefillWord(lemma: string): void {
    this.wordLemma.value = lemma;
    this.wordLemma.focus();
  }

  prefillSource(lemma: string): void {
    this.source.value = lemma;
    this.updatePreview();
  }

  private updatePreview(): void {
    const source = this.source.value.trim();
    const target = this.target.value.trim();
    const rel = this.meta.get(this.relation.value);
    if (!source || !target || !rel) {
      this.preview.textContent = "";
      return;
    }
    const inverse = this.meta.get(rel.inverse);
    const label = inverse ? inverse.label_ar : rel.inverse;
    this.preview.textContent =
      `سيُضاف الاتجاه المعاكس أيضًا: ${target} ← ${label} (${rel.inverse}) ← ${source}`;
  }

  private async run(action: () => Promise<void>, success: string): Promise<void> {
    if (this.busy) return;
    this.busy = true;
    this.message.textContent = "";
    this.message.className = "";
    delete this.message.dataset.code;
    try {
      await action();
      this.message.textContent = success;
      this.message.className = "success";
    } catch (err) {
      if (err instanceof ApiError) {
        this.message.textContent = `${err.code}: ${err.message}`;
        this.message.className = "error";
        this.message.dataset.code = err.code;
      } else {
        this.message.textContent = "تعذّر الاتصال بالخادم";
        this.message.className = "error";
        this.message.dataset.code = "NetworkFailure";
      }
    } finally {
      this.busy = false;
    }
  }

  private submitWord(): Promise<void> {
    const lemma = this.wordLemma.value.trim();
    const pos = this.wordPos.value.trim() || "noun";
    if (!lemma) return Promise.resolve();
    return this.run(
      () => this.handlers.addWord(lemma, pos),
      `أُضيفت «${lemma}»`,
    );
  }

  private submitRelation(): Promise<void> {
    const source = this.source.value.trim();
    const target = this.target.value.trim();
    if (!source || !target) return Promise.resolve();
    return this.run(
      () => this.handlers.addRelation(source, this.relation.value, target),
      `رُبطت «${source}» بـ«${target}»`,
    );
  }
}

function input(id: string, placeholder: string): HTMLInputElement {
  const element = document.createElement("input");
  element.type = "text";
  element.id = id;
  element.placeholder = placeholder;
  element.dir = "rtl";
  return element;
}

function button(label: string, onClick: () => void): HTMLButtonElement {
  const element = document.createElement("button");
  element.type = "button";
  element.textContent = label;
  element.addEventListener("click", onClick);
  return element;
}
