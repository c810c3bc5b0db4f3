/** Page wiring: search box, lookup view, curation forms.

The app keeps no lexicon state beyond the lemma currently on screen;
every mutation re-fetches that word from the API.  Racing lookups are
guarded by a sequence number so only the most recent query renders.
*/

import { ApiClient, ApiError } from "./api";
import { CurationForm } from "./form";
import { renderEmptyState, renderLookup } from "./view";
import type { RelationMeta } from "./types";

export class App {
  private readonly root: HTMLElement;
  private readonly api: ApiClient;
  private meta = new Map<string, RelationMeta>();
  private form!: CurationForm;
  private viewSlot!: HTMLElement;
  private searchBox!: HTMLInputElement;
  private foldToggle!: HTMLInputElement;
  private current: string | null = null;
  private sequence = 0;

  constructor(root: HTMLElement, api: ApiClient) {
    this.root = root;
    this.api = api;
  }

  async start(): Promise<void> {
    const relations = await this.api.relations();
    this.meta = new Map(relations.map((rel) => [rel.name, rel]));

    this.root.innerHTML = "";
    const bar = document.createElement("div");
    bar.className = "search-bar";
    bar.dir = "rtl";

    this.searchBox = document.createElement("input");
    this.searchBox.type = "search";
    this.searchBox.id = "search";
    this.searchBox.placeholder = "ابحث عن كلمة…";
    this.searchBox.dir = "rtl";
    this.searchBox.addEventListener("keydown", (event) => {
      if (event.key === "Enter") void this.lookup(this.searchBox.value.trim());
    });

    const go = document.createElement("button");
    go.type = "button";
    go.id = "go";
    go.textContent = "ابحث";
    go.addEventListener("click", () => void this.lookup(this.searchBox.value.trim()));

    const foldLabel = document.createElement("label");
    this.foldToggle = document.createElement("input");
    this.foldToggle.type = "checkbox";
    this.foldToggle.id = "fold";
    this.foldToggle.checked = true;
    foldLabel.append(this.foldToggle, " تجاهل التشكيل");

    bar.append(this.searchBox, go, foldLabel);
    this.root.appendChild(bar);

    this.viewSlot = document.createElement("main");
    this.viewSlot.id = "view";
    this.root.appendChild(this.viewSlot);

    this.form = new CurationForm(relations, {
      addWord: async (lemma, pos) => {
        await this.api.addWord(lemma, pos);
        await this.lookup(lemma);
      },
      addRelation: async (source, relation, target) => {
        await this.api.addRelation(source, relation, target);
        if (this.current !== null) await this.lookup(this.current);
      },
    });
    this.root.appendChild(this.form.element);
  }

  /** Fetch and render one word; stale responses never clobber newer ones. */
  async lookup(lemma: string): Promise<void> {
    if (!lemma) return;
    const ticket = ++this.sequence;
    try {
      const profile = await this.api.getWord(lemma, this.foldToggle.checked);
      if (ticket !== this.sequence) return;
      this.current = profile.lemma;
      this.searchBox.value = profile.lemma;
      this.form.prefillSource(profile.lemma);
      this.show(renderLookup(profile, this.meta, (next) => void this.lookup(next)));
    } catch (err) {
      if (ticket !== this.sequence) return;
      if (err instanceof ApiError && err.code === "WordNotFound") {
        this.current = null;
        this.show(renderEmptyState(lemma, (create) => this.form.prefillWord(create)));
      } else {
        const banner = document.createElement("p");
        banner.className = "error banner";
        banner.textContent =
          err instanceof ApiError ? `${err.code}: ${err.message}` : "تعذّر الاتصال بالخادم";
        this.show(banner);
      }
    }
  }

  private show(element: HTMLElement): void {
    this.viewSlot.innerHTML = "";
    this.viewSlot.appendChild(element);
  }
}
