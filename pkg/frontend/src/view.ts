/** Lookup screen rendering: one word's full relation fan-out.

Panels mirror the profile payload exactly, in delivered order; nothing
is inferred, sorted, or deduplicated on the client.  Every lemma shown
is a navigation button.
*/

import { PANEL_FIELDS, PANEL_RELATION } from "./types";
import type { PanelField, Profile, RelationMeta } from "./types";

export type Navigate = (lemma: string) => void;

function lemmaButton(lemma: string, onNavigate: Navigate): HTMLButtonElement {
  const button = document.createElement("button");
  button.type = "button";
  button.className = "lemma";
  button.textContent = lemma;
  button.addEventListener("click", () => onNavigate(lemma));
  return button;
}

function panel(
  field: PanelField,
  lemmas: string[],
  meta: Map<string, RelationMeta>,
  onNavigate: Navigate,
): HTMLElement {
  const section = document.createElement("section");
  section.className = "panel";
  section.dataset.panel = field;

  const heading = document.createElement("h3");
  const relation = meta.get(PANEL_RELATION[field]);
  heading.textContent = relation ? relation.label_ar : field;
  const caption = document.createElement("small");
  caption.textContent = relation ? relation.label_en : PANEL_RELATION[field];
  heading.appendChild(caption);
  section.appendChild(heading);

  if (lemmas.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty";
    empty.textContent = "-";
    section.appendChild(empty);
    return section;
  }
  const list = document.createElement("ul");
  for (const lemma of lemmas) {
    const item = document.createElement("li");
    item.appendChild(lemmaButton(lemma, onNavigate));
    list.appendChild(item);
  }
  section.appendChild(list);
  return section;
}

export function renderLookup(
  profile: Profile,
  meta: Map<string, RelationMeta>,
  onNavigate: Navigate,
): HTMLElement {
  const root = document.createElement("article");
  root.className = "lookup";
  root.dir = "rtl";

  const header = document.createElement("header");
  const title = document.createElement("h2");
  title.textContent = profile.lemma;
  header.appendChild(title);

  const badge = document.createElement("span");
  badge.className = "badge";
  badge.textContent = `${profile.pos_label_ar} · ${profile.pos_label_en}`;
  header.appendChild(badge);

  if (profile.candidates.length > 0) {
    const note = document.createElement("p");
    note.className = "candidates";
    note.append("مطابقة بدون تشكيل: ");
    for (const candidate of profile.candidates) {
      note.appendChild(lemmaButton(candidate, onNavigate));
    }
    header.appendChild(note);
  }

  const synset = document.createElement("p");
  synset.className = "synset";
  synset.append(`المجموعة الترادفية ${profile.synset_id}: `);
  for (const member of profile.synset_members) {
    synset.appendChild(lemmaButton(member, onNavigate));
  }
  header.appendChild(synset);
  root.appendChild(header);

  const grid = document.createElement("div");
  grid.className = "panels";
  for (const field of PANEL_FIELDS) {
    grid.appendChild(panel(field, profile[field], meta, onNavigate));
  }
  root.appendChild(grid);
  return root;
}

export function renderEmptyState(
  query: string,
  onCreate: (lemma: string) => void,
): HTMLElement {
  const root = document.createElement("article");
  root.className = "lookup empty-state";
  root.dir = "rtl";
  const message = document.createElement("p");
  message.textContent = `لا توجد كلمة «${query}» في المعجم.`;
  root.appendChild(message);
  const create = document.createElement("button");
  create.type = "button";
  create.className = "create-word";
  create.textContent = `أضف «${query}» ككلمة جديدة`;
  create.addEventListener("click", () => onCreate(query));
  root.appendChild(create);
  return root;
}
