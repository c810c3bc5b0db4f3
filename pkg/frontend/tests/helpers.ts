import type { Profile, RelationMeta } from "../src/types";

/** Metadata as the server sends it, fixed here for component tests. */
export const RELATIONS: RelationMeta[] = [
  { name: "synonym", inverse: "synonym", symmetric: true, transitive: false, label_ar: "المرادفات", label_en: "synonyms" },
  { name: "antonym", inverse: "antonym", symmetric: true, transitive: false, label_ar: "الأضداد", label_en: "antonyms" },
  { name: "hypernym", inverse: "hyponym", symmetric: false, transitive: true, label_ar: "الأعم", label_en: "hypernyms" },
  { name: "hyponym", inverse: "hypernym", symmetric: false, transitive: true, label_ar: "الأخص", label_en: "hyponyms" },
  { name: "meronym", inverse: "holonym", symmetric: false, transitive: true, label_ar: "جزء من", label_en: "part of" },
  { name: "holonym", inverse: "meronym", symmetric: false, transitive: true, label_ar: "الأجزاء", label_en: "parts" },
  { name: "association", inverse: "association", symmetric: true, transitive: false, label_ar: "المتلازمات", label_en: "associations" },
];

export const META = new Map(RELATIONS.map((rel) => [rel.name, rel]));

export function profileOf(overrides: Partial<Profile> = {}): Profile {
  return {
    lemma: "يَد",
    pos: "noun",
    pos_label_ar: "الاسم",
    pos_label_en: "noun",
    synset_id: 3,
    synset_members: ["يَد", "مِلْك"],
    synonyms: ["مِلْك"],
    antonyms: [],
    hypernyms: ["عَضُو"],
    hyponyms: [],
    wholes: ["ذِرَاع"],
    parts: ["كَف", "إِبْهَام"],
    associations: [],
    candidates: [],
    ...overrides,
  };
}

export function texts(parent: Element, selector: string): string[] {
  return Array.from(parent.querySelectorAll(selector)).map(
    (el) => el.textContent ?? "",
  );
}
