/** Wire shapes of the HTTP API, mirrored field for field. */

export interface WordSummary {
  lemma: string;
  pos: string;
}

export interface SearchPage {
  query: string;
  fold: boolean;
  total: number;
  items: WordSummary[];
}

export interface Profile {
  lemma: string;
  pos: string;
  pos_label_ar: string;
  pos_label_en: string;
  synset_id: number;
  synset_members: string[];
  synonyms: string[];
  antonyms: string[];
  hypernyms: string[];
  hyponyms: string[];
  wholes: string[];
  parts: string[];
  associations: string[];
  candidates: string[];
}

/** The seven panel fields of a profile, in display order. */
export const PANEL_FIELDS = [
  "synonyms",
  "antonyms",
  "hypernyms",
  "hyponyms",
  "wholes",
  "parts",
  "associations",
] as const;

export type PanelField = (typeof PANEL_FIELDS)[number];

/** Which relation type each panel's neighbors came from. */
export const PANEL_RELATION: Record<PanelField, string> = {
  synonyms: "synonym",
  antonyms: "antonym",
  hypernyms: "hypernym",
  hyponyms: "hyponym",
  wholes: "meronym",
  parts: "holonym",
  associations: "association",
};

export interface RelationMeta {
  name: string;
  inverse: string;
  symmetric: boolean;
  transitive: boolean;
  label_ar: string;
  label_en: string;
}

export interface EdgeCreated {
  source: string;
  relation: string;
  target: string;
  inverse: { source: string; relation: string; target: string };
}

export interface ErrorPayload {
  code: string;
  message: string;
  subject: string;
}
