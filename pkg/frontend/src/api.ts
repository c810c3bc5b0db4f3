/** Thin typed client over the HTTP API; the only backend contact. */

import type {
  EdgeCreated,
  ErrorPayload,
  Profile,
  RelationMeta,
  SearchPage,
} from "./types";

/** A structured error response ({code, message, subject} body). */
export class ApiError extends Error {
  readonly status: number;
  readonly code: string;
  readonly subject: string;

  constructor(status: number, payload: ErrorPayload) {
    super(payload.message);
    this.status = status;
    this.code = payload.code;
    this.subject = payload.subject;
  }
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.base + path, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    const payload = await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, payload as ErrorPayload);
    }
    return payload as T;
  }

  getWord(lemma: string, fold = false): Promise<Profile> {
    const flag = fold ? "?fold=true" : "";
    return this.request(`/api/words/${encodeURIComponent(lemma)}${flag}`);
  }

  search(q: string, fold = false, limit = 50, offset = 0): Promise<SearchPage> {
    const params = new URLSearchParams({
      q,
      fold: String(fold),
      limit: String(limit),
      offset: String(offset),
    });
    return this.request(`/api/words?${params}`);
  }

  async relations(): Promise<RelationMeta[]> {
    const payload = await this.request<{ relations: RelationMeta[] }>(
      "/api/relations",
    );
    return payload.relations;
  }

  addWord(lemma: string, pos: string): Promise<Profile> {
    return this.request("/api/words", {
      method: "POST",
      body: JSON.stringify({ lemma, pos }),
    });
  }

  addRelation(
    source: string,
    relation: string,
    target: string,
  ): Promise<EdgeCreated> {
    return this.request("/api/relations", {
      method: "POST",
      body: JSON.stringify({ source, relation, target }),
    });
  }

  removeRelation(
    source: string,
    relation: string,
    target: string,
  ): Promise<{ removed: boolean }> {
    return this.request("/api/relations", {
      method: "DELETE",
      body: JSON.stringify({ source, relation, target }),
    });
  }
}
