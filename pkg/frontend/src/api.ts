/** Typed client for the assistant service wire format under /api/v1. */

export interface DictionaryInfo {
  name: string;
  k: number;
  size: number;
}

export interface CreateResponse {
  session: string;
  k: number;
  size: number;
}

export interface FeedbackResponse {
  feasible: number;
}

export interface SuggestionResponse {
  word: string;
  mode: "heuristic" | "exact";
  feasible: number;
}

export interface FeasibleListResponse {
  total: number;
  words: string[];
}

/** Error envelope {"error": code, "detail": text} turned into a throw. */
export class ServiceError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    public readonly detail: string,
  ) {
    super(`${code}: ${detail}`);
    this.name = "ServiceError";
  }
}

export interface AssistApi {
  listDictionaries(): Promise<DictionaryInfo[]>;
  createSession(dictionary: string): Promise<CreateResponse>;
  postFeedback(session: string, guess: string, marking: string): Promise<FeedbackResponse>;
  getSuggestion(session: string): Promise<SuggestionResponse>;
  listFeasible(session: string, limit?: number): Promise<FeasibleListResponse>;
  undoLast(session: string): Promise<FeedbackResponse>;
}

// narrow view of fetch so tests can hand in a plain stub
export type FetchLike = (
  url: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string },
) => Promise<{ ok: boolean; status: number; json(): Promise<unknown> }>;

export class HttpApi implements AssistApi {
  private readonly base: string;

  constructor(
    baseUrl: string,
    private readonly fetchFn: FetchLike = (...args) => fetch(...(args as [string])),
  ) {
    this.base = baseUrl.replace(/\/+$/, "") + "/api/v1";
  }

  private async request<T>(path: string, init?: Parameters<FetchLike>[1]): Promise<T> {
    const resp = await this.fetchFn(this.base + path, init);
    const body = (await resp.json()) as Record<string, unknown>;
    if (!resp.ok) {
      throw new ServiceError(
        resp.status,
        String(body["error"] ?? "unknown_error"),
        String(body["detail"] ?? ""),
      );
    }
    return body as T;
  }

  private post<T>(path: string, payload?: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: payload === undefined ? undefined : JSON.stringify(payload),
    });
  }

  async listDictionaries(): Promise<DictionaryInfo[]> {
    const body = await this.request<{ dictionaries: DictionaryInfo[] }>("/dictionaries");
    return body.dictionaries;
  }

  createSession(dictionary: string): Promise<CreateResponse> {
    return this.post("/sessions", { dictionary });
  }

  postFeedback(session: string, guess: string, marking: string): Promise<FeedbackResponse> {
    return this.post(`/sessions/${session}/feedback`, { guess, marking });
  }

  getSuggestion(session: string): Promise<SuggestionResponse> {
    return this.request(`/sessions/${session}/suggestion`);
  }

  listFeasible(session: string, limit?: number): Promise<FeasibleListResponse> {
    const query = limit === undefined ? "" : `?limit=${limit}`;
    return this.request(`/sessions/${session}/feasible${query}`);
  }

  undoLast(session: string): Promise<FeedbackResponse> {
    return this.post(`/sessions/${session}/undo`);
  }
}
