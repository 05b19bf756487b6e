/** Typed HTTP client for the labeling service.
 *
 * All semantics live server-side; this module only moves JSON. Mutations
 * carry a caller-supplied request id so a retry of the same logical action
 * reuses the id and lands idempotently, and they are serialized through a
 * single-flight queue so the client never has two mutations in the air.
 */

import type {
  CreateSessionRequest,
  EvalAnswerRequest,
  EvalAnswerResponse,
  EvalNextResponse,
  LabelRequest,
  LabelResponse,
  MetricsResponse,
  QueriesResponse,
  SessionStatus,
  TrainResponse,
  VadLookupResponse,
} from "./types.js";

export class ApiError extends Error {
  readonly status: number;
  readonly detail: string;
  /** Indices reported by a 422 "round incomplete" rejection. */
  readonly missingIndices: number[] | null;

  constructor(status: number, detail: string, missingIndices: number[] | null) {
    super(`HTTP ${status}: ${detail}`);
    this.name = "ApiError";
    this.status = status;
    this.detail = detail;
    this.missingIndices = missingIndices;
  }
}

export function newRequestId(): string {
  return crypto.randomUUID();
}

async function parseError(res: Response): Promise<ApiError> {
  let detail = res.statusText || `status ${res.status}`;
  let missing: number[] | null = null;
  try {
    const body = (await res.json()) as {
      detail?: unknown;
      missing_indices?: unknown;
    };
    if (typeof body.detail === "string") detail = body.detail;
    if (Array.isArray(body.missing_indices)) {
      missing = body.missing_indices.filter(
        (v): v is number => typeof v === "number",
      );
    }
  } catch {
    // non-JSON body; keep the status text
  }
  return new ApiError(res.status, detail, missing);
}

export class EmovacClient {
  private readonly base: string;
  private queue: Promise<unknown> = Promise.resolve();

  constructor(baseUrl = "") {
    this.base = baseUrl.replace(/\/+$/, "");
  }

  private async request<T>(
    method: "GET" | "POST",
    path: string,
    body?: unknown,
  ): Promise<T> {
    const res = await fetch(this.base + path, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!res.ok) throw await parseError(res);
    return (await res.json()) as T;
  }

  /** Serialize mutations: at most one POST in flight at a time. */
  private mutate<T>(path: string, body: unknown): Promise<T> {
    const next = this.queue.then(
      () => this.request<T>("POST", path, body),
      () => this.request<T>("POST", path, body),
    );
    this.queue = next.catch(() => undefined);
    return next;
  }

  createSession(cfg: CreateSessionRequest): Promise<SessionStatus> {
    return this.mutate("/sessions", cfg);
  }

  status(sessionId: string): Promise<SessionStatus> {
    return this.request("GET", `/sessions/${encodeURIComponent(sessionId)}`);
  }

  queries(sessionId: string): Promise<QueriesResponse> {
    return this.request(
      "GET",
      `/sessions/${encodeURIComponent(sessionId)}/queries`,
    );
  }

  postLabel(sessionId: string, label: LabelRequest): Promise<LabelResponse> {
    return this.mutate(
      `/sessions/${encodeURIComponent(sessionId)}/labels`,
      label,
    );
  }

  train(sessionId: string, requestId: string): Promise<TrainResponse> {
    return this.mutate(`/sessions/${encodeURIComponent(sessionId)}/train`, {
      request_id: requestId,
    });
  }

  evalNext(sessionId: string): Promise<EvalNextResponse> {
    return this.request(
      "GET",
      `/sessions/${encodeURIComponent(sessionId)}/eval/next`,
    );
  }

  evalAnswer(
    sessionId: string,
    answer: EvalAnswerRequest,
  ): Promise<EvalAnswerResponse> {
    return this.mutate(
      `/sessions/${encodeURIComponent(sessionId)}/eval/answer`,
      answer,
    );
  }

  metrics(sessionId: string): Promise<MetricsResponse> {
    return this.request(
      "GET",
      `/sessions/${encodeURIComponent(sessionId)}/metrics`,
    );
  }

  resolveVad(text: string): Promise<VadLookupResponse> {
    return this.mutate("/vad", { text });
  }
}
