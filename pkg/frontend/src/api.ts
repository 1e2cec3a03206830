import type {
  GroupResponse,
  JudgmentFeedback,
  PrioritiesResponse,
  SessionView,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

async function unwrap<T>(response: Response): Promise<T> {
  if (response.ok) {
    return (await response.json()) as T;
  }
  let code = "error";
  let message = `${response.status}`;
  try {
    const body = await response.json();
    code = body?.error?.code ?? code;
    message = body?.error?.message ?? message;
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiError(response.status, code, message);
}

/** Thin typed wrapper over the service endpoints. Never computes. */
export class ApiClient {
  constructor(private readonly base: string = "") {}

  private url(path: string): string {
    return `${this.base}/api/v1${path}`;
  }

  async health(): Promise<{ status: string }> {
    return unwrap(await fetch(this.url("/health")));
  }

  async createSession(body: {
    labels: string[];
    experts?: { name: string; alpha: number }[];
    settings?: Partial<{ scale_mode: string; consistency_tol: number; method: string }>;
  }): Promise<SessionView> {
    return unwrap(
      await fetch(this.url("/sessions"), {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
      }),
    );
  }

  async getSession(id: string): Promise<SessionView> {
    return unwrap(await fetch(this.url(`/sessions/${id}`)));
  }

  async putJudgment(
    id: string,
    expert: number,
    i: number,
    j: number,
    value: number,
    version?: number,
  ): Promise<JudgmentFeedback> {
    const headers: Record<string, string> = { "Content-Type": "application/json" };
    if (version !== undefined) {
      headers["If-Match"] = String(version);
    }
    return unwrap(
      await fetch(this.url(`/sessions/${id}/experts/${expert}/judgments`), {
        method: "PUT",
        headers,
        body: JSON.stringify({ i, j, value }),
      }),
    );
  }

  async priorities(id: string, method?: string): Promise<PrioritiesResponse> {
    const query = method ? `?method=${encodeURIComponent(method)}` : "";
    return unwrap(await fetch(this.url(`/sessions/${id}/priorities${query}`)));
  }

  async sessionGroup(id: string): Promise<GroupResponse & { session_id: string }> {
    return unwrap(await fetch(this.url(`/sessions/${id}/group`)));
  }

  /** Stateless what-if aggregation; the weight sliders live on this. */
  async group(
    matrices: { n: number; labels?: string[]; upper: [number, number, number][] }[],
    alphas: number[],
  ): Promise<GroupResponse> {
    return unwrap(
      await fetch(this.url("/group"), {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ matrices, alphas }),
      }),
    );
  }
}

/** Full matrix from a session view -> canonical upper-triangle form. */
export function matrixToUpper(
  matrix: (number | null)[][],
  labels?: string[],
): { n: number; labels?: string[]; upper: [number, number, number][] } {
  const n = matrix.length;
  const upper: [number, number, number][] = [];
  for (let i = 0; i < n; i++) {
    for (let j = i + 1; j < n; j++) {
      const value = matrix[i][j];
      if (value !== null) {
        upper.push([i, j, value]);
      }
    }
  }
  return labels ? { n, labels, upper } : { n, upper };
}
