// Replays exchanges captured from the real backend (see
// record_fixtures.py). The stub hands each request the recorded
// response for the same method, path, and body, consuming entries in
// order so a repeated request (the conflict replay, say) gets the
// next recorded answer rather than the first one again.

import { readFileSync } from "node:fs";
import { join } from "node:path";

export interface Exchange {
  method: string;
  path: string;
  body: unknown;
  status: number;
  response: unknown;
}

export interface RecordedCall {
  method: string;
  path: string;
  body: unknown;
}

// import.meta.url is an http: URL under the DOM test environment, so
// resolve fixtures from the package root instead (vitest runs there).
const FIXTURE_DIR = join(process.cwd(), "tests", "fixtures");

export function loadFixture(name: string): Exchange[] {
  const raw = readFileSync(join(FIXTURE_DIR, `${name}.json`), "utf8");
  return (JSON.parse(raw) as { exchanges: Exchange[] }).exchanges;
}

function deepEqual(a: unknown, b: unknown): boolean {
  if (a === b) {
    return true;
  }
  if (Array.isArray(a) && Array.isArray(b)) {
    return a.length === b.length && a.every((v, k) => deepEqual(v, b[k]));
  }
  if (a && b && typeof a === "object" && typeof b === "object") {
    const ka = Object.keys(a as object).sort();
    const kb = Object.keys(b as object).sort();
    return (
      deepEqual(ka, kb) &&
      ka.every((key) =>
        deepEqual((a as Record<string, unknown>)[key], (b as Record<string, unknown>)[key]),
      )
    );
  }
  return false;
}

export interface FetchStub {
  calls: RecordedCall[];
  puts(): RecordedCall[];
  restore(): void;
}

export function installFetch(exchanges: Exchange[]): FetchStub {
  const consumed = new Array<boolean>(exchanges.length).fill(false);
  const calls: RecordedCall[] = [];
  const original = globalThis.fetch;

  globalThis.fetch = (async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input);
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(String(init.body)) : null;
    calls.push({ method, path: url, body });

    const matches = (ex: Exchange) =>
      ex.method === method && ex.path === url && deepEqual(ex.body, body);

    let pick = -1;
    for (let k = 0; k < exchanges.length; k++) {
      if (!consumed[k] && matches(exchanges[k])) {
        pick = k;
        break;
      }
    }
    if (pick === -1) {
      // allow a re-read of something already served (idempotent GETs)
      for (let k = exchanges.length - 1; k >= 0; k--) {
        if (consumed[k] && method === "GET" && matches(exchanges[k])) {
          pick = k;
          break;
        }
      }
    }
    if (pick === -1) {
      throw new Error(`no recorded exchange for ${method} ${url} ${JSON.stringify(body)}`);
    }
    consumed[pick] = true;
    const ex = exchanges[pick];
    return new Response(JSON.stringify(ex.response), {
      status: ex.status,
      headers: { "Content-Type": "application/json" },
    });
  }) as typeof fetch;

  return {
    calls,
    puts: () => calls.filter((c) => c.method === "PUT"),
    restore: () => {
      globalThis.fetch = original;
    },
  };
}

/** Let queued promise chains (fetch -> json -> render) settle. */
export async function settle(rounds = 4): Promise<void> {
  for (let k = 0; k < rounds; k++) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}

export function fire(el: Element, type: string): void {
  el.dispatchEvent(new Event(type, { bubbles: true }));
}
