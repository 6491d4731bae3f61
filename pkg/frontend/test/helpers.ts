/** Scripted transport: replays recorded service responses and logs calls. */

import type { Transport } from "../src/api.js";
import { ServiceError } from "../src/api.js";

export interface RecordedCall {
  method: string;
  path: string;
  body?: unknown;
}

export interface Route {
  method: string;
  path: string | RegExp;
  /** responses consumed in order; the last one repeats */
  responses: unknown[];
}

export class FakeService {
  readonly calls: RecordedCall[] = [];
  private readonly counters = new Map<Route, number>();

  constructor(private readonly routes: Route[]) {}

  transport: Transport = async (method, path, body) => {
    this.calls.push({ method, path, body });
    for (const route of this.routes) {
      const matches =
        route.method === method &&
        (typeof route.path === "string"
          ? route.path === path
          : route.path.test(path));
      if (!matches) continue;
      const index = this.counters.get(route) ?? 0;
      this.counters.set(route, index + 1);
      const response =
        route.responses[Math.min(index, route.responses.length - 1)];
      if (response instanceof ServiceError) throw response;
      return structuredClone(response);
    }
    throw new Error(`no scripted response for ${method} ${path}`);
  };

  callsTo(method: string, path: string): RecordedCall[] {
    return this.calls.filter((c) => c.method === method && c.path === path);
  }
}

export const instantSleep = async (): Promise<void> => {};
