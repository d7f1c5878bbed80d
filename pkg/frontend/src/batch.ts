import { ApiError } from "./api.js";
import type { SelectionOpWire, SelectionResponse } from "./types.js";

export type VertexAction = "add_vertex" | "remove_vertex";

export interface BatcherOptions {
  /** Minimum spacing between sends; selection drags coalesce within it. */
  intervalMs?: number;
  /** Backoff before retrying after a network/server failure. */
  retryDelayMs?: number;
  now?: () => number;
  schedule?: (fn: () => void, ms: number) => ReturnType<typeof setTimeout>;
}

type SendFn = (ops: SelectionOpWire[], clientSeq: number) => Promise<SelectionResponse>;

/** Coalescing op batcher: at most one in-flight batch, sends spaced by the
 * interval, per-vertex ops collapsed to their net action. On transport
 * failure the ops are requeued (newer enqueues win per vertex) and retried
 * after a delay, so a dropped response never loses selection state. */
export class OpBatcher {
  private queue = new Map<number, VertexAction>();
  private inflight = false;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private nextAllowed = -Infinity;
  private clientSeq = 0;
  retryPending = false;

  private readonly intervalMs: number;
  private readonly retryDelayMs: number;
  private readonly now: () => number;
  private readonly schedule: (fn: () => void, ms: number) => ReturnType<typeof setTimeout>;

  constructor(
    private send: SendFn,
    private onResponse: (response: SelectionResponse, clientSeq: number) => void,
    private onError: (error: unknown, dropped: boolean) => void,
    options: BatcherOptions = {},
  ) {
    this.intervalMs = options.intervalMs ?? 100;
    this.retryDelayMs = options.retryDelayMs ?? 500;
    this.now = options.now ?? (() => Date.now());
    this.schedule = options.schedule ?? ((fn, ms) => setTimeout(fn, ms));
  }

  get queuedOps(): number {
    return this.queue.size;
  }

  get isIdle(): boolean {
    return !this.inflight && this.queue.size === 0;
  }

  get lastClientSeq(): number {
    return this.clientSeq;
  }

  enqueue(action: VertexAction, vertex: number): void {
    this.queue.delete(vertex); // re-insert so the latest action wins in order
    this.queue.set(vertex, action);
    this.pump();
  }

  private pump(): void {
    if (this.inflight || this.queue.size === 0 || this.timer !== null) return;
    const wait = this.nextAllowed - this.now();
    if (wait <= 0) {
      void this.flush();
    } else {
      this.timer = this.schedule(() => {
        this.timer = null;
        this.pump();
      }, wait);
    }
  }

  private async flush(): Promise<void> {
    const ops: SelectionOpWire[] = [];
    const sent = new Map(this.queue);
    for (const [vertex, action] of sent) ops.push({ action, vertex });
    this.queue.clear();
    this.inflight = true;
    this.nextAllowed = this.now() + this.intervalMs;
    const seq = ++this.clientSeq;
    try {
      const response = await this.send(ops, seq);
      this.retryPending = false;
      this.onResponse(response, seq);
    } catch (error) {
      const permanent = error instanceof ApiError && error.status < 500;
      if (permanent) {
        // Invalid ops would fail forever; drop them and surface the error.
        this.onError(error, true);
      } else {
        // Transport trouble: requeue preserving newer enqueues, retry later.
        for (const [vertex, action] of this.queue) sent.set(vertex, action);
        this.queue = sent;
        this.retryPending = true;
        this.nextAllowed = this.now() + this.retryDelayMs;
        this.onError(error, false);
      }
    } finally {
      this.inflight = false;
      this.pump();
    }
  }

  /** Resolve once nothing is queued or in flight (test/latency helper). */
  async settle(pollMs = 2): Promise<void> {
    while (!this.isIdle) {
      await new Promise((resolve) => setTimeout(resolve, pollMs));
    }
  }
}
