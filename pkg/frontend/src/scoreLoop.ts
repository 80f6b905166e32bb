// Debounced score requests with latest-wins cancellation: at most one
// request in flight; a newer schedule aborts the older request and a
// stale response can never overwrite a newer one.

import type { ScoreReport } from "./types.js";

export type PostScore = (vector: string, signal: AbortSignal) => Promise<ScoreReport>;

export class ScoreLoop {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private controller: AbortController | null = null;
  private sequence = 0;

  constructor(
    private readonly post: PostScore,
    private readonly onReport: (report: ScoreReport) => void,
    private readonly onError: (error: unknown) => void,
    readonly debounceMs = 150,
  ) {}

  schedule(vector: string): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
    }
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.fire(vector);
    }, this.debounceMs);
  }

  /** Skip the debounce delay (used for imports and example buttons). */
  fireNow(vector: string): Promise<void> {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    return this.fire(vector);
  }

  cancel(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    this.controller?.abort();
    this.sequence += 1;
  }

  private async fire(vector: string): Promise<void> {
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    const ticket = ++this.sequence;
    try {
      const report = await this.post(vector, controller.signal);
      if (ticket === this.sequence) {
        this.onReport(report);
      }
    } catch (error) {
      if (controller.signal.aborted) {
        return; // superseded by a newer request
      }
      if (ticket === this.sequence) {
        this.onError(error);
      }
    }
  }
}
