/** Session shell: polls status and swaps the active view to match.
 *
 * The service is the single source of truth — this class only reflects the
 * reported status (labeling, background job, questionnaire, results) and
 * never advances a session by itself.
 */

import { ApiError, EmovacClient, newRequestId } from "./api.js";
import { EvaluationView } from "./evaluation.js";
import { LabelingView } from "./labeling.js";
import { metricsView } from "./metrics.js";
import type { Draw2D } from "./scene.js";
import type { SessionStatus } from "./types.js";
import { ErrorBar, clear, el } from "./widgets.js";

const JOB_LABELS: Record<string, string> = {
  plan_round: "Optimizing the next batch of query trajectories",
  train_round: "Retraining the style model on your labels",
  plan_eval: "Optimizing the evaluation trajectories",
};

export interface AppOptions {
  /** Milliseconds between status polls while a background job runs. */
  pollMs?: number;
  /** Injectable timer for tests (defaults to window setTimeout). */
  setTimer?: (fn: () => void, ms: number) => unknown;
  clearTimer?: (handle: unknown) => void;
}

export class App {
  readonly node: HTMLElement;
  private readonly client: EmovacClient;
  private readonly sessionId: string;
  private readonly makeContext: (canvas: HTMLCanvasElement) => Draw2D;
  private readonly pollMs: number;
  private readonly setTimer: (fn: () => void, ms: number) => unknown;
  private readonly clearTimer: (handle: unknown) => void;

  private readonly head = el("div", { class: "session-head" });
  private readonly body = el("div", { class: "session-body" });
  private readonly errors = new ErrorBar();
  private labeling: LabelingView | null = null;
  private labelingRound = 0;
  private timer: unknown = null;
  private disposed = false;
  private trainBusy = false;

  constructor(
    client: EmovacClient,
    sessionId: string,
    makeContext: (canvas: HTMLCanvasElement) => Draw2D,
    options: AppOptions = {},
  ) {
    this.client = client;
    this.sessionId = sessionId;
    this.makeContext = makeContext;
    this.pollMs = options.pollMs ?? 1000;
    this.setTimer =
      options.setTimer ?? ((fn, ms) => setTimeout(fn, ms));
    this.clearTimer =
      options.clearTimer ?? ((handle) => clearTimeout(handle as number));
    this.node = el("main", { class: "app" }, this.head, this.errors.node, this.body);
  }

  /** Fetch status once and render the matching view; schedules follow-up
   * polls only while a background job is pending. */
  async refresh(): Promise<void> {
    if (this.disposed) return;
    this.cancelPoll();
    let status: SessionStatus;
    try {
      status = await this.client.status(this.sessionId);
    } catch (err) {
      this.errors.show(`Could not reach the session: ${(err as Error).message}`);
      this.schedulePoll();
      return;
    }
    this.errors.clearError();
    this.renderHead(status);
    if (status.job_error) {
      this.renderJobError(status);
      return;
    }
    if (status.pending !== null) {
      this.renderPending(status);
      this.schedulePoll();
      return;
    }
    switch (status.status) {
      case "awaiting_labels":
        await this.renderLabeling(status);
        break;
      case "evaluating":
        this.renderEvaluation();
        break;
      case "done":
        await this.renderMetrics();
        break;
      default:
        // "training" without a pending job resolves on the next poll
        this.schedulePoll();
    }
  }

  dispose(): void {
    this.disposed = true;
    this.cancelPoll();
  }

  private schedulePoll(): void {
    if (this.disposed) return;
    this.timer = this.setTimer(() => void this.refresh(), this.pollMs);
  }

  private cancelPoll(): void {
    if (this.timer !== null) {
      this.clearTimer(this.timer);
      this.timer = null;
    }
  }

  private renderHead(status: SessionStatus): void {
    clear(this.head);
    this.head.append(
      el("span", { class: "session-id", text: status.session_id }),
      el("span", {
        class: `status-badge status-${status.status}`,
        text: status.status.replace("_", " "),
      }),
      el("span", {
        class: "session-meta",
        text:
          `round ${Math.min(status.rounds_planned, status.rounds_total)} of ${status.rounds_total}` +
          ` · ${status.labels_done} labels` +
          (status.eval_total > 0
            ? ` · ${status.eval_answered}/${status.eval_total} answers`
            : ""),
      }),
    );
  }

  private renderJobError(status: SessionStatus): void {
    this.labeling = null;
    clear(this.body);
    this.body.append(
      el(
        "section",
        { class: "panel" },
        el("div", {
          class: "error-card",
          text: `A background job failed: ${status.job_error ?? "unknown error"}`,
        }),
        el("p", {
          class: "hint",
          text: "The session log is stored on disk; restarting the service resumes from the last good state.",
        }),
      ),
    );
  }

  private renderPending(status: SessionStatus): void {
    this.labeling = null;
    const pending = status.pending;
    const label = pending ? JOB_LABELS[pending.kind] ?? pending.kind : "Working";
    clear(this.body);
    this.body.append(
      el(
        "section",
        { class: "panel working" },
        el("div", { class: "spinner" }),
        el("h2", {
          text: pending?.round !== undefined ? `${label} (round ${pending.round})` : label,
        }),
        el("p", {
          class: "hint",
          text: "This runs on the server; the page keeps itself up to date.",
        }),
      ),
    );
  }

  private async renderLabeling(status: SessionStatus): Promise<void> {
    const round = status.rounds_planned;
    if (this.labeling !== null && this.labelingRound === round) return;
    let queries;
    try {
      queries = await this.client.queries(this.sessionId);
    } catch (err) {
      this.errors.show((err as Error).message);
      this.schedulePoll();
      return;
    }
    this.labelingRound = queries.round;
    clear(this.body);
    const view = new LabelingView(
      this.client,
      this.sessionId,
      queries.round,
      queries.queries,
      this.makeContext,
      {
        onLabeled: () => this.updateTrainBar(),
        onRoundComplete: () => this.updateTrainBar(),
      },
    );
    this.labeling = view;
    this.body.append(view.node, this.trainBar(queries.round, status.rounds_total));
    this.updateTrainBar();
  }

  private trainBar(round: number, total: number): HTMLElement {
    const button = el("button", {
      class: "primary train-button",
      text:
        round < total
          ? `Train and plan round ${round + 1}`
          : "Train and build the questionnaire",
    });
    button.addEventListener("click", () => void this.requestTrain());
    return el(
      "div",
      { class: "train-bar" },
      el("span", { class: "train-note", text: "" }),
      button,
    );
  }

  private updateTrainBar(): void {
    const note = this.body.querySelector<HTMLElement>(".train-note");
    if (!note || !this.labeling) return;
    const done = this.labeling.labeledCount;
    const size = this.body.querySelectorAll(".progress-dot").length;
    note.textContent =
      done === size
        ? "All queries labeled — ready to train."
        : `${done} of ${size} queries labeled.`;
  }

  private async requestTrain(): Promise<void> {
    if (this.trainBusy) return;
    this.trainBusy = true;
    try {
      await this.client.train(this.sessionId, newRequestId());
      this.labeling = null;
      await this.refresh();
    } catch (err) {
      if (err instanceof ApiError && err.missingIndices !== null && err.missingIndices.length > 0) {
        this.labeling?.highlightMissing(err.missingIndices);
      } else if (err instanceof ApiError) {
        this.errors.show(err.detail);
      } else {
        this.errors.show((err as Error).message);
      }
    } finally {
      this.trainBusy = false;
    }
  }

  private renderEvaluation(): void {
    this.labeling = null;
    clear(this.body);
    const view = new EvaluationView(
      this.client,
      this.sessionId,
      this.makeContext,
      {
        onAnswered: () => undefined,
        onDone: () => void this.refresh(),
      },
    );
    this.body.append(view.node);
  }

  private async renderMetrics(): Promise<void> {
    this.labeling = null;
    clear(this.body);
    try {
      const metrics = await this.client.metrics(this.sessionId);
      this.body.append(metricsView(metrics));
    } catch (err) {
      this.errors.show((err as Error).message);
    }
  }
}
