/** Evaluation questionnaire: Likert scale items and first/second choice items.
 *
 * Items are served strictly in order by the API and answered in order here;
 * there is no way to move forward without submitting the current answer, and
 * no way to revisit an answered item.
 */

import { ApiError, EmovacClient, newRequestId } from "./api.js";
import { FramePlayer } from "./playback.js";
import type { Draw2D } from "./scene.js";
import type { EvalItem } from "./types.js";
import { ErrorBar, clear, el } from "./widgets.js";

export interface EvaluationCallbacks {
  onAnswered(index: number): void;
  onDone(): void;
}

export class EvaluationView {
  readonly node: HTMLElement;
  private readonly client: EmovacClient;
  private readonly sessionId: string;
  private readonly makeContext: (canvas: HTMLCanvasElement) => Draw2D;
  private readonly callbacks: EvaluationCallbacks;

  private readonly errors = new ErrorBar();
  private player: FramePlayer | null = null;
  private item: EvalItem | null = null;
  private total = 0;
  private remaining = 0;
  private score: number | null = null;
  private first: string | null = null;
  private second: string | null = null;
  private busy = false;

  constructor(
    client: EmovacClient,
    sessionId: string,
    makeContext: (canvas: HTMLCanvasElement) => Draw2D,
    callbacks: EvaluationCallbacks,
  ) {
    this.client = client;
    this.sessionId = sessionId;
    this.makeContext = makeContext;
    this.callbacks = callbacks;
    this.node = el("section", { class: "panel evaluation" });
    void this.loadNext();
  }

  private async loadNext(): Promise<void> {
    this.player?.dispose();
    this.player = null;
    clear(this.node);
    this.node.append(el("p", { class: "hint", text: "Loading next item…" }));
    try {
      const res = await this.client.evalNext(this.sessionId);
      if (res.done) {
        this.callbacks.onDone();
        return;
      }
      this.item = res.item;
      this.total = res.total;
      this.remaining = res.remaining;
      this.score = null;
      this.first = null;
      this.second = null;
      this.renderItem();
    } catch (err) {
      clear(this.node);
      this.node.append(this.errors.node);
      this.errors.show((err as Error).message);
    }
  }

  private renderItem(): void {
    const item = this.item;
    if (!item) return;
    clear(this.node);

    const answered = this.total - this.remaining;
    this.node.append(
      el(
        "header",
        { class: "panel-head" },
        el("h2", { text: "Questionnaire" }),
        el("span", {
          class: "progress",
          text: `item ${answered + 1} of ${this.total}`,
        }),
      ),
      this.errors.node,
    );
    this.errors.clearError();

    const stage = el("div", { class: "stage" });
    const canvas = el("canvas", {
      class: "scene",
      width: "640",
      height: "360",
    });
    stage.append(canvas);
    this.node.append(stage);
    try {
      const ctx = this.makeContext(canvas);
      this.player = new FramePlayer(ctx, 640, 360, item.frames, item.task);
      this.node.append(this.transportControls());
    } catch (err) {
      stage.append(
        el("div", {
          class: "error-card",
          text: `Could not play this trajectory: ${(err as Error).message}`,
        }),
      );
    }

    if (item.kind === "likert") this.node.append(this.likertForm(item));
    else this.node.append(this.choiceForm(item));
  }

  private transportControls(): HTMLElement {
    const play = el("button", { class: "transport", text: "Play" });
    const pause = el("button", { class: "transport", text: "Pause" });
    const replay = el("button", { class: "transport", text: "Replay" });
    play.addEventListener("click", () => this.player?.play());
    pause.addEventListener("click", () => this.player?.pause());
    replay.addEventListener("click", () => this.player?.replay());
    return el("div", { class: "transport-bar" }, play, pause, replay);
  }

  private likertForm(item: EvalItem): HTMLElement {
    const [nameA, nameB] = item.pair ?? ["?", "?"];
    const form = el("div", { class: "likert-form" });
    form.append(
      el("p", {
        class: "question",
        text: `Is the trajectory more expressive of ${nameB} than ${nameA}?`,
      }),
    );
    const scale = el("div", { class: "likert-scale" });
    const buttons: HTMLButtonElement[] = [];
    for (let s = 1; s <= 7; s += 1) {
      const btn = el("button", {
        type: "button",
        class: "likert-point",
        "data-score": String(s),
        text: String(s),
      });
      btn.addEventListener("click", () => {
        this.score = s;
        for (const b of buttons) b.classList.toggle("selected", b === btn);
        submit.removeAttribute("disabled");
      });
      buttons.push(btn);
      scale.append(btn);
    }
    const anchors = el(
      "div",
      { class: "likert-anchors" },
      el("span", { class: "anchor low", text: `1 = ${nameA}` }),
      el("span", { class: "anchor high", text: `7 = ${nameB}` }),
    );
    const submit = el("button", {
      class: "primary",
      type: "button",
      text: "Submit answer",
      disabled: "",
    });
    submit.addEventListener("click", () => void this.submit());
    form.append(scale, anchors, submit);
    return form;
  }

  private choiceForm(item: EvalItem): HTMLElement {
    const options = item.options ?? [];
    const form = el("div", { class: "choice-form" });
    form.append(
      el("p", {
        class: "question",
        text: "Which emotion does this trajectory express? Pick your best guess, then your second-best.",
      }),
    );

    const firstRow = el("div", { class: "choice-row" });
    const secondRow = el("div", { class: "choice-row", hidden: "" });
    const secondLabel = el("p", {
      class: "hint",
      hidden: "",
      text: "And your second choice:",
    });
    const submit = el("button", {
      class: "primary",
      type: "button",
      text: "Submit answer",
      disabled: "",
    });

    const renderSecond = (): void => {
      clear(secondRow);
      for (const name of options) {
        if (name === this.first) continue;
        const btn = el("button", {
          type: "button",
          class:
            "choice-btn" + (name === this.second ? " selected" : ""),
          text: name,
        });
        btn.addEventListener("click", () => {
          this.second = name;
          renderSecond();
          submit.removeAttribute("disabled");
        });
        secondRow.append(btn);
      }
      secondRow.removeAttribute("hidden");
      secondLabel.removeAttribute("hidden");
    };

    const firstButtons: HTMLButtonElement[] = [];
    for (const name of options) {
      const btn = el("button", {
        type: "button",
        class: "choice-btn",
        text: name,
      });
      btn.addEventListener("click", () => {
        this.first = name;
        this.second = null;
        submit.setAttribute("disabled", "");
        for (const b of firstButtons)
          b.classList.toggle("selected", b === btn);
        renderSecond();
      });
      firstButtons.push(btn);
      firstRow.append(btn);
    }

    form.append(firstRow, secondLabel, secondRow, submit);
    return form;
  }

  private async submit(): Promise<void> {
    const item = this.item;
    if (!item || this.busy) return;
    if (item.kind === "likert" && this.score === null) return;
    if (item.kind === "choice" && (this.first === null || this.second === null))
      return;
    this.busy = true;
    this.errors.clearError();
    try {
      await this.client.evalAnswer(this.sessionId, {
        index: item.index,
        request_id: newRequestId(),
        ...(item.kind === "likert"
          ? { score: this.score as number }
          : { first: this.first as string, second: this.second as string }),
      });
      this.callbacks.onAnswered(item.index);
      await this.loadNext();
    } catch (err) {
      if (err instanceof ApiError) this.errors.show(err.detail);
      else this.errors.show((err as Error).message);
    } finally {
      this.busy = false;
    }
  }
}
