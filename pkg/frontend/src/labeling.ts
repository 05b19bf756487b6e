/** Labeling phase: play each query and collect a VAD or free-text label.
 *
 * The form never interprets anything itself: free text goes to the server
 * for resolution and the resolved triple is only shown back for the user to
 * confirm. Sliders reset to the neutral (0, 0, 0) for every new query.
 */

import { ApiError, EmovacClient, newRequestId } from "./api.js";
import { FramePlayer } from "./playback.js";
import type { Draw2D } from "./scene.js";
import type { Query, Vad, VadLookupResponse } from "./types.js";
import { ErrorBar, clear, el, fmt } from "./widgets.js";

const AXES = [
  { key: "valence", low: "unpleasant", high: "pleasant" },
  { key: "arousal", low: "calm", high: "excited" },
  { key: "dominance", low: "submissive", high: "dominant" },
] as const;

export interface LabelingCallbacks {
  onLabeled(index: number, vad: Vad): void;
  onRoundComplete(): void;
}

export class LabelingView {
  readonly node: HTMLElement;
  private readonly client: EmovacClient;
  private readonly sessionId: string;
  private readonly round: number;
  private readonly queries: Query[];
  private readonly callbacks: LabelingCallbacks;
  private readonly makeContext: (canvas: HTMLCanvasElement) => Draw2D;

  private readonly errors = new ErrorBar();
  private player: FramePlayer | null = null;
  private current = 0;
  private sliders: HTMLInputElement[] = [];
  private readouts: HTMLElement[] = [];
  private textInput: HTMLInputElement | null = null;
  private chip: HTMLElement | null = null;
  private resolved: VadLookupResponse | null = null;
  private mode: "sliders" | "text" = "sliders";
  private busy = false;

  constructor(
    client: EmovacClient,
    sessionId: string,
    round: number,
    queries: Query[],
    makeContext: (canvas: HTMLCanvasElement) => Draw2D,
    callbacks: LabelingCallbacks,
  ) {
    this.client = client;
    this.sessionId = sessionId;
    this.round = round;
    this.queries = queries;
    this.makeContext = makeContext;
    this.callbacks = callbacks;
    this.node = el("section", { class: "panel labeling" });
    const firstOpen = queries.findIndex((q) => !q.labeled);
    this.current = firstOpen === -1 ? queries.length - 1 : firstOpen;
    this.renderAll();
  }

  get labeledCount(): number {
    return this.queries.filter((q) => q.labeled).length;
  }

  /** Mark queries the server reported as missing and jump to the first. */
  highlightMissing(indices: number[]): void {
    const set = new Set(indices);
    for (const dot of this.node.querySelectorAll<HTMLElement>(".progress-dot")) {
      const idx = Number(dot.dataset["index"]);
      dot.classList.toggle("missing", set.has(idx));
    }
    const first = indices[0];
    if (first !== undefined) {
      this.current = first;
      this.renderAll();
      this.errors.show(
        `Round incomplete: queries ${indices.map((i) => i + 1).join(", ")} still need labels.`,
      );
    }
  }

  private query(): Query {
    const q = this.queries[this.current];
    if (q === undefined) throw new Error(`no query at index ${this.current}`);
    return q;
  }

  private renderAll(): void {
    this.player?.dispose();
    this.player = null;
    clear(this.node);
    this.resolved = null;

    const q = this.query();
    const header = el(
      "header",
      { class: "panel-head" },
      el("h2", { text: `Watch and label` }),
      el("span", {
        class: "progress",
        text: `query ${this.current + 1} of ${this.queries.length}`,
      }),
    );

    const dots = el("nav", { class: "progress-dots" });
    this.queries.forEach((query, i) => {
      const dot = el("button", {
        class:
          "progress-dot" +
          (query.labeled ? " labeled" : "") +
          (i === this.current ? " active" : ""),
        "data-index": String(i),
        title: `query ${i + 1}${query.labeled ? " (labeled)" : ""}`,
        text: String(i + 1),
      });
      dot.addEventListener("click", () => {
        this.current = i;
        this.renderAll();
      });
      dots.append(dot);
    });

    this.node.append(header, dots, this.errors.node);
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
      this.player = new FramePlayer(ctx, 640, 360, q.frames, q.task);
      this.node.append(this.transportControls());
    } catch (err) {
      stage.append(
        el("div", {
          class: "error-card",
          text: `Could not play this trajectory: ${(err as Error).message}`,
        }),
      );
    }

    this.node.append(this.labelForm(q));
  }

  private transportControls(): HTMLElement {
    const play = el("button", { class: "transport", text: "Play" });
    const pause = el("button", { class: "transport", text: "Pause" });
    const replay = el("button", { class: "transport", text: "Replay" });
    const speed = el("select", { class: "speed", title: "playback speed" });
    for (const s of ["0.5", "1", "2"]) {
      const opt = el("option", { value: s, text: `${s}×` });
      if (s === "1") opt.selected = true;
      speed.append(opt);
    }
    play.addEventListener("click", () => this.player?.play());
    pause.addEventListener("click", () => this.player?.pause());
    replay.addEventListener("click", () => this.player?.replay());
    speed.addEventListener("change", () =>
      this.player?.setSpeed(Number(speed.value)),
    );
    return el("div", { class: "transport-bar" }, play, pause, replay, speed);
  }

  private labelForm(q: Query): HTMLElement {
    const form = el("form", { class: "label-form" });
    form.addEventListener("submit", (ev) => ev.preventDefault());

    const tabs = el("div", { class: "tabs" });
    const sliderTab = el("button", {
      class: "tab" + (this.mode === "sliders" ? " active" : ""),
      type: "button",
      text: "VAD sliders",
    });
    const textTab = el("button", {
      class: "tab" + (this.mode === "text" ? " active" : ""),
      type: "button",
      text: "Describe in words",
    });
    sliderTab.addEventListener("click", () => {
      this.mode = "sliders";
      this.renderAll();
    });
    textTab.addEventListener("click", () => {
      this.mode = "text";
      this.renderAll();
    });
    tabs.append(sliderTab, textTab);
    form.append(tabs);

    if (this.mode === "sliders") form.append(this.sliderBlock(q));
    else form.append(this.textBlock(q));
    return form;
  }

  private sliderBlock(q: Query): HTMLElement {
    const block = el("div", { class: "slider-block" });
    this.sliders = [];
    this.readouts = [];
    for (const axis of AXES) {
      const slider = el("input", {
        type: "range",
        min: "-1",
        max: "1",
        step: "0.05",
        value: "0",
        "data-axis": axis.key,
      });
      const readout = el("output", { class: "readout", text: "0.00" });
      slider.addEventListener("input", () => {
        readout.textContent = fmt(Number(slider.value));
      });
      this.sliders.push(slider);
      this.readouts.push(readout);
      block.append(
        el(
          "label",
          { class: "axis" },
          el("span", { class: "axis-name", text: axis.key }),
          el("span", { class: "cap low", text: axis.low }),
          slider,
          el("span", { class: "cap high", text: axis.high }),
          readout,
        ),
      );
    }
    const submit = el("button", {
      class: "primary",
      type: "button",
      text: q.labeled ? "Update label" : "Submit label",
    });
    submit.addEventListener("click", () => void this.submitSliders(q));
    block.append(submit);
    return block;
  }

  private textBlock(q: Query): HTMLElement {
    const block = el("div", { class: "text-block" });
    this.textInput = el("input", {
      type: "text",
      class: "text-label",
      placeholder: "e.g. weary, triumphant, a bit nervous",
    });
    const resolve = el("button", {
      class: "secondary",
      type: "button",
      text: "Look up",
    });
    this.chip = el("div", { class: "chip", hidden: "" });
    const submit = el("button", {
      class: "primary",
      type: "button",
      text: q.labeled ? "Update label" : "Confirm and submit",
      disabled: "",
    });

    resolve.addEventListener("click", () => void this.resolveText(submit));
    this.textInput.addEventListener("input", () => {
      this.resolved = null;
      submit.setAttribute("disabled", "");
      this.chip?.setAttribute("hidden", "");
    });
    submit.addEventListener("click", () => void this.submitText(q));

    block.append(
      el("p", {
        class: "hint",
        text: "Describe the motion in your own words; the server maps them to a VAD triple you confirm before submitting.",
      }),
      el("div", { class: "text-row" }, this.textInput, resolve),
      this.chip,
      submit,
    );
    return block;
  }

  private async resolveText(submit: HTMLElement): Promise<void> {
    const text = this.textInput?.value.trim() ?? "";
    this.errors.clearError();
    if (!text) {
      this.errors.show("Type a word or phrase first.");
      return;
    }
    try {
      const res = await this.client.resolveVad(text);
      if (!res.found || res.vad === null) {
        this.errors.show(
          `No emotion words recognized in "${text}" — try different words.`,
        );
        return;
      }
      this.resolved = res;
      if (this.chip) {
        this.chip.textContent =
          `${res.matched.join(" + ")} → ` +
          `V ${fmt(res.vad[0])}, A ${fmt(res.vad[1])}, D ${fmt(res.vad[2])}`;
        this.chip.removeAttribute("hidden");
      }
      submit.removeAttribute("disabled");
    } catch (err) {
      this.errors.show((err as Error).message);
    }
  }

  private async submitSliders(q: Query): Promise<void> {
    const vad = this.sliders.map((s) => Number(s.value)) as Vad;
    await this.submitLabel(q, { vad });
  }

  private async submitText(q: Query): Promise<void> {
    const text = this.textInput?.value.trim() ?? "";
    if (!this.resolved || this.resolved.text !== text) {
      this.errors.show("Look the words up first, then confirm the mapping.");
      return;
    }
    await this.submitLabel(q, { text });
  }

  private async submitLabel(
    q: Query,
    payload: { vad: Vad } | { text: string },
  ): Promise<void> {
    if (this.busy) return;
    this.busy = true;
    this.errors.clearError();
    try {
      const res = await this.client.postLabel(this.sessionId, {
        round: this.round,
        index: q.index,
        request_id: newRequestId(),
        ...payload,
      });
      q.labeled = true;
      this.callbacks.onLabeled(q.index, res.vad);
      const next = this.queries.findIndex((query) => !query.labeled);
      if (next === -1) {
        this.callbacks.onRoundComplete();
      } else {
        this.current = next;
        this.renderAll();
      }
    } catch (err) {
      if (err instanceof ApiError) this.errors.show(err.detail);
      else this.errors.show((err as Error).message);
    } finally {
      this.busy = false;
    }
  }
}
