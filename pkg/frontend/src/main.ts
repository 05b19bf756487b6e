/** Entry point: joins the session named in the URL or shows a create form. */

import { EmovacClient } from "./api.js";
import { App } from "./app.js";
import { clear, el, ErrorBar } from "./widgets.js";

function makeContext(canvas: HTMLCanvasElement): CanvasRenderingContext2D {
  const ctx = canvas.getContext("2d");
  if (!ctx) throw new Error("2-D canvas is not available in this browser");
  return ctx;
}

function createForm(root: HTMLElement, client: EmovacClient): void {
  clear(root);
  const errors = new ErrorBar();

  const num = (
    name: string,
    label: string,
    value: string,
    attrs: Record<string, string> = {},
  ): [HTMLElement, HTMLInputElement] => {
    const input = el("input", { type: "number", name, value, ...attrs });
    const row = el(
      "label",
      { class: "form-row" },
      el("span", { class: "form-label", text: label }),
      input,
    );
    return [row, input];
  };

  const [roundsRow, rounds] = num("rounds", "Query rounds (K)", "1", { min: "1" });
  const [batchRow, batch] = num("batch_size", "Queries per round (B)", "3", { min: "1" });
  const emotions = el("select", { name: "n_emotions" });
  for (const n of ["2", "4", "6"]) emotions.append(el("option", { value: n, text: n }));
  const emotionsRow = el(
    "label",
    { class: "form-row" },
    el("span", { class: "form-label", text: "Evaluation emotions (N)" }),
    emotions,
  );
  const [tasksRow, tasks] = num("tasks_per_emotion", "Tasks per emotion (M)", "1", { min: "1" });
  const [seedRow, seed] = num("seed", "Random seed", "0", { min: "0" });

  const submit = el("button", { class: "primary", text: "Start session" });
  const form = el(
    "form",
    { class: "panel create-form" },
    el("h2", { text: "New labeling session" }),
    errors.node,
    roundsRow,
    batchRow,
    emotionsRow,
    tasksRow,
    seedRow,
    el("p", {
      class: "hint",
      text: "Planning the first batch starts immediately and can take a little while.",
    }),
    submit,
  );
  form.addEventListener("submit", (ev) => {
    ev.preventDefault();
    submit.setAttribute("disabled", "");
    void (async () => {
      try {
        const status = await client.createSession({
          rounds: Number(rounds.value),
          batch_size: Number(batch.value),
          n_emotions: Number(emotions.value) as 2 | 4 | 6,
          tasks_per_emotion: Number(tasks.value),
          seed: Number(seed.value),
        });
        const url = new URL(window.location.href);
        url.searchParams.set("session", status.session_id);
        window.history.pushState({}, "", url);
        attach(root, client, status.session_id);
      } catch (err) {
        errors.show((err as Error).message);
        submit.removeAttribute("disabled");
      }
    })();
  });
  root.append(form);
}

function attach(root: HTMLElement, client: EmovacClient, sessionId: string): void {
  clear(root);
  const app = new App(client, sessionId, makeContext);
  root.append(app.node);
  void app.refresh();
}

export function boot(root: HTMLElement): void {
  const client = new EmovacClient(window.location.origin);
  const sessionId = new URL(window.location.href).searchParams.get("session");
  if (sessionId) attach(root, client, sessionId);
  else createForm(root, client);
}

const rootNode = document.getElementById("app");
if (rootNode) boot(rootNode);
