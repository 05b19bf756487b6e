/** Read-only results page shown once the questionnaire is complete.
 *
 * All numbers come from the server; nothing is computed client-side.
 */

import type { MetricsResponse } from "./types.js";
import { el, fmt } from "./widgets.js";

export function metricsView(metrics: MetricsResponse): HTMLElement {
  const section = el("section", { class: "panel metrics" });
  section.append(
    el(
      "header",
      { class: "panel-head" },
      el("h2", { text: "Session results" }),
      el("span", {
        class: "progress",
        text: `${metrics.query_count} labels · ${metrics.likert_items} scale items · ${metrics.choice_items} choice items`,
      }),
    ),
  );

  const cards = el("div", { class: "metric-cards" });
  const rows: Array<[string, number, number, number]> = [
    ["Quality (1–7)", metrics.quality_mean, metrics.quality_se, metrics.chance.quality],
    ["Top-1 accuracy", metrics.top1, metrics.top1_se, metrics.chance.top1],
    ["Top-2 accuracy", metrics.top2, metrics.top2_se, metrics.chance.top2],
  ];
  for (const [name, value, se, chance] of rows) {
    cards.append(
      el(
        "div",
        { class: "metric-card" },
        el("div", { class: "metric-name", text: name }),
        el("div", { class: "metric-value", text: fmt(value, 3) }),
        el("div", {
          class: "metric-se",
          text: `± ${fmt(se, 3)} SE · chance ${fmt(chance, 3)}`,
        }),
      ),
    );
  }
  section.append(cards);

  const table = el("table", { class: "per-emotion" });
  table.append(
    el(
      "tr",
      {},
      el("th", { text: "emotion" }),
      el("th", { text: "Top-1" }),
    ),
  );
  for (const [name, value] of Object.entries(metrics.per_emotion_top1)) {
    table.append(
      el(
        "tr",
        {},
        el("td", { text: name }),
        el("td", { text: fmt(value, 3) }),
      ),
    );
  }
  section.append(
    el("h3", { text: "Per-emotion recognition" }),
    table,
    el("p", {
      class: "hint",
      text: "Values are computed by the service from your answers; reload this page any time — the session is stored on disk.",
    }),
  );
  return section;
}
