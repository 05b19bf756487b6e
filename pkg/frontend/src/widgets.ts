/** Tiny DOM construction helpers shared by the views. */

export type Child = Node | string | null | undefined;

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  ...children: Child[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (key === "class") node.className = value;
    else if (key === "text") node.textContent = value;
    else node.setAttribute(key, value);
  }
  for (const child of children) {
    if (child === null || child === undefined) continue;
    node.append(child);
  }
  return node;
}

export function clear(node: HTMLElement): void {
  while (node.firstChild) node.removeChild(node.firstChild);
}

export function fmt(value: number, digits = 2): string {
  return value.toFixed(digits);
}

/** Inline error strip; hidden until given a message. */
export class ErrorBar {
  readonly node: HTMLElement;

  constructor() {
    this.node = el("div", { class: "error-bar", role: "alert", hidden: "" });
  }

  show(message: string): void {
    this.node.textContent = message;
    this.node.removeAttribute("hidden");
  }

  clearError(): void {
    this.node.textContent = "";
    this.node.setAttribute("hidden", "");
  }
}
