/** Pure 2-D drawing of one playback frame.
 *
 * Everything here is a deterministic function of (frame, task, viewport):
 * the browser canvas and the test rasterizer produce the same picture.
 */

import type { Frame, Task } from "./types.js";

/** The slice of CanvasRenderingContext2D the scene needs. */
export interface Draw2D {
  fillStyle: string | CanvasGradient | CanvasPattern;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  lineWidth: number;
  globalAlpha: number;
  save(): void;
  restore(): void;
  translate(dx: number, dy: number): void;
  rotate(angle: number): void;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  arc(
    x: number,
    y: number,
    radius: number,
    startAngle: number,
    endAngle: number,
  ): void;
  closePath(): void;
  fill(): void;
  stroke(): void;
  fillRect(x: number, y: number, w: number, h: number): void;
}

export interface Viewport {
  width: number;
  height: number;
  /** World-units-per-pixel scale and world origin, fitted once per scene. */
  scale: number;
  worldX0: number;
  worldY0: number;
}

const PALETTE = {
  sky: "#10141c",
  ground: "#3b4254",
  groundLine: "#8b93a7",
  trail: "#2f6f6a",
  body: "#d8b04a",
  bodyEdge: "#8a6d23",
  arm: "#c7cdd9",
  dust: "#b75fa6",
  wheel: "#222733",
} as const;

const BODY_W = 0.56;
const BODY_H = 0.26;
const ARM_LEN = 0.42;
const WHEEL_R = 0.07;
const GROUND_PX = 28;

/** Fit a viewport that shows the whole motion plus the dust with margins. */
export function fitViewport(
  frames: readonly Frame[],
  task: Task,
  width: number,
  height: number,
): Viewport {
  let xMin = task.dust.x;
  let xMax = task.dust.x;
  let yMax = Math.max(task.dust.y, 1.0);
  for (const f of frames) {
    xMin = Math.min(xMin, f.x);
    xMax = Math.max(xMax, f.x);
    yMax = Math.max(yMax, f.y);
  }
  xMin -= 1.0;
  xMax += 1.0;
  yMax += 1.0;
  const scale = Math.min(
    width / (xMax - xMin),
    (height - GROUND_PX) / yMax,
  );
  return { width, height, scale, worldX0: xMin, worldY0: 0 };
}

export function toScreenX(v: Viewport, x: number): number {
  return (x - v.worldX0) * v.scale;
}

export function toScreenY(v: Viewport, y: number): number {
  return v.height - GROUND_PX - (y - v.worldY0) * v.scale;
}

function drawDust(ctx: Draw2D, v: Viewport, task: Task): void {
  const cx = toScreenX(v, task.dust.x);
  const cy = toScreenY(v, task.dust.y);
  const r = Math.max(4, task.goal_tolerance * v.scale);
  ctx.save();
  ctx.globalAlpha = 0.25;
  ctx.fillStyle = PALETTE.dust;
  ctx.beginPath();
  ctx.arc(cx, cy, r, 0, Math.PI * 2);
  ctx.fill();
  ctx.restore();
  ctx.fillStyle = PALETTE.dust;
  ctx.beginPath();
  ctx.arc(cx, cy, 4, 0, Math.PI * 2);
  ctx.fill();
}

function drawRobot(ctx: Draw2D, v: Viewport, frame: Frame): void {
  const px = toScreenX(v, frame.x);
  const py = toScreenY(v, frame.y + BODY_H / 2);
  const w = BODY_W * v.scale;
  const h = BODY_H * v.scale;
  const wheelR = WHEEL_R * v.scale;

  ctx.save();
  ctx.translate(px, py);
  // Screen y points down, so a positive (counter-clockwise) body angle
  // becomes a negative canvas rotation.
  ctx.rotate(-frame.phi);

  // chassis
  ctx.fillStyle = PALETTE.body;
  ctx.fillRect(-w / 2, -h / 2, w, h);
  ctx.strokeStyle = PALETTE.bodyEdge;
  ctx.lineWidth = 2;
  ctx.beginPath();
  ctx.moveTo(-w / 2, -h / 2);
  ctx.lineTo(w / 2, -h / 2);
  ctx.lineTo(w / 2, h / 2);
  ctx.lineTo(-w / 2, h / 2);
  ctx.closePath();
  ctx.stroke();

  // wheels
  ctx.fillStyle = PALETTE.wheel;
  for (const side of [-1, 1]) {
    ctx.beginPath();
    ctx.arc((side * w) / 3, h / 2, wheelR, 0, Math.PI * 2);
    ctx.fill();
  }

  // duster arm, rigidly attached: sticks out of the front top corner
  ctx.strokeStyle = PALETTE.arm;
  ctx.lineWidth = 3;
  ctx.beginPath();
  ctx.moveTo(w / 2, -h / 2);
  ctx.lineTo(w / 2 + ARM_LEN * v.scale * 0.7, -h / 2 - ARM_LEN * v.scale * 0.4);
  ctx.stroke();
  ctx.fillStyle = PALETTE.arm;
  ctx.beginPath();
  ctx.arc(
    w / 2 + ARM_LEN * v.scale * 0.7,
    -h / 2 - ARM_LEN * v.scale * 0.4,
    3,
    0,
    Math.PI * 2,
  );
  ctx.fill();

  ctx.restore();
}

/** Draw one frame: background, ground, dust, faded path trail, robot. */
export function drawScene(
  ctx: Draw2D,
  viewport: Viewport,
  frames: readonly Frame[],
  frameIndex: number,
  task: Task,
): void {
  const v = viewport;
  ctx.globalAlpha = 1;
  ctx.fillStyle = PALETTE.sky;
  ctx.fillRect(0, 0, v.width, v.height);

  ctx.fillStyle = PALETTE.ground;
  ctx.fillRect(0, v.height - GROUND_PX, v.width, GROUND_PX);
  ctx.strokeStyle = PALETTE.groundLine;
  ctx.lineWidth = 2;
  ctx.beginPath();
  ctx.moveTo(0, v.height - GROUND_PX);
  ctx.lineTo(v.width, v.height - GROUND_PX);
  ctx.stroke();

  drawDust(ctx, v, task);

  // trail of the motion up to the current frame
  if (frameIndex > 0) {
    ctx.save();
    ctx.globalAlpha = 0.6;
    ctx.strokeStyle = PALETTE.trail;
    ctx.lineWidth = 2;
    ctx.beginPath();
    const first = frames[0];
    if (first !== undefined) {
      ctx.moveTo(toScreenX(v, first.x), toScreenY(v, first.y));
      for (let i = 1; i <= frameIndex && i < frames.length; i += 1) {
        const f = frames[i];
        if (f !== undefined) ctx.lineTo(toScreenX(v, f.x), toScreenY(v, f.y));
      }
      ctx.stroke();
    }
    ctx.restore();
  }

  const frame = frames[Math.min(frameIndex, frames.length - 1)];
  if (frame !== undefined) drawRobot(ctx, v, frame);
}
