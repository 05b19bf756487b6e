/** Frame-accurate playback of a server-rendered frame list.
 *
 * The server precomputes poses at a fixed rate; the player's only job is to
 * show frame k while k/fps <= elapsed-scaled-time < (k+1)/fps. The animation
 * clock is injected so tests can drive it deterministically.
 */

import { drawScene, fitViewport } from "./scene.js";
import type { Draw2D, Viewport } from "./scene.js";
import type { Frame, FramesPayload, Task } from "./types.js";

export class FrameFormatError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "FrameFormatError";
  }
}

/** Validate a frames payload; throws FrameFormatError on malformed input. */
export function checkFrames(payload: FramesPayload): void {
  if (!Number.isFinite(payload.fps) || payload.fps <= 0) {
    throw new FrameFormatError(`frame rate must be positive, got ${payload.fps}`);
  }
  if (!Number.isFinite(payload.duration) || payload.duration < 0) {
    throw new FrameFormatError(`duration must be nonnegative, got ${payload.duration}`);
  }
  if (!Array.isArray(payload.frames) || payload.frames.length === 0) {
    throw new FrameFormatError("frame list is empty");
  }
  let prev = -Infinity;
  for (const [i, f] of payload.frames.entries()) {
    for (const key of ["t", "x", "y", "phi"] as const) {
      if (!Number.isFinite(f?.[key])) {
        throw new FrameFormatError(`frame ${i} has a non-finite '${key}'`);
      }
    }
    if (f.t < prev) {
      throw new FrameFormatError(`frame ${i} goes backwards in time`);
    }
    prev = f.t;
  }
}

export interface AnimationClock {
  now(): number; // milliseconds
  schedule(callback: () => void): number;
  cancel(handle: number): void;
}

function browserClock(): AnimationClock {
  return {
    now: () => performance.now(),
    schedule: (cb) => requestAnimationFrame(() => cb()),
    cancel: (h) => cancelAnimationFrame(h),
  };
}

export type PlayerState = "idle" | "playing" | "paused" | "ended";

export class FramePlayer {
  private readonly ctx: Draw2D;
  private readonly viewport: Viewport;
  private readonly frames: readonly Frame[];
  private readonly duration: number;
  private readonly task: Task;
  private readonly clock: AnimationClock;

  private speedFactor = 1;
  private startedAt = 0; // clock ms of the current play() call
  private offset = 0; // seconds of trajectory time already consumed
  private handle: number | null = null;
  private stateName: PlayerState = "idle";
  private lastDrawn = -1;

  onstate: ((state: PlayerState) => void) | null = null;

  constructor(
    ctx: Draw2D,
    width: number,
    height: number,
    payload: FramesPayload,
    task: Task,
    clock?: AnimationClock,
  ) {
    checkFrames(payload);
    this.ctx = ctx;
    this.frames = payload.frames;
    this.duration = payload.duration;
    this.task = task;
    this.viewport = fitViewport(payload.frames, task, width, height);
    this.clock = clock ?? browserClock();
    this.renderAt(0);
  }

  get state(): PlayerState {
    return this.stateName;
  }

  get speed(): number {
    return this.speedFactor;
  }

  /** Change playback rate without losing the current position. */
  setSpeed(factor: number): void {
    if (!Number.isFinite(factor) || factor <= 0) {
      throw new RangeError(`speed must be positive, got ${factor}`);
    }
    this.offset = this.position();
    this.startedAt = this.clock.now();
    this.speedFactor = factor;
  }

  /** Current trajectory time in seconds. */
  position(): number {
    if (this.stateName !== "playing") return this.offset;
    const wall = (this.clock.now() - this.startedAt) / 1000;
    return Math.min(this.offset + wall * this.speedFactor, this.duration);
  }

  play(): void {
    if (this.stateName === "playing") return;
    if (this.stateName === "ended") this.offset = 0;
    this.startedAt = this.clock.now();
    this.setState("playing");
    this.tick();
  }

  pause(): void {
    if (this.stateName !== "playing") return;
    this.offset = this.position();
    this.stopTicking();
    this.setState("paused");
  }

  replay(): void {
    this.stopTicking();
    this.offset = 0;
    this.startedAt = this.clock.now();
    this.setState("playing");
    this.tick();
  }

  dispose(): void {
    this.stopTicking();
  }

  /** Index of the frame on screen for trajectory time t. */
  frameIndexAt(t: number): number {
    let lo = 0;
    let hi = this.frames.length - 1;
    while (lo < hi) {
      const mid = (lo + hi + 1) >> 1;
      const frame = this.frames[mid];
      if (frame !== undefined && frame.t <= t) lo = mid;
      else hi = mid - 1;
    }
    return lo;
  }

  /** Draw the frame for trajectory time t (idempotent per frame index). */
  renderAt(t: number): void {
    const index = this.frameIndexAt(t);
    if (index === this.lastDrawn) return;
    drawScene(this.ctx, this.viewport, this.frames, index, this.task);
    this.lastDrawn = index;
  }

  /** Force a redraw of the current position (used after canvas resets). */
  redraw(): void {
    this.lastDrawn = -1;
    this.renderAt(this.position());
  }

  private tick(): void {
    this.handle = this.clock.schedule(() => {
      if (this.stateName !== "playing") return;
      const t = this.position();
      this.renderAt(t);
      if (t >= this.duration) {
        this.offset = this.duration;
        this.stopTicking();
        this.setState("ended");
        return;
      }
      this.tick();
    });
  }

  private stopTicking(): void {
    if (this.handle !== null) {
      this.clock.cancel(this.handle);
      this.handle = null;
    }
  }

  private setState(state: PlayerState): void {
    this.stateName = state;
    this.onstate?.(state);
  }
}
