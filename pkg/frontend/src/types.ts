/** Payload shapes of the labeling service API (v1). */

export type Vad = [number, number, number];

export interface RobotPose {
  x: number;
  y: number;
  phi: number;
}

export interface RobotState extends RobotPose {
  vx: number;
  vy: number;
  vphi: number;
}

export interface Task {
  start: RobotState;
  dust: { x: number; y: number };
  goal_tolerance: number;
}

export interface TrajectoryPayload {
  waypoints: RobotState[];
  dts: number[];
}

export interface Frame extends RobotPose {
  t: number;
}

export interface FramesPayload {
  fps: number;
  duration: number;
  frames: Frame[];
}

export type SessionStatusName =
  | "awaiting_labels"
  | "training"
  | "evaluating"
  | "done";

export interface PendingJob {
  kind: "plan_round" | "train_round" | "plan_eval";
  round?: number;
}

export interface SessionStatus {
  session_id: string;
  status: SessionStatusName;
  rounds_total: number;
  batch_size: number;
  n_emotions: number;
  tasks_per_emotion: number;
  rounds_planned: number;
  rounds_trained: number;
  labels_done: number;
  pending: PendingJob | null;
  eval_total: number;
  eval_answered: number;
  job_error?: string;
}

export interface CreateSessionRequest {
  rounds: number;
  batch_size: number;
  n_emotions: number;
  tasks_per_emotion: number;
  seed?: number;
  session_id?: string;
  alpha?: number;
  opt_iters?: number;
  opt_restarts?: number;
  train_epochs?: number;
}

export interface Query {
  index: number;
  labeled: boolean;
  task: Task;
  trajectory: TrajectoryPayload;
  frames: FramesPayload;
}

export interface QueriesResponse {
  round: number;
  batch_size: number;
  queries: Query[];
}

export interface LabelRequest {
  round: number;
  index: number;
  request_id: string;
  vad?: Vad;
  text?: string;
}

export interface LabelResponse {
  round: number;
  index: number;
  request_id: string;
  vad: Vad;
  source: "direct" | "language";
  text: string | null;
}

export interface TrainResponse {
  round: number;
  queued: boolean;
  status: SessionStatusName;
}

export interface EvalItem {
  index: number;
  kind: "likert" | "choice";
  task: Task;
  trajectory: TrajectoryPayload;
  frames: FramesPayload;
  pair?: [string, string];
  options?: string[];
}

export type EvalNextResponse =
  | { done: true; remaining: 0 }
  | { done: false; remaining: number; total: number; item: EvalItem };

export interface EvalAnswerRequest {
  index: number;
  request_id: string;
  score?: number;
  first?: string;
  second?: string;
}

export interface EvalAnswerResponse {
  index: number;
  recorded: {
    request_id: string;
    score: number | null;
    first: string | null;
    second: string | null;
  };
  status: SessionStatusName;
}

export interface MetricsResponse {
  session_id: string;
  query_count: number;
  quality_mean: number;
  quality_se: number;
  top1: number;
  top1_se: number;
  top2: number;
  top2_se: number;
  likert_items: number;
  choice_items: number;
  per_emotion_top1: Record<string, number>;
  chance: { quality: number; top1: number; top2: number };
}

export interface VadLookupResponse {
  text: string;
  found: boolean;
  vad: Vad | null;
  matched: string[];
  provider: string;
}
