"""Waypoint-trajectory optimization for the simulated vacuum robot.

The planning objective is a weighted sum of: squared distance from the final
waypoint to the dust target, actuation effort (sum of squared implied
accelerations weighted by segment duration), total elapsed time, the soft
dynamics-feasibility residual, and optionally ``alpha`` times a learned style
term (either squared distance of a style network's VAD prediction to a target
point, or a scalar cost network's raw output).

Optimization runs full-gradient adaptive-moment descent over the free
waypoints and the log of the segment durations, batched simultaneously over
random restarts and over independent tasks.  The first waypoint stays pinned
to the task's start state bit-for-bit, durations are projected into their
bounds after every step, and the best cost ever visited (per restart) is what
gets returned, so more iterations can never produce a worse answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, Sequence

import numpy as np

from .sim import (
    DEFAULT_WAYPOINTS,
    DynamicsParams,
    Task,
    Trajectory,
    dynamics_residual_grad,
    implied_accelerations_arrays,
)
from .stylenet import (
    StyleNetParams,
    scalar_output_grad_arrays,
    style_cost_grad_arrays,
)
from .vadspace import Vad


@dataclass(frozen=True, slots=True)
class CostConfig:
    """Weights of the planning objective."""

    w_goal: float = 50.0
    w_effort: float = 0.1
    w_time: float = 0.2
    w_dyn: float = 10.0
    alpha: float = 5.0

    def __post_init__(self) -> None:
        for name in ("w_goal", "w_effort", "w_time", "w_dyn"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")


@dataclass(frozen=True, slots=True)
class OptimizerConfig:
    """Descent schedule for the trajectory optimizer."""

    n_waypoints: int = DEFAULT_WAYPOINTS
    iters: int = 400
    restarts: int = 3
    step: float = 0.05
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    init_noise: float = 0.3

    def __post_init__(self) -> None:
        if self.n_waypoints < 2:
            raise ValueError("need at least two waypoints")
        if self.iters < 1 or self.restarts < 1:
            raise ValueError("need iters >= 1 and restarts >= 1")
        if self.step <= 0:
            raise ValueError("step must be positive")


class StyleTerm(Protocol):
    """Batched differentiable style objective plugged into the planner."""

    def cost_and_grad(self, w: np.ndarray, dts: np.ndarray
                      ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Return per-row cost and gradients w.r.t. waypoints and durations."""
        ...


@dataclass(frozen=True)
class VadStyleTerm:
    """Squared distance between a style network's prediction and targets."""

    params: StyleNetParams
    targets: np.ndarray  # (3,) or (B, 3), broadcast over restart rows

    def cost_and_grad(self, w, dts):
        return style_cost_grad_arrays(self.params, w, dts, self.targets)


@dataclass(frozen=True)
class ScalarStyleTerm:
    """Raw output of a scalar cost network, optionally one model per row."""

    params: StyleNetParams
    weights: dict[str, np.ndarray] | None = None  # stacked (B, ...) weights

    def cost_and_grad(self, w, dts):
        return scalar_output_grad_arrays(self.params, w, dts, self.weights)


# ---------------------------------------------------------------------------
# Objective


def base_cost_grad_arrays(
    w: np.ndarray,
    dts: np.ndarray,
    dust: np.ndarray,
    cost: CostConfig,
    params: DynamicsParams,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Task cost (goal + effort + time + dynamics) with analytic gradients.

    ``w`` ``(..., T, 6)``, ``dts`` ``(..., T-1)``, ``dust`` ``(..., 2)``.
    """
    res, dw, ddts = dynamics_residual_grad(w, dts, params)
    dw = dw * cost.w_dyn
    ddts = ddts * cost.w_dyn

    gap = w[..., -1, 0:2] - dust
    c = cost.w_dyn * res + cost.w_goal * np.sum(gap * gap, axis=-1)
    dw[..., -1, 0:2] += 2.0 * cost.w_goal * gap

    acc = implied_accelerations_arrays(w, dts)  # (..., T-1, 3)
    acc_sq = np.sum(acc * acc, axis=-1)  # (..., T-1)
    c = c + cost.w_effort * np.sum(acc_sq * dts, axis=-1)
    # d(dt * a^2)/dv1 = 2a, /dv0 = -2a, /ddt = -a^2  (a = dv/dt)
    dw[..., 1:, 3:6] += 2.0 * cost.w_effort * acc
    dw[..., :-1, 3:6] -= 2.0 * cost.w_effort * acc
    ddts += -cost.w_effort * acc_sq

    c = c + cost.w_time * np.sum(dts, axis=-1)
    ddts += cost.w_time
    return c, dw, ddts


def base_cost(traj: Trajectory, task: Task, cost: CostConfig,
              params: DynamicsParams = DynamicsParams()) -> float:
    """Task cost of one trajectory (no style term)."""
    w, dts = traj.to_arrays()
    c, _, _ = base_cost_grad_arrays(w, dts, np.asarray(task.dust), cost, params)
    return float(c)


def total_cost(traj: Trajectory, task: Task, style_params: StyleNetParams,
               target: Vad, cost: CostConfig,
               params: DynamicsParams = DynamicsParams()) -> float:
    """Task cost plus ``alpha`` times the squared style-prediction distance."""
    from .stylenet import style_cost

    return base_cost(traj, task, cost, params) + cost.alpha * style_cost(
        style_params, traj, target
    )


# ---------------------------------------------------------------------------
# Optimizer


class OptimizationDiverged(RuntimeError):
    """No restart reached a finite objective for at least one task.

    ``task_indices`` names the offending batch rows and ``best_costs`` holds
    the per-task best objective actually reached (``inf`` for the failures).
    """

    def __init__(self, task_indices: Sequence[int], best_costs: np.ndarray):
        self.task_indices = tuple(int(i) for i in task_indices)
        self.best_costs = np.asarray(best_costs, dtype=float)
        super().__init__(
            "every restart diverged (non-finite cost) for task index(es) "
            f"{list(self.task_indices)}"
        )


@dataclass(frozen=True)
class BatchResult:
    """Best trajectory per task plus diagnostics."""

    trajectories: list[Trajectory]
    costs: np.ndarray  # (B,) best objective value per task
    completed: np.ndarray  # (B,) final waypoint within goal tolerance
    history: np.ndarray  # (iters + 1, B) best-so-far objective per iteration


def _cumtrapz(v: np.ndarray, dts: np.ndarray) -> np.ndarray:
    """Trapezoid-rule position integral of a velocity profile, starting at 0."""
    seg = 0.5 * (v[..., :-1] + v[..., 1:]) * dts
    out = np.zeros_like(v)
    out[..., 1:] = np.cumsum(seg, axis=-1)
    return out


def _seed_profile(starts: np.ndarray, dust: np.ndarray, T: int,
                  dt_min: float, dt_max: float
                  ) -> tuple[np.ndarray, np.ndarray]:
    """Straight-line interpolation start -> dust, laid down velocity-first.

    Constant cruise velocities (zero at the pinned first waypoint) are
    integrated with the trapezoid rule into positions, so the consistency
    part of the dynamics residual starts at zero and the final waypoint lands
    exactly on the dust.
    """
    B = starts.shape[0]
    delta = dust - starts[:, 0:2]
    dist = np.linalg.norm(delta, axis=1)
    t_total = np.clip(np.maximum(dist / 2.0, 1.0),
                      (T - 1) * dt_min, (T - 1) * dt_max)
    dt0 = t_total / (T - 1)
    dts = np.repeat(dt0[:, None], T - 1, axis=1)

    w = np.zeros((B, T, 6))
    w[:, :, 2] = starts[:, None, 2]
    cruise = delta / (t_total - 0.5 * dt0)[:, None]
    w[:, :, 3:5] = cruise[:, None, :]
    w[:, 0, 3:5] = starts[:, 3:5]
    w[:, :, 0] = starts[:, None, 0] + _cumtrapz(w[:, :, 3], dts)
    w[:, :, 1] = starts[:, None, 1] + _cumtrapz(w[:, :, 4], dts)

    w[:, :, 1] = np.maximum(w[:, :, 1], 0.0)
    w[:, 0, :] = starts
    return w, np.log(dts)


def _init_arrays(tasks: Sequence[Task], opt: OptimizerConfig,
                 params: DynamicsParams, rng: np.random.Generator
                 ) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    B, T, R = len(tasks), opt.n_waypoints, opt.restarts
    starts = np.stack([t.start.as_array() for t in tasks])
    dust = np.stack([np.asarray(t.dust, dtype=float) for t in tasks])

    base_w, base_log = _seed_profile(starts, dust, T,
                                     params.dt_min, params.dt_max)
    w = np.broadcast_to(base_w, (R, B, T, 6)).copy()
    log_dts = np.broadcast_to(base_log, (R, B, T - 1)).copy()
    if R > 1:
        w[1:] += rng.standard_normal((R - 1, B, T, 6)) * opt.init_noise
        log_dts[1:] += rng.standard_normal((R - 1, B, T - 1)) * 0.3
        # The body angle is periodic and the seed profile sits on the upright
        # saddle (d cos(phi)/d phi = 0 at phi = 0), so Gaussian jitter alone
        # rarely escapes it.  A constant per-restart offset spreads restarts
        # around the circle without perturbing angular velocities.
        w[1:, :, :, 2] += rng.uniform(-np.pi, np.pi, (R - 1, B, 1))
    w[..., 1] = np.maximum(w[..., 1], 0.0)
    w[:, :, 0, :] = starts[None, :, :]
    log_dts = np.clip(log_dts, np.log(params.dt_min), np.log(params.dt_max))
    return w, log_dts, starts, dust


def optimize_batch(
    tasks: Sequence[Task],
    style: StyleTerm | None,
    cost: CostConfig,
    opt: OptimizerConfig,
    seed,
    params: DynamicsParams = DynamicsParams(),
) -> BatchResult:
    """Plan one trajectory per task, batched over tasks and restarts."""
    if not tasks:
        raise ValueError("need at least one task")
    rng = np.random.default_rng(seed)
    w, log_dts, starts, dust = _init_arrays(tasks, opt, params, rng)
    R, B, T, _ = w.shape
    log_lo, log_hi = np.log(params.dt_min), np.log(params.dt_max)

    def objective(w_cur, dts_cur):
        c, dw, ddts = base_cost_grad_arrays(w_cur, dts_cur, dust, cost, params)
        if style is not None and cost.alpha != 0.0:
            sc, sdw, sddts = style.cost_and_grad(w_cur, dts_cur)
            c = c + cost.alpha * sc
            dw = dw + cost.alpha * sdw
            ddts = ddts + cost.alpha * sddts
        return c, dw, ddts

    m_w = np.zeros_like(w)
    v_w = np.zeros_like(w)
    m_l = np.zeros_like(log_dts)
    v_l = np.zeros_like(log_dts)

    best_c = np.full((R, B), np.inf)
    best_w = w.copy()
    best_dts = np.exp(log_dts)
    history = np.empty((opt.iters + 1, B))

    for it in range(opt.iters + 1):
        dts = np.exp(log_dts)
        c, dw, ddts = objective(w, dts)
        c = np.where(np.isfinite(c), c, np.inf)

        improved = c < best_c
        if np.any(improved):
            best_c = np.where(improved, c, best_c)
            best_w[improved] = w[improved]
            best_dts[improved] = dts[improved]
        history[it] = best_c.min(axis=0)
        if it == opt.iters:
            break

        g_w = dw
        g_w[:, :, 0, :] = 0.0  # first waypoint stays pinned to the start state
        g_l = ddts * dts

        t = it + 1
        # Cosine decay polishes the solution once the coarse motion is found.
        step = opt.step * (0.1 + 0.45 * (1.0 + np.cos(np.pi * it / opt.iters)))
        m_w = opt.beta1 * m_w + (1 - opt.beta1) * g_w
        v_w = opt.beta2 * v_w + (1 - opt.beta2) * g_w * g_w
        w = w - step * (m_w / (1 - opt.beta1**t)) / (
            np.sqrt(v_w / (1 - opt.beta2**t)) + opt.eps
        )
        w[..., 1] = np.maximum(w[..., 1], 0.0)  # project onto y >= 0
        w[:, :, 0, :] = starts[None, :, :]

        m_l = opt.beta1 * m_l + (1 - opt.beta1) * g_l
        v_l = opt.beta2 * v_l + (1 - opt.beta2) * g_l * g_l
        log_dts = log_dts - step * (m_l / (1 - opt.beta1**t)) / (
            np.sqrt(v_l / (1 - opt.beta2**t)) + opt.eps
        )
        log_dts = np.clip(log_dts, log_lo, log_hi)

    pick = np.argmin(best_c, axis=0)  # (B,)
    rows = np.arange(B)
    sel_w = best_w[pick, rows]
    sel_dts = best_dts[pick, rows]
    sel_c = best_c[pick, rows]
    if not np.all(np.isfinite(sel_c)):
        raise OptimizationDiverged(np.flatnonzero(~np.isfinite(sel_c)), sel_c)

    trajectories = [
        Trajectory.from_arrays(sel_w[b], sel_dts[b], clamp_ground=True)
        for b in range(B)
    ]
    final_gap = np.linalg.norm(sel_w[:, -1, 0:2] - dust, axis=-1)
    tol = np.array([t.goal_tolerance for t in tasks])
    return BatchResult(
        trajectories=trajectories,
        costs=sel_c,
        completed=final_gap <= tol,
        history=history,
    )


def optimize(task: Task, style: StyleTerm | None, cost: CostConfig,
             opt: OptimizerConfig, seed,
             params: DynamicsParams = DynamicsParams()) -> Trajectory:
    """Plan a single task (a batch of size one)."""
    return optimize_batch([task], style, cost, opt, seed, params).trajectories[0]
