"""VacuumBot: state space, tasks, trajectories, and soft dynamics checks.

The robot lives in a 2-D side view with three degrees of freedom: horizontal
position ``x``, height above ground ``y``, and body angle ``phi``.  A
trajectory is a sequence of waypoints (position + velocity per DOF) with a
strictly positive duration between consecutive waypoints.

Physics is enforced softly through :func:`dynamics_residual`, a differentiable
penalty that is exactly zero on trajectories consistent with the discretized
model below and positive otherwise.  The committed discretization:

* consistency — midpoint rule per segment: ``(p1 - p0)/dt`` must equal the
  mean of the endpoint velocities (angle differences taken principal-value);
* actuation recovery — the drive needed to realize a segment is
  ``u_x = ax + (1-A)*friction*vx_mid`` (ground friction damps horizontal
  motion, fading out with the airborne weight
  ``A(y) = y^2 / (y^2 + airborne_height^2)``) and ``u_y = ay + A*gravity``
  (away from the ground the robot must spend vertical authority fighting
  gravity; on the ground the contact carries it).  Drives and the angular
  acceleration beyond the actuator limits are penalized with squared hinges,
  so coasting ballistic flight (``ay = -gravity``) costs nothing and powered
  climbs are free exactly up to the actuator budget;
* ground plane — each waypoint pays ``max(-y, 0)^2``.

All array code is batched: waypoints ``(..., T, 6)`` ordered
``[x, y, phi, vx, vy, vphi]`` and durations ``(..., T-1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

# Frozen default limits used across the repo's experiments.
DT_MIN = 0.02
DT_MAX = 0.5
DEFAULT_WAYPOINTS = 40

STATE_FIELDS = ("x", "y", "phi", "vx", "vy", "vphi")


def wrap_angle(phi: np.ndarray | float) -> np.ndarray | float:
    """Wrap an angle into (-pi, pi]."""
    wrapped = np.mod(-np.asarray(phi, dtype=float) + np.pi, 2.0 * np.pi)
    out = -(wrapped - np.pi)
    return float(out) if np.ndim(phi) == 0 else out


@dataclass(frozen=True, slots=True)
class RobotState:
    """One VacuumBot configuration: positions and velocities per DOF."""

    x: float
    y: float
    phi: float
    vx: float
    vy: float
    vphi: float

    def __post_init__(self) -> None:
        vals = [getattr(self, f) for f in STATE_FIELDS]
        if not all(math.isfinite(v) for v in vals):
            raise ValueError("robot state has non-finite entries")
        if self.y < 0.0:
            raise ValueError(f"height y={self.y} below ground plane")
        object.__setattr__(self, "phi", wrap_angle(self.phi))

    @classmethod
    def at_rest(cls, x: float, y: float = 0.0, phi: float = 0.0) -> "RobotState":
        return cls(x=x, y=y, phi=phi, vx=0.0, vy=0.0, vphi=0.0)

    def as_array(self) -> np.ndarray:
        return np.array([getattr(self, f) for f in STATE_FIELDS])

    def to_json_dict(self) -> dict[str, float]:
        return {f: float(getattr(self, f)) for f in STATE_FIELDS}

    @classmethod
    def from_json_dict(cls, obj: dict[str, Any]) -> "RobotState":
        return cls(**{f: float(obj[f]) for f in STATE_FIELDS})


@dataclass(frozen=True, slots=True)
class Task:
    """Start state plus a dust location that the robot should reach."""

    start: RobotState
    dust: tuple[float, float]
    goal_tolerance: float = 0.25

    def __post_init__(self) -> None:
        if self.dust[1] < 0.0:
            raise ValueError("dust cannot be below the ground plane")
        if self.goal_tolerance <= 0.0:
            raise ValueError("goal tolerance must be positive")
        object.__setattr__(self, "dust", (float(self.dust[0]), float(self.dust[1])))

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "start": self.start.to_json_dict(),
            "dust": {"x": self.dust[0], "y": self.dust[1]},
            "goal_tolerance": self.goal_tolerance,
        }

    @classmethod
    def from_json_dict(cls, obj: dict[str, Any]) -> "Task":
        return cls(
            start=RobotState.from_json_dict(obj["start"]),
            dust=(float(obj["dust"]["x"]), float(obj["dust"]["y"])),
            goal_tolerance=float(obj["goal_tolerance"]),
        )


@dataclass(frozen=True)
class Trajectory:
    """Waypoints plus per-segment durations (seconds)."""

    waypoints: tuple[RobotState, ...]
    dts: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.waypoints) < 2:
            raise ValueError("trajectory needs at least two waypoints")
        if len(self.dts) != len(self.waypoints) - 1:
            raise ValueError("need exactly one duration per segment")
        for dt in self.dts:
            if not (0.0 < dt <= DT_MAX):
                raise ValueError(f"segment duration {dt} outside (0, {DT_MAX}]")

    @property
    def length(self) -> int:
        return len(self.waypoints)

    @property
    def duration(self) -> float:
        return float(sum(self.dts))

    def to_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        w = np.stack([s.as_array() for s in self.waypoints])
        return w, np.asarray(self.dts, dtype=float)

    @classmethod
    def from_arrays(cls, waypoints: np.ndarray, dts: np.ndarray,
                    clamp_ground: bool = False) -> "Trajectory":
        w = np.asarray(waypoints, dtype=float)
        if clamp_ground:
            w = w.copy()
            w[:, 1] = np.maximum(w[:, 1], 0.0)
        states = tuple(RobotState(*row) for row in w)
        return cls(waypoints=states, dts=tuple(float(d) for d in dts))

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "waypoints": [s.to_json_dict() for s in self.waypoints],
            "dts": [float(d) for d in self.dts],
        }

    @classmethod
    def from_json_dict(cls, obj: dict[str, Any]) -> "Trajectory":
        return cls(
            waypoints=tuple(RobotState.from_json_dict(w) for w in obj["waypoints"]),
            dts=tuple(float(d) for d in obj["dts"]),
        )


@dataclass(frozen=True, slots=True)
class DynamicsParams:
    """Physics constants for the soft dynamics model."""

    gravity: float = 9.8
    ground_friction: float = 2.0  # horizontal velocity damping rate on ground, 1/s
    accel_limits: tuple[float, float, float] = (8.0, 20.0, 10.0)  # ax, ay, aphi
    dt_min: float = DT_MIN
    dt_max: float = DT_MAX
    airborne_height: float = 0.05  # blend scale for the grounded/airborne weight

    def __post_init__(self) -> None:
        vals = (self.gravity, self.ground_friction, *self.accel_limits,
                self.dt_min, self.dt_max, self.airborne_height)
        if any(v <= 0 for v in vals):
            raise ValueError("all dynamics parameters must be positive")
        if self.dt_min >= self.dt_max:
            raise ValueError("dt_min must be below dt_max")


@dataclass(frozen=True, slots=True)
class WorkspaceBounds:
    """Axis-aligned box tasks are sampled from."""

    x_range: tuple[float, float] = (0.0, 10.0)
    y_range: tuple[float, float] = (0.0, 3.0)

    def __post_init__(self) -> None:
        if self.x_range[0] >= self.x_range[1] or self.y_range[0] >= self.y_range[1]:
            raise ValueError("workspace box is degenerate")
        if self.y_range[0] < 0.0:
            raise ValueError("workspace cannot extend below the ground")


DEFAULT_BOUNDS = WorkspaceBounds()


def sample_task_rng(rng: np.random.Generator,
                    bounds: WorkspaceBounds = DEFAULT_BOUNDS,
                    goal_tolerance: float = 0.25) -> Task:
    """Draw a task: resting start on the ground, dust uniform in the box."""
    start_x = rng.uniform(*bounds.x_range)
    dust = (rng.uniform(*bounds.x_range), rng.uniform(*bounds.y_range))
    return Task(start=RobotState.at_rest(start_x), dust=dust,
                goal_tolerance=goal_tolerance)


def sample_task(rng_seed, bounds: WorkspaceBounds = DEFAULT_BOUNDS,
                goal_tolerance: float = 0.25) -> Task:
    """Deterministic task sampler; ``rng_seed`` is any numpy seed material."""
    return sample_task_rng(np.random.default_rng(rng_seed), bounds, goal_tolerance)


def implied_accelerations(traj: Trajectory) -> np.ndarray:
    """Per-segment accelerations ``(ax, ay, aphi)`` from velocity differences."""
    w, dts = traj.to_arrays()
    return implied_accelerations_arrays(w, dts)


def implied_accelerations_arrays(w: np.ndarray, dts: np.ndarray) -> np.ndarray:
    v = w[..., 3:]
    return (v[..., 1:, :] - v[..., :-1, :]) / dts[..., :, None]


def dynamics_residual(traj: Trajectory, params: DynamicsParams) -> float:
    """Nonnegative feasibility defect; zero iff the trajectory obeys the model."""
    w, dts = traj.to_arrays()
    res, _, _ = dynamics_residual_grad(w[None], dts[None], params)
    return float(res[0])


def dynamics_residual_grad(
    w: np.ndarray, dts: np.ndarray, params: DynamicsParams
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Batched residual with analytic gradients.

    ``w`` is ``(..., T, 6)``, ``dts`` is ``(..., T-1)``.  Returns
    ``(residual (...,), d/dw (..., T, 6), d/ddts (..., T-1))``.
    """
    g = params.gravity
    fric = params.ground_friction
    ax_max, ay_max, aphi_max = params.accel_limits
    h2 = params.airborne_height**2

    p0, p1 = w[..., :-1, :3], w[..., 1:, :3]
    v0, v1 = w[..., :-1, 3:], w[..., 1:, 3:]
    inv = 1.0 / dts

    # (a) midpoint consistency, principal-value difference for the angle.
    diff = p1 - p0
    diff = np.concatenate(
        [diff[..., :2], wrap_angle(diff[..., 2])[..., None]], axis=-1
    )
    vm = 0.5 * (v0 + v1)
    r = diff * inv[..., None] - vm
    term_a = np.sum(r * r, axis=(-1, -2))

    # Kinematic accelerations per segment.
    acc = (v1 - v0) * inv[..., None]
    ax, ay, aphi = acc[..., 0], acc[..., 1], acc[..., 2]

    # Smooth airborne weight from the midpoint height.
    ym = 0.5 * (w[..., :-1, 1] + w[..., 1:, 1])
    s2 = ym * ym + h2
    A = ym * ym / s2
    G = 1.0 - A

    # (b) recovered drives against actuator limits: ground friction consumes
    # horizontal authority (fading out when airborne), gravity consumes
    # vertical authority (fading in when airborne).
    vxm = vm[..., 0]
    ux = ax + G * fric * vxm
    uy = ay + A * g
    h_ux = np.maximum(np.abs(ux) - ax_max, 0.0)
    h_uy = np.maximum(np.abs(uy) - ay_max, 0.0)
    h_ap = np.maximum(np.abs(aphi) - aphi_max, 0.0)
    term_b = np.sum(h_ux * h_ux + h_uy * h_uy + h_ap * h_ap, axis=-1)

    # (c) ground plane per waypoint.
    hy = np.maximum(-w[..., 1], 0.0)
    term_c = np.sum(hy * hy, axis=-1)

    res = term_a + term_b + term_c

    # ---- backward ----
    dw = np.zeros_like(w)
    ddt = np.zeros_like(dts)
    dw0, dw1 = dw[..., :-1, :], dw[..., 1:, :]  # views

    # (a)
    two_r_inv = 2.0 * r * inv[..., None]
    dw0[..., :3] -= two_r_inv
    dw1[..., :3] += two_r_inv
    dw0[..., 3:] -= r
    dw1[..., 3:] -= r
    ddt -= np.sum(2.0 * r * diff, axis=-1) * inv * inv

    # Shared chains for accelerations: da/dv0 = -inv, da/dv1 = inv,
    # da/ddt = -a*inv.  Collect each term's da contribution then apply once.
    d_ax = np.zeros_like(ax)
    d_ay = np.zeros_like(ay)
    d_aphi = np.zeros_like(aphi)
    d_A = np.zeros_like(A)
    d_vxm = np.zeros_like(vxm)

    # (b)
    d_ux = 2.0 * h_ux * np.sign(ux)
    d_uy = 2.0 * h_uy * np.sign(uy)
    d_ax += d_ux
    d_vxm += d_ux * G * fric
    d_A += -d_ux * fric * vxm
    d_ay += d_uy
    d_A += d_uy * g
    d_aphi += 2.0 * h_ap * np.sign(aphi)

    # (c)
    dw[..., 1] -= 2.0 * hy

    # Apply the airborne-weight chain: dA/dym = 2*ym*h2/s2^2, dym/dy0 = 1/2.
    d_ym = d_A * (2.0 * ym * h2 / (s2 * s2))
    dw0[..., 1] += 0.5 * d_ym
    dw1[..., 1] += 0.5 * d_ym

    # Apply vxm chain.
    dw0[..., 3] += 0.5 * d_vxm
    dw1[..., 3] += 0.5 * d_vxm

    # Apply acceleration chains.
    d_acc = np.stack([d_ax, d_ay, d_aphi], axis=-1)
    dw0[..., 3:] -= d_acc * inv[..., None]
    dw1[..., 3:] += d_acc * inv[..., None]
    ddt -= np.sum(d_acc * acc, axis=-1) * inv

    return res, dw, ddt


def ballistic_arc(start_x: float, start_y: float, vx: float, vy: float,
                  gravity: float, total_time: float, n_waypoints: int,
                  phi: float = 0.0, vphi: float = 0.0) -> Trajectory:
    """Closed-form projectile rollout (no drive), useful as a feasibility oracle."""
    ts = np.linspace(0.0, total_time, n_waypoints)
    xs = start_x + vx * ts
    ys = start_y + vy * ts - 0.5 * gravity * ts * ts
    if np.any(ys < 0):
        raise ValueError("arc dips below ground; shorten total_time")
    phis = phi + vphi * ts
    w = np.stack(
        [xs, ys, phis, np.full_like(ts, vx), vy - gravity * ts,
         np.full_like(ts, vphi)], axis=1
    )
    return Trajectory.from_arrays(w, np.diff(ts))
