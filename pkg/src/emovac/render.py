"""Precomputed playback frames for trajectory animation.

The UI never interpolates: the server expands each trajectory into a pose
list at a fixed frame rate (30 Hz by default) so every client shows the
identical animation.  Between waypoints the pose follows a cubic Hermite
curve through the waypoint positions with the waypoint velocities as end
tangents, which is the smoothest interpolant consistent with the stored
state; heading interpolates along the shorter angular arc.

Also houses the JSON codecs for trajectories and frame lists used by the
CLI ``render`` subcommand and the HTTP layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .sim import Trajectory, wrap_angle

__all__ = [
    "DEFAULT_FPS",
    "Frame",
    "pose_at",
    "render_frames",
    "frames_to_json_dict",
    "trajectory_to_json_dict",
    "trajectory_from_json_dict",
]

DEFAULT_FPS = 30.0


@dataclass(frozen=True, slots=True)
class Frame:
    """One playback pose sample."""

    t: float
    x: float
    y: float
    phi: float


def _hermite(p0: float, v0: float, p1: float, v1: float, dt: float,
             s: float) -> float:
    h00 = 2 * s**3 - 3 * s**2 + 1
    h10 = s**3 - 2 * s**2 + s
    h01 = -2 * s**3 + 3 * s**2
    h11 = s**3 - s**2
    return h00 * p0 + h10 * dt * v0 + h01 * p1 + h11 * dt * v1


def pose_at(traj: Trajectory, t: float) -> tuple[float, float, float]:
    """Interpolated (x, y, phi) at time ``t`` from the trajectory start."""
    w, dts = traj.to_arrays()
    knots = np.concatenate([[0.0], np.cumsum(dts)])
    duration = float(knots[-1])
    if not 0.0 <= t <= duration + 1e-9:
        raise ValueError(f"t={t} outside [0, {duration}]")
    t = min(t, duration)
    if t >= duration:
        last = w[-1]
        return float(last[0]), float(last[1]), float(wrap_angle(last[2]))
    i = int(np.searchsorted(knots, t, side="right") - 1)
    i = min(i, len(dts) - 1)
    dt = float(dts[i])
    s = (t - float(knots[i])) / dt
    a, b = w[i], w[i + 1]
    x = _hermite(a[0], a[3], b[0], b[3], dt, s)
    y = _hermite(a[1], a[4], b[1], b[4], dt, s)
    dphi = float(wrap_angle(b[2] - a[2]))
    phi = _hermite(0.0, a[5], dphi, b[5], dt, s) + a[2]
    return float(x), float(y), float(wrap_angle(phi))


def render_frames(traj: Trajectory, fps: float = DEFAULT_FPS) -> list[Frame]:
    """Pose samples at ``fps``, always including the exact final pose."""
    if fps <= 0:
        raise ValueError("fps must be positive")
    _, dts = traj.to_arrays()
    duration = float(np.sum(dts)) if len(dts) else 0.0
    n_grid = int(math.floor(duration * fps + 1e-9)) + 1
    times = [k / fps for k in range(n_grid)]
    if times[-1] < duration - 1e-12:
        times.append(duration)
    frames = []
    for t in times:
        x, y, phi = pose_at(traj, t)
        frames.append(Frame(t=t, x=x, y=y, phi=phi))
    return frames


def frames_to_json_dict(frames: Sequence[Frame],
                        fps: float = DEFAULT_FPS) -> dict:
    return {
        "fps": fps,
        "duration": frames[-1].t if frames else 0.0,
        "frames": [{"t": f.t, "x": f.x, "y": f.y, "phi": f.phi}
                   for f in frames],
    }


def trajectory_to_json_dict(traj: Trajectory) -> dict:
    w, dts = traj.to_arrays()
    return {"waypoints": w.tolist(), "dts": dts.tolist()}


def trajectory_from_json_dict(payload: Mapping) -> Trajectory:
    try:
        w = np.asarray(payload["waypoints"], dtype=float)
        dts = np.asarray(payload["dts"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed trajectory payload: {exc}") from exc
    return Trajectory.from_arrays(w, dts)
