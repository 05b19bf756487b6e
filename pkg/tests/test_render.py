"""Tests for playback-frame rendering: knot exactness, a hand-computed
Hermite midpoint, linear-motion reproduction, frame-grid shape, heading
wrap behavior, and the JSON codecs."""

import cmath
import json
import math

import numpy as np
import pytest

from emovac.render import (
    DEFAULT_FPS,
    Frame,
    frames_to_json_dict,
    pose_at,
    render_frames,
    trajectory_from_json_dict,
    trajectory_to_json_dict,
)
from emovac.sim import RobotState, Trajectory


def seg(p0, v0, p1, v1, dt):
    """Single-segment trajectory moving only along x."""
    return Trajectory(
        waypoints=(RobotState(x=p0, y=1.0, phi=0.0, vx=v0, vy=0.0, vphi=0.0),
                   RobotState(x=p1, y=1.0, phi=0.0, vx=v1, vy=0.0, vphi=0.0)),
        dts=(dt,))


def line(duration=2.0, n=5, speed=1.5):
    states = []
    dt = duration / (n - 1)
    for i in range(n):
        states.append(RobotState(x=speed * i * dt, y=1.0, phi=0.5,
                                 vx=speed, vy=0.0, vphi=0.0))
    return Trajectory(waypoints=tuple(states), dts=(dt,) * (n - 1))


def test_pose_at_reproduces_waypoints_exactly():
    traj = line()
    _, dts = traj.to_arrays()
    knots = np.concatenate([[0.0], np.cumsum(dts)])
    for t, state in zip(knots, traj.waypoints):
        x, y, phi = pose_at(traj, float(t))
        assert x == pytest.approx(state.x, abs=1e-12)
        assert y == pytest.approx(state.y, abs=1e-12)
        assert phi == pytest.approx(state.phi, abs=1e-12)


def test_hermite_midpoint_hand_values():
    # Hermite basis at s=1/2: h00=h01=1/2, h10=1/8, h11=-1/8.  For p0=0,
    # p1=1, dt=0.5: resting ends give 0.5; adding v0=1 adds dt*v0/8 = 1/16.
    x, _, _ = pose_at(seg(0.0, 0.0, 1.0, 0.0, 0.5), 0.25)
    assert x == pytest.approx(0.5, abs=1e-12)
    x, _, _ = pose_at(seg(0.0, 1.0, 1.0, 0.0, 0.5), 0.25)
    assert x == pytest.approx(0.5625, abs=1e-12)


def test_constant_velocity_interpolates_linearly():
    traj = line(duration=3.0, n=7, speed=0.8)
    for t in np.linspace(0.0, 3.0, 40):
        x, y, phi = pose_at(traj, float(t))
        assert x == pytest.approx(0.8 * t, abs=1e-12)
        assert y == 1.0
        assert phi == pytest.approx(0.5, abs=1e-12)


def test_pose_at_rejects_out_of_range_times():
    traj = line()
    with pytest.raises(ValueError):
        pose_at(traj, -0.1)
    with pytest.raises(ValueError):
        pose_at(traj, 2.5)


def test_heading_takes_the_short_way_round():
    a = RobotState(x=0.0, y=1.0, phi=3.0, vx=0.0, vy=0.0, vphi=0.0)
    b = RobotState(x=0.0, y=1.0, phi=-3.0, vx=0.0, vy=0.0, vphi=0.0)
    traj = Trajectory(waypoints=(a, b), dts=(0.5,))
    _, _, phi = pose_at(traj, 0.25)
    # Midway between 3.0 and -3.0 through +/-pi is the wrap point itself.
    assert abs(cmath.exp(1j * phi) - cmath.exp(1j * math.pi)) < 1e-9


def test_render_frames_grid_and_endpoints():
    traj = line(duration=2.0)
    frames = render_frames(traj, fps=30.0)
    assert len(frames) == 61  # 2.0s * 30 fps + the t=0 frame
    assert frames[0].t == 0.0
    assert frames[-1].t == pytest.approx(2.0)
    assert frames[-1].x == pytest.approx(traj.waypoints[-1].x, abs=1e-9)
    deltas = np.diff([f.t for f in frames])
    assert np.allclose(deltas, 1 / 30.0, atol=1e-9)


def test_render_frames_appends_offgrid_final_pose():
    traj = line(duration=1.05)
    frames = render_frames(traj, fps=2.0)
    assert [round(f.t, 3) for f in frames] == [0.0, 0.5, 1.0, 1.05]
    assert frames[-1].x == pytest.approx(traj.waypoints[-1].x, abs=1e-9)


def test_render_frames_validation():
    with pytest.raises(ValueError):
        render_frames(line(), fps=0.0)


def test_frames_json_payload_shape():
    frames = render_frames(line(), fps=10.0)
    payload = frames_to_json_dict(frames, fps=10.0)
    assert payload["fps"] == 10.0
    assert payload["duration"] == pytest.approx(2.0)
    assert len(payload["frames"]) == len(frames)
    assert set(payload["frames"][0]) == {"t", "x", "y", "phi"}
    json.dumps(payload)  # serializable


def test_trajectory_json_roundtrip():
    traj = line(duration=2.0, n=8)
    payload = trajectory_to_json_dict(traj)
    back = trajectory_from_json_dict(json.loads(json.dumps(payload)))
    w0, d0 = traj.to_arrays()
    w1, d1 = back.to_arrays()
    assert np.array_equal(w0, w1)
    assert np.array_equal(d0, d1)


def test_trajectory_json_rejects_malformed_payloads():
    with pytest.raises(ValueError):
        trajectory_from_json_dict({"waypoints": [[1, 2], [3]], "dts": [0.1]})
    with pytest.raises(ValueError):
        trajectory_from_json_dict({"dts": [0.1]})


def test_default_fps_is_30():
    assert DEFAULT_FPS == 30.0
    frame = Frame(t=0.0, x=1.0, y=2.0, phi=0.0)
    assert frame.t == 0.0
