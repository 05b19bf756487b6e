"""Tests for the trajectory optimizer: objective values against hand
arithmetic, gradients against finite differences, and the optimizer's
determinism, pinning, bounds, and goal-reaching behavior."""

import numpy as np
import pytest

from emovac.sim import (
    DT_MAX,
    DT_MIN,
    DynamicsParams,
    RobotState,
    Task,
    Trajectory,
    sample_task,
)
from emovac.stylenet import init_params, style_cost
from emovac.trajopt import (
    CostConfig,
    OptimizerConfig,
    ScalarStyleTerm,
    VadStyleTerm,
    base_cost,
    base_cost_grad_arrays,
    optimize,
    optimize_batch,
    total_cost,
)
from emovac.vadspace import Vad

from .oracles import fd_gradient, random_trajectory_arrays, relative_error

PARAMS = DynamicsParams()
FAST = OptimizerConfig(iters=150, restarts=2)


def quick_task(seed=0):
    return sample_task(seed)


# ---------------------------------------------------------------------------
# Objective values and gradients


def test_base_cost_matches_hand_arithmetic():
    # Stationary robot, dust 2 m away: only the goal and time terms can be
    # nonzero, and both are simple closed-form numbers.
    start = RobotState.at_rest(1.0)
    traj = Trajectory(
        waypoints=(start, start, start),
        dts=(0.25, 0.25),
    )
    task = Task(start=start, dust=(3.0, 0.0))
    cfg = CostConfig(w_goal=50.0, w_effort=0.1, w_time=0.2, w_dyn=10.0)
    expected = 50.0 * (2.0**2) + 0.2 * 0.5
    assert abs(base_cost(traj, task, cfg, PARAMS) - expected) < 1e-12


def test_effort_term_matches_hand_arithmetic():
    # One segment, velocity change (1, 0, 0) over dt=0.5 with zero dynamics
    # and goal weight: effort = w_e * |dv/dt|^2 * dt = w_e * 4 * 0.5.
    w = np.zeros((2, 6))
    w[1, 0] = 1.0
    w[1, 3] = 1.0
    dts = np.array([0.5])
    cfg = CostConfig(w_goal=0.0, w_effort=0.1, w_time=0.0, w_dyn=0.0)
    c, _, _ = base_cost_grad_arrays(w, dts, np.zeros(2), cfg, PARAMS)
    assert abs(float(c) - 0.1 * 4.0 * 0.5) < 1e-12


def test_base_cost_gradient_matches_finite_differences():
    rng = np.random.default_rng(21)
    cfg = CostConfig()
    dust = np.array([2.5, 0.3])
    for _ in range(5):
        w, dts = random_trajectory_arrays(rng, n_waypoints=6)
        z0 = np.concatenate([w.ravel(), dts])

        def f(z):
            wz = z[: w.size].reshape(w.shape)
            c, _, _ = base_cost_grad_arrays(wz, z[w.size :], dust, cfg, PARAMS)
            return float(c)

        _, dw, ddts = base_cost_grad_arrays(w, dts, dust, cfg, PARAMS)
        analytic = np.concatenate([dw.ravel(), ddts])
        numeric = fd_gradient(f, z0)
        assert relative_error(numeric, analytic) < 1e-5


def test_total_cost_is_base_plus_alpha_times_style():
    rng = np.random.default_rng(22)
    w, dts = random_trajectory_arrays(rng, n_waypoints=8)
    traj = Trajectory.from_arrays(w, dts)
    task = Task(start=traj.waypoints[0], dust=(4.0, 0.0))
    net = init_params(3, hidden=8, hidden2=4)
    target = Vad(0.3, -0.2, 0.6)
    for alpha in (0.0, 1.0, 5.0):
        cfg = CostConfig(alpha=alpha)
        lhs = total_cost(traj, task, net, target, cfg, PARAMS)
        rhs = base_cost(traj, task, cfg, PARAMS) + alpha * style_cost(
            net, traj, target
        )
        assert abs(lhs - rhs) < 1e-12


def test_batched_cost_rows_match_single_rows():
    rng = np.random.default_rng(23)
    cfg = CostConfig()
    ws = np.stack([random_trajectory_arrays(rng, 5)[0] for _ in range(3)])
    dts = rng.uniform(0.05, 0.4, (3, 4))
    dust = rng.uniform(0.0, 5.0, (3, 2))
    c, dw, ddts = base_cost_grad_arrays(ws, dts, dust, cfg, PARAMS)
    for i in range(3):
        ci, dwi, ddtsi = base_cost_grad_arrays(ws[i], dts[i], dust[i], cfg, PARAMS)
        np.testing.assert_allclose(c[i], ci, rtol=1e-14)
        np.testing.assert_allclose(dw[i], dwi, rtol=0, atol=1e-12)
        np.testing.assert_allclose(ddts[i], ddtsi, rtol=0, atol=1e-12)


# ---------------------------------------------------------------------------
# Optimizer behavior


def test_optimizer_reaches_the_dust():
    tasks = [quick_task(seed) for seed in range(10)]
    result = optimize_batch(tasks, None, CostConfig(alpha=0.0), FAST, seed=0)
    assert int(result.completed.sum()) >= 9
    for traj, task in zip(result.trajectories, tasks):
        gap = np.hypot(
            traj.waypoints[-1].x - task.dust[0],
            traj.waypoints[-1].y - task.dust[1],
        )
        assert (gap <= task.goal_tolerance) == bool(
            result.completed[tasks.index(task)]
        )


def test_best_so_far_objective_never_increases():
    tasks = [quick_task(3), quick_task(4)]
    result = optimize_batch(tasks, None, CostConfig(alpha=0.0), FAST, seed=1)
    diffs = np.diff(result.history, axis=0)
    assert np.all(diffs <= 1e-12)


def test_optimizer_is_bit_deterministic():
    task = quick_task(5)
    a = optimize(task, None, CostConfig(alpha=0.0), FAST, seed=7)
    b = optimize(task, None, CostConfig(alpha=0.0), FAST, seed=7)
    wa, da = a.to_arrays()
    wb, db = b.to_arrays()
    np.testing.assert_array_equal(wa, wb)
    np.testing.assert_array_equal(da, db)


def test_single_task_equals_batch_of_one():
    task = quick_task(6)
    single = optimize(task, None, CostConfig(alpha=0.0), FAST, seed=9)
    batch = optimize_batch([task], None, CostConfig(alpha=0.0), FAST, seed=9)
    ws, ds = single.to_arrays()
    wb, db = batch.trajectories[0].to_arrays()
    np.testing.assert_array_equal(ws, wb)
    np.testing.assert_array_equal(ds, db)


def test_first_waypoint_stays_pinned_and_heights_stay_above_ground():
    for seed in (11, 12):
        task = quick_task(seed)
        traj = optimize(task, None, CostConfig(alpha=0.0), FAST, seed=seed)
        first = traj.waypoints[0]
        for f in ("x", "y", "phi", "vx", "vy", "vphi"):
            assert getattr(first, f) == getattr(task.start, f)
        assert all(s.y >= 0.0 for s in traj.waypoints)
        assert traj.length == FAST.n_waypoints


def test_durations_respect_bounds():
    task = quick_task(13)
    traj = optimize(task, None, CostConfig(alpha=0.0), FAST, seed=13)
    dts = np.asarray(traj.dts)
    assert np.all(dts >= DT_MIN - 1e-12)
    assert np.all(dts <= DT_MAX + 1e-12)


def test_style_term_pulls_prediction_toward_target():
    # Even with an untrained network, weighting its predicted-VAD distance
    # into the objective must trade some task cost for style proximity.
    net = init_params(14, hidden=8, hidden2=4)
    target = Vad(0.5, 0.5, 0.5)
    task = quick_task(15)
    plain = optimize(task, None, CostConfig(alpha=0.0), FAST, seed=2)
    styled = optimize(
        task,
        VadStyleTerm(net, target.as_array()),
        CostConfig(alpha=5.0),
        FAST,
        seed=2,
    )
    assert style_cost(net, styled, target) < style_cost(net, plain, target)


def test_scalar_style_term_lowers_model_cost():
    net = init_params(16, hidden=8, hidden2=4, head="softplus")
    from emovac.stylenet import forward_arrays, trajectory_features

    task = quick_task(17)
    plain = optimize(task, None, CostConfig(alpha=0.0), FAST, seed=3)
    shaped = optimize(task, ScalarStyleTerm(net), CostConfig(alpha=5.0), FAST,
                      seed=3)

    def model_cost(traj):
        return float(forward_arrays(net, trajectory_features(traj))[0])

    assert model_cost(shaped) <= model_cost(plain) + 1e-9


def test_per_row_models_differ_in_batch():
    from emovac.stylenet import stack_weights

    nets = [init_params(s, hidden=8, hidden2=4, head="softplus") for s in (20, 21)]
    stacked = stack_weights(nets)
    task = quick_task(18)
    result = optimize_batch(
        [task, task],
        ScalarStyleTerm(nets[0], weights=stacked),
        CostConfig(alpha=5.0),
        FAST,
        seed=4,
    )
    wa, _ = result.trajectories[0].to_arrays()
    wb, _ = result.trajectories[1].to_arrays()
    assert not np.array_equal(wa, wb)


def test_config_validation():
    with pytest.raises(ValueError):
        CostConfig(w_goal=-1.0)
    with pytest.raises(ValueError):
        OptimizerConfig(iters=0)
    with pytest.raises(ValueError):
        optimize_batch([], None, CostConfig(), FAST, seed=0)


def test_feasible_arc_landing_on_dust_has_negligible_goal_and_dyn_cost():
    # Oracle: closed-form projectile flight ending exactly on the dust; the
    # goal and dynamics terms must both be (near) zero there.
    from emovac.sim import ballistic_arc

    traj = ballistic_arc(start_x=1.0, start_y=1.5, vx=1.2, vy=1.0,
                         gravity=PARAMS.gravity, total_time=0.4,
                         n_waypoints=9)
    end = traj.waypoints[-1]
    task = Task(start=traj.waypoints[0], dust=(end.x, end.y))
    goal_term = base_cost(traj, task, CostConfig(
        w_goal=1.0, w_effort=0.0, w_time=0.0, w_dyn=0.0))
    dyn_term = base_cost(traj, task, CostConfig(
        w_goal=0.0, w_effort=0.0, w_time=0.0, w_dyn=1.0))
    assert goal_term < 1e-6
    assert dyn_term < 1e-6


def test_all_restarts_diverging_raises_with_diagnostics():
    from emovac.trajopt import OptimizationDiverged

    class PoisonTerm:
        def cost_and_grad(self, w, dts):
            c = np.full(w.shape[:-2], np.nan)
            return c, np.zeros_like(w), np.zeros_like(dts)

    tasks = [quick_task(1), quick_task(2)]
    with pytest.raises(OptimizationDiverged) as exc:
        optimize_batch(tasks, PoisonTerm(), CostConfig(alpha=1.0),
                       OptimizerConfig(iters=3, restarts=2), seed=0)
    assert exc.value.task_indices == (0, 1)
    assert not np.any(np.isfinite(exc.value.best_costs))


def test_trained_net_plans_distinguishable_opposite_styles():
    # Fit the discriminator to the built-in rater on random motions, then
    # plan the same task toward two opposite targets: each plan's predicted
    # point must be strictly closer to its own target.
    from emovac.sim_human import sh_label
    from emovac.stylenet import LabeledDataset, TrainConfig, forward, train
    from emovac.vadspace import default_lexicon, eval_emotion_set

    rng = np.random.default_rng(77)
    data = LabeledDataset()
    for k in range(40):
        # Alternate drooping low-and-slow motions with upright fast ones so
        # the rater's labels span the sad and joyful corners of the space.
        gentle = k % 2 == 0
        w, dts = random_trajectory_arrays(rng, n_waypoints=8,
                                          scale=0.12 if gentle else 1.2)
        w[:, 1] = np.abs(w[:, 1]) * (0.2 if gentle else 1.0)
        if gentle:
            w[:, 2] = np.pi + 0.3 * w[:, 2]
            dts = np.full_like(dts, 0.45)
        else:
            w[:, 2] = 0.3 * w[:, 2]
        traj = Trajectory.from_arrays(w, dts)
        data.append(traj, sh_label(traj), round_index=0)
    params = init_params(3, hidden=16, hidden2=8, l1_weight=0.0)
    params = train(params, data, TrainConfig(epochs=500))

    es = eval_emotion_set(default_lexicon(), 2)
    sad, joy = es.anchor("sadness"), es.anchor("joy")
    task = quick_task(9)
    plans = {}
    for name, target in (("sadness", sad), ("joy", joy)):
        traj = optimize(task, VadStyleTerm(params, target.as_array()),
                        CostConfig(alpha=200.0),
                        OptimizerConfig(iters=600, restarts=4), seed=12)
        plans[name] = forward(params, traj).as_array()
    for name, own, other in (("sadness", sad, joy), ("joy", joy, sad)):
        d_own = np.linalg.norm(plans[name] - own.as_array())
        d_other = np.linalg.norm(plans[name] - other.as_array())
        assert d_own < d_other, (name, d_own, d_other)
