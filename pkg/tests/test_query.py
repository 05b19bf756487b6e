"""Tests for round-sample selection: coverage objective against a brute-force
oracle, k-means behavior with frozen centers, and round assembly."""

import numpy as np
import pytest

from emovac.query import (
    QueryRoundState,
    _em_run,
    build_round,
    coverage_objective,
    first_round_samples,
    select_samples,
)
from emovac.stylenet import init_params
from emovac.trajopt import CostConfig, OptimizerConfig
from emovac.vadspace import EmotionLexicon, Vad, default_lexicon


def tiny_lexicon(points):
    words = tuple(f"w{i}" for i in range(len(points)))
    return EmotionLexicon(words=words, points=np.asarray(points, dtype=float))


# ---------------------------------------------------------------------------
# first_round_samples


def test_first_round_samples_uniform_and_deterministic():
    a = first_round_samples(5, rng_seed=3)
    b = first_round_samples(5, rng_seed=3)
    assert [s.as_tuple() for s in a] == [s.as_tuple() for s in b]
    big = np.stack([s.as_array() for s in first_round_samples(10_000, 0)])
    assert np.all(np.abs(big) <= 1.0)
    assert np.all(np.abs(big.mean(axis=0)) < 0.05)
    with pytest.raises(ValueError):
        first_round_samples(0, rng_seed=0)


# ---------------------------------------------------------------------------
# coverage_objective


def test_coverage_objective_matches_brute_force():
    rng = np.random.default_rng(30)
    lex = tiny_lexicon(rng.uniform(-1, 1, (40, 3)))
    cands = [Vad.from_array(p) for p in rng.uniform(-1, 1, (3, 3))]
    priors = [Vad.from_array(p) for p in rng.uniform(-1, 1, (2, 3))]

    # Independent oracle: explicit double loop over entries and points.
    pool = [c.as_array() for c in cands] + [p.as_array() for p in priors]
    expected = 0.0
    for e in lex.points:
        expected += min(float(np.sum((e - p) ** 2)) for p in pool)

    assert abs(coverage_objective(cands, priors, lex) - expected) < 1e-12


def test_coverage_objective_zero_on_exact_cover():
    lex = tiny_lexicon([[0.1, 0.2, 0.3], [-0.5, 0.0, 0.9]])
    cands = [Vad(0.1, 0.2, 0.3), Vad(-0.5, 0.0, 0.9)]
    assert coverage_objective(cands, [], lex) == 0.0


def test_coverage_objective_monotone_in_set_inclusion():
    rng = np.random.default_rng(31)
    lex = tiny_lexicon(rng.uniform(-1, 1, (25, 3)))
    cands = [Vad.from_array(p) for p in rng.uniform(-1, 1, (2, 3))]
    base = coverage_objective(cands, [], lex)
    for _ in range(5):
        extra = cands + [Vad.from_array(rng.uniform(-1, 1, 3))]
        assert coverage_objective(extra, [], lex) <= base + 1e-12


def test_single_candidate_optimum_is_the_mean():
    rng = np.random.default_rng(32)
    pts = rng.uniform(-0.9, 0.9, (30, 3))
    lex = tiny_lexicon(pts)
    mean = Vad.from_array(pts.mean(axis=0))
    at_mean = coverage_objective([mean], [], lex)
    for _ in range(10):
        other = Vad.from_array(rng.uniform(-1, 1, 3))
        assert at_mean <= coverage_objective([other], [], lex) + 1e-12


def test_empty_pool_rejected():
    lex = tiny_lexicon([[0.0, 0.0, 0.0]])
    with pytest.raises(ValueError):
        coverage_objective([], [], lex)


# ---------------------------------------------------------------------------
# select_samples / EM


def test_two_point_lexicon_is_covered_exactly():
    lex = tiny_lexicon([[0.4, -0.2, 0.7], [-0.8, 0.1, -0.3]])
    out = select_samples(2, [], lex, rng_seed=0)
    got = sorted(tuple(s.as_tuple()) for s in out)
    want = sorted([(0.4, -0.2, 0.7), (-0.8, 0.1, -0.3)])
    np.testing.assert_allclose(got, want, atol=1e-12)
    assert coverage_objective(out, [], lex) < 1e-20


def test_priors_covering_everything_make_objective_zero():
    pts = [[0.3, 0.3, 0.3], [-0.4, 0.5, -0.6], [0.9, -0.9, 0.0]]
    lex = tiny_lexicon(pts)
    priors = [Vad(*p) for p in pts]
    out = select_samples(1, priors, lex, rng_seed=1)
    assert coverage_objective(out, priors, lex) == 0.0


def test_em_objective_history_is_monotone_non_increasing():
    lex = default_lexicon()
    rng = np.random.default_rng(33)
    for trial in range(3):
        picks = rng.choice(lex.count, size=6, replace=False)
        frozen = rng.uniform(-1, 1, (4, 3))
        _, history = _em_run(lex.points[picks].copy(), frozen, lex.points)
        diffs = np.diff(history)
        assert np.all(diffs <= 1e-9), f"trial {trial}: {history}"


def test_frozen_centers_never_move():
    lex = default_lexicon()
    priors = [Vad(0.9, 0.9, 0.9), Vad(-0.9, -0.9, -0.9)]
    before = [p.as_tuple() for p in priors]
    select_samples(4, priors, lex, rng_seed=2)
    assert [p.as_tuple() for p in priors] == before


def test_selection_beats_uniform_random_in_paired_trials():
    lex = default_lexicon()
    wins = 0
    for trial in range(20):
        chosen = select_samples(20, [], lex, rng_seed=trial)
        random_pts = first_round_samples(20, rng_seed=10_000 + trial)
        if coverage_objective(chosen, [], lex) <= coverage_objective(
            random_pts, [], lex
        ):
            wins += 1
    assert wins == 20


def test_select_samples_outputs_stay_in_cube_and_deterministic():
    lex = default_lexicon()
    a = select_samples(7, [Vad(0.2, 0.2, 0.2)], lex, rng_seed=5)
    b = select_samples(7, [Vad(0.2, 0.2, 0.2)], lex, rng_seed=5)
    assert [x.as_tuple() for x in a] == [x.as_tuple() for x in b]
    for s in a:
        assert all(abs(c) <= 1.0 for c in s.as_tuple())


# ---------------------------------------------------------------------------
# build_round


FAST_OPT = OptimizerConfig(iters=60, restarts=1)


def test_round_one_uses_uniform_samples():
    lex = default_lexicon()
    model = init_params(0, hidden=8, hidden2=4)
    state = build_round(1, model, 3, [], lex, rng_seed=11,
                        cost=CostConfig(alpha=1.0), opt=FAST_OPT)
    assert state.round_index == 1
    assert len(state.samples) == len(state.queries) == 3
    # Uniform sampling matches first_round_samples with the spawned stream.
    root = np.random.SeedSequence(11)
    expected = first_round_samples(3, root.spawn(3)[0])
    assert [s.as_tuple() for s in state.samples] == [
        s.as_tuple() for s in expected
    ]


def test_later_rounds_improve_on_priors_alone():
    lex = default_lexicon()
    model = init_params(0, hidden=8, hidden2=4)
    priors = first_round_samples(5, rng_seed=40)
    state = build_round(2, model, 5, priors, lex, rng_seed=12,
                        cost=CostConfig(alpha=1.0), opt=FAST_OPT)
    joint = coverage_objective(list(state.samples), priors, lex)
    alone = coverage_objective([], priors, lex)
    assert joint <= alone


def test_round_state_round_trips_through_json(tmp_path):
    lex = default_lexicon()
    model = init_params(0, hidden=8, hidden2=4)
    state = build_round(1, model, 2, [], lex, rng_seed=13,
                        cost=CostConfig(alpha=1.0), opt=FAST_OPT)
    path = state.save(tmp_path)
    assert path.name == "round_1.json"
    loaded = QueryRoundState.load(path)
    assert loaded.round_index == state.round_index
    assert [s.as_tuple() for s in loaded.samples] == [
        s.as_tuple() for s in state.samples
    ]
    for a, b in zip(loaded.queries, state.queries):
        wa, da = a.to_arrays()
        wb, db = b.to_arrays()
        np.testing.assert_array_equal(wa, wb)
        np.testing.assert_array_equal(da, db)


def test_build_round_is_deterministic():
    lex = default_lexicon()
    model = init_params(0, hidden=8, hidden2=4)
    a = build_round(1, model, 2, [], lex, rng_seed=14,
                    cost=CostConfig(alpha=1.0), opt=FAST_OPT)
    b = build_round(1, model, 2, [], lex, rng_seed=14,
                    cost=CostConfig(alpha=1.0), opt=FAST_OPT)
    for qa, qb in zip(a.queries, b.queries):
        np.testing.assert_array_equal(qa.to_arrays()[0], qb.to_arrays()[0])
    with pytest.raises(ValueError):
        build_round(0, model, 2, [], lex, rng_seed=0)


def test_build_round_names_offending_samples_on_divergence(monkeypatch):
    import emovac.query as query_mod
    from emovac.query import QueryPlanningError, build_round
    from emovac.stylenet import init_params
    from emovac.trajopt import OptimizationDiverged

    def explode(*args, **kwargs):
        raise OptimizationDiverged([2], np.array([1.0, 2.0, np.inf]))

    monkeypatch.setattr(query_mod, "optimize_batch", explode)
    with pytest.raises(QueryPlanningError) as exc:
        build_round(1, init_params(0, hidden=6, hidden2=4), 3, [],
                    default_lexicon(), rng_seed=0)
    assert exc.value.round_index == 1
    assert exc.value.sample_indices == (2,)
    assert isinstance(exc.value.__cause__, OptimizationDiverged)
