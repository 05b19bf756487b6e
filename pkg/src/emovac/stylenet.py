"""The trajectory -> VAD style discriminator, written directly in numpy.

Architecture: each waypoint's feature vector passes through a one-hidden-layer
MLP (ELU); the per-waypoint hidden vectors are pooled into a fixed-size
embedding by concatenating an element-wise mean pool with an element-wise
softmax pool (for hidden unit j: sum_i h_ij * exp(beta*h_ij) / sum_k
exp(beta*h_kj)); a second one-hidden-layer MLP (ELU) maps the embedding to the
output, squashed by tanh into (-1, 1)^3 for VAD outputs or by softplus into
[0, inf) for the scalar-cost head used by the comparison baselines.

Both the forward pass and all gradients (w.r.t. parameters for training, and
w.r.t. waypoint coordinates and durations for trajectory optimization) are
hand-written and vectorized, batched over arbitrary leading dimensions, with
optional per-row stacked weights so a batch can mix different models.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Sequence

import numpy as np

from .sim import Trajectory
from .vadspace import Vad

FEATURE_ORDER = ("x", "y", "sin_phi", "cos_phi", "vx", "vy", "vphi", "dt_in")
IN_DIM = len(FEATURE_ORDER)
WEIGHT_KEYS = ("W1", "b1", "W2", "b2", "W3", "b3")
CHECKPOINT_FORMAT = 1


class TrainingDiverged(RuntimeError):
    """Raised when the training loss stops being finite."""


# ---------------------------------------------------------------------------
# Parameters


@dataclass(frozen=True)
class StyleNetParams:
    """Weights plus architecture metadata for one discriminator network."""

    weights: dict[str, np.ndarray]
    head: str = "tanh"  # "tanh" (VAD output) or "softplus" (scalar cost)
    softmax_beta: float = 1.0
    l1_weight: float = 1e-4

    def __post_init__(self) -> None:
        if self.head not in ("tanh", "softplus"):
            raise ValueError(f"unknown head {self.head!r}")
        if self.softmax_beta <= 0:
            raise ValueError("softmax_beta must be positive")
        if self.l1_weight < 0:
            raise ValueError("l1_weight must be nonnegative")
        missing = [k for k in WEIGHT_KEYS if k not in self.weights]
        if missing:
            raise ValueError(f"missing weight arrays: {missing}")
        w = self.weights
        if w["W1"].shape[0] != IN_DIM:
            raise ValueError("W1 must consume the frozen 8-feature input")
        if w["W2"].shape[0] != 2 * w["W1"].shape[1]:
            raise ValueError("W2 must consume the concatenated mean+softmax pools")
        if self.head == "tanh" and w["W3"].shape[1] != 3:
            raise ValueError("VAD head must have output width 3")
        if self.head == "softplus" and w["W3"].shape[1] != 1:
            raise ValueError("scalar head must have output width 1")
        for k in WEIGHT_KEYS:
            if not np.all(np.isfinite(w[k])):
                raise ValueError(f"non-finite entries in {k}")

    @property
    def hidden(self) -> int:
        return self.weights["W1"].shape[1]

    @property
    def hidden2(self) -> int:
        return self.weights["W2"].shape[1]

    @property
    def out_dim(self) -> int:
        return self.weights["W3"].shape[1]

    def with_weights(self, weights: dict[str, np.ndarray]) -> "StyleNetParams":
        return replace(self, weights=weights)

    def copy_weights(self) -> dict[str, np.ndarray]:
        return {k: v.copy() for k, v in self.weights.items()}


def init_params(rng_seed, hidden: int = 32, hidden2: int = 16,
                head: str = "tanh", softmax_beta: float = 1.0,
                l1_weight: float = 1e-4) -> StyleNetParams:
    """Glorot-uniform initialization, deterministic in the seed material."""
    rng = np.random.default_rng(rng_seed)
    out_dim = 3 if head == "tanh" else 1

    def glorot(n_in: int, n_out: int) -> np.ndarray:
        bound = np.sqrt(6.0 / (n_in + n_out))
        return rng.uniform(-bound, bound, (n_in, n_out))

    weights = {
        "W1": glorot(IN_DIM, hidden),
        "b1": np.zeros(hidden),
        "W2": glorot(2 * hidden, hidden2),
        "b2": np.zeros(hidden2),
        "W3": glorot(hidden2, out_dim),
        "b3": np.zeros(out_dim),
    }
    return StyleNetParams(weights=weights, head=head,
                          softmax_beta=softmax_beta, l1_weight=l1_weight)


def stack_weights(params_list: Sequence[StyleNetParams]) -> dict[str, np.ndarray]:
    """Stack same-shaped models along a leading axis for per-row batching."""
    first = params_list[0]
    for p in params_list[1:]:
        if (p.head != first.head or p.softmax_beta != first.softmax_beta):
            raise ValueError("cannot stack models with different heads or beta")
        for k in WEIGHT_KEYS:
            if p.weights[k].shape != first.weights[k].shape:
                raise ValueError("cannot stack models with different shapes")
    return {k: np.stack([p.weights[k] for p in params_list]) for k in WEIGHT_KEYS}


# ---------------------------------------------------------------------------
# Features


def features_from_arrays(w: np.ndarray, dts: np.ndarray) -> np.ndarray:
    """Per-waypoint features ``(..., T, 8)`` from raw trajectory arrays."""
    pad = np.zeros(dts.shape[:-1] + (1,))
    dt_in = np.concatenate([pad, dts], axis=-1)
    return np.stack(
        [w[..., 0], w[..., 1], np.sin(w[..., 2]), np.cos(w[..., 2]),
         w[..., 3], w[..., 4], w[..., 5], dt_in],
        axis=-1,
    )


def feature_grad_to_arrays(w: np.ndarray, dX: np.ndarray
                           ) -> tuple[np.ndarray, np.ndarray]:
    """Chain a feature-space gradient back to waypoint arrays and durations."""
    dw = np.zeros_like(w)
    dw[..., 0] = dX[..., 0]
    dw[..., 1] = dX[..., 1]
    dw[..., 2] = dX[..., 2] * np.cos(w[..., 2]) - dX[..., 3] * np.sin(w[..., 2])
    dw[..., 3] = dX[..., 4]
    dw[..., 4] = dX[..., 5]
    dw[..., 5] = dX[..., 6]
    ddts = dX[..., 1:, 7].copy()
    return dw, ddts


def trajectory_features(traj: Trajectory) -> np.ndarray:
    w, dts = traj.to_arrays()
    return features_from_arrays(w, dts)


# ---------------------------------------------------------------------------
# Core forward/backward


def _elu(z: np.ndarray) -> np.ndarray:
    return np.where(z > 0, z, np.expm1(np.minimum(z, 0.0)))


def _elu_grad(z: np.ndarray) -> np.ndarray:
    return np.where(z > 0, 1.0, np.exp(np.minimum(z, 0.0)))


def _net_forward(weights: dict[str, np.ndarray], X: np.ndarray, beta: float,
                 head: str, mask: np.ndarray | None = None):
    """Forward pass returning output and a cache for the backward passes.

    ``X`` is ``(..., T, 8)``.  Weight arrays may carry leading batch axes that
    broadcast against ``X``'s leading axes (per-row models).  ``mask`` is an
    optional ``(..., T)`` 0/1 array marking valid waypoints.
    """
    W1, b1 = weights["W1"], weights["b1"]
    W2, b2 = weights["W2"], weights["b2"]
    W3, b3 = weights["W3"], weights["b3"]

    Z1 = np.matmul(X, W1) + b1[..., None, :]
    H1 = _elu(Z1)

    if mask is None:
        count = X.shape[-2]
        mean_pool = H1.mean(axis=-2)
        logits = beta * H1
    else:
        m = mask[..., :, None]
        count = np.sum(mask, axis=-1)[..., None]
        mean_pool = np.sum(H1 * m, axis=-2) / count
        logits = np.where(m > 0, beta * H1, -np.inf)

    logits_max = np.max(logits, axis=-2, keepdims=True)
    expw = np.exp(logits - logits_max)
    attn = expw / np.sum(expw, axis=-2, keepdims=True)
    soft_pool = np.sum(H1 * attn, axis=-2)

    pooled = np.concatenate([mean_pool, soft_pool], axis=-1)
    Z2 = np.matmul(pooled[..., None, :], W2)[..., 0, :] + b2[..., :]
    H2 = _elu(Z2)
    Z3 = np.matmul(H2[..., None, :], W3)[..., 0, :] + b3[..., :]

    if head == "tanh":
        Y = np.tanh(Z3)
    else:
        Y = np.logaddexp(0.0, Z3)

    cache = dict(X=X, mask=mask, count=count, Z1=Z1, H1=H1, attn=attn,
                 soft_pool=soft_pool, pooled=pooled, Z2=Z2, H2=H2, Z3=Z3,
                 Y=Y, beta=beta, head=head, weights=weights)
    return Y, cache


def _head_grad(cache, dY: np.ndarray) -> np.ndarray:
    if cache["head"] == "tanh":
        return dY * (1.0 - cache["Y"] ** 2)
    return dY * 0.5 * (1.0 + np.tanh(0.5 * cache["Z3"]))


def _pool_backward(cache, d_pooled: np.ndarray) -> np.ndarray:
    """Gradient through both pooling branches back to the hidden vectors."""
    H1, attn, beta = cache["H1"], cache["attn"], cache["beta"]
    hidden = H1.shape[-1]
    d_mean = d_pooled[..., :hidden]
    d_soft = d_pooled[..., hidden:]

    if cache["mask"] is None:
        dH1 = np.zeros_like(H1) + d_mean[..., None, :] / cache["count"]
    else:
        m = cache["mask"][..., :, None]
        dH1 = d_mean[..., None, :] / cache["count"][..., None, :] * m

    s = cache["soft_pool"][..., None, :]
    dH1 = dH1 + d_soft[..., None, :] * attn * (1.0 + beta * (H1 - s))
    return dH1


def _net_backward_input(cache, dY: np.ndarray) -> np.ndarray:
    """Gradient of a scalar objective w.r.t. the input features."""
    W = cache["weights"]
    dZ3 = _head_grad(cache, dY)
    dH2 = np.matmul(dZ3[..., None, :], np.swapaxes(W["W3"], -1, -2))[..., 0, :]
    dZ2 = dH2 * _elu_grad(cache["Z2"])
    d_pooled = np.matmul(dZ2[..., None, :], np.swapaxes(W["W2"], -1, -2))[..., 0, :]
    dH1 = _pool_backward(cache, d_pooled)
    dZ1 = dH1 * _elu_grad(cache["Z1"])
    return np.matmul(dZ1, np.swapaxes(W["W1"], -1, -2))


def _net_backward_params(cache, dY: np.ndarray) -> dict[str, np.ndarray]:
    """Gradient of a scalar objective w.r.t. unstacked weights.

    Sums over every leading batch axis, so the objective must be a plain sum
    over the batch.
    """
    W = cache["weights"]
    if W["W1"].ndim != 2:
        raise ValueError("parameter gradients need unstacked weights")
    X = cache["X"]

    def flat(a: np.ndarray) -> np.ndarray:
        return a.reshape(-1, a.shape[-1])

    dZ3 = _head_grad(cache, dY)
    dW3 = flat(cache["H2"]).T @ flat(dZ3)
    db3 = flat(dZ3).sum(axis=0)

    dH2 = np.matmul(dZ3[..., None, :], W["W3"].T)[..., 0, :]
    dZ2 = dH2 * _elu_grad(cache["Z2"])
    dW2 = flat(cache["pooled"]).T @ flat(dZ2)
    db2 = flat(dZ2).sum(axis=0)

    d_pooled = np.matmul(dZ2[..., None, :], W["W2"].T)[..., 0, :]
    dH1 = _pool_backward(cache, d_pooled)
    dZ1 = dH1 * _elu_grad(cache["Z1"])
    dW1 = flat(X).T @ flat(dZ1)
    db1 = flat(dZ1).sum(axis=0)
    return {"W1": dW1, "b1": db1, "W2": dW2, "b2": db2, "W3": dW3, "b3": db3}


# ---------------------------------------------------------------------------
# Public operations


def forward_arrays(params: StyleNetParams, X: np.ndarray,
                   mask: np.ndarray | None = None,
                   weights: dict[str, np.ndarray] | None = None) -> np.ndarray:
    w = params.weights if weights is None else weights
    Y, _ = _net_forward(w, X, params.softmax_beta, params.head, mask)
    return Y


def forward(params: StyleNetParams, traj: Trajectory) -> Vad:
    """Predicted VAD for one trajectory."""
    if params.head != "tanh":
        raise ValueError("VAD prediction needs the tanh head")
    y = forward_arrays(params, trajectory_features(traj))
    return Vad.from_array(y)


def style_cost(params: StyleNetParams, traj: Trajectory, target: Vad) -> float:
    """Squared Euclidean distance between the prediction and the target."""
    y = forward_arrays(params, trajectory_features(traj))
    delta = y - target.as_array()
    return float(np.sum(delta * delta))


def style_cost_grad_arrays(
    params: StyleNetParams,
    w: np.ndarray,
    dts: np.ndarray,
    targets: np.ndarray,
    weights: dict[str, np.ndarray] | None = None,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Batched style cost with gradients w.r.t. waypoints and durations.

    ``w`` ``(..., T, 6)``, ``dts`` ``(..., T-1)``, ``targets`` ``(..., 3)``.
    ``weights`` may carry leading batch axes (stacked per-row models).
    """
    wts = params.weights if weights is None else weights
    X = features_from_arrays(w, dts)
    Y, cache = _net_forward(wts, X, params.softmax_beta, params.head, None)
    delta = Y - targets
    cost = np.sum(delta * delta, axis=-1)
    dX = _net_backward_input(cache, 2.0 * delta)
    dw, ddts = feature_grad_to_arrays(w, dX)
    return cost, dw, ddts


def grad_traj(params: StyleNetParams, traj: Trajectory, target: Vad
              ) -> tuple[np.ndarray, np.ndarray]:
    """Gradient of :func:`style_cost` w.r.t. waypoint coordinates and durations."""
    w, dts = traj.to_arrays()
    _, dw, ddts = style_cost_grad_arrays(params, w, dts, target.as_array())
    return dw, ddts


def scalar_output_grad_arrays(
    params: StyleNetParams,
    w: np.ndarray,
    dts: np.ndarray,
    weights: dict[str, np.ndarray] | None = None,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Batched scalar-head output with input gradients (cost-model networks)."""
    if params.head != "softplus":
        raise ValueError("raw scalar output needs the softplus head")
    wts = params.weights if weights is None else weights
    X = features_from_arrays(w, dts)
    Y, cache = _net_forward(wts, X, params.softmax_beta, params.head, None)
    dX = _net_backward_input(cache, np.ones_like(Y))
    dw, ddts = feature_grad_to_arrays(w, dX)
    return Y[..., 0], dw, ddts


# ---------------------------------------------------------------------------
# Datasets and training


@dataclass
class LabeledDataset:
    """Trajectory/label pairs accumulated over labeling rounds."""

    pairs: list[tuple[Trajectory, Vad]] = field(default_factory=list)
    round_index: list[int] = field(default_factory=list)

    def append(self, traj: Trajectory, label: Vad, round_index: int) -> None:
        self.pairs.append((traj, label))
        self.round_index.append(round_index)

    def __len__(self) -> int:
        return len(self.pairs)

    def label_matrix(self) -> np.ndarray:
        return np.stack([label.as_array() for _, label in self.pairs])

    def padded_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Feature tensor ``(P, T_max, 8)`` plus a 0/1 validity mask."""
        feats = [trajectory_features(t) for t, _ in self.pairs]
        t_max = max(f.shape[0] for f in feats)
        X = np.zeros((len(feats), t_max, IN_DIM))
        mask = np.zeros((len(feats), t_max))
        for i, f in enumerate(feats):
            X[i, : f.shape[0]] = f
            mask[i, : f.shape[0]] = 1.0
        return X, mask


@dataclass(frozen=True, slots=True)
class TrainConfig:
    """Full-batch adaptive-moment descent schedule."""

    epochs: int = 2000
    step: float = 1e-2
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8

    def __post_init__(self) -> None:
        if self.epochs < 1 or self.step <= 0:
            raise ValueError("need epochs >= 1 and a positive step size")


def l1_penalty(params: StyleNetParams, weights=None) -> float:
    w = params.weights if weights is None else weights
    return params.l1_weight * float(
        sum(np.sum(np.abs(w[k])) for k in ("W1", "W2", "W3"))
    )


def mean_abs_weight(params: StyleNetParams) -> float:
    w = params.weights
    total = sum(np.sum(np.abs(w[k])) for k in ("W1", "W2", "W3"))
    count = sum(w[k].size for k in ("W1", "W2", "W3"))
    return float(total / count)


def dataset_loss_arrays(params: StyleNetParams, X: np.ndarray, mask: np.ndarray,
                        labels: np.ndarray, weights=None) -> float:
    """Sum of squared prediction errors plus the L1 penalty."""
    w = params.weights if weights is None else weights
    Y, _ = _net_forward(w, X, params.softmax_beta, params.head, mask)
    delta = Y - labels
    return float(np.sum(delta * delta)) + l1_penalty(params, w)


def loss(params: StyleNetParams, data: LabeledDataset) -> float:
    """Training loss: per-pair squared errors summed, plus L1 regularization."""
    if len(data) == 0:
        return l1_penalty(params)
    X, mask = data.padded_arrays()
    return dataset_loss_arrays(params, X, mask, data.label_matrix())


def train_arrays(params: StyleNetParams, X: np.ndarray, mask: np.ndarray,
                 labels: np.ndarray, schedule: TrainConfig) -> StyleNetParams:
    """Core trainer over prepared arrays; returns the best-loss parameters."""
    weights = params.copy_weights()
    m = {k: np.zeros_like(v) for k, v in weights.items()}
    v = {k: np.zeros_like(w) for k, w in weights.items()}
    reg_keys = ("W1", "W2", "W3")

    best_loss = dataset_loss_arrays(params, X, mask, labels, weights)
    best = {k: w.copy() for k, w in weights.items()}

    for epoch in range(1, schedule.epochs + 1):
        Y, cache = _net_forward(weights, X, params.softmax_beta, params.head, mask)
        delta = Y - labels
        grads = _net_backward_params(cache, 2.0 * delta)
        if params.l1_weight > 0:
            for k in reg_keys:
                grads[k] = grads[k] + params.l1_weight * np.sign(weights[k])

        t = epoch
        for k in weights:
            g = grads[k]
            m[k] = schedule.beta1 * m[k] + (1 - schedule.beta1) * g
            v[k] = schedule.beta2 * v[k] + (1 - schedule.beta2) * g * g
            m_hat = m[k] / (1 - schedule.beta1**t)
            v_hat = v[k] / (1 - schedule.beta2**t)
            weights[k] = weights[k] - schedule.step * m_hat / (np.sqrt(v_hat) + schedule.eps)

        cur = dataset_loss_arrays(params, X, mask, labels, weights)
        if not np.isfinite(cur):
            raise TrainingDiverged(f"non-finite loss at epoch {epoch}")
        if cur < best_loss:
            best_loss = cur
            best = {k: w.copy() for k, w in weights.items()}

    return params.with_weights(best)


def train(params: StyleNetParams, data: LabeledDataset,
          schedule: TrainConfig = TrainConfig(), rng_seed=0) -> StyleNetParams:
    """Full-batch training; never returns parameters worse than the input.

    ``rng_seed`` is accepted for interface stability but the full-batch
    procedure is already deterministic.
    """
    if len(data) == 0:
        raise ValueError("training needs a non-empty dataset")
    X, mask = data.padded_arrays()
    return train_arrays(params, X, mask, data.label_matrix(), schedule)


# ---------------------------------------------------------------------------
# Checkpoints


def params_to_json_dict(params: StyleNetParams) -> dict:
    return {
        "format_version": CHECKPOINT_FORMAT,
        "head": params.head,
        "softmax_beta": params.softmax_beta,
        "l1_weight": params.l1_weight,
        "in_dim": IN_DIM,
        "hidden": params.hidden,
        "hidden2": params.hidden2,
        "out_dim": params.out_dim,
        "weights": {k: params.weights[k].tolist() for k in WEIGHT_KEYS},
    }


def params_from_json_dict(payload: dict) -> StyleNetParams:
    if payload.get("format_version") != CHECKPOINT_FORMAT:
        raise ValueError("unsupported checkpoint format")
    weights = {k: np.asarray(payload["weights"][k], dtype=float)
               for k in WEIGHT_KEYS}
    return StyleNetParams(
        weights=weights,
        head=payload["head"],
        softmax_beta=float(payload["softmax_beta"]),
        l1_weight=float(payload["l1_weight"]),
    )


def save_checkpoint(params: StyleNetParams, path: str | Path,
                    extra: dict | None = None) -> None:
    payload = params_to_json_dict(params)
    if extra:
        payload.update(extra)
    Path(path).write_text(json.dumps(payload), encoding="utf-8")


def load_checkpoint(path: str | Path) -> StyleNetParams:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    try:
        return params_from_json_dict(payload)
    except ValueError as exc:
        raise ValueError(f"{exc} in {path}") from exc
