"""Command-line entry points: experiments, sessions, serving, utilities.

Exit codes: 0 success, 1 runtime failure (diagnostic on stderr), 2 usage
errors (argparse). All outputs are deterministic given the config seeds.
"""

from __future__ import annotations

import argparse
import json
import sys
import uuid
from pathlib import Path

from .evaluation import (
    load_config,
    load_metrics_csv,
    run_experiment_to_dir,
)
from .lang import phrase_to_vad
from .render import DEFAULT_FPS, frames_to_json_dict, render_frames
from .sessions import Session, session_config
from .sim import Trajectory

__all__ = ["main", "build_parser"]

DEFAULT_DATA_DIR = "./emovac-data"
DEFAULT_RESULTS_DIR = "results"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="emovac",
        description="Emotive-style learning for a simulated vacuum robot.")
    sub = parser.add_subparsers(dest="command", required=True)

    experiment = sub.add_parser("experiment",
                                help="batch experiments with a simulated rater")
    exp_sub = experiment.add_subparsers(dest="subcommand", required=True)
    run = exp_sub.add_parser("run", help="run one declarative config")
    run.add_argument("config", help="path to a JSON experiment config")
    run.add_argument("--results-dir", default=DEFAULT_RESULTS_DIR)
    plot = exp_sub.add_parser("plot",
                              help="regenerate figures from stored metrics")
    plot.add_argument("exp_id")
    plot.add_argument("--results-dir", default=DEFAULT_RESULTS_DIR)

    session = sub.add_parser("session", help="manage live labeling sessions")
    ses_sub = session.add_subparsers(dest="subcommand", required=True)
    new = ses_sub.add_parser("new", help="create a session and plan round 1")
    new.add_argument("--K", type=int, required=True, help="labeling rounds")
    new.add_argument("--B", type=int, required=True, help="queries per round")
    new.add_argument("--N", type=int, required=True,
                     help="evaluation emotions (2, 4 or 6)")
    new.add_argument("--M", type=int, required=True,
                     help="questionnaire tasks per emotion")
    new.add_argument("--seed", type=int, default=0)
    new.add_argument("--session-id", default=None)
    new.add_argument("--data-dir", default=DEFAULT_DATA_DIR)
    new.add_argument("--alpha", type=float, default=None,
                     help="style-cost weight (default: experiment setting)")
    new.add_argument("--opt-iters", type=int, default=None)
    new.add_argument("--opt-restarts", type=int, default=None)
    new.add_argument("--train-epochs", type=int, default=None)
    status = ses_sub.add_parser("status", help="print one session's status")
    status.add_argument("session_id")
    status.add_argument("--data-dir", default=DEFAULT_DATA_DIR)
    export = ses_sub.add_parser("export",
                                help="dump a session's full state as JSON")
    export.add_argument("session_id")
    export.add_argument("--data-dir", default=DEFAULT_DATA_DIR)
    export.add_argument("--out", default="-",
                        help="output path ('-' for stdout)")

    serve = sub.add_parser("serve", help="run the labeling HTTP service")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--data-dir", default=None,
                       help="overrides EMOVAC_DATA_DIR")
    serve.add_argument("--static-dir", default=None,
                       help="pre-built studio bundle to serve at /")

    vad = sub.add_parser("vad", help="resolve text to a VAD triple")
    vad.add_argument("text")

    render = sub.add_parser("render",
                            help="interpolate a trajectory into frames")
    render.add_argument("trajectory", help="path to a trajectory JSON file")
    render.add_argument("--out", required=True, help="frames JSON output path")
    render.add_argument("--fps", type=float, default=DEFAULT_FPS)

    return parser


def _session_dir(data_dir: str, session_id: str) -> Path:
    return Path(data_dir) / "sessions" / session_id


def _cmd_experiment(args: argparse.Namespace) -> int:
    if args.subcommand == "run":
        cfg = load_config(args.config)
        out_dir = run_experiment_to_dir(cfg, args.results_dir)
        print(out_dir)
        return 0
    # plot: rebuild both figures from the stored CSV.
    from .plots import final_vs_n_svg, learning_curves_svg

    out_dir = Path(args.results_dir) / args.exp_id
    records = load_metrics_csv(out_dir / "metrics.csv")
    fig4 = out_dir / "fig4.svg"
    fig5 = out_dir / "fig5.svg"
    fig4.write_text(learning_curves_svg(records), encoding="utf-8")
    fig5.write_text(final_vs_n_svg(records), encoding="utf-8")
    print(fig4)
    print(fig5)
    return 0


def _cmd_session(args: argparse.Namespace) -> int:
    if args.subcommand == "new":
        session_id = args.session_id or f"s-{uuid.uuid4().hex[:12]}"
        overrides = {key: value for key, value in (
            ("alpha", args.alpha), ("opt_iters", args.opt_iters),
            ("opt_restarts", args.opt_restarts),
            ("train_epochs", args.train_epochs)) if value is not None}
        cfg = session_config(session_id, rounds=args.K, batch_size=args.B,
                             n_emotions=args.N, tasks_per_emotion=args.M,
                             seed=args.seed, **overrides)
        session = Session.create(_session_dir(args.data_dir, session_id),
                                 cfg, session_id)
        print("planning round 1 queries...", file=sys.stderr)
        session.run_all_pending()
        print(json.dumps({"session_id": session_id,
                          "status": session.status,
                          "directory": str(session.directory)}, indent=2))
        return 0
    session = Session.load(_session_dir(args.data_dir, args.session_id))
    if args.subcommand == "status":
        print(json.dumps({
            "session_id": session.session_id,
            "status": session.status,
            "rounds_planned": len(session.rounds),
            "rounds_total": session.config.rounds,
            "labels_done": session.training_pairs(),
            "pending": session.pending_compute(),
            "eval_answered": len(session.eval_answers),
            "eval_total": len(session.eval_items or []),
        }, indent=2))
        return 0
    # export
    data = session.export_bytes()
    if args.out == "-":
        sys.stdout.buffer.write(data + b"\n")
    else:
        Path(args.out).write_bytes(data)
        print(args.out)
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(data_dir=args.data_dir, static_dir=args.static_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def _cmd_vad(args: argparse.Namespace) -> int:
    lookup = phrase_to_vad(args.text)
    if not lookup.found or lookup.vad is None:
        print(f"no emotion words recognized in {args.text!r}",
              file=sys.stderr)
        return 1
    v, a, d = lookup.vad.as_tuple()
    print(f"{v} {a} {d}")
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    payload = json.loads(Path(args.trajectory).read_text(encoding="utf-8"))
    traj = Trajectory.from_json_dict(payload)
    frames = render_frames(traj, args.fps)
    Path(args.out).write_text(
        json.dumps(frames_to_json_dict(frames, args.fps)), encoding="utf-8")
    print(args.out)
    return 0


_HANDLERS = {
    "experiment": _cmd_experiment,
    "session": _cmd_session,
    "serve": _cmd_serve,
    "vad": _cmd_vad,
    "render": _cmd_render,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except KeyboardInterrupt:
        print("interrupted", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
