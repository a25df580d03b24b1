"""Command-line pipeline driver: synth, extract, evaluate, aggregate, serve.

Exit codes: 0 success, 2 parse/validation error, 3 I/O or registry error.
"""

from __future__ import annotations

import argparse
import datetime as dt
import json
import os
import sys
from pathlib import Path
from typing import List, Optional

from . import aggregate as agg
from . import evaluate as ev
from .api import DEFAULT_PORT_ENV_VAR, create_app
from .extract import ExtractionConfig, extract_emotions, extract_movements
from .ingest import SyntheticScript, generate_synthetic, parse_replay, serialize_replay
from .store import RegistryError, load_all_sessions, parse_sessions, save_session
from .types import (
    Direction,
    Emotion,
    GroundTruthAnnotation,
    Session,
    ValidationError,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_IO = 3


def _iso_date(text: str) -> dt.date:
    try:
        return dt.date.fromisoformat(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a yyyy-mm-dd date") from None


def _load_json(path: Path):
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON: {exc.msg} at line {exc.lineno}") from None


def _cmd_extract(args) -> int:
    cfg = ExtractionConfig(threshold_deg=args.threshold, literal_rules=args.literal_rules)
    frames = parse_replay(Path(args.replay).read_text(encoding="utf-8"))
    movements = extract_movements(frames, cfg)
    emotions = extract_emotions(frames, cfg)
    session = Session(
        session_date=args.date,
        user_label=args.user,
        movements=movements,
        emotions=emotions,
    )
    for kind in ("movement", "emotion"):
        save_session(args.out_dir, session, kind, overwrite=args.overwrite)
    print(f"movements: {len(movements)}")
    print(f"emotions: {len(emotions)}")
    return EXIT_OK


def _cmd_synth(args) -> int:
    script = SyntheticScript.from_json(_load_json(Path(args.script)))
    frames, truth = generate_synthetic(script)
    Path(args.out).write_text(serialize_replay(frames), encoding="utf-8")
    truth_doc = [annotation.to_json() for annotation in truth]
    Path(args.truth).write_text(json.dumps(truth_doc, indent=2) + "\n", encoding="utf-8")
    print(f"frames: {len(frames)}")
    print(f"annotations: {len(truth)}")
    return EXIT_OK


def _infer_kind(document) -> Optional[str]:
    if not isinstance(document, list):
        return None
    for record in document:
        if isinstance(record, dict):
            for event in record.get("SessionData", []):
                if isinstance(event, dict):
                    if "direction" in event:
                        return "movement"
                    if "emotion" in event:
                        return "emotion"
    return None


def _cmd_evaluate(args) -> int:
    extracted_path = Path(args.extracted)
    document = _load_json(extracted_path)
    kind = args.kind or _infer_kind(document)
    if kind is None:
        raise ValidationError(
            f"{extracted_path}: cannot infer event kind from an empty document; pass --kind"
        )
    sessions = parse_sessions(json.dumps(document), kind)
    events: List = []
    for session in sessions:
        events.extend(session.movements if kind == "movement" else session.emotions)
    annotations = [GroundTruthAnnotation.from_json(a) for a in _load_json(Path(args.truth))]
    label_cls = Direction if kind == "movement" else Emotion
    truth = [a for a in annotations if isinstance(a.label, label_cls)]
    report = ev.match_events(events, truth, tol_s=args.tol)
    print(json.dumps(report.to_json(), indent=2))
    return EXIT_OK


def _cmd_aggregate(args) -> int:
    if args.kind == "direction":
        sessions = load_all_sessions(args.registry, "movement")
        buckets = agg.direction_series(sessions, args.width)
    else:
        sessions = load_all_sessions(args.registry, "emotion")
        buckets = agg.emotion_series(sessions, args.width)
    print(json.dumps([bucket.to_json() for bucket in buckets], indent=2))
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    app = create_app(
        args.registry,
        assets_dir=args.assets,
        cors_origins=args.cors_origin,
        auto_reload=not args.no_reload,
    )
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="headwatch",
        description="Turn head-pose/AU replay streams into stored, served session events.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_extract = sub.add_parser("extract", help="extract events from a replay into a registry")
    p_extract.add_argument("--in", dest="replay", required=True, help="replay file (JSON lines)")
    p_extract.add_argument("--out-dir", required=True, help="registry directory")
    p_extract.add_argument("--user", required=True, help="user label for the session")
    p_extract.add_argument("--date", required=True, type=_iso_date, help="session date yyyy-mm-dd")
    p_extract.add_argument("--threshold", type=float, default=4.0, help="movement threshold, degrees")
    p_extract.add_argument("--literal-rules", action="store_true",
                           help="use the legacy uncorrected boundary rules")
    p_extract.add_argument("--overwrite", action="store_true", help="replace existing documents")
    p_extract.set_defaults(func=_cmd_extract)

    p_synth = sub.add_parser("synth", help="render a synthetic script into a replay + truth file")
    p_synth.add_argument("--script", required=True, help="script JSON file")
    p_synth.add_argument("--out", required=True, help="replay file to write")
    p_synth.add_argument("--truth", required=True, help="ground-truth JSON file to write")
    p_synth.set_defaults(func=_cmd_synth)

    p_eval = sub.add_parser("evaluate", help="score an extracted document against ground truth")
    p_eval.add_argument("--extracted", required=True, help="session document to score")
    p_eval.add_argument("--truth", required=True, help="ground-truth JSON file")
    p_eval.add_argument("--tol", type=float, default=0.5, help="match tolerance, seconds")
    p_eval.add_argument("--kind", choices=["movement", "emotion"],
                        help="event kind (inferred from the document when omitted)")
    p_eval.set_defaults(func=_cmd_evaluate)

    p_agg = sub.add_parser("aggregate", help="print bucketed counts for a registry")
    p_agg.add_argument("--registry", required=True, help="registry directory")
    p_agg.add_argument("--kind", required=True, choices=["direction", "emotion"])
    p_agg.add_argument("--width", type=float, default=2.0, help="bucket width, seconds")
    p_agg.set_defaults(func=_cmd_aggregate)

    p_serve = sub.add_parser("serve", help="serve the registry and dashboard over HTTP")
    p_serve.add_argument("--registry", required=True, help="registry directory")
    p_serve.add_argument("--port", type=int,
                         default=int(os.environ.get(DEFAULT_PORT_ENV_VAR, "8000")),
                         help=f"port (default from ${DEFAULT_PORT_ENV_VAR} or 8000)")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--assets", help="directory of built dashboard assets to serve at /")
    p_serve.add_argument("--cors-origin", action="append", default=None,
                         help="allowed CORS origin (repeatable; default *)")
    p_serve.add_argument("--no-reload", action="store_true",
                         help="pin the registry snapshot taken at startup")
    p_serve.set_defaults(func=_cmd_serve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "cors_origin", None) is None and args.command == "serve":
        args.cors_origin = ["*"]
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (RegistryError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
