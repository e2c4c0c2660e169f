"""Config files in, deterministic reports and SVG diagrams out."""

from __future__ import annotations

import json
import math
from typing import Any, Optional

import jsonschema

from .election import Analysis, ElectionOutcome, Impossible, Leader, analyze, elect
from .geometry import DEFAULT_TOL, Configuration, DegenerateInput, Tolerance
from .simulation import AgreementReport
from .words import ConfigWord, Orientation, format_letters

CONFIG_SCHEMA = {
    "type": "object",
    "required": ["points"],
    "properties": {
        "name": {"type": "string"},
        "points": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "array",
                "minItems": 2,
                "maxItems": 2,
                "items": {"type": "number"},
            },
        },
        "tol": {
            "type": "object",
            "properties": {
                "abs": {"type": "number", "minimum": 0},
                "rel": {"type": "number", "minimum": 0},
            },
            "additionalProperties": False,
        },
    },
}


class ConfigError(ValueError):
    pass


def _path(parts) -> str:
    out = ""
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else (f".{p}" if out else str(p))
    return out or "<root>"


def parse_config(data: Any) -> tuple[Optional[str], Configuration, dict]:
    """Validate a decoded config document; return (name, configuration, tolerance overrides)."""
    errors = sorted(jsonschema.Draft7Validator(CONFIG_SCHEMA).iter_errors(data),
                    key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        raise ConfigError(f"{_path(e.absolute_path)}: {e.message}")
    for i, p in enumerate(data["points"]):
        for axis, v in zip("xy", p):
            if not math.isfinite(v):
                raise ConfigError(f"points[{i}]: {axis} coordinate is not finite")
    try:
        config = Configuration.from_points(data["points"])
    except DegenerateInput as exc:
        raise ConfigError(f"points: {exc}") from exc
    return data.get("name"), config, dict(data.get("tol", {}))


def load_config(path: str) -> tuple[Optional[str], Configuration, dict]:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"{path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    return parse_config(data)


def config_document(config: Configuration, name: Optional[str] = None) -> dict:
    doc: dict = {}
    if name:
        doc["name"] = name
    doc["points"] = [[p.x, p.y] for p in config.points]
    return doc


# ---------------------------------------------------------------------------
# Report construction

def num(x: float) -> float:
    """Round to 12 significant digits so reports diff cleanly."""
    x = float(f"{float(x):.12g}")
    return 0.0 if x == 0 else x


def _pt(p, scale: float = 0.0) -> list[float]:
    # coordinates below 1e-12 of the configuration scale are rounding residue
    return [0.0 if abs(v) <= 1e-12 * scale else num(v) for v in (p[0], p[1])]


def _word_entry(word: ConfigWord) -> dict:
    return {"text": format_letters(word), "center": word.center, "lyndon": word.is_lyndon()}


def outcome_dict(outcome: ElectionOutcome, scale: float = 0.0) -> dict:
    if isinstance(outcome, Leader):
        d = {
            "kind": "Leader",
            "index": outcome.index,
            "position": _pt(outcome.position, scale),
            "rule": outcome.rule.value,
        }
        if outcome.radius is not None:
            d["radius"] = outcome.radius
            d["word"] = format_letters(outcome.word)
        return d
    d = {"kind": "Impossible", "reason": outcome.reason.value, "witness": outcome.witness}
    if outcome.mirror_pair is not None:
        d["mirror_pair"] = list(outcome.mirror_pair)
    if outcome.power > 1:
        d["power"] = outcome.power
    return d


def _scale(decomp) -> float:
    return max(decomp.sigma, max(abs(v) for p in decomp.config.points for v in p))


def mode_name(chirality: bool, orientation: Orientation) -> str:
    return f"chirality-{orientation.value}" if chirality else "no-chirality"


def build_report(config: Configuration, chirality: bool, orientation: Orientation,
                 tol: Tolerance = DEFAULT_TOL, name: Optional[str] = None,
                 analysis: Optional[Analysis] = None,
                 outcome: Optional[ElectionOutcome] = None) -> dict:
    analysis = analysis or analyze(config, tol)
    outcome = outcome or elect(config, chirality, orientation, tol)
    decomp, enc = analysis.decomp, analysis.encoding
    report: dict = {}
    if name:
        report["name"] = name
    report["mode"] = mode_name(chirality, orientation)
    report["n"] = len(config)
    report["tol"] = {"abs": tol.abs, "rel": tol.rel}
    scale = _scale(decomp)
    report["sec"] = {"center": _pt(decomp.circle.center, scale), "radius": num(decomp.sigma)}
    report["center_sensor"] = decomp.center_sensor
    report["distance_classes"] = [num(v) for v in enc.distance_classes]
    report["angle_classes"] = [num(v) for v in enc.angle_classes]
    radii = []
    for i, r in enumerate(decomp.radii):
        rho = enc.radius_words[i]
        radii.append({
            "angle": num(r.angle),
            "sensors": [s.index for s in r.sensors],
            "distances": [num(s.distance) for s in r.sensors],
            "word": "0" if rho.zero else [a.rank for a in rho.letters],
            "word_values": [] if rho.zero else [num(a.value) for a in rho.letters],
            "angle_ccw": num(decomp.angles_ccw[i]),
            "type": analysis.types[i],
        })
    report["radii"] = radii
    words = []
    for i in range(len(decomp.radii)):
        words.append({
            "weak_cw": _word_entry(analysis.weak[Orientation.CW][i]),
            "weak_ccw": _word_entry(analysis.weak[Orientation.CCW][i]),
            "strong_cw": _word_entry(analysis.strong[Orientation.CW][i]),
            "strong_ccw": _word_entry(analysis.strong[Orientation.CCW][i]),
        })
    report["words"] = words
    if not analysis.center_occupied and decomp.radii:
        report["lyndon"] = {
            "weak_cw": list(analysis.lyndon_radii(Orientation.CW, False)),
            "weak_ccw": list(analysis.lyndon_radii(Orientation.CCW, False)),
            "R_L": list(analysis.lyndon_set),
        }
    report["outcome"] = outcome_dict(outcome, scale)
    return report


def agreement_dict(rep: AgreementReport, run: Optional[int] = None) -> dict:
    d: dict = {}
    if run is not None:
        d["run"] = run
    d["seed"] = rep.seed
    d["mode"] = "chirality" if rep.chirality else "no-chirality"
    d["unanimous"] = rep.unanimous
    if rep.leader is not None:
        d["leader"] = {"index": rep.leader[0], "position": _pt(rep.leader[1])}
    elif isinstance(rep.reference, Impossible):
        d["impossible"] = rep.reference.reason.value
    d["dissent"] = [[s, list(c)] for s, c in rep.dissent]
    return d


# ---------------------------------------------------------------------------
# Rendering

def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, float):
        return f"{v:.12g}"
    if isinstance(v, list):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    return str(v)


def _flatten(prefix: str, value, out: list[str]) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, out)
    elif isinstance(value, list) and value and all(isinstance(x, dict) for x in value):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, out)
    else:
        out.append(f"{prefix}: {_fmt(value)}")


def render_text(report: dict) -> str:
    lines: list[str] = []
    _flatten("", report, lines)
    return "\n".join(lines) + "\n"


def render_json(report) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def render_svg(analysis: Analysis, outcome: Optional[ElectionOutcome] = None, size: int = 400) -> str:
    decomp = analysis.decomp
    cx, cy = decomp.circle.center
    sigma = decomp.sigma or 1.0
    half = size / 2.0
    scale = 0.9 * half / sigma

    def tx(x, y):
        return half + (x - cx) * scale, half - (y - cy) * scale

    leader = outcome.index if isinstance(outcome, Leader) else None
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<circle cx="{half:.3f}" cy="{half:.3f}" r="{sigma * scale:.3f}" fill="none" stroke="#888"/>',
    ]
    for r in decomp.radii:
        x, y = tx(cx + r.direction.x * sigma, cy + r.direction.y * sigma)
        parts.append(f'<line x1="{half:.3f}" y1="{half:.3f}" x2="{x:.3f}" y2="{y:.3f}" '
                     'stroke="#bbb" stroke-dasharray="4 3"/>')
    for i, p in enumerate(decomp.config.points):
        x, y = tx(p.x, p.y)
        fill, rad = ("#d22", 6) if i == leader else ("#111", 4)
        parts.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{rad}" fill="{fill}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
