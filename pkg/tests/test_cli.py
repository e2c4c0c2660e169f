from __future__ import annotations

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from sensorelect.cli import GEN_KINDS, main
from sensorelect.report import ConfigError, parse_config

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def write(tmp_path, doc, name="cfg.json"):
    path = tmp_path / name
    path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return path


# --- exit-code matrix ------------------------------------------------------------

@pytest.mark.parametrize("fixture, flags, code", [
    ("ngon6.json", ["--chirality", "off"], 2),
    ("ngon6.json", ["--chirality", "on"], 2),
    ("fig3.json", ["--chirality", "off"], 0),
    ("fig3.json", ["--chirality", "on", "--orientation", "cw"], 0),
    ("fig5.json", [], 0),
    ("center.json", [], 0),
    ("mirror-no-axis.json", ["--chirality", "off"], 2),
    ("mirror-no-axis.json", ["--chirality", "on"], 0),
])
def test_elect_exit_codes(fixture, flags, code):
    assert run("elect", GOLDEN / fixture, *flags)[0] == code


@pytest.mark.parametrize("fixture", ["ngon6.json", "mirror-no-axis.json", "fig3.json"])
def test_analyze_never_fails_on_impossible(fixture):
    assert run("analyze", GOLDEN / fixture)[0] == 0


def test_simulate_exit_codes():
    assert run("simulate", GOLDEN / "fig3.json", "--runs", 100)[1].endswith(
        "summary.runs: 100\nsummary.unanimous: 100\nsummary.all_unanimous: true\n")
    assert run("simulate", GOLDEN / "ngon6.json", "--runs", 5)[0] == 0
    code, text = run("simulate", GOLDEN / "mirror-no-axis.json", "--runs", 5)
    assert code == 0 and text.count("impossible: MirrorPairedType1") == 5


@pytest.mark.parametrize("doc, field", [
    ({"name": "x"}, "'points' is a required property"),
    ({"points": []}, "points"),
    ({"points": [[0, 0], [1]]}, "points[1]"),
    ({"points": [[0, 0], [1, "a"]]}, "points[1][1]"),
    ({"points": [[0, 0]], "tol": {"rel": -1}}, "tol.rel"),
    ({"points": [[0, 0]], "tol": {"bogus": 1}}, "tol"),
    ({"points": [[0, 0], [1, 1]], "name": 3}, "name"),
])
def test_malformed_files_name_the_field(tmp_path, capsys, doc, field):
    code, _ = run("elect", write(tmp_path, doc))
    assert code == 1
    assert field in capsys.readouterr().err


def test_non_finite_and_coincident_points(tmp_path, capsys):
    assert run("elect", write(tmp_path, '{"points": [[0, 0], [NaN, 1]]}'))[0] == 1
    assert "points[1]" in capsys.readouterr().err
    assert run("elect", write(tmp_path, {"points": [[0, 0], [0, 0], [1, 1]]}))[0] == 1
    assert "coincide" in capsys.readouterr().err


def test_missing_and_broken_files(tmp_path, capsys):
    assert run("elect", tmp_path / "nope.json")[0] == 1
    assert run("elect", write(tmp_path, "{not json"))[0] == 1
    assert "invalid JSON" in capsys.readouterr().err


def test_usage_errors_exit_one(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["elect"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["gen", "hexagon"])
    assert exc.value.code == 1


def test_bad_tolerance_flag(tmp_path, capsys):
    assert run("elect", GOLDEN / "fig3.json", "--tol-rel", "-1")[0] == 1
    assert "--tol-rel" in capsys.readouterr().err


def test_parse_config_direct():
    name, cfg, tol = parse_config({"name": "t", "points": [[0, 1], [2, 3]], "tol": {"abs": 0.5}})
    assert name == "t" and len(cfg) == 2 and tol == {"abs": 0.5}
    with pytest.raises(ConfigError):
        parse_config([1, 2])


# --- reports -------------------------------------------------------------------

@pytest.mark.parametrize("argv, golden", [
    (["analyze", "fig3.json"], "fig3.analyze.txt"),
    (["analyze", "fig5.json", "--json"], "fig5.analyze.json"),
    (["elect", "ngon6.json"], "ngon6.elect.txt"),
    (["elect", "center.json", "--json"], "center.elect.json"),
    (["simulate", "mirror-no-axis.json", "--runs", "5"], "mirror-no-axis.simulate.txt"),
])
def test_golden_reports(argv, golden):
    argv = [argv[0], GOLDEN / argv[1], *argv[2:]]
    assert run(*argv)[1] == (GOLDEN / golden).read_text()


def test_reports_are_byte_identical_across_runs():
    for argv in (["analyze", GOLDEN / "fig3.json", "--json"],
                 ["simulate", GOLDEN / "fig5.json", "--runs", 3, "--seed", 11]):
        assert run(*argv)[1] == run(*argv)[1]


def test_fig3_analyze_lists_radius_words():
    _, text = run("analyze", GOLDEN / "fig3.json", "--json")
    report = json.loads(text)
    words = sorted("".join("abc"[i] for i in r["word"]) for r in report["radii"])
    assert words == ["ab", "ab", "c"]
    assert report["distance_classes"] == [0.3, 0.7, 1.0]
    assert report["outcome"]["index"] == 0


def test_fig3_orientations_pick_different_radii():
    leaders = {}
    for o in ("cw", "ccw"):
        _, text = run("elect", GOLDEN / "fig3.json", "--chirality", "on", "--orientation", o, "--json")
        leaders[o] = json.loads(text)["outcome"]["index"]
    assert leaders == {"cw": 1, "ccw": 3}


def test_fig5_analyze_lyndon_set():
    report = json.loads(run("analyze", GOLDEN / "fig5.json", "--json")[1])
    assert len(report["lyndon"]["R_L"]) == 2
    assert all(r["type"] == 0 for r in report["radii"])
    assert report["outcome"]["rule"] == "SmallerOfTwoType0"
    assert report["outcome"]["index"] == 1


def test_center_analyze_all_words_center():
    report = json.loads(run("analyze", GOLDEN / "center.json", "--json")[1])
    assert all(entry["center"] for w in report["words"] for entry in w.values())
    assert report["center_sensor"] == 0


def test_tolerance_from_file_and_flags(tmp_path):
    doc = {"points": [[0, 0], [1, 0]], "tol": {"abs": 1e-6}}
    report = json.loads(run("analyze", write(tmp_path, doc), "--json", "--tol-rel", "1e-7")[1])
    assert report["tol"] == {"abs": 1e-6, "rel": 1e-7}


def test_timing_only_on_request():
    assert "timing_ms" not in run("elect", GOLDEN / "fig3.json")[1]
    assert "timing_ms" in run("elect", GOLDEN / "fig3.json", "--timing")[1]


def test_svg_output(tmp_path):
    svg = tmp_path / "fig3.svg"
    assert run("analyze", GOLDEN / "fig3.json", "--svg", svg)[0] == 0
    text = svg.read_text()
    assert text.startswith("<svg") and text.count("<line") == 3
    assert text.count('fill="#d22"') == 1  # leader highlight
    assert text.count("<circle") == 1 + 5


# --- gen -----------------------------------------------------------------------

def _gen_args(kind):
    if kind == "ngon":
        return ["gen", "ngon", "7"]
    if kind == "random":
        return ["gen", "random", "--n", "9", "--seed", "4"]
    return ["gen", kind]


@pytest.mark.parametrize("kind", GEN_KINDS)
def test_gen_round_trip(tmp_path, kind):
    path = tmp_path / f"{kind}.json"
    assert run(*_gen_args(kind), "-o", path)[0] == 0
    for chirality in ("on", "off"):
        assert run("elect", path, "--chirality", chirality)[0] in (0, 2)
    assert run("analyze", path)[0] == 0


def test_gen_ngon_geometry():
    doc = json.loads(run("gen", "ngon", "6")[1])
    pts = doc["points"]
    assert len(pts) == 6
    assert all(abs(x * x + y * y - 1) < 1e-12 for x, y in pts)


@pytest.mark.parametrize("n", [2, 5, 12])
@pytest.mark.parametrize("seed", [0, 1])
def test_gen_random_parameter_sweep(tmp_path, n, seed):
    path = tmp_path / "r.json"
    assert run("gen", "random", "--n", n, "--seed", seed, "-o", path)[0] == 0
    assert run("elect", path)[0] in (0, 2)


def test_gen_random_asymmetric_is_electable(tmp_path):
    path = tmp_path / "a.json"
    assert run("gen", "random", "--n", 9, "--asymmetric", "-o", path)[0] == 0
    assert run("elect", path, "--chirality", "off")[0] == 0
    assert run("gen", "random", "--n", 9, "--asymmetric")[1] == path.read_text()


@pytest.mark.parametrize("argv, field", [
    (["gen", "ngon"], "n:"),
    (["gen", "ngon", "0"], "n:"),
    (["gen", "random"], "n:"),
    (["gen", "random", "--n", "2", "--asymmetric"], "n:"),
    (["gen", "fig3", "4"], "count:"),
])
def test_gen_parameter_errors(capsys, argv, field):
    assert run(*argv)[0] == 1
    assert field in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sensorelect.cli", "elect",
                           str(GOLDEN / "ngon6.json")], capture_output=True, text=True)
    assert proc.returncode == 2
    assert "outcome.reason: Periodic" in proc.stdout
