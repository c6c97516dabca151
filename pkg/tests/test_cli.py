"""Command-line front end: exit codes, JSON shapes, golden SVG output.

The golden files under ``tests/golden/`` were produced by the renderer
itself on the committed sample set and pin its byte-exact output.
"""

import json
import random
import subprocess
import sys
from pathlib import Path

import pytest

from tiler.cli import main
from tiler.generators import rect, spiral
from tiler.reference import random_tileable_region
from tiler.region import parse_boundary

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_exit_codes_and_json(capsys):
    code, out, _ = run(capsys, "check", "RRUULLDD")
    assert code == 0
    verdict = json.loads(out)
    assert verdict["tileable"] is True
    assert (verdict["p"], verdict["n"]) == (8, 4)

    code, out, _ = run(capsys, "check", "RULD")
    assert code == 1
    assert json.loads(out)["witness"]["kind"] == "unbalanced-boundary"

    code, _, err = run(capsys, "check", "RRUZLLDD")
    assert code == 2
    assert "index 3" in err


def test_check_triangular_lattice(capsys):
    code, out, _ = run(capsys, "check", "--lattice", "tri", "1,2,-1,-2")
    assert code == 0 and json.loads(out)["tileable"] is True
    code, out, _ = run(capsys, "check", "--lattice", "tri", "1,2,3")
    assert code == 1
    code, _, err = run(capsys, "check", "--lattice", "tri", "1,9,-1,-2")
    assert code == 2 and "index 1" in err


def test_query_frozen_and_outside(capsys):
    code, out, _ = run(capsys, "query", "RRULLD", "--cell", "0,0")
    assert code == 0
    assert json.loads(out) == {"cell": [0, 0], "partner": [1, 0],
                               "orientation": "H"}
    code, _, err = run(capsys, "query", "RRULLD", "--cell", "5,5")
    assert code == 2 and "not in the region" in err


def test_tile_oracle_and_full_agree(capsys):
    rng = random.Random(424242)
    words = [rect(3, 4)] + [random_tileable_region(rng, 40).moves
                            for _ in range(5)]
    for word in words:
        code, out_oracle, _ = run(capsys, "tile", word)
        assert code == 0
        code, out_full, _ = run(capsys, "tile", word, "--via-full")
        assert code == 0
        assert json.loads(out_oracle) == json.loads(out_full)
        payload = json.loads(out_oracle)
        assert payload["count"] * 2 == sum(1 for _ in parse_boundary(word).cells())


def test_tile_untileable_region(capsys):
    code, _, err = run(capsys, "tile", "RULD")
    assert code == 1 and "error" in err


def test_gen_families(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "rect", "2", "2")
    assert code == 0 and out.strip() == "RRUULLDD"

    code, first, _ = run(capsys, "gen", "random", "50", "--seed", "7")
    code, second, _ = run(capsys, "gen", "random", "50", "--seed", "7")
    assert first == second

    base = tmp_path / "base.txt"
    base.write_text(rect(2, 1))
    code, out, _ = run(capsys, "gen", "dilate", "2", "--in", str(base))
    assert code == 0 and out.strip() == rect(4, 2)

    code, _, err = run(capsys, "gen", "rect", "2")
    assert code == 2 and "parameter" in err


def test_stdin_input(capsys, monkeypatch):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("RRUULLDD\n"))
    code, out, _ = run(capsys, "check", "--in", "-")
    assert code == 0 and json.loads(out)["tileable"] is True


def test_bench_csv_schema_and_fit(capsys, tmp_path):
    out_file = tmp_path / "bench.csv"
    code, _, err = run(capsys, "bench", "--sizes", "64,128", "--repeat", "1",
                       "--algos", "fast,matching", "--families", "snake",
                       "--out", str(out_file))
    assert code == 0
    lines = out_file.read_text().splitlines()
    assert lines[0] == "family,p,n,algo,ms,verdict,sites,edges"
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) == 4  # 2 sizes x 2 algos
    assert {r[3] for r in rows} == {"fast", "matching"}
    assert {r[5] for r in rows} == {"tileable"}
    assert "# fit family=snake algo=fast" in err
    assert "exponent=" in err


def test_render_golden_files(capsys, tmp_path):
    cases = [
        ("sq_2x2_full.svg",
         ["render", "RRUULLDD", "--layers", "boundary,tiling,heights"]),
        ("sq_spiral_sub.svg",
         ["render", "--layers", "subdivision,boundary", "--scale", "12",
          spiral(2)]),
        ("tri_hex.svg",
         ["render", "--lattice", "tri", "--layers", "subdivision,tiling,boundary",
          "1,1,-3,-3,2,2,-1,-1,3,3,-2,-2"]),
    ]
    for name, argv in cases:
        target = tmp_path / name
        code, _, _ = run(capsys, *argv, "--out", str(target))
        assert code == 0
        assert target.read_bytes() == (GOLDEN / name).read_bytes(), name


def test_render_rejects_bad_layer(capsys):
    code, _, err = run(capsys, "render", "RRUULLDD", "--layers", "wat")
    assert code == 2 and "unknown layer" in err


def test_console_script_entry_point():
    proc = subprocess.run(["tiler", "check", "RRUULLDD"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["tileable"] is True
