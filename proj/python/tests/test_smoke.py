import json
import math
import os
import pathlib
import re
import subprocess

import numpy as np
import pytest

import magspec

ROOT = pathlib.Path(__file__).resolve().parents[2]
CONFIGS = ROOT / "configs"
CLI = pathlib.Path(os.environ.get("MAGSPEC_CLI", ROOT / "build" / "tools" / "magspec"))


def test_constants():
    assert magspec.h_constant(2) == pytest.approx(2.5663229295977068, rel=1e-12)
    assert magspec.bessel_zero(0.5, 3) == pytest.approx(3 * math.pi, rel=1e-12)
    for d in range(2, 11):
        assert magspec.chiti_constant(d, 2.0) == pytest.approx(magspec.chiti_constant_closed(d), rel=1e-9)
    table = magspec.constants(3, [1, 2])
    assert table["H_d"] == pytest.approx(3.0, rel=1e-12)
    assert set(table["C_d_p"]) == {"1", "2"}


def test_analytic_spectra_and_riesz_means():
    sq = magspec.box_spectrum([1.0, 1.0], 5)
    assert sq[1] / sq[0] == 2.5
    assert sq[1] == sq[2]
    disk = magspec.disk_spectrum(2.0, 3)
    assert disk[0] == pytest.approx((2.404825557695773 / 2) ** 2, rel=1e-12)

    values = [1.0, 2.0, 3.0]
    assert magspec.riesz_mean(values, 2.5) == pytest.approx(2.0)
    assert magspec.legendre_transform_riesz(values, 1.5) == pytest.approx(2.0)
    with pytest.raises(magspec.TruncationError):
        magspec.riesz_mean(values, 3.5)


def test_grid_eigenpairs_are_normalized():
    values, vectors, h, measure = magspec.eigenpairs(
        {"domain": {"shape": "rectangle", "h": 1 / 32}, "solver": {"k": 3}}
    )
    assert vectors.shape == (3, 31 * 31)
    assert measure == pytest.approx(31 * 31 * h * h)
    norms = (np.abs(vectors) ** 2).sum(axis=1) * h * h
    np.testing.assert_allclose(norms, 1.0, rtol=1e-10)
    # the two lowest excited states are a degenerate pair
    assert values[1] == pytest.approx(values[2], rel=1e-9)
    ratio = magspec.chiti_ratio(vectors[0], h, values[0])
    assert 0.98 < ratio < 1.0


def test_scenario_report_layout():
    report = magspec.run_scenario(
        {"domain": {"shape": "analytic_disk", "radius": 1.0}, "solver": {"k": 30}}
    )
    assert report["schema_version"] == magspec.SCHEMA_VERSION
    assert report["overall"]["pass"]
    assert report["overall"]["hard_failures"] == 0
    assert magspec.exit_code(report) == 0
    names = {c["name"] for c in report["checks"]}
    assert {"berezin_li_yau", "li_yau", "main", "yang", "ppw_gap"} <= names


def test_config_errors():
    with pytest.raises(magspec.InputError):
        magspec.load_config({"domain": {"shape": "rectangle"}, "bogus": 1})
    with pytest.raises(magspec.InputError):
        magspec.load_config({"solver": {"k": 0}})
    cfg = magspec.load_config(CONFIGS / "magnetic_square.json")
    assert cfg["gauge"]["type"] == "uniform"


def test_convergence_study():
    study = magspec.convergence_study(
        {"domain": {"shape": "rectangle", "h": 1 / 16}, "solver": {"k": 3, "tol": 1e-11}}, levels=3
    )
    assert study["pass"]
    assert all(abs(o - 2.0) < 0.2 for o in study["observed_order"])


needs_cli = pytest.mark.skipif(not CLI.exists(), reason="magspec CLI not built")


def run_cli(*args):
    return subprocess.run([str(CLI), *map(str, args)], capture_output=True, text=True)


@needs_cli
@pytest.mark.parametrize(
    "args, expected",
    [
        (("constants", "--dim", "4"), 0),
        (("verify", "--config", CONFIGS / "disk_analytic.json", "--out", "-"), 0),
        (("verify", "--config", CONFIGS / "truncation.json", "--out", "-"), 3),
        (("verify", "--config", CONFIGS / "missing.json"), 2),
        (("spectrum",), 2),
        (("constants", "--dim", "1"), 2),
    ],
)
def test_cli_exit_codes(args, expected):
    assert run_cli(*args).returncode == expected


@needs_cli
def test_cli_verify_is_deterministic(tmp_path):
    config = tmp_path / "small.json"
    config.write_text(
        json.dumps(
            {
                "name": "small",
                "domain": {"shape": "lshape", "h": 1 / 24},
                "gauge": {"type": "uniform", "B": 3},
                "solver": {"k": 8},
            }
        )
    )
    reports = []
    for i in range(2):
        out = tmp_path / f"report{i}.json"
        assert run_cli("verify", "--config", config, "--out", out).returncode in (0, 1)
        text = out.read_text()
        assert '"timing"' in text
        reports.append(re.sub(r'"timing": \{[^}]*\}', "", text))
    assert reports[0] == reports[1]
