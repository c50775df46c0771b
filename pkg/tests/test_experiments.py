import math

import pytest

from fracmech import cli
from fracmech import experiments as ex
from fracmech.errors import ConfigError, NumericalError
from fracmech.strains import StrainFamily

import oracles


def _write(tmp_path, body, name="cfg.ini"):
    path = tmp_path / name
    path.write_text("[experiment]\n" + body)
    return path


# --- parse_config -----------------------------------------------------------------

def test_minimal_config(tmp_path):
    cfg = ex.parse_config(_write(tmp_path, "motion = linear\nalpha = 0.5\n"))
    assert cfg.motion == "linear"
    assert cfg.alpha_values == (0.5,)
    assert cfg.m == 100


def test_full_config(tmp_path):
    cfg = ex.parse_config(_write(tmp_path, (
        "motion = exponential\nalpha = 0.3, 1\nell = 0.5, 0.05\nratio = 1, 3\n"
        "x_min = 0.5\nx_max = 1.0\nx_count = 6\nm = 50\n"
        "families = classical, frac_material, frac_spatial, alpha ; all four\n"
        "output = out.csv\nclamp_boundary = yes\nbody_lower = 0\nbody_upper = 2\n")))
    assert cfg.ell_values == (0.5, 0.05) and cfg.anisotropy_ratios == (1.0, 3.0)
    assert cfg.x_grid == (0.5, 1.0, 6) and cfg.m == 50
    assert cfg.strain_families == tuple(StrainFamily)
    assert cfg.output_path == "out.csv" and cfg.clamp_boundary
    assert cfg.box().lower[0] == 0.0


def test_alpha_out_of_range_names_field(tmp_path):
    with pytest.raises(ConfigError) as info:
        ex.parse_config(_write(tmp_path, "alpha = 0.5, 1.5\nm = 1\n"))
    text = str(info.value)
    assert "alpha" in text and "1.5" in text and "m:" in text
    assert len(info.value.violations) == 2


def test_unknown_key_and_bad_values(tmp_path):
    with pytest.raises(ConfigError) as info:
        ex.parse_config(_write(tmp_path, "colour = red\nx_count = many\n"))
    assert any("colour" in v for v in info.value.violations)
    assert any("x_count" in v for v in info.value.violations)


def test_syntax_error_and_missing_file(tmp_path):
    bad = tmp_path / "bad.ini"
    bad.write_text("this is not ini\n")
    with pytest.raises(ConfigError):
        ex.parse_config(bad)
    with pytest.raises(ConfigError):
        ex.parse_config(tmp_path / "missing.ini")
    with pytest.raises(ConfigError):
        ex.parse_config(_write(tmp_path, "families = plastic\n"))


def test_box_exit_requires_clamp(tmp_path):
    body = "body_lower = 0.3\nbody_upper = 2\nell = 0.5\n"
    with pytest.raises(ConfigError, match="clamp_boundary"):
        ex.parse_config(_write(tmp_path, body))
    assert ex.parse_config(_write(tmp_path, body), clamp_boundary=True).clamp_boundary


# --- CSV ---------------------------------------------------------------------------

ROW = ex.ResultRow(0.5, 0.3, 0.05, 0.075, 0.025, "frac_material", 0.1, 1 / 3, math.pi,
                   -1e-300, 2.0 ** -1074, 1e300)


def test_csv_empty_and_single(tmp_path):
    path = tmp_path / "empty.csv"
    ex.emit_csv([], path)
    assert path.read_bytes() == b"X,alpha,ell,ell_L,ell_R,family,E11,E22,E33,e11,e22,e33\r\n"
    ex.emit_csv([ROW], path)
    assert len(path.read_bytes().splitlines()) == 2


def test_csv_round_trip_bit_exact(tmp_path):
    path = tmp_path / "rows.csv"
    rows = ex.run_sweep(ex.ExperimentConfig(x_grid=(0.5, 1.5, 3), alpha_values=(0.37, 1.0)))
    rows.append(ROW)
    ex.emit_csv(rows, path)
    assert ex.read_csv(path) == rows


# --- runners -----------------------------------------------------------------------

def test_example1_rows():
    rows = ex.run_example1(ex.EXAMPLE1_DEFAULTS)
    assert len(rows) == 3 * 5 * 3
    for r in rows:
        assert r.discrepancy <= 1e-6
        M = oracles.scale_factor(r.alpha, r.ell_L, r.ell_R, r.ell)
        assert r.M == pytest.approx(M, abs=1e-14)
        if r.alpha == 1.0:
            assert r.M == 1.0 and r.discrepancy == 0.0
        if r.ell_L == r.ell_R:
            assert r.E11 == pytest.approx(0.5 * (1.2 ** 2 - 1), abs=1e-6)
            assert abs(r.E22) < 1e-6
    r = next(r for r in ex.run_example1(ex.EXAMPLE1_DEFAULTS.replace(
        alpha_values=(0.5,), anisotropy_ratios=(9.0,), x_grid=(1.0, 1.0, 2))))
    assert (r.ell_L, r.ell_R) == pytest.approx((0.9, 0.1))
    assert r.E22 == pytest.approx(0.5 * (oracles.M_EXAMPLE ** 2 - 1), abs=1e-6)
    assert r.E22 == r.E33 and r.E22 < -0.05


def test_example1_needs_linear_motion():
    with pytest.raises(ConfigError):
        ex.run_example1(ex.ExperimentConfig())


def test_example2_alpha_one_rows_and_count():
    cfg = ex.EXAMPLE2_DEFAULTS.replace(strain_families=tuple(StrainFamily))
    rows = ex.run_example2(cfg)
    assert len(rows) == 21 * 4 * 3 * 3 * 4
    assert [(r.X, r.alpha, r.ell) for r in rows[:3]] == [(0.5, 0.3, 0.5)] * 3
    for r in rows:
        assert all(math.isfinite(getattr(r, k)) for k in ("E11", "E22", "E33", "e11", "e22", "e33"))
        if r.alpha == 1.0 or r.family == "classical":
            assert r.E11 == pytest.approx(0.5 * (math.exp(2 * r.X) - 1), abs=1e-8)
            assert r.e11 == pytest.approx(0.5 * (1 - math.exp(-2 * r.X)), abs=1e-8)


def test_example2_needs_exponential_motion():
    with pytest.raises(ConfigError):
        ex.run_example2(ex.ExperimentConfig(motion="linear"))


@pytest.mark.parametrize("motion", ["identity", "translation"])
def test_rigid_smoke_input_zero_strains(motion):
    cfg = ex.ExperimentConfig(motion=motion, strain_families=tuple(StrainFamily),
                              alpha_values=(0.4, 0.8), x_grid=(0.0, 1.0, 5))
    for r in ex.run_sweep(cfg):
        for k in ("E11", "E22", "E33", "e11", "e22", "e33"):
            assert abs(getattr(r, k)) < 1e-12


def test_sweep_writes_configured_output(tmp_path):
    out = tmp_path / "sweep.csv"
    rows = ex.run_sweep(ex.ExperimentConfig(x_grid=(0.5, 1.5, 2), output_path=str(out)))
    assert ex.read_csv(out) == rows


def test_non_finite_result_is_numerical_error():
    cfg = ex.ExperimentConfig(strain_families=(StrainFamily.FRAC_SPATIAL,), ell_values=(2.0,),
                              anisotropy_ratios=(9.0,), alpha_values=(0.5,), x_grid=(0.5, 0.6, 2))
    # x - ell_L drops below 0, where the inverse motion (a log) is undefined
    with pytest.raises(NumericalError):
        ex.run_sweep(cfg)


# --- CLI ---------------------------------------------------------------------------

def test_cli_derive(capsys):
    assert cli.main(["derive", "--function", "exp", "--t", "0.3", "--alpha", "0.4",
                     "--ell-left", "0.7", "--ell-right", "0.2", "--m", "10000"]) == 0
    value = float(capsys.readouterr().out)
    assert value == pytest.approx(oracles.EXP_RC, abs=1e-8)


def test_cli_derive_invalid_order(capsys):
    assert cli.main(["derive", "--t", "0", "--alpha", "1.5", "--ell-left", "1",
                     "--ell-right", "1"]) == 1
    assert "invalid" in capsys.readouterr().err


def test_cli_example1_stdout(capsys):
    assert cli.main(["example1"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("X,alpha,ell,ell_L,ell_R,M,F11")
    assert len(out) == 1 + 45


def test_cli_exit_codes(tmp_path, capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["sweep"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        cli.main(["nonsense"])
    assert info.value.code == 1
    assert cli.main(["example2", "--config", str(tmp_path / "missing.ini")]) == 1
    bad = _write(tmp_path, "alpha = 2\n")
    assert cli.main(["sweep", "--config", str(bad)]) == 1
    boom = _write(tmp_path, "families = frac_spatial\nell = 2\nratio = 9\nalpha = 0.5\n"
                            "x_min = 0.5\nx_max = 0.6\nx_count = 2\n", "boom.ini")
    assert cli.main(["sweep", "--config", str(boom)]) == 2
    boxed = _write(tmp_path, "body_lower = 0.3\nbody_upper = 2\nell = 0.5\nx_count = 3\n", "box.ini")
    assert cli.main(["sweep", "--config", str(boxed)]) == 1
    out = tmp_path / "clamped.csv"
    with pytest.warns(RuntimeWarning):
        assert cli.main(["sweep", "--config", str(boxed), "--clamp-boundary", "--out", str(out)]) == 0
    assert len(ex.read_csv(out)) == 3 * 4 * 2


def test_cli_out_file(tmp_path):
    out = tmp_path / "e2.csv"
    cfg = _write(tmp_path, "alpha = 0.5, 1\nell = 0.05\nx_count = 4\n")
    assert cli.main(["example2", "--config", str(cfg), "--out", str(out)]) == 0
    assert len(ex.read_csv(out)) == 4 * 2 * 2
