import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from emission_model.cli import main, parse_config_text

GOLDEN = Path(__file__).parent / "golden"

DATASET = """symbol,z,a,binding_energy_mev,half_life_s,decay_mode
He,2,4,28.2957,,stable
C,6,12,92.162,,stable
O,8,15,111.955,122.24,beta_plus
"""


@pytest.fixture
def runner():
    return CliRunner()


def _run(runner, args, **kw):
    return runner.invoke(main, args, catch_exceptions=False, **kw)


def test_binding_matches_golden(runner, tmp_path):
    out = tmp_path / "binding.csv"
    result = _run(runner, ["binding", "--fixture", "appendix2", "-o", str(out)])
    assert result.exit_code == 0
    assert out.read_bytes() == (GOLDEN / "binding_appendix2.csv").read_bytes()
    summary = json.loads((tmp_path / "binding.csv.summary.json").read_text())
    assert summary == {"count": 55, "k_star": 0.01972}


@pytest.mark.parametrize(
    "args",
    [
        ["k-coeff", "--fixture", "appendix1"],
        ["binding", "--fixture", "appendix2"],
        ["compare"],
        ["compare", "--mode", "recompute"],
        ["infer-stable"],
        ["dynamics-check", "--trials", "200"],
    ],
)
@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_outputs_byte_identical(runner, tmp_path, args, fmt):
    blobs = []
    for i in range(2):
        out = tmp_path / f"run{i}.{fmt}"
        assert _run(runner, [*args, "--format", fmt, "-o", str(out)]).exit_code == 0
        blobs.append((out.read_bytes(), Path(str(out) + ".summary.json").read_bytes()))
    assert blobs[0] == blobs[1]
    if fmt == "json":
        assert isinstance(json.loads(blobs[0][0]), list)


def test_stdout_and_stderr_split(runner):
    result = _run(runner, ["infer-stable"])
    assert result.stdout.startswith("nuclide,decay_mode,k_i,tau_s,k_j")
    assert '"psi_lo"' in result.stderr
    assert '"psi_lo"' not in result.stdout


def test_k_star_zero_keeps_corrections(runner):
    result = _run(runner, ["binding", "--fixture", "appendix2", "--k-star", "0", "--format", "json"])
    assert result.exit_code == 0
    rows = json.loads(result.stdout)
    for row in rows:
        assert row["volumetric"] == 0.0
        assert row["total"] == row["s"] + row["h"] + row["y"]


def test_dataset_input(runner, tmp_path):
    data = tmp_path / "nuclides.csv"
    data.write_text(DATASET)
    out = tmp_path / "k.json"
    result = _run(runner, ["k-coeff", "--dataset", str(data), "--format", "json", "-o", str(out)])
    assert result.exit_code == 0
    rows = json.loads(out.read_text())
    assert [r["nuclide"] for r in rows] == ["He-4", "C-12", "O-15"]
    assert rows[0]["binding_energy_source"] == "dataset"


def test_config_file_and_flag_precedence(runner, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# comment\nk_star = 0.02\nformat = json\n")
    out = tmp_path / "b.json"
    _run(runner, ["binding", "--fixture", "appendix2", "--config", str(cfg), "-o", str(out)])
    assert json.loads(Path(str(out) + ".summary.json").read_text())["k_star"] == 0.02
    _run(runner, ["binding", "--fixture", "appendix2", "--config", str(cfg), "--k-star", "0.01", "-o", str(out)])
    assert json.loads(Path(str(out) + ".summary.json").read_text())["k_star"] == 0.01


def test_constant_overrides_change_output(runner):
    base = _run(runner, ["k-coeff", "--fixture", "appendix1"]).stdout
    literal = _run(runner, ["k-coeff", "--fixture", "appendix1", "--k-constant", "literal_01349"]).stdout
    heavier = _run(runner, ["k-coeff", "--fixture", "appendix1", "--m-n", "1.01"]).stdout
    assert base != literal and base != heavier


def test_output_dir_env(runner, tmp_path):
    result = _run(runner, ["compare"], env={"EMISSION_MODEL_OUTPUT_DIR": str(tmp_path)})
    assert result.exit_code == 0
    assert (tmp_path / "compare.csv").exists()
    assert json.loads((tmp_path / "compare.csv.summary.json").read_text())["n_wins"] == 38


@pytest.mark.parametrize(
    "args",
    [
        ["k-coeff"],
        ["binding"],
        ["binding", "--fixture", "appendix2", "--k-star", "-1"],
        ["dynamics-check", "--trials", "0"],
        ["k-coeff", "--fixture", "appendix1", "--m-p", "-1"],
    ],
)
def test_invalid_input_exits_1(runner, args):
    result = runner.invoke(main, args)
    assert result.exit_code == 1
    assert "error:" in result.output


def test_empty_dataset_exits_1(runner, tmp_path):
    data = tmp_path / "empty.csv"
    data.write_text("symbol,z,a,binding_energy_mev,half_life_s,decay_mode\n")
    result = runner.invoke(main, ["k-coeff", "--dataset", str(data)])
    assert result.exit_code == 1
    assert "empty" in result.output


def test_malformed_dataset_reports_location(runner, tmp_path):
    data = tmp_path / "bad.csv"
    data.write_text("symbol,z,a,binding_energy_mev,half_life_s,decay_mode\nHe,2,four,28.3,,stable\n")
    result = runner.invoke(main, ["k-coeff", "--dataset", str(data)])
    assert result.exit_code == 1
    assert "line 2" in result.output


def test_failed_check_exits_2(runner, monkeypatch):
    from emission_model import checks, cli

    def failing(seed, trials, constants):
        return [checks.CheckResult("broken", "x = y", 1.0, 0.0, trials)]

    monkeypatch.setattr(cli, "run_identity_suite", failing)
    result = runner.invoke(main, ["dynamics-check"])
    assert result.exit_code == 2


def test_parse_config_errors():
    assert parse_config_text("seed = 4\n\n") == {"seed": 4}
    with pytest.raises(ValueError, match="line 1"):
        parse_config_text("nonsense")
    with pytest.raises(ValueError, match="unknown key"):
        parse_config_text("colour = red")
