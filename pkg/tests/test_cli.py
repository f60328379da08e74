from __future__ import annotations

import json

import numpy as np
import pytest

from autonorm.cli.dependencies import clear_dependency_caches
from autonorm.cli.main import build_parser, main
from autonorm.core.config import clear_settings_cache


@pytest.fixture(autouse=True)
def _fresh_caches():
    clear_settings_cache()
    clear_dependency_caches()
    yield
    clear_settings_cache()
    clear_dependency_caches()


def write_table(path, n=60, seed=0):
    rng = np.random.default_rng(seed)
    columns = {
        "skewed": rng.lognormal(size=n),
        "left": -rng.lognormal(sigma=0.6, size=n),
        "plain": rng.normal(size=n),
    }
    lines = [",".join(columns)]
    lines.extend(",".join(repr(float(columns[name][i])) for name in columns) for i in range(n))
    path.write_text("\n".join(lines) + "\n")
    return path


def test_transform_writes_matrix_and_default_report(tmp_path, capsys):
    source = write_table(tmp_path / "in.csv")
    output = tmp_path / "out.csv"
    code = main(["transform", "--input", str(source), "--output", str(output), "--threads", "1"])
    assert code == 0
    header = output.read_text().splitlines()[0]
    assert header == "skewed,left,plain"
    report = json.loads((tmp_path / "out.report.json").read_text())
    assert [item["feature_name"] for item in report["features"]] == ["skewed", "left", "plain"]
    assert report["features"][0]["chosen_beta"] > 0
    assert report["features"][1]["chosen_beta"] < 0
    out = capsys.readouterr().out
    assert out.splitlines()[0].startswith("skewed\tbeta=")


def test_transform_output_is_byte_identical_across_thread_counts(tmp_path):
    source = write_table(tmp_path / "in.csv")
    for threads in ("1", "4"):
        code = main(
            [
                "transform",
                "--input",
                str(source),
                "--output",
                str(tmp_path / f"out{threads}.csv"),
                "--report",
                str(tmp_path / f"report{threads}.json"),
                "--threads",
                threads,
            ]
        )
        assert code == 0
    assert (tmp_path / "out1.csv").read_bytes() == (tmp_path / "out4.csv").read_bytes()
    assert (tmp_path / "report1.json").read_bytes() == (tmp_path / "report4.json").read_bytes()


def test_missing_input_exits_with_io_code_and_names_path(tmp_path, capsys):
    missing = tmp_path / "nope.csv"
    code = main(["transform", "--input", str(missing), "--output", str(tmp_path / "out.csv")])
    assert code == 4
    assert str(missing) in capsys.readouterr().err


def test_grid_without_zero_is_a_config_error(tmp_path, capsys):
    source = write_table(tmp_path / "in.csv")
    code = main(["transform", "--input", str(source), "--output", str(tmp_path / "o.csv"), "--grid", "1,2"])
    assert code == 2
    assert "error" in capsys.readouterr().err
    assert not (tmp_path / "o.csv").exists()


def test_non_numeric_cell_is_a_parse_error(tmp_path, capsys):
    source = tmp_path / "in.csv"
    source.write_text("a,b\n1,2\n3,x\n")
    code = main(["transform", "--input", str(source), "--output", str(tmp_path / "o.csv")])
    assert code == 3
    assert "line 3" in capsys.readouterr().err


def test_bad_config_file_is_a_config_error(tmp_path):
    config = tmp_path / "bad.conf"
    config.write_text("UNKNOWN=1\n")
    source = write_table(tmp_path / "in.csv")
    code = main(["--config", str(config), "transform", "--input", str(source), "--output", str(tmp_path / "o.csv")])
    assert code == 2


def test_config_file_supplies_grid(tmp_path):
    config = tmp_path / "run.conf"
    config.write_text("BETA_GRID=0\n")
    source = write_table(tmp_path / "in.csv")
    report_path = tmp_path / "r.json"
    code = main(
        [
            "--config",
            str(config),
            "transform",
            "--input",
            str(source),
            "--output",
            str(tmp_path / "o.csv"),
            "--report",
            str(report_path),
        ]
    )
    assert code == 0
    report = json.loads(report_path.read_text())
    assert report["config"]["beta_grid"] == [0.0]
    assert all(item["chosen_beta"] == 0.0 for item in report["features"])


def test_diagnose_writes_four_plots_per_feature_with_sidecars(tmp_path, capsys):
    source = write_table(tmp_path / "in.csv")
    plots = tmp_path / "plots"
    code = main(["diagnose", "--input", str(source), "--diagnostics-dir", str(plots), "--qq-points", "20"])
    assert code == 0
    svgs = sorted(path.name for path in plots.glob("*.svg"))
    assert len(svgs) == 12
    assert "skewed_kde_before.svg" in svgs
    assert "plain_qq_after.svg" in svgs
    assert len(list(plots.glob("*.csv"))) == 12
    assert "wrote 12 diagnostic plots" in capsys.readouterr().out


def test_diagnose_scatter_adds_before_and_after_pair(tmp_path):
    source = write_table(tmp_path / "in.csv")
    plots = tmp_path / "plots"
    code = main(["diagnose", "--input", str(source), "--diagnostics-dir", str(plots), "--scatter", "skewed,left"])
    assert code == 0
    assert (plots / "scatter_skewed_left_before.svg").is_file()
    assert (plots / "scatter_skewed_left_after.svg").is_file()


def test_diagnose_unknown_scatter_feature_is_a_config_error(tmp_path, capsys):
    source = write_table(tmp_path / "in.csv")
    code = main(
        ["diagnose", "--input", str(source), "--diagnostics-dir", str(tmp_path / "plots"), "--scatter", "skewed,ghost"]
    )
    assert code == 2
    assert "ghost" in capsys.readouterr().err


def test_diagnose_is_byte_identical_across_runs(tmp_path):
    source = write_table(tmp_path / "in.csv", n=40)
    for name in ("first", "second"):
        code = main(["diagnose", "--input", str(source), "--diagnostics-dir", str(tmp_path / name), "--seed", "3"])
        assert code == 0
    for path in sorted((tmp_path / "first").iterdir()):
        assert path.read_bytes() == (tmp_path / "second" / path.name).read_bytes()


def test_diagnose_is_byte_identical_across_thread_counts(tmp_path):
    source = write_table(tmp_path / "in.csv", n=40)
    for threads in ("1", "4"):
        code = main(
            [
                "diagnose",
                "--input",
                str(source),
                "--output",
                str(tmp_path / f"out{threads}.csv"),
                "--report",
                str(tmp_path / f"report{threads}.json"),
                "--diagnostics-dir",
                str(tmp_path / f"plots{threads}"),
                "--scatter",
                "skewed,left",
                "--seed",
                "3",
                "--threads",
                threads,
            ]
        )
        assert code == 0
    assert (tmp_path / "out1.csv").read_bytes() == (tmp_path / "out4.csv").read_bytes()
    assert (tmp_path / "report1.json").read_bytes() == (tmp_path / "report4.json").read_bytes()
    serial = sorted(path.name for path in (tmp_path / "plots1").iterdir())
    assert serial == sorted(path.name for path in (tmp_path / "plots4").iterdir())
    assert len(serial) == 28
    for name in serial:
        assert (tmp_path / "plots1" / name).read_bytes() == (tmp_path / "plots4" / name).read_bytes()


def test_transform_requires_output_flag(tmp_path):
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(["transform", "--input", str(tmp_path / "in.csv")])
    assert exc.value.code == 2
