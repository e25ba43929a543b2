from pathlib import Path

import pytest

from src.cli import main
from src.cli.parser import build_parser, collect_overrides
from src.core.constants import MANIFEST_FILENAME
from src.core.utils import json_utils

SMALL_CONFIG = """
[simulation]
steps = 300
q_var_steps = 20000

[objective]
replications = 2
block_length = 20
resamples = 40

[search]
nm_iterations = 2
"""


@pytest.fixture
def config_file(tmp_path: Path) -> Path:
    path = tmp_path / "config.toml"
    path.write_text(SMALL_CONFIG, encoding="utf-8")
    return path


@pytest.fixture
def output_dir(tmp_path: Path) -> Path:
    return tmp_path / "output"


def run(command: str, output_dir: Path, config_file: Path, *extra: str) -> int:
    return main([command, "--output-dir", str(output_dir), "--config", str(config_file), *extra])


@pytest.fixture
def bars_file(output_dir: Path, config_file: Path) -> Path:
    assert run("synthesize", output_dir, config_file, "--sessions", "1", "--seed", "11") == 0
    assert run("ingest", output_dir, config_file, str(output_dir / "ticks.csv")) == 0
    return output_dir / "bars.csv"


def test_overrides_skip_unset_flags() -> None:
    args = build_parser().parse_args(["calibrate", "--method", "nm", "--data", "bars.csv"])
    assert collect_overrides(args) == {}


def test_overrides_map_flags_to_sections() -> None:
    args = build_parser().parse_args(
        ["surface", "--pair", "alpha,mu", "--data", "b.csv", "--points", "8", "--mu", "0.05"]
    )

    assert collect_overrides(args) == {
        "search": {"surface_points": 8},
        "simulation": {"mu": 0.05},
    }


def test_missing_required_flag_exits_with_usage_error() -> None:
    with pytest.raises(SystemExit) as error:
        main(["calibrate", "--method", "nm"])
    assert error.value.code == 2


#


def test_synthesize_and_ingest(bars_file: Path, output_dir: Path) -> None:
    rows = bars_file.read_text(encoding="utf-8").splitlines()

    assert rows[0] == "day,minute,log_price,carried_forward"
    assert len(rows) == 461

    manifests = (output_dir / MANIFEST_FILENAME).read_text(encoding="utf-8").splitlines()
    assert [json_utils.decode(line)["command"] for line in manifests] == ["synthesize", "ingest"]
    assert json_utils.decode(manifests[0])["seeds"] == [11]


def test_malformed_tick_file_is_a_data_error(
    tmp_path: Path, output_dir: Path, config_file: Path
) -> None:
    path = tmp_path / "bad.csv"
    path.write_text("timestamp,kind,price,volume,bid,ask\n1,Quote,,,2.0,1.0\n", encoding="utf-8")

    assert run("ingest", output_dir, config_file, str(path)) == 2
    assert not (output_dir / MANIFEST_FILENAME).exists()


def test_missing_input_is_an_io_error(
    tmp_path: Path, output_dir: Path, config_file: Path
) -> None:
    assert run("ingest", output_dir, config_file, str(tmp_path / "missing.csv")) == 2


def test_invalid_config_is_a_configuration_error(tmp_path: Path, output_dir: Path) -> None:
    path = tmp_path / "bad.toml"
    path.write_text("workers = 0\n", encoding="utf-8")

    assert run("acf", output_dir, path, "--source", "simulation", "signs.csv") == 1
    assert run("acf", output_dir, tmp_path / "absent.toml", "--source", "data", "x.csv") == 1


def test_zero_persistence_increment_is_a_numeric_error(
    output_dir: Path, config_file: Path
) -> None:
    assert run("simulate", output_dir, config_file, "--delta-s", "0") == 3


#


def test_simulate_writes_run_files(output_dir: Path, config_file: Path) -> None:
    assert run("simulate", output_dir, config_file, "--as-bars", "--snapshot-every", "100") == 0

    directory = output_dir / "simulation"
    for name in ("simulation.csv", "signs.csv", "snapshots.csv", "bars.csv"):
        assert (directory / name).is_file()


def test_acf_of_constant_signs(tmp_path: Path, output_dir: Path, config_file: Path) -> None:
    path = tmp_path / "constant.csv"
    path.write_text("index,sign\n" + "".join(f"{i},-1\n" for i in range(50)), encoding="utf-8")

    code = run(
        "acf", output_dir, config_file, "--source", "simulation", str(path), "--max-lag", "5"
    )

    assert code == 0
    rows = (output_dir / "acf" / "constant_acf.csv").read_text(encoding="utf-8").splitlines()
    assert rows[0] == "lag,acf,noise_band"
    assert [row.split(",")[1] for row in rows[1:]] == ["1.0"] * 5


def test_calibrate_writes_interval_table(
    bars_file: Path, output_dir: Path, config_file: Path
) -> None:
    code = run(
        "calibrate",
        output_dir,
        config_file,
        "--method",
        "nm",
        "--data",
        str(bars_file),
        "--experiments",
        "2",
    )

    assert code == 0
    directory = output_dir / "calibration" / "nm"
    rows = (directory / "ci.csv").read_text(encoding="utf-8").splitlines()
    assert rows[0] == "parameter,lower,upper,std_err"
    assert [row.split(",")[0] for row in rows[1:]] == [
        "delta",
        "lambda0",
        "c_lambda",
        "delta_s",
        "alpha",
        "mu",
    ]
    assert (directory / "weights.json").is_file()
    assert (directory / "experiment_42.json").is_file()
    assert (directory / "evaluations_43.csv").is_file()


def test_surface_writes_requested_points(
    bars_file: Path, output_dir: Path, config_file: Path
) -> None:
    code = run(
        "surface",
        output_dir,
        config_file,
        "--pair",
        "lambda0,c_lambda",
        "--data",
        str(bars_file),
        "--points",
        "4",
    )

    assert code == 0
    rows = (output_dir / "surface" / "lambda0_c_lambda.csv").read_text(encoding="utf-8")
    assert len(rows.splitlines()) == 5


def test_surface_rejects_single_parameter(
    bars_file: Path, output_dir: Path, config_file: Path
) -> None:
    code = run("surface", output_dir, config_file, "--pair", "mu", "--data", str(bars_file))
    assert code == 1


def test_moments_writes_comparison(bars_file: Path, output_dir: Path, config_file: Path) -> None:
    code = run("moments", output_dir, config_file, "--data", str(bars_file), "--paths", "2")

    assert code == 0
    rows = (output_dir / "moments" / "comparison.csv").read_text(encoding="utf-8").splitlines()
    assert [row.split(",")[0] for row in rows[1:]] == ["m1", "m2", "m3", "m_ks", "m4"]
    assert (output_dir / "moments" / "empirical.csv").is_file()


def test_moments_need_two_paths(bars_file: Path, output_dir: Path, config_file: Path) -> None:
    code = run("moments", output_dir, config_file, "--data", str(bars_file), "--paths", "1")
    assert code == 1


def test_sweep_writes_one_block_per_value(output_dir: Path, config_file: Path) -> None:
    code = run(
        "sweep",
        output_dir,
        config_file,
        "--values",
        "0.01,0.05",
        "--ensemble",
        "2",
        "--max-lag",
        "5",
    )

    assert code == 0
    rows = (output_dir / "sweep" / "delta_s.csv").read_text(encoding="utf-8").splitlines()
    assert rows[0] == "delta_s,lag,acf,noise_band"
    assert [row.split(",")[0] for row in rows[1:]] == ["0.01"] * 5 + ["0.05"] * 5


def test_sweep_rejects_malformed_values(output_dir: Path, config_file: Path) -> None:
    assert run("sweep", output_dir, config_file, "--values", "0.01,abc") == 1


DESK_CONFIG = """
[simulation]
q_var_steps = 20000
"""

NARROW_BOUNDS_CONFIG = SMALL_CONFIG + """
[search.bounds.c_lambda]
lower = 5.0
upper = 6.0
"""


def test_desk_profile_surface_runs_without_block_override(
    tmp_path: Path, output_dir: Path
) -> None:
    path = tmp_path / "desk.toml"
    path.write_text(DESK_CONFIG, encoding="utf-8")
    assert run("synthesize", output_dir, path, "--sessions", "2", "--seed", "11") == 0
    assert run("ingest", output_dir, path, str(output_dir / "ticks.csv")) == 0

    code = run(
        "surface",
        output_dir,
        path,
        "--profile",
        "desk",
        "--pair",
        "lambda0,c_lambda",
        "--data",
        str(output_dir / "bars.csv"),
        "--points",
        "4",
        "--replications",
        "1",
    )

    assert code == 0
    rows = (output_dir / "surface" / "lambda0_c_lambda.csv").read_text(encoding="utf-8")
    assert len(rows.splitlines()) == 5


def test_short_run_for_block_length_is_a_configuration_error(
    bars_file: Path, output_dir: Path, config_file: Path
) -> None:
    code = run(
        "surface",
        output_dir,
        config_file,
        "--pair",
        "lambda0,c_lambda",
        "--data",
        str(bars_file),
        "--steps",
        "100",
    )
    assert code == 1


def test_surface_honours_configured_bounds(
    tmp_path: Path, bars_file: Path, output_dir: Path
) -> None:
    path = tmp_path / "narrow.toml"
    path.write_text(NARROW_BOUNDS_CONFIG, encoding="utf-8")

    code = run(
        "surface",
        output_dir,
        path,
        "--pair",
        "lambda0,c_lambda",
        "--data",
        str(bars_file),
        "--points",
        "4",
    )

    assert code == 0
    rows = (output_dir / "surface" / "lambda0_c_lambda.csv").read_text(encoding="utf-8")
    c_lambdas = [float(row.split(",")[1]) for row in rows.splitlines()[1:]]
    assert c_lambdas
    assert all(5.0 <= value <= 6.0 for value in c_lambdas)
