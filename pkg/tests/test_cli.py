"""Command-line surface: parsing, precedence, CSV emission, exit codes."""

import subprocess
import sys

import pytest

from qaccel.cli import (
    EXIT_DOMAIN,
    EXIT_OK,
    EXIT_USAGE,
    main,
)


def run_cli(*argv):
    return main(list(argv))


def read_body(path):
    """CSV lines with the '#' metadata stripped."""
    lines = path.read_text().splitlines()
    return [l for l in lines if not l.startswith("#")]


class TestParsing:
    def test_no_arguments_is_usage_error(self, capsys):
        assert run_cli() == EXIT_USAGE

    def test_unknown_command_exits_two(self):
        with pytest.raises(SystemExit) as exc:
            run_cli("frobnicate")
        assert exc.value.code == 2

    def test_horizon_checked_before_computation(self, capsys):
        rc = run_cli("probability", "--scenario", "bob", "--a", "2", "--L", "1")
        assert rc == EXIT_DOMAIN
        assert "horizon" in capsys.readouterr().err

    def test_flag_overrides_config_file(self, tmp_path, capsys):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("m = 0.2\na = 0.5\nscenario = rob\n# comment line\n")
        out = tmp_path / "row.csv"
        rc = run_cli("probability", "--config", str(cfg), "--m", "2", "--out", str(out))
        assert rc == EXIT_OK
        text = out.read_text()
        assert "# m = 2.0" in text
        assert "# a = 0.5" in text

    def test_unknown_config_key_is_usage_error(self, tmp_path, capsys):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("masss = 0.2\n")
        rc = run_cli("probability", "--config", str(cfg), "--a", "0.5", "--scenario", "rob")
        assert rc == EXIT_USAGE
        assert "masss" in capsys.readouterr().err

    def test_missing_required_flag(self, capsys):
        assert run_cli("probability", "--scenario", "rob") == EXIT_USAGE

    def test_grid_spec_validation(self, capsys):
        rc = run_cli("sweep", "--grid", "nonsense", "--out", "/dev/null")
        assert rc == EXIT_DOMAIN


class TestOutputs:
    def test_probability_row(self, tmp_path):
        out = tmp_path / "p.csv"
        rc = run_cli("probability", "--scenario", "rob", "--a", "0.5", "--m", "2",
                     "--n1", "3", "--kmax", "4", "--out", str(out))
        assert rc == EXIT_OK
        header, row = read_body(out)
        cols = header.split(",")
        vals = dict(zip(cols, row.split(",")))
        assert vals["scenario"] == "rob"
        assert vals["n1"] == "3"
        assert vals["k_max"] == "4"
        total = float(vals["total"])
        parts = (float(vals["vacuum_sum"]) + float(vals["stimulated_corotating"])
                 + float(vals["stimulated_counterrotating"]))
        assert total == pytest.approx(parts, rel=1e-12)

    def test_modes_table(self, tmp_path):
        out = tmp_path / "modes.csv"
        rc = run_cli("modes", "--a", "1", "--m", "2", "--kmax", "3", "--out", str(out))
        assert rc == EXIT_OK
        body = read_body(out)
        assert body[0].startswith("k,nu,Omega,N,F@chi=")
        assert len(body) == 4
        first = body[1].split(",")
        assert int(first[0]) == 1
        # Omega = a * nu
        assert float(first[2]) == pytest.approx(1.0 * float(first[1]), rel=1e-12)

    def test_sweep_writes_csv_and_plot_script(self, tmp_path):
        out = tmp_path / "panel_c.csv"
        rc = run_cli("sweep", "--panel", "c", "--grid", "0.1:0.4:3:log",
                     "--out", str(out))
        assert rc == EXIT_OK
        body = read_body(out)
        assert body[0] == "a,p_rob,p_bob,ratio,rob_tail,bob_tail,flags"
        assert len(body) == 4
        script = tmp_path / "plot_panels.py"
        assert script.exists()
        assert "matplotlib" in script.read_text()

    def test_sweep_metadata_embeds_config_and_version(self, tmp_path):
        from qaccel import __version__

        out = tmp_path / "s.csv"
        run_cli("sweep", "--panel", "b", "--grid", "0.1:0.2:2:lin", "--out", str(out))
        text = out.read_text()
        assert f"# qaccel {__version__}" in text
        assert "# mode = stimulated" in text
        assert "# m = 0.2" in text

    def test_sweep_rerun_is_byte_identical(self, tmp_path):
        out = tmp_path / "sweep.csv"
        args = ["sweep", "--panel", "c", "--grid", "0.1:0.5:3:log", "--out", str(out)]
        run_cli(*args)
        first = out.read_bytes()
        run_cli(*args)
        assert out.read_bytes() == first

    def test_distinguish_structured_text(self, capsys):
        rc = run_cli("distinguish", "--p", "0.0", "--m", "2", "--n1", "1",
                     "--grid", "0.1:0.3:6:log")
        assert rc == EXIT_OK
        out = capsys.readouterr().out
        assert "classification: indistinguishable" in out
        assert "candidates.rob: -" in out

    def test_validate_specfun_dump(self, tmp_path):
        out = tmp_path / "oracle.csv"
        rc = run_cli("validate-specfun", "--out", str(out))
        assert rc == EXIT_OK
        body = read_body(out)
        assert body[0] == "nu,z,re,im,re_ref,im_ref,rel_err"
        assert len(body) == 50  # header + 49 grid points
        assert all(float(line.split(",")[-1]) <= 1e-10 for line in body[1:])


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qaccel.cli", "--version"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "qaccel" in proc.stdout
