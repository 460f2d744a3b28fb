import io
import json
import sys
from contextlib import redirect_stderr, redirect_stdout

import pytest

from nonfield.cli import main
from nonfield.refdata import data_file


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        try:
            code = main(list(argv))
        except SystemExit as exc:  # argparse usage errors
            code = exc.code
    return code, out.getvalue(), err.getvalue()


class TestReproduce:
    @pytest.mark.parametrize("table", ["heII", "hydrogen", "liI",
                                       "nuclei_mirror_levels",
                                       "nuclei_mirror_excitations",
                                       "nuclei_notmirror"])
    def test_tables_pass(self, table):
        code, out, _ = run_cli("reproduce", "--table", table)
        assert code == 0
        doc = json.loads(out)
        assert doc["pass"] is True

    def test_heII_max_dev_printed(self):
        code, out, _ = run_cli("reproduce", "--table", "heII")
        assert code == 0
        assert json.loads(out)["max_dev"] <= 2e-5

    def test_failure_exit_code(self):
        code, out, _ = run_cli("reproduce", "--table", "heII", "--tol", "1e-12")
        assert code == 1
        assert json.loads(out)["pass"] is False


class TestSolve:
    def test_coherent_triple(self):
        code, out, _ = run_cli("solve", "coherent", "--k", "1", "--count", "3")
        assert code == 0
        roots = [float(v) for v in json.loads(out)["roots"]]
        assert roots == pytest.approx([-1.7320508, 0.0, 1.7320508], abs=1e-7)

    def test_gluonic(self):
        code, out, _ = run_cli("solve", "gluonic", "--m", "1", "--g2", "1",
                               "--g4", "1", "--n", "1", "--l", "0")
        doc = json.loads(out)
        assert code == 0
        assert max(abs(v) for v in doc["identities"]) < 1e-9

    def test_coherence(self):
        code, out, _ = run_cli("solve", "coherence", "--case",
                               "coulomb_w_vacuum", "--u0", "-1")
        assert code == 0
        assert json.loads(out)["solved"] == {"s0": -2.0, "q": -1.0}


class TestNuclei:
    def test_levels_6li_so(self):
        code, out, _ = run_cli("nuclei", "levels", "--z", "3", "--a", "6",
                               "--calibration", "so", "--format", "json")
        assert code == 0
        rows = {r["state"]: float(r["pair_mev"]) for r in json.loads(out)}
        assert rows["0,0+"] == pytest.approx(21.065, abs=0.01)

    def test_config_12c(self):
        code, out, _ = run_cli("nuclei", "config", "--file",
                               str(data_file("config_12C.json")))
        assert code == 0
        doc = json.loads(out)
        assert doc["binding_with_subtraction_mev"] == pytest.approx(91.64, abs=0.05)

    def test_excite_and_match(self):
        code, out, _ = run_cli(
            "nuclei", "excite", "--file", str(data_file("config_4He.json")),
            "--rules", str(data_file("rules_4He.json")), "--format", "json")
        assert code == 0
        energies = [float(r["energy_mev"]) for r in json.loads(out)]
        assert len(energies) == 11
        code, out, _ = run_cli(
            "nuclei", "match", "--file", str(data_file("config_4He.json")),
            "--rules", str(data_file("rules_4He.json")),
            "--observed", "23.64,25.28", "--tol", "0.4", "--format", "json")
        assert code == 0
        assert len(json.loads(out)) == 2

    def test_chain(self):
        code, out, _ = run_cli("nuclei", "chain", "--p", "8")
        assert code == 0
        assert json.loads(out)["max_a"] == 29

    def test_chain_no_limit(self):
        code, out, _ = run_cli("nuclei", "chain", "--p", "2", "--k1", "0")
        assert json.loads(out)["max_a"] == "no-limit"


class TestAtomicCli:
    def test_spectrum_json(self):
        code, out, _ = run_cli("atomic", "spectrum", "--system", "heII",
                               "--format", "json")
        assert code == 0
        rows = {r["state"]: r["transition_ev"] for r in json.loads(out)}
        assert float(rows["2p3/2"]) == pytest.approx(40.8137552, abs=2e-6)

    def test_li(self):
        code, out, _ = run_cli("li", "--format", "json")
        rows = {(r["n"], r["l"]): float(r["transition_ev"])
                for r in json.loads(out)}
        assert rows[(3, 1)] == pytest.approx(3.834250, abs=5e-5)


class TestContract:
    def test_usage_error_is_2(self):
        code, _, _ = run_cli("nuclei", "levels")  # missing --z/--a
        assert code == 2
        code, _, _ = run_cli("bogus")
        assert code == 2

    def test_deterministic_output(self):
        first = run_cli("atomic", "spectrum", "--system", "heII")
        second = run_cli("atomic", "spectrum", "--system", "heII")
        assert first[1] == second[1]

    def test_version_banner_on_stderr(self):
        _, out, err = run_cli("solve", "coherent", "--k", "1", "--count", "2")
        assert "nonfield" in err
        assert "nonfield" not in out

    def test_waves_and_fluid(self, tmp_path):
        csv = tmp_path / "traj.csv"
        code, out, _ = run_cli("waves", "integrate", "--p0", "0.5", "--dp0",
                               "0.3", "--v0", "0.5", "--dv0", "0.3",
                               "--x-end", "0.1", "--step", "0.01",
                               "--csv", str(csv))
        assert code == 0
        assert csv.read_text().startswith("x,p,dp,v,dv,first_integral")
        code, out, _ = run_cli("waves", "turning", "--c", "-0.36787944117144233")
        doc = json.loads(out)
        assert doc["p_minus"] == pytest.approx(1.0, abs=1e-6)
        code, out, _ = run_cli("fluid", "ideal", "--k", "1", "--x", "1",
                               "--c", "1")
        assert json.loads(out)["v"] == pytest.approx(2 ** -0.5, rel=1e-12)
