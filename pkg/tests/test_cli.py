"""Command-line interface: payload schemas, exit codes, determinism."""

import csv
import io
import json
import math

import pytest

from loopgas import CharacterSpec, GenSeries, decompose
from loopgas.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestPartition:
    def test_series_decomposes_into_ising_characters(self, capsys):
        code, out, _ = run(
            capsys, "partition", "--n", "1", "--phase", "dilute",
            "--order", "40", "--backend", "exact", "--format", "json",
        )
        assert code == 0
        Z = GenSeries.from_json_dict(json.loads(out))
        basis = [CharacterSpec(3, 4, 1, 1), CharacterSpec(3, 4, 1, 3)]
        assert decompose(Z, basis) == {basis[0]: 1, basis[1]: 1}

    def test_csv_matches_json_values(self, capsys):
        args = ("partition", "--n", "0", "--phase", "dense", "--order", "20")
        _, out_json, _ = run(capsys, *args, "--format", "json")
        _, out_csv, _ = run(capsys, *args, "--format", "csv")
        Z = GenSeries.from_json_dict(json.loads(out_json))
        rows = list(csv.reader(io.StringIO(out_csv)))
        assert rows[0] == ["exponent", "coefficient"]
        assert len(rows) - 1 == len(Z.terms)

    def test_naive_flag(self, capsys):
        code, out, _ = run(
            capsys, "partition", "--n", "1", "--phase", "dilute", "--naive",
            "--order", "12",
        )
        assert code == 0
        assert json.loads(out)["backend"] == "floating"

    def test_parity_flag(self, capsys):
        code, out, _ = run(
            capsys, "partition", "--n", "1.7320508075688772", "--phase", "dense",
            "--parity", "even", "--order", "20", "--backend", "exact",
        )
        assert code == 0
        assert json.loads(out)["terms"][0]["exponent"] == "-1/30"


class TestDuality:
    def test_residual_reported_and_exit_zero(self, capsys):
        code, out, _ = run(
            capsys, "duality", "--n", "1", "--phase", "dense", "--ratio", "1",
            "--order", "64",
        )
        assert code == 0
        row = json.loads(out)
        assert row["residual"] < 1e-8
        assert abs(math.log(row["q"]) * math.log(row["q_tilde"]) - 2 * math.pi**2) < 1e-12

    def test_identity_failure_exit_code(self, capsys):
        code, _, err = run(
            capsys, "duality", "--n", "1", "--phase", "dense", "--ratio", "1",
            "--order", "64", "--tol", "1e-18",
        )
        assert code == 4 and "identity" in err

    def test_tail_bound_exit_code(self, capsys):
        code, _, err = run(
            capsys, "duality", "--n", "1", "--phase", "dilute", "--ratio", "0.2",
            "--order", "8",
        )
        assert code == 5 and "tail" in err


class TestCharactersCommand:
    def test_potts3_even(self, capsys):
        code, out, _ = run(
            capsys, "characters", "--n", "1.7320508075688772", "--phase", "dense",
            "--parity", "even", "--order", "40",
        )
        assert code == 0
        assert json.loads(out) == {
            "model": {"p": 5, "q": 6},
            "terms": [
                {"r": 1, "s": 1, "coefficient": 1},
                {"r": 1, "s": 3, "coefficient": 2},
                {"r": 1, "s": 5, "coefficient": 1},
            ],
        }

    def test_modified_wrap_weight_fails_decomposition(self, capsys):
        code, _, err = run(
            capsys, "characters", "--n", "1", "--phase", "dilute",
            "--n-prime", "0.5", "--order", "30",
        )
        assert code == 4 and "identity" in err

    def test_generic_point_rejected(self, capsys):
        code, _, err = run(
            capsys, "characters", "--n", "1.5", "--phase", "dilute", "--order", "20",
        )
        assert code == 3 and "domain" in err


class TestEvaluationCommands:
    def test_crossing_csv_row(self, capsys):
        code, out, _ = run(
            capsys, "crossing", "--q", "0.5", "--order", "64", "--format", "csv",
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["q", "P", "tail_bound"]
        p = float(rows[1][1])
        assert 0.0 < p < 1.0

    def test_crossing_requires_exactly_one_modulus(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(capsys, "crossing", "--q", "0.5", "--ratio", "1.0")
        assert exc.value.code == 2

    def test_saw_row(self, capsys):
        code, out, _ = run(
            capsys, "saw", "--phase", "dilute", "--q", "0.3", "--order", "64",
        )
        assert code == 0
        row = json.loads(out)
        assert row["Z1"] > 0 and row["tail_bound"] < 1e-10

    def test_logcft_series(self, capsys):
        code, out, _ = run(capsys, "logcft", "--phase", "dense", "--order", "20")
        assert code == 0
        d = json.loads(out)
        assert d["backend"] == "floating"
        assert abs(d["terms"][0]["exponent"] - 1 / 12) < 1e-12
        assert abs(d["terms"][0]["coefficient"] + 1 / math.pi) < 1e-12

    def test_boundary_row(self, capsys):
        code, out, _ = run(
            capsys, "boundary", "--g", "1.5", "--alpha1", "0.3", "--alpha2", "0.1",
        )
        assert code == 0
        row = json.loads(out)
        assert abs(row["e1_cutoff_finite"] - row["e1_zeta"]) < 1e-6
        assert abs(row["c_effective"] - (1 - 24 / 1.5 * 0.16)) < 1e-12


class TestSweep:
    def test_crossing_sweep_monotone(self, capsys):
        values = ",".join(str(q / 10.0) for q in range(1, 10))
        code, out, _ = run(
            capsys, "sweep", "--target", "crossing", "--values", values,
            "--order", "64", "--format", "csv",
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))[1:]
        assert len(rows) == 9
        ps = [float(r[1]) for r in rows]
        assert all(a > b for a, b in zip(ps, ps[1:]))  # falls with q

    def test_duality_sweep(self, capsys):
        code, out, _ = run(
            capsys, "sweep", "--target", "duality", "--n", "1", "--phase",
            "dilute", "--values", "0.5,1,2", "--order", "64",
        )
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 3
        assert all(r["residual"] < 1e-8 for r in rows)

    def test_saw_crossed_ratio_tends_to_one(self, capsys):
        code, out, _ = run(
            capsys, "sweep", "--target", "saw", "--phase", "dilute", "--crossed",
            "--values", "1e-4,1e-8,1e-12", "--order", "64",
        )
        assert code == 0
        rows = json.loads(out)
        ratios = [r["ratio_to_log_asymptote"] for r in rows]
        assert ratios[0] < ratios[1] < ratios[2] < 1.0

    def test_saw_sweep_needs_phase(self, capsys):
        code, _, err = run(
            capsys, "sweep", "--target", "saw", "--values", "0.1",
        )
        assert code == 3 and "phase" in err


class TestOutputHandling:
    def test_deterministic_bytes(self, tmp_path, capsys):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for path in (a, b):
            code = main(
                ["crossing", "--q", "0.37", "--order", "48", "--output", str(path)]
            )
            assert code == 0
        assert a.read_bytes() == b.read_bytes()

    def test_outdir_env(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("LOOPGAS_OUTDIR", str(tmp_path))
        code = main(["crossing", "--q", "0.4", "--order", "32", "--output", "row.json"])
        assert code == 0
        assert (tmp_path / "row.json").exists()

    def test_unknown_command_usage_exit(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_domain_error_exit(self, capsys):
        code, _, err = run(capsys, "partition", "--n", "3", "--phase", "dilute")
        assert code == 3 and "domain" in err

    def test_order_floor(self, capsys):
        code, _, err = run(
            capsys, "partition", "--n", "1", "--phase", "dilute", "--order", "4"
        )
        assert code == 3
