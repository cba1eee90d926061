"""CLI surface: golden outputs, schemas, formats, and exit codes."""

import contextlib
import io
import json
import os

import pytest

from lintersect import cli

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def gpath(name):
    return os.path.join(GOLDEN, name)


def golden(name):
    with open(gpath(name), "r", encoding="utf-8") as fh:
        return fh.read()


def run(argv):
    buf = io.StringIO()
    err = io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(err):
        code = cli.main(argv)
    return code, buf.getvalue(), err.getvalue()


class TestBsupp:
    def test_consecutive_mod7_golden(self):
        code, out, _ = run(["bsupp", "--p", "7", "--L", "0,1,2"])
        assert code == 0
        assert out == golden("bsupp_p7_consecutive.json")

    def test_gap_mod5_golden(self):
        code, out, _ = run(["bsupp", "--p", "5", "--L", "0,2"])
        assert code == 0
        assert out == golden("bsupp_p5_gap.json")

    def test_integers_golden(self):
        code, out, _ = run(["bsupp", "--L", "1", "--integers"])
        assert code == 0
        assert out == golden("bsupp_int_one.json")

    def test_schema_tag(self):
        _, out, _ = run(["bsupp", "--p", "7", "--L", "0,1"])
        assert json.loads(out)["schema"] == "1"

    def test_missing_domain_is_validation_error(self):
        code, _, err = run(["bsupp", "--L", "0,1"])
        assert code == 2 and "error" in err

    def test_nonprime_rejected(self):
        code, _, _ = run(["bsupp", "--p", "6", "--L", "0,1"])
        assert code == 2

    def test_degenerate_basis_refused_cleanly(self):
        code, _, _ = run(["bsupp", "--p", "3", "--L", "0,1,2"])
        assert code == 2


class TestBound:
    def test_sharpness_golden(self):
        code, out, _ = run([
            "bound", "--theorem", "multilevel",
            "--family", gpath("family_sharpness_n4.txt"),
            "--L", "0,1", "--K", "1,2",
        ])
        assert code == 0
        assert out == golden("bound_multilevel_sharp.json")

    def test_star_golden(self):
        code, out, _ = run([
            "bound", "--theorem", "multilevel",
            "--family", gpath("family_star_n5.txt"),
            "--L", "0,1", "--K", "2",
        ])
        assert code == 0
        assert out == golden("bound_multilevel_star.json")

    def test_empty_family_golden(self):
        code, out, _ = run([
            "bound", "--theorem", "multilevel",
            "--family", gpath("family_empty_n4.txt"),
            "--L", "0,1", "--K", "1,2",
        ])
        assert code == 0
        assert out == golden("bound_multilevel_empty.json")

    def test_hypothesis_violation_still_exits_zero(self):
        code, out, _ = run([
            "bound", "--theorem", "modular-multilevel",
            "--family", gpath("family_sharpness_n4.txt"),
            "--L", "0,2", "--K", "2", "--p", "3",
        ])
        assert code == 0
        d = json.loads(out)
        assert not d["hypotheses_ok"] and d["violated"]

    def test_parse_error_exit_two(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("n=3\n1 9\n")
        code, _, err = run([
            "bound", "--theorem", "multilevel",
            "--family", str(bad), "--L", "0", "--K", "1",
        ])
        assert code == 2 and "line 2" in err

    def test_json_family_input(self, tmp_path):
        jf = tmp_path / "fam.json"
        jf.write_text(json.dumps({"n": 3, "sets": [[1], [2], [3]]}))
        code, out, _ = run([
            "bound", "--theorem", "multilevel",
            "--family-json", str(jf), "--L", "0", "--K", "1",
        ])
        assert code == 0
        assert json.loads(out)["family_size"] == 3

    def test_modular_theorem_needs_p(self):
        code, _, _ = run([
            "bound", "--theorem", "coeff",
            "--family", gpath("family_sharpness_n4.txt"),
            "--L", "0,1", "--K", "2",
        ])
        assert code == 2

    def test_every_theorem_runs(self):
        for theorem, extra in [
            ("abs-classic", []),
            ("multilevel", []),
            ("modular-multilevel", ["--p", "5"]),
            ("coeff", ["--p", "5"]),
            ("coeff-nonshadow", ["--p", "5"]),
            ("almost-initial", ["--p", "5"]),
            ("consecutive", ["--p", "5"]),
            ("nonmodular-support", []),
        ]:
            code, out, _ = run([
                "bound", "--theorem", theorem,
                "--family", gpath("family_sharpness_n4.txt"),
                "--L", "0,1", "--K", "3,4", *extra,
            ])
            assert code == 0, theorem
            json.loads(out)


class TestCertificate:
    def test_singletons_golden(self):
        code, out, _ = run([
            "certificate", "--kind", "witness",
            "--family", gpath("family_singletons_n3.txt"),
            "--L", "0", "--K", "1",
        ])
        assert code == 0
        d = json.loads(out)
        d.pop("elapsed_ms")
        assert json.dumps(d, indent=2, sort_keys=True) + "\n" == golden(
            "cert_singletons.json"
        )

    def test_gram_golden(self):
        code, out, _ = run([
            "certificate", "--kind", "gram",
            "--family", gpath("family_level2_n5.txt"),
            "--L", "0,1", "--p", "5",
        ])
        assert code == 0
        assert out == golden("cert_gram_level2.json")

    def test_incidence(self):
        code, out, _ = run([
            "certificate", "--kind", "incidence",
            "--family", gpath("family_level2_n5.txt"),
            "--L", "0,1", "--p", "5",
        ])
        d = json.loads(out)
        assert d["independent"] and d["rank"] == 10

    def test_violating_family_flag_surfaced(self, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_text("n=3\n1 2\n1 3\n")
        code, out, _ = run([
            "certificate", "--kind", "witness",
            "--family", str(f), "--L", "0", "--K", "2",
        ])
        assert code == 0
        d = json.loads(out)
        assert d["hypotheses_ok"] is False and d["violated"]

    def test_matrix_cap_refusal_exit_three(self):
        code, _, err = run([
            "certificate", "--kind", "witness",
            "--family", gpath("family_sharpness_n4.txt"),
            "--L", "0,1", "--K", "1,2", "--matrix-cap", "3",
        ])
        assert code == 3 and "refused" in err

    def test_include_matrix(self):
        code, out, _ = run([
            "certificate", "--kind", "witness",
            "--family", gpath("family_singletons_n3.txt"),
            "--L", "0", "--K", "1", "--include-matrix",
        ])
        d = json.loads(out)
        assert len(d["matrix"]) == d["rows"]


class TestShadow:
    def test_csv_golden(self):
        code, out, _ = run([
            "shadow", "--family", gpath("family_sharpness_n4.txt"), "--format", "csv"
        ])
        assert code == 0
        assert out == golden("shadow_sharp.csv")

    def test_single_level(self):
        code, out, _ = run([
            "shadow", "--family", gpath("family_star_n5.txt"), "--t", "2"
        ])
        d = json.loads(out)
        assert d["levels"] == [{"level": 2, "shadow": 4, "nonshadow": 6}]

    def test_level_out_of_range(self):
        code, _, _ = run([
            "shadow", "--family", gpath("family_star_n5.txt"), "--t", "9"
        ])
        assert code == 2


class TestSearch:
    def test_unattainability_golden(self):
        code, out, _ = run([
            "search", "--n", "5", "--K", "2,4", "--L", "0,1", "--p", "5"
        ])
        assert code == 0
        d = json.loads(out)
        d.pop("elapsed_s")
        assert json.dumps(d, indent=2, sort_keys=True) + "\n" == golden(
            "search_unattain_p5.json"
        )

    def test_csv_row(self):
        code, out, _ = run([
            "search", "--n", "4", "--K", "1,2", "--L", "0,1", "--format", "csv"
        ])
        lines = out.strip().splitlines()
        assert len(lines) == 2
        header = lines[0].split(",")
        row = dict(zip(header, lines[1].split(",")))
        assert row["max_size"] == "10" and row["proof_of_optimality"] == "1"

    def test_cap_exit_three(self):
        code, _, _ = run(["search", "--n", "15", "--K", "2", "--L", "0"])
        assert code == 3

    def test_budget_zero_unproven(self):
        code, out, _ = run([
            "search", "--n", "5", "--K", "2,4", "--L", "0,1", "--p", "5",
            "--time-budget", "0",
        ])
        assert code == 0
        assert json.loads(out)["proof_of_optimality"] is False


class TestSweep:
    def test_sharpness_csv_golden(self):
        code, out, _ = run([
            "sweep", "sharpness", "--n-max", "4", "--s-max", "2", "--format", "csv"
        ])
        assert code == 0
        assert out == golden("sweep_sharpness.csv")

    def test_unattainability_json(self):
        code, out, _ = run([
            "sweep", "unattainability", "--p", "3", "--n-max", "4"
        ])
        assert code == 0
        d = json.loads(out)
        assert all(r["max_size"] <= r["level_bound"] < r["abs_bound"] for r in d["rows"])

    def test_unattainability_needs_p(self):
        code, _, _ = run(["sweep", "unattainability", "--n-max", "4"])
        assert code == 2


class TestGen:
    def test_deterministic_golden(self):
        code, out, _ = run([
            "gen", "--n", "5", "--K", "2", "--L", "0,1", "--seed", "42"
        ])
        assert code == 0
        assert out == golden("gen_seed42.txt")

    def test_gen_pipes_into_bound(self, tmp_path):
        _, fam, _ = run([
            "gen", "--n", "6", "--K", "2,3", "--L", "0,1", "--seed", "7"
        ])
        f = tmp_path / "gen.txt"
        f.write_text(fam)
        code, out, _ = run([
            "bound", "--theorem", "multilevel",
            "--family", str(f), "--L", "0,1", "--K", "2,3",
        ])
        d = json.loads(out)
        assert d["hypotheses_ok"] and d["slack"] >= 0
