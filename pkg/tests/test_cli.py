"""Tests for the command-line driver and the config schema."""

import json

import pytest

from abelianize import cli
from abelianize.config import (
    ConfigError,
    load_config,
    model_from_config,
    model_to_config,
)
from abelianize.quotient import grassmannian_model


def run(capsys, *argv):
    status = cli.main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


class TestSubcommands:
    def test_pairing(self, capsys):
        status, out, _ = run(capsys, "pairing", "--grassmannian", "2", "4", "--exps", "4,0")
        assert status == 0
        assert out == "2\n"

    def test_pairing_with_oracle(self, capsys):
        status, out, _ = run(
            capsys, "pairing", "--grassmannian", "2", "4", "--exps", "2,1", "--oracle"
        )
        assert status == 0
        assert out == "1\n"

    def test_pairing_table_csv(self, capsys):
        status, out, _ = run(
            capsys, "pairing", "--grassmannian", "2", "4", "--table", "--format", "csv"
        )
        assert status == 0
        assert out.splitlines() == ["m_1,m_2,value", "0,2,1", "2,1,1", "4,0,2"]

    def test_betti(self, capsys):
        status, out, _ = run(capsys, "betti", "--grassmannian", "2", "4")
        assert status == 0
        assert out == "1,1,2,1,1\n"

    def test_euler(self, capsys):
        status, out, _ = run(capsys, "euler", "--grassmannian", "2", "4")
        assert status == 0
        assert out == "6\n"

    def test_signature(self, capsys):
        status, out, _ = run(capsys, "signature", "--grassmannian", "2", "4")
        assert status == 0
        assert out == "2\n"

    def test_integrate_group_and_torus(self, capsys):
        status, out, _ = run(
            capsys, "integrate", "--grassmannian", "2", "4", "u1^3*u2^3", "--torus"
        )
        assert status == 0
        assert out == "1\n"
        status, out, _ = run(capsys, "integrate", "--grassmannian", "1", "2", "u1")
        assert status == 0
        assert out == "1\n"

    def test_charnum_matches_euler(self, capsys):
        _, chern_out, _ = run(
            capsys, "charnum", "--grassmannian", "2", "4", "--class", "total-chern"
        )
        _, euler_out, _ = run(capsys, "euler", "--grassmannian", "2", "4")
        assert chern_out == euler_out

    def test_charnum_custom_series(self, capsys):
        status, out, _ = run(
            capsys, "charnum", "--grassmannian", "1", "4", "--series", "1,0,0,0"
        )
        assert status == 0
        assert out == "0\n"

    def test_index_with_check(self, capsys):
        status, out, _ = run(
            capsys,
            "index",
            "--grassmannian",
            "2",
            "4",
            "--line",
            "1,1",
            "--check-two-term",
        )
        assert status == 0
        assert out == "6\n"

    def test_presentation_csv(self, capsys):
        status, out, _ = run(
            capsys, "presentation", "--grassmannian", "2", "4", "--format", "csv"
        )
        assert status == 0
        lines = out.splitlines()
        assert lines[0] == "degree,dim_invariants,dim_ann,betti"
        assert lines[1] == "0,1,0,1"
        assert lines[-1] == "4,2,1,1"

    def test_latex_fractions(self, capsys):
        status, out, _ = run(
            capsys,
            "integrate",
            "--grassmannian",
            "2",
            "4",
            "1/2*u1^3*u2^3",
            "--torus",
            "--latex",
        )
        assert status == 0
        assert out == "\\frac{1}{2}\n"

    def test_deterministic_output(self, capsys):
        _, first, _ = run(capsys, "presentation", "--grassmannian", "2", "5")
        _, second, _ = run(capsys, "presentation", "--grassmannian", "2", "5")
        assert first == second

    def test_oracle_check_full_sweep(self, capsys):
        status, out, _ = run(capsys, "oracle-check", "--max-k", "3", "--max-n", "7")
        assert status == 0
        lines = out.splitlines()
        assert len(lines) == 19  # 18 models plus the total line
        assert lines[-1].endswith("ok")

    def test_oracle_check_reports_mismatch(self, capsys, monkeypatch):
        from fractions import Fraction

        import abelianize.cli as climod

        monkeypatch.setattr(
            climod.schubert, "oracle_chern_pairing", lambda k, n, exps: Fraction(999)
        )
        status, _, err = run(capsys, "oracle-check", "--grassmannian", "1", "2")
        assert status == 3
        assert "999" in err

    def test_usage_errors_exit_2(self, capsys):
        status, _, err = run(capsys, "pairing", "--grassmannian", "2", "4")
        assert status == 2
        assert "--exps" in err
        status, _, err = run(capsys, "pairing", "--grassmannian", "2", "4", "--exps", "1")
        assert status == 2
        status, _, err = run(capsys, "euler")
        assert status == 2

    def test_unknown_subcommand_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["frobnicate"])
        assert exc.value.code == 2


def g24_config() -> dict:
    return model_to_config(grassmannian_model(2, 4))


class TestConfig:
    def test_round_trip_builtins(self):
        for k, n in [(1, 3), (2, 4), (3, 5)]:
            m = grassmannian_model(k, n)
            assert model_from_config(model_to_config(m)) == m

    def test_builtin_root_shortcut(self):
        doc = g24_config()
        doc["roots"] = "unitary:2"
        assert model_from_config(doc) == grassmannian_model(2, 4)

    def test_load_from_file(self, tmp_path, capsys):
        path = tmp_path / "g24.json"
        path.write_text(json.dumps(g24_config()))
        assert load_config(str(path)) == grassmannian_model(2, 4)
        status, out, _ = run(capsys, "euler", "--config", str(path))
        assert status == 0
        assert out == "6\n"

    def test_missing_file_exits_2(self, capsys):
        status, _, err = run(capsys, "euler", "--config", "/nonexistent.json")
        assert status == 2
        assert "config error" in err

    def test_schema_version_checked(self):
        doc = g24_config()
        doc["schema"] = "9"
        with pytest.raises(ConfigError, match="schema"):
            model_from_config(doc)

    def test_located_parse_error(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{ not json")
        with pytest.raises(ConfigError) as exc:
            load_config(str(path))
        assert "broken.json:1" in str(exc.value)

    def test_rational_strings_survive(self):
        doc = g24_config()
        doc["orbifold_prefactor"] = "3/4"
        m = model_from_config(doc)
        from fractions import Fraction

        assert m.orbifold_prefactor == Fraction(3, 4)

    def test_floats_rejected(self):
        doc = g24_config()
        doc["orbifold_prefactor"] = 0.75
        with pytest.raises(ConfigError, match="exact"):
            model_from_config(doc)

    def test_weyl_generator_must_preserve_truncations(self):
        doc = g24_config()
        doc["ring"]["truncations"] = ["3", "5"]
        with pytest.raises(ConfigError, match="truncation"):
            model_from_config(doc)

    def test_subgroup_roots_must_be_contained(self):
        doc = g24_config()
        doc["subgroup_roots"] = {"indices": ["0", "7"], "weyl_order": "1"}
        with pytest.raises(ConfigError, match="out of range"):
            model_from_config(doc)

    def test_subgroup_block_round_trips(self):
        doc = g24_config()
        doc["subgroup_roots"] = {"indices": ["0", "1"], "weyl_order": "2"}
        m = model_from_config(doc)
        assert m.subgroup is not None
        assert model_from_config(model_to_config(m)) == m

    def test_matrix_generator_accepted(self):
        doc = {
            "schema": "1",
            "ring": {"variables": "2", "truncations": ["3", "3"]},
            "roots": {
                "weights": [["1", "0"], ["-1", "0"]],
                "positive": ["0"],
                "weyl_generators": [{"matrix": [["-1", "0"], ["0", "-1"]]}],
                "weyl_order": "2",
            },
            "tangent_bundle": [
                {"weight": ["1", "0"], "multiplicity": "3"},
                {"weight": ["0", "1"], "multiplicity": "3"},
                {"weight": "0", "multiplicity": "-2"},
            ],
            "weyl_action": [["1", "2"]],
        }
        m = model_from_config(doc)
        assert m.root_data.weyl_generators == (((-1, 0), (0, -1)),)

    def test_matrix_generators_need_explicit_action(self):
        doc = {
            "schema": "1",
            "ring": {"variables": "2", "truncations": ["3", "3"]},
            "roots": {
                "weights": [["1", "0"], ["-1", "0"]],
                "positive": ["0"],
                "weyl_generators": [{"matrix": [["-1", "0"], ["0", "-1"]]}],
                "weyl_order": "2",
            },
            "tangent_bundle": [
                {"weight": ["1", "0"], "multiplicity": "3"},
                {"weight": ["0", "1"], "multiplicity": "3"},
                {"weight": "0", "multiplicity": "-2"},
            ],
        }
        with pytest.raises(ConfigError, match="weyl_action"):
            model_from_config(doc)

    def test_config_dump_round_trips_through_cli(self, capsys, tmp_path):
        status, out, _ = run(capsys, "config-dump", "--grassmannian", "2", "4")
        assert status == 0
        path = tmp_path / "dumped.json"
        path.write_text(out)
        assert load_config(str(path)) == grassmannian_model(2, 4)
