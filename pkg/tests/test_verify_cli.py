import json

import pytest

from bwfields import verify_cli as vc
from bwfields.checks import MODULES, REGISTRY


def fast_config(**overrides):
    config = vc.load_config(None)
    config["parameters"].update({"spins": [1, 2], "samples": 2000})
    config.update(overrides)
    return config


class TestRegistry:
    def test_names_unique_and_module_tagged(self):
        assert len(REGISTRY) == len(set(REGISTRY))
        for check in REGISTRY.values():
            assert check.module in MODULES
            assert check.kind in ("residual", "zscore")
            assert check.anchor

    def test_every_module_has_checks(self):
        for module in MODULES:
            assert any(c.module == module for c in REGISTRY.values())


class TestRunSuite:
    def test_empty_check_list(self):
        config = fast_config(checks=[])
        results = vc.run_suite(config, "all")
        assert results == []
        assert vc.render_report(results, "json") == b"[]\n"

    def test_suite_filtering(self):
        config = fast_config()
        results = vc.run_suite(config, "identities")
        assert results and all(r.module == "identities" for r in results)

    def test_results_sorted_by_name(self):
        config = fast_config()
        results = vc.run_suite(config, "massless")
        assert [r.name for r in results] == sorted(r.name for r in results)

    def test_determinism(self):
        config = fast_config(seed=77)
        a = vc.run_suite(config, "massive")
        b = vc.run_suite(config, "massive")
        assert [(r.name, r.value) for r in a] == [(r.name, r.value) for r in b]
        assert vc.render_report(a, "json") == vc.render_report(b, "json")
        assert vc.render_report(a, "text") == vc.render_report(b, "text")

    def test_unknown_check_rejected(self):
        config = fast_config(checks=[{"name": "nope", "parameters": {}}])
        with pytest.raises(vc.ConfigError):
            vc.run_suite(config, "all")

    def test_invalid_parameters_rejected(self):
        with pytest.raises(vc.ConfigError):
            vc.run_suite(fast_config(parameters={"spins": [1], "mass": 0.0,
                                                 "samples": 100, "width": 1.0}), "massive")
        with pytest.raises(vc.ConfigError):
            vc.run_suite(fast_config(parameters={"spins": [9], "mass": 1.0,
                                                 "samples": 100, "width": 1.0}), "massive")

    def test_tolerance_override_can_fail_a_check(self):
        config = fast_config(checks=[{"name": "eta_normalization", "parameters": {}}],
                             tolerances={"eta_normalization": 1e-30})
        results = vc.run_suite(config, "all")
        assert results[0].status == "fail"


class TestReport:
    def test_json_fields_and_order(self):
        config = fast_config(checks=[{"name": "epsilon_roundtrip", "parameters": {}}])
        results = vc.run_suite(config, "all")
        rows = json.loads(vc.render_report(results, "json"))
        assert list(rows[0]) == [
            "name", "module", "status", "kind", "value", "tolerance", "seed", "anchor",
        ]
        assert "runtime" not in rows[0]

    def test_text_line_shape(self):
        config = fast_config(checks=[{"name": "epsilon_roundtrip", "parameters": {}}])
        line = vc.render_report(vc.run_suite(config, "all"), "text").decode()
        assert line.startswith("PASS epsilon_roundtrip residual=")
        assert "tol=" in line

    def test_failing_check_reports_value_tolerance_seed(self):
        config = fast_config(seed=5, checks=[{"name": "eta_normalization", "parameters": {}}],
                             tolerances={"eta_normalization": 1e-30})
        rows = json.loads(vc.render_report(vc.run_suite(config, "all"), "json"))
        assert rows[0]["status"] == "fail"
        assert rows[0]["tolerance"] == 1e-30
        assert rows[0]["seed"] == 5
        assert rows[0]["value"] > 0

    def test_unknown_format(self):
        with pytest.raises(vc.ConfigError):
            vc.render_report([], "yaml")


class TestMain:
    def test_exit_codes(self, tmp_path, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"checks": ["epsilon_roundtrip"], "seed": 3}))
        assert vc.main(["all", "--config", str(cfg)]) == 0
        capsys.readouterr()
        cfg.write_text(json.dumps({"checks": ["epsilon_roundtrip"],
                                   "tolerances": {"epsilon_roundtrip": 1e-30}}))
        assert vc.main(["all", "--config", str(cfg)]) == 1
        capsys.readouterr()
        cfg.write_text(json.dumps({"checks": ["missing_check"]}))
        assert vc.main(["all", "--config", str(cfg)]) == 2
        capsys.readouterr()

    def test_usage_error(self, capsys):
        assert vc.main(["not-a-suite"]) == 2
        capsys.readouterr()

    def test_mass_zero_is_parameter_error(self, tmp_path, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"mass": 0.0, "checks": ["massive_field_equations"]}))
        assert vc.main(["massive", "--config", str(cfg)]) == 2
        capsys.readouterr()

    def test_grid_scheme_rejected_for_zscore_checks(self, tmp_path, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({
            "sampler": {"scheme": "grid"},
            "checks": ["packet_norm_invariance"],
        }))
        assert vc.main(["massive", "--config", str(cfg)]) == 2
        capsys.readouterr()
        cfg.write_text(json.dumps({"sampler": {"scheme": "nonsense"}}))
        assert vc.main(["massive", "--config", str(cfg)]) == 2
        capsys.readouterr()
        # grid scheme is fine for pure-residual checks
        cfg.write_text(json.dumps({
            "sampler": {"scheme": "grid"},
            "checks": ["epsilon_roundtrip"],
        }))
        assert vc.main(["all", "--config", str(cfg)]) == 0
        capsys.readouterr()

    def test_env_seed_override(self, tmp_path, capsys, monkeypatch):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"checks": ["epsilon_roundtrip"], "seed": 3}))
        monkeypatch.setenv("BW_SEED", "12345")
        assert vc.main(["all", "--config", str(cfg), "--format", "json"]) == 0
        rows = json.loads(capsys.readouterr().out)
        assert rows[0]["seed"] == 12345

    def test_flag_overrides(self, capsys):
        rc = vc.main(["massless", "--spin", "1", "--samples", "2000",
                      "--seed", "9", "--format", "json"])
        assert rc == 0
        rows = json.loads(capsys.readouterr().out)
        assert all(r["seed"] == 9 for r in rows)

    def test_byte_identical_reports(self, capsys):
        vc.main(["identities", "--seed", "42", "--format", "json"])
        first = capsys.readouterr().out
        vc.main(["identities", "--seed", "42", "--format", "json"])
        second = capsys.readouterr().out
        assert first == second
