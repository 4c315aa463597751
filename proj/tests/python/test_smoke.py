import json
import math
import os
import subprocess
import sys

import pytest

import fracverify

CLI = os.environ.get("FRACVERIFY_CLI")

needs_cli = pytest.mark.skipif(CLI is None, reason="FRACVERIFY_CLI not set")


def rel_err(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def run_cli(args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


class TestLibrary:
    def test_special_functions(self):
        assert rel_err(fracverify.gamma(0.5), math.sqrt(math.pi)) < 1e-13
        assert rel_err(fracverify.beta(2.5, 3.5),
                       math.exp(math.lgamma(2.5) + math.lgamma(3.5) - math.lgamma(6.0))) < 1e-12
        assert rel_err(fracverify.hyp2f1(1.0, 1.0, 2.0, 0.3),
                       -math.log(0.7) / 0.3) < 1e-12

    def test_eigenvalue_bound(self):
        reference = 2.0 * math.exp(math.lgamma(1.75) - math.lgamma(2.25))
        assert rel_err(fracverify.lambda_upper(1, 0.75), reference) < 1e-12
        direct, torsion_route = fracverify.lambda_upper_forms(3, 0.8)
        assert rel_err(direct, torsion_route) < 1e-12

    def test_threshold_radius(self):
        assert fracverify.x_star(1, 0.75) == 2.0 / 3.0
        assert fracverify.x_star(2, 0.8) > 0.5

    def test_certificates(self):
        report = fracverify.log_case_certificate(points=2000)
        assert report["passed"] is True
        assert report["min_value"] > 0.44

        reports = fracverify.verify_one_d(s_step=2e-3, x_step=2e-3)
        assert len(reports) == 4
        assert all(rep["passed"] for rep in reports)

    def test_quadrature_and_extension(self):
        value, error = fracverify.integrate_unit(lambda t: 3.0 * t * t, tol=1e-12)
        assert rel_err(value, 1.0) < 1e-11
        assert error <= 1e-12
        assert rel_err(fracverify.poisson_extension(3, 0.6, lambda r: 1.0, 0.5), 1.0) < 1e-8

    def test_identity_suite(self):
        results = fracverify.run_identity_suite()
        assert all(entry["passed"] for entry in results)
        broken = fracverify.run_identity_suite(gamma_perturbation=1e-6)
        assert any(not entry["passed"] for entry in broken)

    def test_exception_mapping(self):
        with pytest.raises(ValueError):
            fracverify.x_star(1, 0.4)
        with pytest.raises(ValueError):
            fracverify.gamma(-1.0)
        with pytest.raises(ValueError):
            fracverify.q_ab(0.75, 0.65, 0.6, 0.7)


@needs_cli
class TestCli:
    def test_identities_json(self):
        proc = run_cli(["identities", "--json"])
        assert proc.returncode == 0
        results = json.loads(proc.stdout)
        assert all(entry["passed"] for entry in results)

    def test_identities_perturbed_fails(self):
        proc = run_cli(["identities", "--perturb-gamma", "1e-6"])
        assert proc.returncode == 1

    def test_verify_log_deterministic(self, tmp_path):
        out_a = tmp_path / "a"
        out_b = tmp_path / "b"
        for out in (out_a, out_b):
            proc = run_cli(["verify", "--case", "log", "--out", str(out)])
            assert proc.returncode == 0, proc.stderr
        report_a = (out_a / "log_case_report.json").read_bytes()
        report_b = (out_b / "log_case_report.json").read_bytes()
        assert report_a == report_b
        curve_a = (out_a / "log_case_curve.csv").read_bytes()
        curve_b = (out_b / "log_case_curve.csv").read_bytes()
        assert curve_a == curve_b

    def test_verify_one_d_report(self, tmp_path):
        proc = run_cli(["verify", "--case", "one-d", "--s-step", "0.002",
                        "--x-step", "0.002", "--out", str(tmp_path)])
        assert proc.returncode == 0, proc.stderr
        reports = json.loads((tmp_path / "one_d_report.json").read_text())
        assert len(reports) == 4
        assert all(rep["passed"] for rep in reports)
        assert (tmp_path / "one_d_panels.csv").exists()

    def test_config_error_exit_code(self):
        proc = run_cli(["verify", "--case", "bogus"])
        assert proc.returncode == 2

    def test_domain_error_exit_code(self, tmp_path):
        proc = run_cli(["verify", "--case", "high-d", "--n", "1",
                        "--s-step", "0.01", "--x-step", "0.01", "--out", str(tmp_path)])
        assert proc.returncode == 2

    def test_numerical_error_exit_code(self, tmp_path):
        proc = run_cli(["verify", "--case", "oracle", "--tol", "1e-30",
                        "--out", str(tmp_path)])
        assert proc.returncode == 3


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
