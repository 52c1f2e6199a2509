import json
import subprocess
import sys

import pytest

from chebkit import bounds, bqf, chebotarev, elliptic, explicit, progressions
from chebkit.cli import SUBCOMMAND_OPERATIONS, SUBCOMMANDS, build_parser, run
from chebkit.sieve import li, partial_sum_pi_from_theta, primes_upto, segmented_primes
from chebkit.weights import (check_decay_bound, check_growth_bound,
                             check_left_line_bound, check_real_axis_bound,
                             laplace_transform, weight_value)


def test_pi_ap_json_example():
    code, text = run(["pi-ap", "--q", "4", "--a", "1", "--x", "100"])
    assert code == 0
    doc = json.loads(text)
    assert doc["count"] == 11
    assert doc["mv_passed"] is True


def test_bqf_csv_schema():
    code, text = run(["bqf", "--D", "23", "--x", "10000", "--form", "2,1,3",
                      "--format", "csv"])
    assert code == 0
    header = text.splitlines()[0]
    assert header.startswith("x,count,target,ratio,h,delta_Q")


def test_missing_required_flag_exits_2():
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(["pi-ap", "--q", "4"])
    assert exc.value.code == 2


def test_domain_error_exits_2():
    code, text = run(["pi-ap", "--q", "4", "--a", "2", "--x", "100"])
    assert code == 2
    assert "gcd" in text


def test_byte_identical_repeat_runs():
    argv = ["mellin-check", "--q", "4", "--residue", "1", "--x", "50",
            "--ell", "2", "--t-max", "50"]
    assert run(argv) == run(argv)
    argv_csv = ["--format", "csv", "chebotarev", "--d", "-1",
                "--class", "split", "--x", "1000"]
    assert run(argv_csv) == run(argv_csv)


def test_global_flags_accepted_after_subcommand():
    before = run(["--format", "csv", "pi-ap", "--q", "4", "--a", "1", "--x", "100"])
    after = run(["pi-ap", "--q", "4", "--a", "1", "--x", "100", "--format", "csv"])
    assert before == after


def test_config_file_supplies_defaults(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("q = 4\na = 1\nx = 100\n# comment line\nformat = json\n")
    code, text = run(["--config", str(cfg), "pi-ap"])
    assert code == 0
    assert json.loads(text)["count"] == 11
    # flags override config values
    code, text = run(["--config", str(cfg), "pi-ap", "--a", "3"])
    assert json.loads(text)["count"] == 13  # the 3 mod 4 class up to 100
    assert json.loads(text)["a"] == 3


def test_config_rejects_unknown_keys(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("quux = 1\n")
    code, text = run(["--config", str(cfg), "pi-ap", "--q", "4", "--a", "1",
                      "--x", "100"])
    assert code == 2
    assert "unknown config keys" in text


def test_twelve_digit_float_formatting():
    code, text = run(["bounds", "--n-k", "1", "--d-k", "1", "--q-max", "5",
                      "--theta", "0.5", "--format", "csv"])
    assert code == 0
    header, row = text.splitlines()
    values = dict(zip(header.split(","), row.split(",")))
    assert values["bt_constant"] == "3.2"
    assert values["range_basic_log"] == "297.7460138"  # 12 significant digits


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "chebkit.cli", "pi-ap", "--q", "4", "--a", "1",
         "--x", "100"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count"] == 11
    bad = subprocess.run(
        [sys.executable, "-m", "chebkit.cli", "pi-ap", "--q", "4", "--a", "2",
         "--x", "100"],
        capture_output=True, text=True)
    assert bad.returncode == 2
    assert bad.stderr.strip() != ""


def test_curves_file_input(tmp_path):
    path = tmp_path / "curves.txt"
    path.write_text("1 1 demo\n-1 1\n")
    code, text = run(["lang-trotter", "--curves-file", str(path), "--mode",
                      "trace", "--a", "0", "--x", "500", "--format", "csv"])
    assert code == 0
    assert len(text.splitlines()) == 3  # header + one row per curve


def test_memory_budget_enforced():
    code, text = run(["pi-ap", "--q", "4", "--a", "1", "--x", "1e7",
                      "--memory-budget", "1000000"])
    assert code == 2
    assert "memory budget" in text


def test_every_subcommand_runs():
    samples = {
        "weights-verify": ["--x", "100", "--ell", "2", "--eps", "0.1",
                           "--samples", "5"],
        "bounds": ["--n-k", "1", "--d-k", "1", "--q-max", "5", "--lambda1",
                   "0.05", "--beta1", "0.999", "--t-height", "1", "--sigma",
                   "0.5", "--lam", "0.1", "--theta", "0.3"],
        "pi-ap": ["--q", "7", "--a", "3", "--x", "1000"],
        "bt-check": ["--q", "12", "--x", "10000"],
        "bqf": ["--D", "4", "--x", "1000", "--form", "1,0,1"],
        "chebotarev": ["--cyclotomic", "5", "--class", "2", "--x", "1000"],
        "mellin-check": ["--q", "1", "--x", "50", "--ell", "2", "--t-max", "50"],
        "lang-trotter": ["--curve", "1,1", "--mode", "trace", "--a", "0",
                         "--x", "500"],
    }
    assert set(samples) == set(SUBCOMMANDS)
    for cmd, argv in samples.items():
        code, text = run([cmd, *argv])
        assert code == 0, (cmd, text)


def test_operation_coverage_table():
    # every public operation of every module must be reachable from at
    # least one subcommand
    required = {
        laplace_transform, weight_value, check_decay_bound, check_growth_bound,
        check_real_axis_bound, check_left_line_bound,
        bounds.log_complexity, bounds.density_bound, bounds.low_lying_density_bound,
        bounds.repulsion_threshold, bounds.deuring_heilbronn_exclusion,
        bounds.brun_titchmarsh_constant, bounds.range_thresholds,
        segmented_primes, primes_upto, li, partial_sum_pi_from_theta,
        progressions.pi_ap, progressions.montgomery_vaughan_check,
        progressions.maynard_check,
        bqf.reduce_form, bqf.class_number, bqf.delta_q,
        bqf.count_represented_primes, bqf.representation_density_report,
        chebotarev.artin_class, chebotarev.psi_class, chebotarev.theta_class,
        chebotarev.pi_class, chebotarev.counting_chain_check,
        chebotarev.weighted_prime_sum, chebotarev.density_ratio_report,
        explicit.contour_sum, explicit.tail_bound, explicit.zeta_log_deriv,
        explicit.class_log_deriv, explicit.character_log_deriv,
        elliptic.trace_of_frobenius, elliptic.trace_match_count,
        elliptic.frobenius_field_count, elliptic.growth_shape_report,
        elliptic.read_curves,
    }
    covered = {op for ops in SUBCOMMAND_OPERATIONS.values() for op in ops}
    missing = {op.__name__ for op in required - covered}
    assert not missing, f"operations unreachable from the CLI: {missing}"
    assert set(SUBCOMMAND_OPERATIONS) == set(SUBCOMMANDS)
