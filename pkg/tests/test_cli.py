import json
import subprocess
import sys

from biquadres import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_lines(out):
    return [json.loads(line) for line in out.strip().splitlines()]


def test_sum_text(capsys):
    code, out, _ = run_cli(capsys, "sum", "--p", "7", "--c", "1")
    assert code == 0
    assert "closed_form_sum=1" in out
    assert "brute_force_sum=1" in out
    assert "match=True" in out


def test_sum_json_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "sum", "--p", "7", "--c", "1", "--format", "json")
    assert code == 0
    (record,) = json_lines(out)
    assert record == {
        "p": 7,
        "a": 1,
        "c": 1,
        "e": 0,
        "closed_form_sum": 1,
        "brute_force_sum": 1,
        "match": True,
    }


def test_sum_small_prime_and_zero_c(capsys):
    code, out, _ = run_cli(capsys, "sum", "--p", "3", "--c", "1", "--format", "json")
    assert code == 0
    (record,) = json_lines(out)
    assert record["closed_form_sum"] == 2
    assert record["match"] is True
    code, out, _ = run_cli(capsys, "sum", "--p", "7", "--c", "0", "--format", "json")
    assert code == 0
    (record,) = json_lines(out)
    assert record["closed_form_sum"] == 0


def test_sum_non_monic(capsys):
    code, out, _ = run_cli(capsys, "sum", "--p", "11", "--a", "3", "--c", "5", "--e", "2", "--format", "json")
    assert code == 0
    (record,) = json_lines(out)
    assert record["match"] is True


def test_vw_json(capsys):
    code, out, _ = run_cli(capsys, "vw", "--p", "17", "--chi", "1", "--format", "json")
    assert code == 0
    (record,) = json_lines(out)
    assert record["v_fraction"] == "-9/64"
    assert record["w_fraction"] == "5/8"
    assert record["v_master"] == record["v_corollary"]
    assert record["w_master"] == record["w_corollary"]
    assert record["match"] is True
    code, out, _ = run_cli(capsys, "vw", "--p", "11", "--chi", "-1", "--format", "json")
    assert code == 0
    (record,) = json_lines(out)
    assert record["v_fraction"] == "1/64"
    assert record["w_fraction"] == "-1/8"
    assert record["v_master"] == 5


def test_set_of_sums(capsys):
    code, out, _ = run_cli(capsys, "set-of-sums", "--p", "7", "--format", "json")
    assert code == 0
    (record,) = json_lines(out)
    assert record["elements"] == [0, 1, 2, 4]
    assert record["cardinality"] == 4
    assert record["sum_mod_p"] == 0


def test_classify_json(capsys):
    code, out, _ = run_cli(capsys, "classify", "--p", "29", "--format", "json")
    assert code == 0
    (record,) = json_lines(out)
    assert record["kind"] == "fourth_powers"
    assert record["witness"] == record["bruteforce"]
    assert record["match"] is True
    assert record["p_mod28"] is None
    code, out, _ = run_cli(capsys, "classify", "--p", "3", "--format", "json")
    assert code == 0
    (record,) = json_lines(out)
    assert record["kind"] == "explicit_small_prime"
    assert record["witness"] == [0, 1, 2]
    assert record["match"] is True


def test_partition_stats(capsys):
    code, out, _ = run_cli(capsys, "partition-stats", "--p", "13", "--format", "json")
    assert code == 0
    (record,) = json_lines(out)
    assert record["card_a00"] == 2
    assert record["card_a01"] == record["card_a10"] == record["card_a11"] == 3
    inv32 = pow(32, 11, 13)
    assert record["sub_sum_a00"] == record["sub_sum_a11"] == inv32
    assert record["sub_sum_a01"] == record["sub_sum_a10"] == (-inv32) % 13
    middles = [record[f"middle_in_a{i}{j}"] for i in (0, 1) for j in (0, 1)]
    assert middles.count(True) == 1


def test_usage_errors(capsys):
    cases = [
        ("sum", "--p", "6", "--c", "1"),
        ("sum", "--p", "9", "--c", "1"),
        ("sum", "--p", "3", "--a", "2", "--c", "1"),
        ("sum", "--p", "7", "--a", "0", "--c", "1"),
        ("vw", "--p", "5", "--chi", "1"),
        ("partition-stats", "--p", "5"),
        ("classify", "--p", "1"),
        ("set-of-sums", "--p", "10"),
        ("verify", "--min", "2", "--max", "10"),
        ("verify", "--min", "10", "--max", "3"),
        ("verify", "--min", "3", "--max", "200000"),
        ("verify", "--min", "3", "--max", "10", "--e-samples", "-1"),
        ("verify", "--min", "3", "--max", "10", "--jobs", "0"),
    ]
    for argv in cases:
        code, out, err = run_cli(capsys, *argv)
        assert code == 2, argv
        assert err.startswith("error:"), argv


def test_verify_small_range(capsys):
    code, out, _ = run_cli(capsys, "verify", "--min", "3", "--max", "61", "--format", "json")
    assert code == 0
    records = json_lines(out)
    assert len(records) == 1
    summary = records[0]
    assert summary["mismatch_count"] == 0
    assert summary["cases_checked"] > 0
    assert summary["primes_checked"] == 17


def test_verify_empty_range(capsys):
    code, out, _ = run_cli(capsys, "verify", "--min", "4", "--max", "4", "--format", "json")
    assert code == 0
    (summary,) = json_lines(out)
    assert summary["cases_checked"] == 0
    assert summary["primes_checked"] == 0


def test_verify_small_primes_only(capsys):
    code, out, _ = run_cli(capsys, "verify", "--min", "3", "--max", "6", "--format", "json")
    assert code == 0
    (summary,) = json_lines(out)
    assert summary["primes_checked"] == 2
    assert summary["mismatch_count"] == 0


def test_verify_deterministic_output(capsys):
    args = ("verify", "--min", "3", "--max", "79", "--e-samples", "2", "--seed", "9")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_jobs_do_not_change_output(capsys):
    base = ("verify", "--min", "3", "--max", "61", "--format", "json")
    code1, out1, _ = run_cli(capsys, *base, "--jobs", "1")
    code2, out2, _ = run_cli(capsys, *base, "--jobs", "2")
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_seed_changes_are_still_clean(capsys):
    for seed in ("0", "1", "123"):
        code, out, _ = run_cli(
            capsys, "verify", "--min", "67", "--max", "79", "--e-samples", "3", "--seed", seed
        )
        assert code == 0
        assert "mismatch_count=0" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "biquadres", "sum", "--p", "7", "--c", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "match=True" in proc.stdout
