import csv
import json
import os

import pytest

from lagfib.main import main
from lagfib.runtime import logs

TEST_DIR = os.path.dirname(__file__)
GOLDEN = os.path.join(TEST_DIR, "golden")
RECORDS = os.path.join(TEST_DIR, "records")


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


@pytest.fixture(autouse=True)
def standard_verbosity():
    yield
    logs.set_verbosity("standard")


def finals(text):
    out = {}
    for line in text.splitlines():
        if " = " in line and not line.startswith("#"):
            key, value = line.split(" = ", 1)
            out[key] = value
    return out


def test_series_sqrt_ahat(capsys):
    status, out, err = run(capsys, "series", "--genus", "sqrt-ahat", "--upto", "4", "--c-odd-zero")
    assert status == 0
    assert finals(out)["series"] == "1 + 1/24*c2 + 7/5760*c2^2 - 1/1440*c4"


def test_series_ahat(capsys):
    status, out, err = run(capsys, "series", "--genus", "ahat", "--upto", "4", "--c-odd-zero")
    assert status == 0
    assert finals(out)["series"] == "1 + 1/12*c2 + 1/240*c2^2 - 1/720*c4"


def test_series_json(capsys):
    status, out, err = run(capsys, "--format", "json", "series", "--genus", "sqrt-ahat",
                           "--upto", "2", "--no-c-odd-zero")
    assert status == 0
    document = json.loads(out)
    assert document["final"]["series"] == "1 - 1/48*c1^2 + 1/24*c2"
    assert document["metadata"] == {"genus": "sqrt-ahat", "upto": 2, "c_odd_zero": False}


def test_series_usage_errors(capsys):
    status, out, err = run(capsys, "series", "--genus", "ahat", "--upto", "0")
    assert status == 2
    assert out == ""
    status, out, err = run(capsys, "series", "--genus", "todd", "--upto", "4")
    assert status == 2
    assert out == ""
    assert "todd" in err


@pytest.mark.parametrize("polarization, sqrt_ahat, expected", [
    ("1,1", "25/32", "30"),
    ("1,3", "27/32", "18"),
])
def test_degdelta(capsys, polarization, sqrt_ahat, expected):
    status, out, err = run(capsys, "degdelta", "--n", "2", "--polarization", polarization,
                           "--sqrt-ahat", sqrt_ahat)
    assert status == 0
    assert "deg_delta = " + expected in out.splitlines()
    assert "b_theta" in finals(out)


def test_degdelta_values(capsys):
    status, out, err = run(capsys, "degdelta", "--n", "2", "--sqrt-ahat", "25/32", "--theta-multiple", "3")
    assert status == 0
    values = finals(out)
    assert values == {"deg_delta": "30", "b_theta": "3600", "c2_YL": "90"}


def test_degdelta_record(capsys):
    status, out, err = run(capsys, "degdelta", "--n", "2", "--polarization", "1,3",
                           "--sqrt-ahat", os.path.join(RECORDS, "k2.json"))
    assert status == 0
    assert finals(out)["deg_delta"] == "18"
    assert "# sqrt_ahat = 27/32" in out.splitlines()


def test_degdelta_record_wrong_dimension(capsys):
    status, out, err = run(capsys, "degdelta", "--n", "3", "--sqrt-ahat", os.path.join(RECORDS, "s2.json"))
    assert status == 2
    assert err.startswith("InvalidChernNumbers:")


def test_degdelta_truncated_record(capsys, tmp_path):
    record = tmp_path / "truncated.json"
    record.write_text('{"complex_dimension": 4, "chern_numbers": {"c4": 324,')
    status, out, err = run(capsys, "degdelta", "--n", "2", "--sqrt-ahat", str(record))
    assert status == 2
    assert out == ""
    assert err.startswith("InvalidChernNumbers:")
    assert "truncated.json" in err


def test_degdelta_record_is_directory(capsys, tmp_path):
    status, out, err = run(capsys, "degdelta", "--n", "2", "--sqrt-ahat", str(tmp_path))
    assert status == 2
    assert out == ""
    assert err.startswith("InvalidChernNumbers:")


def test_failed_command_leaves_no_output_file(capsys, tmp_path):
    filename = tmp_path / "degdelta.json"
    status, out, err = run(capsys, "--format", "json", "--output", str(filename),
                           "degdelta", "--n", "2", "--polarization", "1,1", "--sqrt-ahat", "1/7")
    assert status == 2
    assert out == ""
    assert not filename.exists()


def test_degdelta_not_perfect_power(capsys):
    status, out, err = run(capsys, "degdelta", "--n", "2", "--polarization", "1,1", "--sqrt-ahat", "1/7")
    assert status == 2
    assert out == ""
    assert err.startswith("NotPerfectPower:")


def test_degdelta_bad_inputs(capsys):
    status, out, err = run(capsys, "degdelta", "--n", "2", "--polarization", "1,2,4", "--sqrt-ahat", "1")
    assert status == 2
    assert err.startswith("InvalidPolarization:")
    status, out, err = run(capsys, "degdelta", "--n", "2", "--sqrt-ahat", "0.78")
    assert status == 2
    assert "--sqrt-ahat" in err


def read_golden(name):
    with open(os.path.join(GOLDEN, name)) as f:
        return f.read()


def test_census_csv_golden(capsys):
    status, out, err = run(capsys, "census", "--format", "csv")
    assert status == 0
    assert out == read_golden("census.csv")


def test_census_json_golden(capsys):
    status, out, err = run(capsys, "--format", "json", "census")
    assert status == 0
    assert out == read_golden("census.json")
    document = json.loads(out)
    s2_rows = [row for row in document["rows"] if row["b2"] == 23]
    assert {"d": 1, "deg_delta": 30} in [{"d": r["d"], "deg_delta": r["deg_delta"]} for r in s2_rows]
    assert max(row["deg_delta"] for row in document["rows"]) <= 32


def test_census_parallel_identical(capsys):
    status, out, err = run(capsys, "--format", "csv", "census", "--smp", "2")
    assert status == 0
    assert out == read_golden("census.csv")


def test_census_no_integer_filter(capsys):
    status, out, err = run(capsys, "census", "--no-require-integer-degree")
    assert status == 0
    values = finals(out)
    assert values["max_d"] == "1036"
    assert values["max_deg_delta"] == "32"


def test_census_output_file(capsys, tmp_path):
    filename = tmp_path / "census.csv"
    status, out, err = run(capsys, "--format", "csv", "--output", str(filename), "census")
    assert status == 0
    assert out == ""
    assert filename.read_text() == read_golden("census.csv")


@pytest.mark.parametrize("surface, n, expected", [
    ("k3", "2", "30"),
    ("abelian", "2", "18"),
    ("abelian", "1", "12"),
    ("k3", "1", "24"),
])
def test_pencil(capsys, surface, n, expected):
    status, out, err = run(capsys, "pencil", "--surface", surface, "--n", n)
    assert status == 0
    values = finals(out)
    assert values["deg_delta"] == expected
    assert values["formula_deg_delta"] == expected


def test_pencil_bad_n(capsys):
    status, out, err = run(capsys, "pencil", "--surface", "k3", "--n", "0")
    assert status == 2
    assert err.startswith("NonPositiveInput:")


def test_models(capsys):
    status, out, err = run(capsys, "models", "--polarization", "1,3")
    assert status == 0
    assert out == "# polarization = 1,3\nk\td_prime\n1\t3\n3\t1\ncount = 2\n"


def test_invariants(capsys):
    status, out, err = run(capsys, "--format", "json", "invariants", "--b2", "7", "--b3", "8")
    assert status == 0
    document = json.loads(out)
    assert document["final"] == {"b4": 108, "c4": 108, "c2sq": 756, "sqrt_ahat": "27/32",
                                 "rw": 972, "ahat": 3, "fibred_candidate": True}
    assert [row["d"] for row in document["rows"]] == [3, 12, 27, 108, 243, 972]


def test_invariants_not_in_table(capsys):
    status, out, err = run(capsys, "invariants", "--b2", "9", "--b3", "0")
    assert status == 2
    assert err.startswith("NotInGuanTable:")


def test_guan(capsys):
    status, out, err = run(capsys, "guan", "--format", "csv")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "b2,b3,rw"
    assert lines[1] == "23,0,900"
    assert "#count=53" in lines
    assert "#fibred_candidates=35" in lines


def test_ini_and_overrides(capsys, monkeypatch):
    monkeypatch.setenv("LAGFIB_TEST_DIR", TEST_DIR)
    ini = os.path.join(TEST_DIR, "example.ini")
    # the ini file asks for csv output and c_odd_zero
    status, out, err = run(capsys, "--ini", ini, "series", "--genus", "sqrt-ahat", "--upto", "4")
    assert status == 0
    assert "#series=1 + 1/24*c2 + 7/5760*c2^2 - 1/1440*c4" in out.splitlines()
    # -p beats the ini file, and flags beat -p
    status, out, err = run(capsys, "--ini", ini, "series", "--genus", "sqrt-ahat", "--upto", "2",
                           "-p", "runtime.format=plain", "series.c_odd_zero=F")
    assert status == 0
    assert finals(out)["series"] == "1 - 1/48*c1^2 + 1/24*c2"
    status, out, err = run(capsys, "--ini", ini, "series", "--genus", "sqrt-ahat", "--upto", "2",
                           "--c-odd-zero", "-p", "runtime.format=plain", "series.c_odd_zero=F")
    assert finals(out)["series"] == "1 + 1/24*c2"


def test_ini_census_filter(capsys, monkeypatch):
    monkeypatch.setenv("LAGFIB_TEST_DIR", TEST_DIR)
    ini = os.path.join(TEST_DIR, "example.ini")
    status, out, err = run(capsys, "--ini", ini, "census")
    assert status == 0
    assert "#require_integer_degree=False" in out.splitlines()


def test_unknown_format(capsys):
    status, out, err = run(capsys, "--format", "fits", "guan")
    assert status == 2
    assert err.startswith("KeyError:")


def test_missing_ini(capsys):
    status, out, err = run(capsys, "--ini", "no-such-file.ini", "guan")
    assert status == 2
    assert err.startswith("LagfibConfigurationError:")


def test_verbose_logs_on_stderr(capsys):
    status, out, err = run(capsys, "--verbosity", "noisy", "--format", "csv", "census")
    assert status == 0
    assert out == read_golden("census.csv")
    assert "census" in err


def test_census_csv_reads_as_table(capsys):
    status, out, err = run(capsys, "--format", "csv", "census")
    assert status == 0
    table = [line for line in out.splitlines() if not line.startswith("#")]
    rows = list(csv.DictReader(table))
    assert len(rows) == 119
    assert rows[-1] == {"b2": "23", "b3": "0", "b4": "276", "c4": "324", "c2sq": "828",
                        "rw": "900", "d": "900", "deg_delta": "1"}
    # nothing but # lines after the first one
    lines = out.splitlines()
    first_hash = next(i for i, line in enumerate(lines) if line.startswith("#"))
    assert all(line.startswith("#") for line in lines[first_hash:])


def test_debug_lists_resolved_options(capsys, monkeypatch):
    monkeypatch.setenv("LAGFIB_TEST_DIR", TEST_DIR)
    ini = os.path.join(TEST_DIR, "example.ini")
    status, out, err = run(capsys, "--ini", ini, "--verbosity", "debug", "guan",
                           "-p", "census.smp=2")
    assert status == 0
    assert "degdelta.theta_multiple = 3" in err
    assert "census.smp = 2" in err
    assert "census.require_integer_degree = F" in err
