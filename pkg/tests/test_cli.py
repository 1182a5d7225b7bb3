import csv
import io
import json

import pytest

from pdsum import __version__
from pdsum.cli import cli
from tests.data import PD_3N2_VALUES, PD_VALUES, RANK_TABLE_5

pytestmark = pytest.mark.usefixtures("clean_env")


def invoke(runner, *args, env=None):
    return runner.invoke(cli, list(args), env=env, catch_exceptions=False)


def test_version(runner):
    result = invoke(runner, "--version")
    assert result.exit_code == 0
    assert __version__ in result.output


def test_count_human(runner):
    result = invoke(runner, "count", "10")
    assert result.exit_code == 0
    assert "10  160" in result.output


def test_count_json(runner):
    result = invoke(runner, "count", "10", "--format", "json")
    assert result.exit_code == 0
    document = json.loads(result.output)
    assert document['schema'] == 1
    assert document['command'] == "count"
    assert [entry['pd'] for entry in document['values']] == PD_VALUES
    assert document['oracle'] is None


def test_count_oracle(runner):
    result = invoke(runner, "count", "15", "--oracle", "--format", "json")
    assert result.exit_code == 0
    assert json.loads(result.output)['oracle']['agree'] is True


@pytest.mark.slow
def test_count_oracle_to_35(runner):
    assert invoke(runner, "count", "35", "--oracle").exit_code == 0


def test_count_oracle_respects_cap(runner):
    result = invoke(runner, "count", "50", "--oracle", "--cap", "20")
    assert result.exit_code == 2
    assert "--cap" in result.output


def test_count_csv(runner):
    result = invoke(runner, "count", "4", "--format", "csv")
    assert result.output == "n,pd\n0,1\n1,1\n2,3\n3,5\n4,10\n"


def test_verify_pass(runner):
    result = invoke(runner, "verify", "thm1.3", "gauss", "--order", "30")
    assert result.exit_code == 0
    assert "PASS" in result.output
    assert "2/2 identities pass" in result.output


def test_verify_json_and_timing(runner):
    result = invoke(runner, "verify", "thm1.3", "--order", "20", "--format", "json", "--timing")
    document = json.loads(result.output)
    assert document['passed'] is True
    report = document['reports'][0]
    assert report['name'] == "thm1.3"
    assert report['status'] == "pass"
    assert report['elapsed_ms'] is not None


def test_verify_csv(runner):
    result = invoke(runner, "verify", "eq2.6", "--order", "10", "--format", "csv")
    rows = list(csv.reader(io.StringIO(result.output)))
    assert rows[0] == ["name", "order", "status", "mismatch_form", "mismatch_n", "elapsed_ms"]
    assert rows[1] == ["eq2.6", "10", "pass", "", "", ""]


def test_verify_list(runner):
    result = invoke(runner, "verify", "--list", "--format", "json")
    names = [entry['name'] for entry in json.loads(result.output)['identities']]
    assert "thm1.1" in names
    assert "cube-roots" in names


def test_verify_usage_errors(runner):
    assert invoke(runner, "verify").exit_code == 2
    result = invoke(runner, "verify", "thm9.9")
    assert result.exit_code == 2
    assert "unknown identity" in result.output


def test_verify_order_from_env(runner):
    result = invoke(runner, "verify", "thm1.3", "--format", "json", env={"PD_ORDER": "25"})
    assert json.loads(result.output)['reports'][0]['order'] == 25


def test_dissect(runner):
    result = invoke(runner, "dissect", "3", "2", "--order", "6", "--format", "json")
    assert result.exit_code == 0
    document = json.loads(result.output)
    assert document['coefficients'] == PD_3N2_VALUES
    assert document['order'] == 6


def test_dissect_other_source(runner):
    result = invoke(runner, "dissect", "2", "0", "--order", "3", "--spec", "(1:1)^-1", "--format", "json")
    # p(0), p(2), p(4), p(6)
    assert json.loads(result.output)['coefficients'] == [1, 2, 5, 11]


def test_dissect_bad_residue(runner):
    assert invoke(runner, "dissect", "3", "3").exit_code == 2


def test_rank_csv(runner):
    result = invoke(runner, "rank", "5", "--format", "csv")
    assert result.exit_code == 0
    rows = list(csv.reader(io.StringIO(result.output)))
    assert rows[0] == ["lambda", "alpha", "beta", "rank", "rank_mod3"]
    assert [tuple(row) for row in rows[1:]] == [tuple(str(v) for v in row) for row in RANK_TABLE_5]


def test_rank_json_counts(runner):
    document = json.loads(invoke(runner, "rank", "5", "--format", "json").output)
    assert document['counts']['mod3'] == [5, 5, 5]
    assert len(document['rows']) == 15


def test_rank_human(runner):
    result = invoke(runner, "rank", "5")
    assert "classes mod 3: 5, 5, 5 (total 15)" in result.output
    assert "equinumerous" in result.output


def test_rank_cap(runner):
    assert invoke(runner, "rank", "41").exit_code == 2
    assert invoke(runner, "rank", "5", env={"PD_ENUM_CAP": "3"}).exit_code == 2
    assert invoke(runner, "rank", "5", "--cap", "5").exit_code == 0


def test_exponents(runner):
    result = invoke(runner, "exponents", "12", "--format", "json")
    assert result.exit_code == 0
    document = json.loads(result.output)
    assert document['passed'] is True
    assert [row['exponent'] for row in document['exponents'][:6]] == [5, 13, 2, -14, 5, 80]


def test_series(runner):
    result = invoke(runner, "series", "(1:1)^1", "--order", "7")
    assert result.exit_code == 0
    assert "1 - q - q^2 + q^5 + q^7 + O(q^8)" in result.output


def test_series_bad_spec(runner):
    result = invoke(runner, "series", "(0:1)")
    assert result.exit_code == 2


def test_congruence(runner):
    assert invoke(runner, "congruence", "3", "2", "3", "--order", "300").exit_code == 0
    result = invoke(runner, "congruence", "3", "1", "3", "--order", "30", "--format", "json", "--log-level", "error")
    assert result.exit_code == 1
    assert json.loads(result.output)['first_violation'] == 1


def test_bad_env_is_usage_error(runner):
    assert invoke(runner, "count", "3", env={"PD_ORDER": "abc"}).exit_code == 2


def test_empty_weight(runner):
    result = invoke(runner, "rank", "0", "--format", "csv")
    assert result.output == "lambda,alpha,beta,rank,rank_mod3\n∅,∅,∅,0,0\n"
    assert json.loads(invoke(runner, "count", "0", "--format", "json").output)['values'] == [{'n': 0, 'pd': 1}]


def test_output_is_deterministic(runner):
    first = invoke(runner, "verify", "thm1.3", "eq2.6", "--order", "30", "--format", "json").output
    second = invoke(runner, "verify", "thm1.3", "eq2.6", "--order", "30", "--format", "json").output
    assert first == second
