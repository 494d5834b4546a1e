import io
import json

import pytest

from qbinomial_identities import bijections
from qbinomial_identities import identities
from qbinomial_identities.bijections import MOVE_TO_LAMBDA
from qbinomial_identities.bijections import ThetaCase
from qbinomial_identities.bijections import largest_odd_multiplicity
from qbinomial_identities.bijections import largest_repeated
from qbinomial_identities.identities import IdentityId
from qbinomial_identities.identities import eval_new3_lhs
from qbinomial_identities.identities import eval_new3_rhs
from qbinomial_identities.main import main
from qbinomial_identities.partitions import Partition
from qbinomial_identities.partitions import PartitionPair
from qbinomial_identities.partitions import partition_union
from qbinomial_identities.partitions import remove_parts


def run(*argv):
    stream = io.StringIO()
    status = main(list(argv), stream=stream)
    return status, stream.getvalue()


def test_trace_phi():
    status, output = run("trace", "--map", "phi", "--input", "[7,5,5,4,4,4,4,2,2,2,1]")
    assert status == 0
    assert output == "([5,4,4,2],[7,2,1])\n"


def test_trace_theta():
    status, output = run(
        "trace", "--map", "theta", "--input", "([5,5,4,4,4,3,3,3,1,1],[5,3,2,2,1])"
    )
    assert status == 0
    assert output == (
        "([5,5,4,4,3,3,3,1,1],[5,4,4,3,2,2,1]) branch=REMOVE_FROM_LAMBDA pivot=4\n"
    )


def test_trace_theta_arrow_and_steps():
    status, output = run(
        "trace", "--map", "theta", "--input", "([2],[2,2])", "--arrow", "--steps", "2"
    )
    assert status == 0
    assert output.splitlines() == [
        "([2],[2,2]) --theta[REMOVE_FROM_LAMBDA,2]--> ([],[2,2,2,2])",
        "([],[2,2,2,2]) --theta[MOVE_TO_LAMBDA,2]--> ([2],[2,2])",
    ]


def test_trace_phi_inverse_and_halve():
    assert run("trace", "--map", "phi-inverse", "--input", "([3],[3])") == (
        0,
        "[3,3,3]\n",
    )
    assert run("trace", "--map", "halve", "--input", "[5,5,4,4,4,4]") == (
        0,
        "[5,4,4]\n",
    )
    assert run("trace", "--map", "phi", "--input", "[2,2]", "--arrow") == (
        0,
        "[2,2] --phi--> ([2],[])\n",
    )


def test_trace_theta_on_the_fixed_set(capsys):
    status, output = run("trace", "--map", "theta", "--input", "([],[])")
    assert status == 2
    assert output == ""
    assert "fixed set" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ("trace", "--map", "phi", "--input", "[4,5]"),
        ("trace", "--map", "halve", "--input", "[3,3,3]"),
        ("trace", "--map", "phi-inverse", "--input", "([1],[2,2])"),
        ("trace", "--map", "phi", "--input", "[2,1]", "--steps", "2"),
    ],
)
def test_trace_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_expand_qbinom():
    assert run("expand", "--qbinom", "4", "2") == (0, "1 + q + 2*q^2 + q^3 + q^4\n")
    assert run("expand", "--qbinom", "3", "-1") == (0, "0\n")
    assert run("expand", "--qbinom", "2", "1", "--dilation", "3") == (0, "1 + q^3\n")
    assert run("expand", "--qbinom", "-1", "0")[0] == 2


def test_expand_qbinom_large_upper_argument():
    status, output = run("expand", "--qbinom", "1200", "1")
    assert status == 0
    assert output.startswith("1 + q + q^2 + ")
    assert output.endswith(" + q^1199\n")
    assert output.count(" + ") == 1199


def test_expand_series():
    status, output = run("expand", "--series", "inv-poch-z", "--m", "1", "--order", "2")
    assert status == 0
    assert output.splitlines()[-1] == "z^2: 1 + q + q^2"
    assert run("expand", "--series", "inv-poch-z", "--m", "1")[0] == 2


def test_expand_poly():
    assert run("expand", "--poly", "(1 + q)*(1 - q)") == (0, "1 - q^2\n")
    assert run("expand", "--poly", "1 - q^2", "--dilation", "2") == (0, "1 - q^4\n")
    assert run("expand", "--poly", "q/2")[0] == 2


def test_census():
    assert run("census", "--set", "A", "--m", "1", "--n", "2") == (
        0,
        "cardinality=3\nweight=q^2 + q^3 + q^4\n",
    )
    assert run("census", "--set", "A", "--m", "0", "--n", "0") == (
        0,
        "cardinality=1\nweight=1\n",
    )
    assert run("census", "--set", "V", "--m", "1", "--n", "2", "--members") == (
        0,
        "([],[2,1])\ncardinality=1\nweight=q^3\n",
    )
    assert run("census", "--set", "U", "--m", "1", "--n", "2", "--signed") == (
        0,
        "cardinality=5\nweight=q^3\n",
    )
    assert run("census", "--set", "A", "--m", "1", "--n", "2", "--signed")[0] == 2
    assert run("census", "--set", "C", "--m", "1", "--n", "2")[0] == 2


def test_verify_json():
    status, output = run(
        "verify", "--identity", "new3", "--m-max", "2", "--n-max", "4",
        "--format", "json",
    )
    assert status == 0
    records = json.loads(output)
    assert len(records) == 15
    assert all(record["pass"] for record in records)


def test_verify_plain_and_workers():
    argv = ("verify", "--identity", "s3", "--n-max", "4", "--a-max", "2")
    status, output = run(*argv)
    assert status == 0
    assert run(*argv, "--workers", "3") == (status, output)
    assert len(output.splitlines()) == 3 * 5 - 1


def test_verify_output_file(tmp_path):
    filename = tmp_path / "report.csv"
    status, output = run(
        "verify",
        "--identity",
        "s2",
        "--n-max",
        "5",
        "--format",
        "csv",
        "--output",
        str(filename),
    )
    assert status == 0
    assert output == ""
    assert len(filename.read_text().splitlines()) == 6


def test_verify_usage_errors():
    assert run("verify", "--identity", "s2", "--n-max", "0")[0] == 2
    assert run("verify", "--identity", "nosuch")[0] == 2
    assert run("verify", "--identity", "new3", "--m-max", "-1")[0] == 2
    assert run("verify", "--identity", "new3", "--format", "xml")[0] == 2
    assert run("nosuch")[0] == 2


def test_verify_failure_exit_code(monkeypatch, capsys):
    shifted = IdentityId(
        "new3",
        ("m", "n"),
        lambda p: (eval_new3_lhs(p.m, p.n), eval_new3_rhs(p.m, p.n + 1)),
        lambda p: True,
    )
    monkeypatch.setitem(identities.REGISTRY, "new3", shifted)
    status, output = run("verify", "--identity", "new3", "--m-max", "1", "--n-max", "2")
    assert status == 1
    assert "FAIL" in output
    assert "first at m=1, n=0, a=0" in capsys.readouterr().err


def test_selftest_quick():
    status, output = run("selftest", "--quick")
    assert status == 0
    lines = output.splitlines()
    assert len(lines) == 9
    assert all(": pass " in line for line in lines)


def theta_with_tie_in_second_branch(pair):
    lambda_pivot = largest_odd_multiplicity(pair.first)
    mu_pivot = largest_repeated(pair.second)
    if lambda_pivot is not None and lambda_pivot == mu_pivot:
        image = PartitionPair(
            partition_union(pair.first, Partition([mu_pivot])),
            remove_parts(pair.second, mu_pivot, 2),
        )
        return image, ThetaCase(MOVE_TO_LAMBDA, mu_pivot)
    return THETA(pair)


THETA = bijections.theta


def test_selftest_catches_a_broken_theta(monkeypatch, capsys):
    monkeypatch.setattr(bijections, "theta", theta_with_tie_in_second_branch)
    status, output = run("selftest", "--quick")
    assert status == 1
    assert "theta-involution: FAIL" in output
    assert "new3: pass" in output
    assert "theta-involution" in capsys.readouterr().err
