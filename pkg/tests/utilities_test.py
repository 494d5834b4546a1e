import json
from fractions import Fraction

import pytest

from qbinomial_identities.bijections import ThetaCase
from qbinomial_identities.constants import REPORT_COLUMNS
from qbinomial_identities.exactpoly import ONE
from qbinomial_identities.exactpoly import IntPoly
from qbinomial_identities.exceptions import ParameterError
from qbinomial_identities.identities import ParamPoint
from qbinomial_identities.identities import VerificationReport
from qbinomial_identities.identities import verify_sweep
from qbinomial_identities.series import ZSeries
from qbinomial_identities.utilities import render_arrow
from qbinomial_identities.utilities import render_theta_case
from qbinomial_identities.utilities import render_value
from qbinomial_identities.utilities import reports_to_csv
from qbinomial_identities.utilities import reports_to_json
from qbinomial_identities.utilities import reports_to_plain
from qbinomial_identities.utilities import serialise_reports
from qbinomial_identities.utilities import theta_label
from qbinomial_identities.utilities import write_text

NEW3_AT_1_2 = VerificationReport(
    "new3", ParamPoint(1, 2, 0), IntPoly([1, 1, 1]), IntPoly([1, 1, 1]), True
)
BROKEN = VerificationReport("s1", ParamPoint(0, 3, 0), Fraction(5), Fraction(6), False)


def test_render_value():
    assert render_value(Fraction(3, 2)) == "3/2"
    assert render_value(Fraction(4, 2)) == "2"
    assert render_value(7) == "7"
    assert render_value(IntPoly([1, 1, 1])) == "1 + q + q^2"
    assert render_value(ZSeries([ONE, IntPoly([1, 1])], 1)) == "z^0: 1; z^1: 1 + q"
    with pytest.raises(TypeError):
        render_value(1.5)


def test_plain():
    assert reports_to_plain([NEW3_AT_1_2, BROKEN]) == (
        "new3 m=1 n=2 a=0 pass: 1 + q + q^2 == 1 + q + q^2\n"
        "s1 m=0 n=3 a=0 FAIL: 5 != 6\n"
    )


def test_json():
    records = json.loads(reports_to_json([NEW3_AT_1_2, BROKEN]))
    assert [list(record) for record in records] == [list(REPORT_COLUMNS)] * 2
    assert records[0] == {
        "identity": "new3",
        "m": 1,
        "n": 2,
        "a": 0,
        "lhs": "1 + q + q^2",
        "rhs": "1 + q + q^2",
        "pass": True,
    }
    assert records[1]["pass"] is False


def test_csv():
    lines = reports_to_csv([NEW3_AT_1_2, BROKEN]).splitlines()
    assert lines == [
        "identity,m,n,a,lhs,rhs,pass",
        "new3,1,2,0,1 + q + q^2,1 + q + q^2,true",
        "s1,0,3,0,5,6,false",
    ]


def test_serialise_sweep():
    reports = verify_sweep("new3", {"m": (0, 2), "n": (0, 4)})
    assert len(json.loads(serialise_reports(reports, "json"))) == 15
    assert len(serialise_reports(reports, "csv").splitlines()) == 16
    assert len(serialise_reports(reports, "plain").splitlines()) == 15
    with pytest.raises(ParameterError):
        serialise_reports(reports, "xml")


def test_write_text(tmp_path):
    filename = tmp_path / "report.csv"
    write_text(str(filename), reports_to_csv([NEW3_AT_1_2]))
    assert filename.read_text().startswith("identity,m,n,a,lhs,rhs,pass\n")


def test_trace_rendering():
    case = ThetaCase("REMOVE_FROM_LAMBDA", 4)
    assert render_theta_case(case) == "branch=REMOVE_FROM_LAMBDA pivot=4"
    assert theta_label(case) == "theta[REMOVE_FROM_LAMBDA,4]"
    assert render_arrow("[2,2]", "phi", "([2],[])") == "[2,2] --phi--> ([2],[])"
