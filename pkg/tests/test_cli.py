from __future__ import annotations

import json
import subprocess
import sys

import pytest

from psdcubic.cli import main, run
from psdcubic.families import cusp_conditions, cyclic_f0, make_h_pq
from psdcubic.poly import Form


def call(*argv):
    code, out = run(list(argv))
    return code, out


def test_family_emits_cyclic_cubic():
    code, out = call("family", "--id", "f", "--p", "0", "--q", "0", "--r", "0")
    assert code == 0
    assert Form.from_json(json.loads(out)["form"]) == cyclic_f0()


def test_certify_refutation_exit_code():
    code, out = call("certify", "--id", "g", "--p", "3/5", "--q", "3/5")
    data = json.loads(out)
    assert code == 2 and data["verdict"] == "refuted"
    assert data["point"] == ["3", "3", "1"] and data["value"] == "-4/5"


@pytest.mark.parametrize(
    "argv,code",
    [
        (("certify", "--id", "g", "--p", "1/4", "--q", "1/4"), 0),
        (("certify", "--id", "h", "--p", "0", "--q", "0"), 3),
        (("certify", "--id", "f", "--p", "1", "--q", "2", "--r", "3"), 0),
        (("certify", "--id", "f", "--p", "1", "--q", "2"), 1),
        (("classify", "--id", "h", "--p", "2", "--q", "3"), 0),
        (("classify", "--id", "f", "--p", "3", "--q", "1/4", "--r", "1"), 2),
        (("zeros", "--id", "g", "--p", "1/4", "--q", "1/4"), 0),
        (("lift", "--id", "xyz", "--verify-extremal"), 0),
        (("lift", "--id", "g", "--p", "1/4", "--q", "1/4", "--verify-extremal"), 0),
        (("appendix", "--theorem", "4.3"), 0),
        (("identities", "--samples", "2", "--seed", "4"), 0),
    ],
)
def test_exit_codes(argv, code):
    assert call(*argv)[0] == code


def test_appendix_reports_kernel():
    code, out = call("appendix", "--theorem", "4.3")
    assert code == 0 and json.loads(out)["kernel_dim"] == 1


@pytest.mark.parametrize(
    "argv",
    [("family", "--id", "f", "--p", "0.5", "--q", "1", "--r", "1"), ("bogus",), ("certify", "--unknown"), ("zeros", "--json", "{")],
)
def test_malformed_input_exits_one(argv, capsys):
    assert main(list(argv)) == 1
    assert "error" in capsys.readouterr().err


def test_json_form_input_and_zero_count():
    form = json.dumps(make_h_pq(1, 1).to_json())
    code, out = call("zeros", "--json", form, "--emit-points", "4")
    data = json.loads(out)
    assert code == 0 and data["count"]["summary"] == "6+2+2"
    assert len(data["curve_points"]) >= 2


def test_verify_extremal_from_condition_file(tmp_path):
    path = tmp_path / "conds.json"
    path.write_text(json.dumps({
        "degree": 3,
        "conditions": [c.to_json() for c in cusp_conditions(1, 1)],
        "expected": make_h_pq(1, 1).to_json(),
    }))
    code, out = call("verify-extremal", "--input", str(path))
    data = json.loads(out)
    assert code == 0 and data["dimension"] == 1 and data["match"]


def test_output_is_byte_stable():
    argv = ("classify", "--id", "g", "--p", "1/3", "--q", "1/5")
    assert call(*argv) == call(*argv)


def test_text_format():
    code, out = call("certify", "--id", "g", "--p", "3/5", "--q", "3/5", "--format", "text")
    assert code == 2 and "verdict: refuted" in out and "point: [3, 3, 1]" in out


def test_stdin_input_via_module():
    proc = subprocess.run(
        [sys.executable, "-m", "psdcubic", "classify"],
        input=json.dumps(cyclic_f0().to_json()),
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["verdict"] == "case1_f"
