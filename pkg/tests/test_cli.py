import io
import re
import json
import subprocess
import sys
from pathlib import Path

import pytest

from birvol.cli import JSON_FIELDS, main

TOUR = Path(__file__).resolve().parents[1] / "scenarios" / "tour.cbk"


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_verify_paper_exit_zero():
    code, out, _ = cli("verify-paper")
    assert code == 0
    assert "0 failed" in out.splitlines()[-1]


def test_json_records_have_ordered_fields():
    code, out, _ = cli("verify-paper", "--json")
    assert code == 0
    lines = out.splitlines()
    assert lines
    for line in lines:
        rec = json.loads(line)
        assert tuple(rec) == JSON_FIELDS[:5]
        assert rec["pass"] is True
        assert rec["citation"]
        assert isinstance(rec["millis"], float)


def test_no_timing_is_byte_stable():
    a = cli("verify-paper", "--json", "--no-timing")[1]
    b = cli("verify-paper", "--json", "--no-timing")[1]
    assert a == b


def test_seed_does_not_change_verdicts():
    a = cli("run", "--scenario", "tau5", "--seed", "7", "--json", "--no-timing")
    b = cli("run", "--scenario", "tau5", "--json", "--no-timing")
    assert a[0] == b[0] == 0
    assert [json.loads(x)["pass"] for x in a[1].splitlines()] == \
           [json.loads(x)["pass"] for x in b[1].splitlines()]


def test_flags_before_or_after_subcommand():
    a = cli("--json", "--no-timing", "run", "--scenario", "hl_lattice")
    b = cli("run", "--scenario", "hl_lattice", "--json", "--no-timing")
    assert a == b


def test_list():
    code, out, _ = cli("--list")
    assert code == 0
    assert "tau5" in out and "ledger_p4" in out
    assert cli("list", "--json")[0] == 0


def test_run_file_passes():
    code, out, _ = cli("run", str(TOUR))
    assert code == 0
    assert "22 checks" in out.splitlines()[-1]


def test_failing_file_exits_one(tmp_path):
    f = tmp_path / "bad.cbk"
    f.write_text("map s = cremona(2);\ncheck order(s) == 3;\n")
    code, out, _ = cli("run", str(f), "--json")
    assert code == 1
    rec = json.loads(out.splitlines()[0])
    assert tuple(rec) == JSON_FIELDS
    assert rec["pass"] is False and rec["citation"] == "bad.cbk:2"


@pytest.mark.parametrize("text", [
    "map bad = [ 1/0 ];\n",
    "map t = [x\n",
    "check nope == 1;\n",
])
def test_invalid_file_exits_two(tmp_path, text):
    f = tmp_path / "bad.cbk"
    f.write_text(text)
    code, out, err = cli("run", str(f))
    assert code == 2
    assert out == ""
    assert re.match(re.escape(str(f)) + r":\d+:\d+: ", err)


@pytest.mark.parametrize("argv", [
    ("run",),
    ("run", "--scenario", "nope"),
    ("run", "/nonexistent/file.cbk"),
    ("verify-paper", "--seed", "-1"),
    ("verify-paper", "--seed", "abc"),
    ("frobnicate",),
    (),
])
def test_usage_errors_exit_two(argv):
    assert cli(*argv)[0] == 2


def test_fmt_is_canonical(tmp_path):
    code, out, _ = cli("fmt", str(TOUR))
    assert code == 0
    f = tmp_path / "again.cbk"
    f.write_text(out)
    assert cli("fmt", str(f))[1] == out


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "birvol", "run", "--scenario", "tau5"],
                       capture_output=True, text=True)
    assert p.returncode == 0
    assert "PASS" in p.stdout
