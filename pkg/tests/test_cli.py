import io
import subprocess
import sys

import pytest

from zeta2_hyperlab.cli import run
from zeta2_hyperlab.search import read_records


def cli(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_eval_integral():
    assert cli("eval-integral", "1", "1", "1", "1", "1") == (0, "5 - 3*zeta2\n")


def test_eval_3f2_exact_and_numeric():
    code, text = cli("eval-3f2", "2", "2", "2", "4", "4")
    assert code == 0 and text == "180 - 108*zeta2\n"
    code, text = cli("--precision", "64", "eval-3f2", "--numeric", "1", "1", "1", "2", "2")
    assert code == 0 and text.startswith("1.6449340668482264")


def test_orbit_golden(golden):
    code, text = cli("orbit", "--integral", "3", "1", "1", "2", "0")
    assert code == 0
    assert text == (golden / "cli_orbit_3_1_1_2_0.txt").read_text()
    code, text = cli("orbit", "--integral", "3", "1", "1", "2", "0", "--no-dedup")
    assert len(text.splitlines()) == 30


def test_related_and_rationality():
    assert cli("related", "--phi", "3,1,1,2,0", "2,0,2,1,2")[1] == "phi_related (3,1,1,2,0) (2,0,2,1,2) true\n"
    assert cli("related", "--t", "1,1,1,1,1", "3,1,1,2,0")[1] == "t_related (1,1,1,1,1) (3,1,1,2,0) false\n"
    code, text = cli("rationality", "0", "0", "0", "0", "1")
    assert code == 0 and text.splitlines()[-1] == "rational"


def test_verify_exact_and_numeric():
    code, text = cli("verify", "b12", "--alpha", "4", "--beta", "3", "--gamma", "4")
    assert code == 0
    assert text.splitlines()[0] == "VERIFY b12 alpha=4,beta=3,gamma=4 exact pass 0"
    assert "prefactor 9/5 (inverse 5/9)" in text
    code, text = cli("verify", "exotique2", "--alpha", "3/2", "--beta", "5/4", "--gamma", "2")
    assert code == 0 and " numeric pass " in text


@pytest.mark.parametrize("argv", [
    ("verify", "nope"),
    ("verify", "b12", "--alpha", "4"),
    ("verify", "b12", "--alpha", "x", "--beta", "3", "--gamma", "4"),
    ("eval-3f2", "1", "1", "1", "1", "1"),
    ("search", "--template", "integral", "--max", "1,2"),
    ("--precision", "8", "eval-integral", "1", "1", "1", "1", "1"),
])
def test_usage_errors_exit_2(argv, capsys):
    code, _ = cli(*argv)
    assert code == 2


def test_argparse_errors_exit_2(capsys):
    assert cli("eval-integral", "1", "1")[0] == 2
    assert "required" in capsys.readouterr().err


def test_sato_and_family():
    code, text = cli("sato")
    assert code == 0 and text.count(" exact pass ") == 6
    code, text = cli("family", "A", "--alpha-max", "3")
    assert code == 0 and text.count(" exact pass ") == 3


def test_catalogue_lists_entries():
    code, text = cli("catalogue")
    assert code == 0
    assert any(line.startswith("b12\talpha,beta,gamma\t") for line in text.splitlines())


def test_search_records_and_human(tmp_path, golden):
    out = tmp_path / "r.records"
    code, _ = cli("search", "--template", "integral", "--max", "1", "--out", str(out))
    assert code == 0
    assert out.read_text() == (golden / "search_integral_max1.records").read_text()
    code, text = cli("search", "--template", "3f2", "--max", "3", "--format", "human")
    assert code == 0 and text == "[1,1,1;2,3] = 1/2 * [1,2,2;3,3]  t_explained\n"


def test_search_tie_stdout():
    code, text = cli("search", "--template", "3f2", "--max", "4,4,4,5,6", "--tie", "d=a+1")
    assert code == 0
    recs = read_records(io.StringIO(text))
    assert all(r.template == "3f2" for r in recs)


def test_entry_point_subprocess():
    proc = subprocess.run([sys.executable, "-m", "zeta2_hyperlab", "eval-integral", "3", "1", "3", "1", "0"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "-29/18 + zeta2\n"
