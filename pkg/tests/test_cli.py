import io
import re
import subprocess
import sys

import pytest

from matcrit.cli import main, rational
from matcrit.constructions import fano
from matcrit.fileformat import serialize


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_density_m18():
    assert run("density", "M18") == (0, "9/4\n", "")


def test_cover_u25_not_coverable():
    code, out, _ = run("cover", "2", "U_2_5")
    assert (code, out) == (1, "ViolatingSet {0,1,2,3,4}\n")


def test_cover_u36():
    code, out, _ = run("cover", "2", "U_3_6")
    assert (code, out) == (0, "Cover {0,1,2} {3,4,5}\n")


def test_covering_number():
    assert run("covering-number", "F7")[:2] == (0, "3\n")


def test_show():
    code, out, _ = run("show", "MK4")
    assert code == 0
    assert "density 2\n" in out and "circuits 3:4 4:3\n" in out and "connected yes\n" in out


def test_critical_flags():
    code, out, _ = run("critical", "F7", "--strict", "2", "--at", "7/3")
    assert code == 0
    assert "density_critical yes" in out
    assert "strictly_critical_at 2 yes" in out
    assert "critical_at 7/3 yes" in out


def test_minors():
    code, out, _ = run("minors", "U_2_5", "--max-density")
    assert code == 0
    assert out.splitlines()[0] == "max_density 2"
    assert out.splitlines()[1].startswith("witness delete {")


def test_verify_rank_size_report():
    code, out, _ = run("verify", "lemma1.4")
    lines = out.splitlines()
    assert code == 0
    assert lines[0].startswith("NOTE completeness")
    assert sum(line.startswith("CHECK ") and " PASS " in line for line in lines) == 10
    assert lines[-1] == "SUMMARY lemma1.4 PASS 10/10"


def test_verify_prop_with_limit():
    code, out, _ = run("verify", "prop1.2", "--max-n", "3")
    assert code == 0 and out.splitlines()[-1] == "SUMMARY prop1.2 PASS 3/3"


def test_catalog_listing():
    code, out, _ = run("catalog")
    assert code == 0
    assert "M18 rank=8 size=18 density=9/4 lists=thm1.6" in out.splitlines()


def test_file_argument(tmp_path):
    path = tmp_path / "f7.mat"
    path.write_text(serialize(fano(), "F7"))
    assert run("density", str(path))[:2] == (0, "7/3\n")


def test_bad_file_exit_3(tmp_path):
    path = tmp_path / "bad.mat"
    path.write_text("MATROID bad\nELEMENTS 4\nRANK 2\nBASES\n0 1\n2 3\nEND\n")
    code, _, err = run("show", str(path))
    assert code == 3 and "basis exchange" in err
    path.write_text("MATROID bad\nELEMENTS 4\n")
    code, _, err = run("show", str(path))
    assert code == 3 and "line 3" in err


def test_unknown_name_exit_3():
    assert run("density", "no_such_matroid")[0] == 3


@pytest.mark.parametrize(
    "argv",
    [[], ["bogus"], ["cover", "two", "F7"], ["critical", "F7", "--at", "0.5"],
     ["verify", "thm9"], ["verify", "lemma1.4", "--max-n", "2"], ["minors", "F7"],
     ["verify", "prop1.2", "--max-n", "7"], ["cover", "0", "F7"]],
)
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_rational_argument():
    from fractions import Fraction
    assert rational("9/4") == Fraction(9, 4)
    assert rational("2") == 2
    import argparse
    for bad in ("1.5", "1/0", "a/b", "3/"):
        with pytest.raises(argparse.ArgumentTypeError):
            rational(bad)


def test_output_is_deterministic_and_exact():
    first = run("minors", "P_U24_MK4", "--max-density")
    assert first == run("minors", "P_U24_MK4", "--max-density")
    text = first[1] + run("catalog")[1] + run("critical", "MK5-e", "--at", "9/4")[1]
    # tags such as thm1.6 are names, not numbers
    assert not re.search(r"(?<![a-z\d])\d+\.\d", text)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "matcrit", "density", "MK5-e"],
                          capture_output=True, text=True)
    assert (proc.returncode, proc.stdout) == (0, "9/4\n")
