import os
import subprocess
from fractions import Fraction

import pytest

import ktrans


def test_version():
    assert ktrans.version == "0.1.0"
    assert ktrans.__version__ == ktrans.version


def test_group_datum():
    g = ktrans.group_datum("VI")
    assert g["d"] == 27
    assert g["rho_g"] == 17


def test_corner_value():
    assert ktrans.c_ratio("IV 6", (0, 0), 0, "++", 1) == Fraction(4)


def test_transition_and_identity_sum():
    a = ktrans.transition("IV 6", Fraction(5), (0, 0), 0, "++", 1)
    assert a == Fraction(5, 2)
    assert ktrans.identity_sum("II 8", (2, 0), 0, 1) == Fraction(4)


def test_illegal_group():
    with pytest.raises(ValueError):
        ktrans.group_datum("IV 4")


def test_scan():
    s = ktrans.complementary_scan("IV 6", 12)
    assert s["computed_delta"] == "3"


def test_run_in_process():
    code, out, _ = ktrans.run(["catalog", "show", "V", "--json"])
    assert code == 0
    assert '"rho_g": 11' in out


@pytest.mark.skipif("KTRANS_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_binary():
    p = subprocess.run([os.environ["KTRANS_CLI"], "catalog", "list"], capture_output=True, text=True)
    assert p.returncode == 0
    assert "VI" in p.stdout
