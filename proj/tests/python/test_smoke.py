import json
import os
import subprocess

import pytest

import spets
from spets import E, CycNumber


def test_cyclotomic_arithmetic():
    z = E(3)
    assert z * z * z == CycNumber(1)
    assert str(CycNumber(1) + z + z * z) == "0"
    assert CycNumber.parse(str(E(5, 2) - E(5, 3))) == E(5, 2) - E(5, 3)
    assert abs(complex(E(4)) - 1j) < 1e-12
    assert z.conj() == E(3, 2)


def test_character_table_b2():
    t = spets.character_table("G(2,1,2)")
    assert len(t["labels"]) == len(t["classes"]) == 5
    assert t["labels"][0] == "2."
    assert sum(int(v[0]) ** 2 for v in t["values"]) == 8


def test_coxeter_numbers_s4():
    rows = spets.coxeter_numbers("G(1,1,4)")
    assert [r["c"] for r in rows] == ["0", "4", "6", "8", "12"]


def test_hook_degree_value_at_coxeter_root():
    for k in range(4):
        d = spets.hook_degree(3, 3, k, True)
        assert d["at_zeta_h"] == ("-1" if k % 2 else "1")
        assert d["at_one"] == str([1, 3, 3, 1][k])


def test_rejections():
    with pytest.raises(ValueError):
        spets.character_table("G(2,2,2)")
    with pytest.raises(ValueError):
        spets.run("group", "G_32")


def test_verify_main_and_kernel_vs_image():
    ok, report = spets.verify("main", "G(1,1,4)")
    assert ok
    assert report["schema"] == "spets-report/1"
    code, report = spets.run("kernel-vs-image", "G(2,1,2)")
    assert code == 0
    assert report["data"]["equal"] is True


def test_verify_skips_without_fourier_data():
    ok, report = spets.verify("symmetric", "G(3,1,2)")
    assert ok
    assert {c["status"] for c in report["checks"]} == {"skipped"}


cli = os.environ.get("SPETS_CLI")


@pytest.mark.skipif(not cli, reason="CLI binary not built")
def test_cli_exit_codes_and_determinism(tmp_path):
    args = [cli, "verify", "cchi", "--group", "G(3,1,2)", "--cache-dir", str(tmp_path)]
    first = subprocess.run(args, capture_output=True, text=True)
    second = subprocess.run(args, capture_output=True, text=True)
    assert first.returncode == 0 and second.returncode == 0
    a, b = json.loads(first.stdout), json.loads(second.stdout)
    assert a["timing"]["cache"]["hits"] == 0
    assert b["timing"]["cache"]["hits"] == 1
    a.pop("timing")
    b.pop("timing")
    assert a == b
    bad = subprocess.run([cli, "group", "--group", "G(2,2,2)"], capture_output=True, text=True)
    assert bad.returncode == 2
    assert "not irreducible" in bad.stderr
    usage = subprocess.run([cli, "verify", "nonsense", "--group", "G(1,1,3)"], capture_output=True, text=True)
    assert usage.returncode == 2
