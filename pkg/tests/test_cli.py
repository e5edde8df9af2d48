import io
import json
import subprocess
import sys

from tmf_forms.cli import run
from tmf_forms.lattice import builtin
from tmf_forms.series import QSeries


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    text = out.getvalue()
    return code, (json.loads(text) if text.strip() else None)


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def test_generator_and_schema():
    code, out = call("generator", "--which", "delta", "--prec", "5")
    assert code == 0
    assert out["schema"] == "tmf-forms/1"
    assert out["coeffs"] == ["0", "1", "-24", "252", "-1472"]
    assert QSeries.from_json(out).prec == 5


def test_eisenstein_and_basis():
    code, out = call("eisenstein", "--weight", "4", "--prec", "3")
    assert (code, out["coeffs"]) == (0, ["1/240", "1", "9"])
    code, out = call("basis", "--weight", "24")
    assert [(b["i"], b["j"], b["k"]) for b in out["basis"]] == [(6, 0, 0), (3, 0, 1), (0, 0, 2)]


def test_decompose_and_residue(tmp_path):
    path = write(tmp_path, "leech.json", {"prec": 3, "coeffs": ["1", "0", "196560"]})
    code, out = call("decompose", "--weight", "12", "--series", path)
    assert code == 0
    assert out["coords"] == [{"i": 3, "j": 0, "k": 0, "c": "1"}, {"i": 0, "j": 0, "k": 1, "c": "-720"}]
    code, out = call("residue", "--k", "1", "--series", path)
    assert (code, out["residue"]) == (0, "24")


def test_lattice_commands(tmp_path):
    code, out = call("theta", "--builtin", "e8", "--prec", "3")
    assert out["coeffs"] == ["1", "240", "2160"]
    code, out = call("borcherds", "--builtin", "leech")
    assert (code, out["x_k"], out["residue"], out["verdict"]) == (0, "-720", "24", "PASS")
    gram = write(tmp_path, "e8.json", builtin("e8").to_json())
    code, out = call("theta", "--gram", gram, "--prec", "2")
    assert out["coeffs"] == ["1", "240"]
    code, out = call("theta-mu", "--builtin", "e8", "--mu", "1,0,0,0,0,0,0,0", "--prec", "2")
    assert out["weight"] == 6 and out["coeffs"] == ["0", "62"]
    code, out = call("phi", "--builtin", "e8", "--mu", "1,0,0,0,0,0,0,0", "--prec", "2", "--zorder", "2")
    assert [t["x_power"] for t in out["terms"]] == [0, 2]
    assert out["terms"][1]["coeffs"] == ["-1/12", "42"]
    mu = ",".join(["1"] + ["0"] * 23)
    code, out = call("quadref", "--builtin", "e8cubed", "--mu", mu, "--mu2", mu)
    assert code == 0 and out["verdict"] == "PASS"
    code, out = call("theta-image", "--builtin", "leech")
    assert code == 0


def test_invalid_lattice_input(tmp_path, capsys):
    gram = write(tmp_path, "bad.json", {"dim": 2, "gram": [[2, 0], [0, 2]]})
    code, out = call("theta", "--gram", gram)
    assert code == 1 and out is None
    assert "NotUnimodular" in capsys.readouterr().err
    code, _ = call("borcherds", "--builtin", "e8")
    assert code == 1


def test_usage_errors_exit_1():
    assert call("no-such-command")[0] == 1
    assert call("generator")[0] == 1
    assert call("--help")[0] == 0


def test_padic_commands(tmp_path):
    path = write(tmp_path, "f.json", {"prec": 5, "coeffs": ["0", "1", "2", "3", "4"]})
    assert call("atkin", "--p", "2", "--in", path)[1]["coeffs"] == ["0", "2", "4"]
    assert call("versch", "--p", "2", "--in", path)[1]["prec"] == 10
    assert call("star", "--p", "2", "--weight", "2", "--in", path)[1]["coeffs"][2] == "0"
    assert call("atkin", "--p", "4", "--in", path)[0] == 1
    code, out = call("kummer-ko", "--p", "5", "--c", "2", "--pairs", "4:8")
    assert (code, out["verdict"]) == (0, "PASS")
    assert call("kummer-ko", "--p", "5", "--c", "2", "--pairs", "4:6")[0] == 1
    code, out = call("kummer-tmf", "--p", "3", "--c", "2", "--k", "1", "--pairs", "4:10", "--prec", "20")
    assert (code, out["verdict"]) == (0, "PASS")
    code, out = call("tau-search", "--bound", "30")
    assert out["primes"] == [11, 23]
    assert call("pi23", "--p", "11")[1]["torsion_trivial"] is False
    code, out = call("char-seq", "--qprec", "3", "--zorder", "6", "--nmax", "4")
    assert out["entries"]["2"]["coeffs"][0] == "1/24"


def test_kummer_failure_exit_2(tmp_path):
    seq = {"entries": {"4": "-1/240", "8": "-1/480"}}
    path = write(tmp_path, "seq.json", seq)
    code, out = call("kummer-ko", "--p", "5", "--c", "2", "--pairs", "4:8", "--seq", path)
    assert code == 0
    seq["entries"]["4"] = "-49/240"  # shifted by -1/5
    path = write(tmp_path, "seq.json", seq)
    code, out = call("kummer-ko", "--p", "5", "--c", "2", "--pairs", "4:8", "--seq", path)
    assert code == 2 and out["verdict"] == "FAIL"


def test_tmf_commands(tmp_path):
    code, out = call("tmf-image", "--weight", "12")
    assert [b["a"] for b in out["basis"]] == [1, 24]
    delta = write(tmp_path, "d.json", {"prec": 3, "coeffs": ["0", "1", "-24"]})
    assert call("tmf-member", "--weight", "12", "--series", delta)[0] == 2
    d24 = write(tmp_path, "d24.json", {"prec": 3, "coeffs": ["0", "24", "-576"]})
    assert call("tmf-member", "--weight", "12", "--series", d24)[0] == 0
    code, out = call("tables", "--which", "stems")
    assert out["stems"][7]["group"] == "Z/240"


def test_curve_commands():
    code, out = call("invariants", "0", "0", "0", "-1", "0")
    assert (out["c4"], out["delta"], out["j"]) == ("48", "64", "1728")
    code, out = call("transform", "5/2", "0", "0", "0", "0", "--by", "1", "0", "3", "0")
    assert out["a"][0] == "17/2"
    code, out = call("fgl", "--universal", "--degree", "3")
    terms = {(t["i"], t["j"]): t["c"] for t in out["terms"]}
    assert terms[(1, 1)] == "-a1"
    assert call("invariants", "1", "2")[0] == 1


def test_output_is_deterministic():
    a = call("phi", "--builtin", "e8", "--mu", "1,1,0,0,0,0,0,0", "--prec", "3", "--zorder", "4")
    b = call("phi", "--builtin", "e8", "--mu", "1,1,0,0,0,0,0,0", "--prec", "3", "--zorder", "4")
    assert a == b


def test_verify_default_suite():
    code, out = call("verify")
    assert code == 0 and out["verdict"] == "PASS"
    assert all(c["verdict"] == "PASS" for c in out["checks"] if c["kind"] != "witten-eisenstein")
    code, out = call("verify", "--print-default")
    assert len(out["checks"]) == 8


def test_verify_single_perturbation_fails(tmp_path):
    suite = {"checks": [
        {"kind": "kummer-ko", "params": {"primes": [5], "kmax": 0, "nmax": 12}},
        {"kind": "kummer-ko", "name": "perturbed",
         "params": {"primes": [5], "kmax": 0, "nmax": 12, "perturb": {"n": 4, "delta": "1/5"}}},
        {"kind": "tau-search", "params": {"bound": 30, "expected": [11, 23]}},
    ]}
    code, out = call("verify", write(tmp_path, "s.json", suite))
    assert code == 2
    assert [c["verdict"] for c in out["checks"]] == ["PASS", "FAIL", "PASS"]
    assert out["failures"] == 1
    suite["checks"][1]["expect"] = "FAIL"
    code, out = call("verify", write(tmp_path, "s.json", suite))
    assert code == 0


def test_verify_empty_suite(tmp_path, capsys):
    code, out = call("verify", write(tmp_path, "e.json", {"checks": []}))
    assert code == 0 and out["empty"] is True
    assert "empty suite" in capsys.readouterr().err


def test_verify_unknown_kind(tmp_path):
    assert call("verify", write(tmp_path, "u.json", {"checks": [{"kind": "nope"}]}))[0] == 1


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tmf_forms.cli", "generator", "--which", "c4", "--prec", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["coeffs"] == ["1", "240"]
