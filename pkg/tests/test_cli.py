import io
import json
import subprocess
import sys

import pytest

from starinv.cli import CliConfig, main


def run(argv, stdin_text=None):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin_text) if stdin_text is not None else None,
                stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def test_compute_core():
    code, out, _ = run(["compute", "--kind", "core", "[Q 2] 1 1 / 0 0"])
    obj = json.loads(out)
    assert code == 0 and obj["value"]["entries"] == [["1", "0"], ["0", "0"]]
    assert obj["verified"] and len(obj["trace"]) == 3


def test_compute_not_invertible_exits_2():
    code, out, _ = run(["compute", "--kind", "core", "[Q 2] 0 1 / 0 0"])
    assert code == 2 and json.loads(out)["reason"] == "index > 1"


def test_invalid_weight_exits_1(files):
    e = files("e.txt", "ZN 2 2\n0 1\n0 0\n")
    code, _, err = run(["compute", "--kind", "weighted-core", "--weight", e, "[ZN 2 2] 1 0 / 0 0"])
    assert code == 1 and "InvalidWeight" in err


def test_parse_error_exits_1():
    assert run(["compute", "--kind", "core", "[Q 2] 1 x / 0 0"])[0] == 1
    assert run(["compute", "--kind", "nope", "[Q 1] 1"])[0] == 1
    assert run([])[0] == 1


def test_stdin_and_text_format():
    code, out, _ = run(["compute", "--kind", "drazin", "--format", "text", "-"], "ZN 1 4\n2\n")
    assert code == 0 and out.splitlines()[:3] == ["ZN 1 4", "0", "index 2"]


def test_verify(files):
    a = files("a.txt", "Q 2\n1 1\n0 0\n")
    good = files("x.txt", "Q 2\n1 0\n0 0\n")
    assert run(["verify", "--kind", "core", a, good])[0] == 0
    code, out, _ = run(["verify", "--kind", "core", a, a])
    assert code == 3 and json.loads(out)["passed"] is False


def test_law_thm39_known_pair(files):
    a = files("a.txt", "ZN 2 2\n1 1\n0 1\n")
    b = files("b.txt", "ZN 2 2\n1 0\n1 1\n")
    code, out, _ = run(["law", "--id", "thm39", a, b])
    obj = json.loads(out)
    assert code == 0 and obj["status"] == "EquivalenceHolds"
    assert obj["equivalences"][0]["left"] is False and obj["equivalences"][0]["right"] is False


def test_law_exit_codes(files):
    one = files("one.txt", "ZN 1 6\n1\n")
    assert run(["law", "--id", "thm32", one, one])[0] == 0
    assert run(["law", "--id", "thm32", one, "[ZN 1 4] 1"])[0] == 1
    assert run(["law", "--id", "thm32", one])[0] == 1
    # every hypothesis masked away: a nilpotent a leaves the conclusion unevaluable
    n = "[ZN 2 2] 0 1 / 0 0"
    masks = []
    for h in ("a_core", "aba = ba^2", "ba^2 = a^2b", "ab core(a) = a core(a) b"):
        masks += ["--mask", h]
    code, out, _ = run(["law", "--id", "thm32", *masks, n, "[ZN 2 2] 1 0 / 0 1"])
    assert code == 3 and json.loads(out)["status"] == "COUNTEREXAMPLE"


def test_mine_exit_codes(tmp_path):
    report = tmp_path / "r.json"
    csv = tmp_path / "r.csv"
    code, _, _ = run(["mine", "--domain", "zn", "--modulus", "2", "--dim", "2", "--law", "thm34",
                      "--mode", "exhaustive", "--output", str(report), "--csv", str(csv)])
    assert code == 0
    obj = json.loads(report.read_text())
    assert obj["totals"]["equivalence_fails"] == 0
    assert obj["totals"]["equivalence_holds"] == obj["totals"]["nonvacuous"] > 0
    assert csv.read_text().startswith("law,domain")
    assert run(["mine", "--domain", "q", "--dim", "2", "--law", "thm34"])[0] == 1
    assert run(["mine", "--domain", "zn", "--modulus", "3", "--dim", "3", "--law", "thm34"])[0] == 1
    assert run(["mine", "--domain", "zn", "--modulus", "2", "--dim", "2", "--law", "thm34",
                "--max-inputs", "3"])[0] == 4
    assert run(["mine", "--domain", "zn", "--modulus", "2", "--dim", "2", "--law", "thm32",
                "--mask", "a_core", "--mask", "b_core", "--mask", "aba = ba^2",
                "--mask", "ba^2 = a^2b", "--mask", "ab core(a) = a core(a) b",
                "--mask", "ab core(b) = b core(b) a"])[0] == 3


def test_mine_random_needs_seed_and_is_reproducible():
    base = ["mine", "--domain", "zn", "--modulus", "3", "--dim", "2", "--law", "thm35",
            "--mode", "random", "--samples", "30"]
    assert run(base)[0] == 1
    _, a, _ = run(base + ["--seed", "11"])
    _, b, _ = run(base + ["--seed", "11", "--workers", "2"])
    strip = lambda s: {k: v for k, v in json.loads(s).items() if k != "elapsed_seconds"}
    assert strip(a) == strip(b)


def test_config_file_and_override(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"domain": "zn", "modulus": 2, "dim": 2, "law": "thm39",
                               "max_inputs": 10}))
    code, out, _ = run(["mine", "--config", str(cfg)])
    assert code == 4 and json.loads(out)["totals"]["inputs"] == 10
    code, out, _ = run(["mine", "--config", str(cfg), "--max-inputs", "1000"])
    assert code == 0 and json.loads(out)["totals"]["inputs"] == 256
    cfg.write_text(json.dumps({"bogus": 1}))
    assert run(["mine", "--config", str(cfg)])[0] == 1


def test_classify():
    code, out, _ = run(["classify", "--domain", "zn", "--modulus", "6", "--dim", "1"])
    assert code == 0 and json.loads(out)["classification"]["unit"] == 2
    code, out, _ = run(["classify", "[ZN 1 4] 2"])
    assert json.loads(out)["nilpotent"] is True
    assert run(["classify"])[0] == 1


def test_mine_classify_only():
    code, out, _ = run(["mine", "--domain", "zn", "--modulus", "4", "--dim", "1"])
    assert code == 0 and json.loads(out)["classification"]["nilpotent"] == 2


def test_emitted_element_json_round_trips(files):
    code, out, _ = run(["compute", "--kind", "mp", "[QI 2] 1 i / 0 0"])
    value = json.loads(out)["value"]
    src = files("v.json", json.dumps(value))
    code, again, _ = run(["compute", "--kind", "mp", src])
    assert code == 0
    from starinv.starring import element_from_json_obj, element_to_json
    text = element_to_json(element_from_json_obj(value))
    assert element_to_json(element_from_json_obj(json.loads(text))) == text


def test_cli_config_validation():
    with pytest.raises(ValueError):
        CliConfig(worker_count=0)
    with pytest.raises(ValueError):
        CliConfig(enumeration_bound=0)


def test_console_entry_point():
    p = subprocess.run([sys.executable, "-m", "starinv", "compute", "--kind", "core",
                        "[Q 2] 0 1 / 0 0"], capture_output=True, text=True)
    assert p.returncode == 2
