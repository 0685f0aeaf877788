import json

from splitspin.cli import main


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out


def run_json(capsys, *args):
    code, out = run_cli(capsys, *args)
    return code, json.loads(out)


def test_axet_prime_example(capsys):
    code, doc = run_json(capsys, "axet", "--p", "7", "--mu", "1")
    assert code == 0
    assert doc["size"] == 7 and doc["split"] == "single" and doc["index"] == 1


def test_axet_sweep_preserves_order(capsys):
    # negative leading values need the = form, as usual with argparse
    code, doc = run_json(capsys, "axet", "--mu=-1,-1/2,0,1/2,1", "--alpha", "3")
    assert code == 0
    sizes = [entry["size"] for entry in doc["sweep"]]
    assert sizes == ["infinite", 3, 4, 6, "infinite"]


def test_axet_sweep_parallel_matches_serial(capsys):
    _, serial = run_json(capsys, "axet", "--mu", "0,1/2", "--alpha", "3")
    _, parallel = run_json(capsys, "axet", "--mu", "0,1/2", "--alpha", "3", "--workers", "2")
    assert serial == parallel


def test_simple_baric_example(capsys):
    code, doc = run_json(
        capsys, "simple", "--gram", '[["1","0"],["0","1"]]', "--alpha", "-1"
    )
    assert code == 0
    assert doc["simple"] is False and doc["reason"] == "BaricMinusOne"


def test_idempotents_example(capsys):
    code, doc = run_json(capsys, "idempotents", "--p", "5", "--gram", "[[1]]", "--alpha", "2")
    assert code == 0
    enum = doc["enumeration"]
    assert enum["nonzero_count"] == 7 and enum["expected_count"] == 7
    assert "other" not in enum["counts"]


def test_idempotents_infeasible_over_rationals(capsys):
    code, doc = run_json(
        capsys, "idempotents", "--alpha", "3", "--gram", '[["1","0"],["0","1"]]'
    )
    assert code == 0
    assert doc["enumeration"]["feasible"] is False
    assert doc["family_members"]  # witnesses produce explicit family elements


def test_build_report(capsys):
    code, doc = run_json(capsys, "build", "--alpha", "3", "--gram", '[["1","0"],["0","1"]]')
    assert code == 0
    assert doc["basis"] == ["e1", "e2", "z1", "z2"]
    assert doc["kind"] == "split_spin"
    assert doc["alpha"] == "3/1"
    assert [0, 0, 2, "-3/1"] in doc["structure_constants"]


def test_axis_check(capsys):
    code, doc = run_json(capsys, "axis-check", "--alpha", "3", "--gram", '[["1","0"],["0","1"]]')
    assert code == 0
    assert all(axis["ok"] for axis in doc["axes"])
    names = {axis["axis_name"] for axis in doc["axes"]}
    assert {"z1", "z2", "family_a", "family_b"} <= names


def test_axis_check_cover(capsys):
    code, doc = run_json(
        capsys, "axis-check", "--variant", "cover", "--gram", '[["1","0"],["0","1"]]'
    )
    assert code == 0
    names = [axis["axis_name"] for axis in doc["axes"]]
    assert names[0] == "z1" and "family_exc" in names
    assert all(axis["ok"] for axis in doc["axes"])


def test_frobenius_report(capsys):
    code, doc = run_json(capsys, "frobenius", "--alpha", "3", "--gram", '[["1","0"],["0","1"]]')
    assert code == 0
    assert doc["gram"][2][2] == "4/1" and doc["gram"][3][3] == "-1/1"
    assert doc["rank"] == 4 and doc["radical"] == []


def test_radical_baric(capsys):
    code, doc = run_json(capsys, "radical", "--alpha", "2", "--gram", '[["1","0"],["0","1"]]')
    assert code == 0
    assert doc["baric"] == "alpha=2" and len(doc["radical"]) == 3


def test_yabe_report(capsys):
    code, doc = run_json(capsys, "yabe", "--alpha", "3", "--mu", "2")
    assert code == 0
    assert doc["delta"] == "-5/1"
    assert doc["spans_algebra"] is True
    assert doc["basis"] == ["a0", "a1", "a_minus1", "q"]


def test_yabe_mu_one_fails_with_code(capsys):
    code, doc = run_json(capsys, "yabe", "--alpha", "3", "--mu", "1")
    assert code == 1
    assert doc["error"]["code"] == "MuOne"


def test_cover_report(capsys):
    code, doc = run_json(capsys, "cover", "--gram", '[["1","0"],["0","1"]]')
    assert code == 0
    assert doc["all_ok"] is True


def test_config_error_unknown_key(tmp_path, capsys):
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"field": {"kind": "rational"}, "extra": 1}))
    code, out = run_cli(capsys, "build", "-c", str(config))
    assert code == 2


def test_config_error_bad_prime(capsys):
    code, _ = run_cli(capsys, "build", "--p", "9", "--gram", "[[1]]", "--alpha", "2")
    assert code == 2


def test_config_file_with_overrides(tmp_path, capsys):
    config = tmp_path / "cfg.json"
    config.write_text(
        json.dumps(
            {
                "field": {"kind": "prime", "p": 5},
                "alpha": "2",
                "gram": [["1"]],
                "output": "json",
            }
        )
    )
    code, doc = run_json(capsys, "idempotents", "-c", str(config))
    assert code == 0
    assert doc["enumeration"]["nonzero_count"] == 7
    # flag override replaces the gram with a two-generated shortcut
    code, doc = run_json(capsys, "axet", "-c", str(config), "--mu", "2")
    assert code == 0
    assert doc["size"] == 3


def test_text_format(capsys):
    code, out = run_cli(
        capsys, "simple", "--gram", '[["1","0"],["0","1"]]', "--alpha", "3", "--format", "text"
    )
    assert code == 0
    assert "simple: True" in out
    assert "reason: Simple" in out


def test_reports_are_deterministic(capsys):
    _, first = run_cli(capsys, "cover", "--gram", '[["1","0"],["0","1"]]')
    _, second = run_cli(capsys, "cover", "--gram", '[["1","0"],["0","1"]]')
    assert first == second


def test_selftest_wiring(capsys, monkeypatch):
    import splitspin.acceptance as acceptance

    def fake_pass():
        pass

    def fake_fail():
        raise AssertionError("boom")

    monkeypatch.setattr(
        acceptance, "CRITERIA", ((1, "ok", fake_pass), (2, "bad", fake_fail))
    )
    assert main(["selftest"]) == 1
    out = capsys.readouterr().out
    assert "PASS criterion 1" in out and "FAIL criterion 2" in out
    monkeypatch.setattr(acceptance, "CRITERIA", ((1, "ok", fake_pass),))
    assert main(["selftest"]) == 0


def test_selftest_only_flag(capsys):
    assert main(["selftest", "--only", "2"]) == 0
    out = capsys.readouterr().out
    assert "criterion 2" in out and "criterion 1" not in out
