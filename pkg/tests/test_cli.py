"""Command line: exit codes, output stability, golden lines."""

import json
import os
import subprocess
import sys
from pathlib import Path

from abcat.cli import main

FIXTURES = Path(__file__).parent / "fixtures"
SRC = Path(__file__).parent.parent / "src"


def run_cli(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_filtered_chain(capsys):
    code, out, _ = run_cli(capsys, "check", "filtered", FIXTURES / "chain3.json")
    assert code == 0
    assert "holds: True" in out


def test_check_filtered_discrete_fails(capsys):
    code, out, _ = run_cli(capsys, "check", "filtered", FIXTURES / "discrete2.json")
    assert code == 1
    assert "no upper bound" in out


def test_check_connected_and_sifted(capsys):
    assert run_cli(capsys, "check", "connected", FIXTURES / "chain3.json")[0] == 0
    assert run_cli(capsys, "check", "connected", FIXTURES / "discrete2.json")[0] == 1
    assert run_cli(capsys, "check", "sifted", FIXTURES / "chain3.json")[0] == 0
    assert run_cli(capsys, "check", "sifted", FIXTURES / "discrete2.json")[0] == 1


def test_check_final(capsys):
    code, out, _ = run_cli(capsys, "check", "final", FIXTURES / "top_inclusion.json")
    assert code == 0


def test_limit_colimit(capsys):
    code, out, _ = run_cli(capsys, "limit", FIXTURES / "equalizer_sets.json")
    assert code == 0
    assert "limit_size: 1" in out
    code, out, _ = run_cli(capsys, "colimit", FIXTURES / "equalizer_sets.json")
    assert code == 0
    assert "colimit_size: 1" in out


def test_hx_command(capsys):
    code, out, _ = run_cli(capsys, "hx", "--set", "a,b", "--cap", "2")
    assert code == 0
    assert "objects: 7" in out
    assert "morphisms: 35" in out


def test_ab_snf(capsys):
    code, out, _ = run_cli(capsys, "ab", "snf", FIXTURES / "z6_presentation.json")
    assert code == 0
    assert "canonical_form: Z/6" in out
    assert "diagonal: [1, 6]" in out


def test_ab_coinvariants_golden(capsys):
    code, out, _ = run_cli(capsys, "ab", "coinvariants", FIXTURES / "neg_z.json")
    assert code == 0
    assert out == "coinvariants: Z/2\n"
    code, out, _ = run_cli(capsys, "ab", "invariants", FIXTURES / "neg_z.json")
    assert code == 0
    assert out == "invariants: 0\n"


def test_ab_sum(capsys):
    code, out, _ = run_cli(capsys, "ab", "sum", FIXTURES / "family.json")
    assert code == 0
    assert "sum: Z x Z/2" in out


def test_ab_colimit_limit_on_diagram(capsys):
    code, out, _ = run_cli(capsys, "ab", "colimit", FIXTURES / "ab5_chain.json")
    assert code == 0
    code, out, _ = run_cli(capsys, "ab", "limit", FIXTURES / "ab5_chain.json")
    assert code == 0


def test_verify_notlex_exits_zero_with_certificate(capsys):
    code, out, _ = run_cli(capsys, "verify", "notlex", FIXTURES / "notlex.json")
    assert code == 0
    assert "induced map mono: False" in out
    assert "coinvariants source: Z/2" in out
    assert "coinvariants target: Z" in out


def test_verify_notlex_builtin_default(capsys):
    code, out, _ = run_cli(capsys, "verify", "notlex")
    assert code == 0


def test_verify_harting_file(capsys):
    code, out, _ = run_cli(capsys, "verify", "harting", FIXTURES / "family.json",
                           "--cap", "2", "--stability-cap", "3")
    assert code == 0
    assert "canonical form: Z x Z/2" in out
    assert "cap stable: True" in out


def test_verify_ab4_file(capsys):
    code, out, _ = run_cli(capsys, "verify", "ab4", FIXTURES / "ab4_family.json")
    assert code == 0
    assert "induced mono: True" in out


def test_verify_ab5_file(capsys):
    code, out, _ = run_cli(capsys, "verify", "ab5", FIXTURES / "ab5_chain.json")
    assert code == 0


def test_verify_commute_and_fixpoints_file(capsys):
    code, out, _ = run_cli(capsys, "verify", "commute", FIXTURES / "gset_chain.json")
    assert code == 0
    code, out, _ = run_cli(capsys, "verify", "fixpoints", FIXTURES / "gset_chain.json")
    assert code == 0


def test_verify_randomized_suites(capsys):
    for prop in ("ab4", "ab5", "harting", "commute", "fixpoints"):
        code, out, _ = run_cli(capsys, "verify", prop, "--trials", "3", "--seed", "11")
        assert code == 0, prop


def test_machine_output_stable_across_runs(capsys):
    code1, out1, _ = run_cli(capsys, "verify", "commute", "--trials", "3",
                             "--seed", "5", "--format", "machine")
    code2, out2, _ = run_cli(capsys, "verify", "commute", "--trials", "3",
                             "--seed", "5", "--format", "machine")
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["ok"] is True
    assert payload["seed"] == 5


def test_exit_code_two_on_bad_input(tmp_path, capsys):
    missing = tmp_path / "missing.json"
    assert run_cli(capsys, "check", "filtered", missing)[0] == 2
    garbage = tmp_path / "garbage.json"
    garbage.write_text("{ nope")
    code, _, err = run_cli(capsys, "check", "filtered", garbage)
    assert code == 2
    assert "error:" in err
    wrong_kind = tmp_path / "wrong.json"
    wrong_kind.write_text((FIXTURES / "family.json").read_text())
    assert run_cli(capsys, "check", "filtered", wrong_kind)[0] == 2


def test_verify_notlex_rejects_non_equivariant_map(tmp_path, capsys):
    doc = json.loads((FIXTURES / "notlex.json").read_text())
    doc["map"] = [[1], [0]]   # not equivariant for negation vs swap
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, _, err = run_cli(capsys, "verify", "notlex", bad)
    assert code == 2
    assert "equivariant" in err


def test_hx_budget_exhaustion_is_input_error(capsys):
    code, _, err = run_cli(capsys, "hx", "--set", "a,b,c", "--cap", "4",
                           "--budget", "100")
    assert code == 2
    assert "budget" in err


def test_verify_rejects_lawless_diagram(tmp_path, capsys):
    # structurally parseable but functor-law-breaking: exit 2, not 0 or 1
    doc = json.loads((FIXTURES / "gset_chain.json").read_text())
    for key in doc["maps"]:
        if len(doc["maps"][key]) >= 3:
            doc["maps"][key] = [doc["maps"][key][1], doc["maps"][key][2],
                                doc["maps"][key][0]] + doc["maps"][key][3:]
            break
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps(doc))
    code, _, err = run_cli(capsys, "verify", "commute", broken)
    assert code == 2
    assert "functor laws" in err


def test_module_entry_point_subprocess():
    env = dict(os.environ, PYTHONPATH=str(SRC))
    proc = subprocess.run(
        [sys.executable, "-m", "abcat", "check", "filtered",
         str(FIXTURES / "chain3.json")],
        capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    assert "holds: True" in proc.stdout
