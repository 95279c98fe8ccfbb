"""End to end checks for the command line interface.

Everything runs in process through main(argv) so exit codes and
output bytes are observable without spawning a subprocess.
"""

import json

import pytest

from closurelab import cli, models
from closurelab import monoid as monoid_mod
from closurelab.suites import KURATOWSKI_WORDS


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def drop_comment_lines(text):
    return "\n".join(ln for ln in text.splitlines() if not ln.startswith("# "))


# ---------------------------------------------------------------------------
# verify


def test_verify_text_header_and_verdict(capsys):
    code, out, err = run_cli(capsys, "verify", "theorem1")
    assert code == 0
    assert err == ""
    lines = out.splitlines()
    assert lines[0] == "# closurelab verify theorem1"
    assert lines[1].startswith("# generated: ")
    assert "closures: 7" in lines
    assert lines[-1] == "PASS"


def test_verify_text_deterministic_after_header(capsys):
    _, first, _ = run_cli(capsys, "verify", "theorem1")
    _, second, _ = run_cli(capsys, "verify", "theorem1")
    assert drop_comment_lines(first) == drop_comment_lines(second)


def test_verify_json_byte_identical(capsys):
    code, first, _ = run_cli(capsys, "verify", "theorem1", "--format", "json")
    _, second, _ = run_cli(capsys, "verify", "theorem1", "--format", "json")
    assert code == 0
    assert first == second
    data = json.loads(first)
    assert data["passed"] is True


def test_verify_workers_do_not_change_report(capsys):
    _, serial, _ = run_cli(capsys, "verify", "theorem1", "--workers", "1")
    _, parallel, _ = run_cli(capsys, "verify", "theorem1", "--workers", "2")
    assert drop_comment_lines(serial) == drop_comment_lines(parallel)


def test_verify_scope_flag(capsys):
    code, out, _ = run_cli(capsys, "verify", "interior", "--n", "2")
    assert code == 0
    assert out.splitlines()[-1] == "PASS"


def test_verify_rejects_csv_format(capsys):
    code, out, err = run_cli(capsys, "verify", "theorem1", "--format", "csv")
    assert code == 2
    assert out == ""
    assert "text or json" in err


def test_verify_out_of_range_scope_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "verify", "theorem1", "--n", "5")
    assert code == 2
    assert err.startswith("usage error:")


def test_unknown_suite_name_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "nonsense"])
    assert exc.value.code == 2


# ---------------------------------------------------------------------------
# search


def test_search_identities_text(capsys):
    code, out, _ = run_cli(capsys, "search", "identities", "--maxlen", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "search identities maxlen=5 scope=exhaustive-commuting-n<=2"
    assert lines[1] == "words examined: 94"
    assert lines[2] == "equations found: 43"
    assert len(lines) == 3 + 43
    assert "qp = pq" in lines


def test_search_identities_json(capsys):
    code, out, _ = run_cli(capsys, "search", "identities", "--maxlen", "5",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload) == 43
    assert payload[0] == {
        "lhs": "qp",
        "rhs": "pq",
        "scope": "exhaustive-commuting-n<=2",
        "status": "holds",
    }
    assert all(entry["status"] == "holds" for entry in payload)


def test_search_counterexample_refuted_exits_zero(capsys):
    code, out, _ = run_cli(capsys, "search", "counterexample", "--eq", "pq=qp")
    assert code == 0
    assert out.splitlines()[0] == "search counterexample pq = qp"
    assert "refuted: pq != qp on " in out


def test_search_counterexample_held_exits_one(capsys):
    code, out, _ = run_cli(capsys, "search", "counterexample", "--eq", "pp=p")
    assert code == 1
    assert out == ("search counterexample pp = p\n"
                   "no counterexample found (exhaustive-all-n<=2)\n")


def test_search_counterexample_flag_errors(capsys):
    code, _, err = run_cli(capsys, "search", "counterexample")
    assert code == 2
    assert "--eq" in err

    code, _, err = run_cli(capsys, "search", "counterexample", "--eq", "pqqp")
    assert code == 2

    code, _, err = run_cli(capsys, "search", "counterexample", "--eq", "px=p")
    assert code == 2
    assert "unknown letter" in err


def test_search_witness14_text(capsys):
    code, out, _ = run_cli(capsys, "search", "witness14")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "search witness14"
    assert lines[1] == "ground size: 6"
    fixed = lines[2].removeprefix("fixed points: ").split(" ")
    assert len(fixed) == 20
    assert lines[3] == "seed: {1,4}"


# ---------------------------------------------------------------------------
# dump


def test_dump_model_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "dump", "model", "--name", "example3-repaired",
                           "--M", "8")
    assert code == 0
    payload = json.loads(out)
    assert payload == models.example3(8).to_json()
    rebuilt = models.ClosurePairModel.from_json(payload)
    assert json.dumps(rebuilt.to_json(), sort_keys=True) == json.dumps(payload, sort_keys=True)


def test_dump_model_names_select_variants(capsys):
    _, out, _ = run_cli(capsys, "dump", "model", "--name", "example3-literal", "--M", "6")
    assert json.loads(out) == models.example3(6, variant="literal").to_json()

    _, out, _ = run_cli(capsys, "dump", "model", "--name", "pij(1,0)", "--m", "3")
    assert json.loads(out) == models.pij_pair(1, 0, models.WindowSpec("cycle", 3)).to_json()

    _, out, _ = run_cli(capsys, "dump", "model", "--name", "section4", "--m", "3")
    assert json.loads(out) == models.section4_model(3).to_json()


def test_dump_model_flag_errors(capsys):
    code, _, err = run_cli(capsys, "dump", "model")
    assert code == 2
    assert "--name" in err

    code, _, err = run_cli(capsys, "dump", "model", "--name", "bogus")
    assert code == 2
    assert err.startswith("usage error:")

    code, _, err = run_cli(capsys, "dump", "model", "--name", "pij(1)")
    assert code == 2
    assert "pij" in err


def test_dump_monoid_witness14(capsys):
    code, out, _ = run_cli(capsys, "dump", "monoid", "--model", "witness14",
                           "--gens", "k,c")
    assert code == 0
    payload = json.loads(out)
    assert payload["size"] == 14
    assert payload["truncated"] is False
    assert tuple(payload["witnesses"]) == ("",) + KURATOWSKI_WORDS[1:]


def test_dump_monoid_gens_validation(capsys):
    code, _, err = run_cli(capsys, "dump", "monoid", "--model", "example3")
    assert code == 2  # default gens are c,k but the model offers p,q,c
    assert "not available" in err

    code, _, err = run_cli(capsys, "dump", "monoid")
    assert code == 2
    assert "--model" in err


def test_dump_monoid_example3_closure_pair(capsys):
    code, out, _ = run_cli(capsys, "dump", "monoid", "--model", "example3",
                           "--M", "8", "--gens", "p,q")
    assert code == 0
    payload = json.loads(out)
    assert payload["size"] == 17


def test_dump_hasse_witness14(capsys):
    code, out, _ = run_cli(capsys, "dump", "hasse", "--model", "witness14",
                           "--gens", "k,c")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["nodes"]) == 14
    assert "1" in payload["nodes"]
    assert len(payload["edges"]) == 16
    assert ["1", "k"] in payload["edges"]
    assert ["ckc", "1"] in payload["edges"]
    for lo, hi in payload["edges"]:
        assert lo in payload["nodes"] and hi in payload["nodes"]


def test_dump_orbit_csv(capsys):
    code, out, _ = run_cli(capsys, "dump", "orbit", "--model", "section4",
                           "--m", "4", "--word", "pq", "--start", "0,top")
    assert code == 0
    assert out == ('step,image\r\n'
                   '0,"{0,top}"\r\n'
                   '1,"{0,1,2,3,4,5,6,7,top}"\r\n')


def test_dump_orbit_json_matches_library(capsys):
    code, out, _ = run_cli(capsys, "dump", "orbit", "--model", "section4",
                           "--m", "4", "--word", "p", "--start", "0,top",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    model = models.section4_model(4)
    rep = monoid_mod.orbit("p", model, model.mask_of_names("0,top"), max_iter=10)
    assert payload["word"] == "p"
    assert payload["start"] == model.format_mask(rep.start)
    assert payload["images"] == [model.format_mask(a) for a in rep.images]
    assert payload["cycle_entry"] == rep.cycle_entry
    assert payload["truncated"] == rep.truncated


def test_dump_orbit_missing_flags(capsys):
    code, _, err = run_cli(capsys, "dump", "orbit", "--model", "section4")
    assert code == 2
    assert "--word" in err


# ---------------------------------------------------------------------------
# output redirection


def test_out_writes_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "verify", "theorem1", "--format", "json",
                           "--out", str(target))
    assert code == 0
    assert out == ""
    _, direct, _ = run_cli(capsys, "verify", "theorem1", "--format", "json")
    assert target.read_text() == direct


def test_out_env_dir_resolves_relative_paths(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(cli.OUT_DIR_ENV, str(tmp_path))
    code, _, _ = run_cli(capsys, "verify", "lemma6", "--out", "lemma6.txt")
    assert code == 0
    written = (tmp_path / "lemma6.txt").read_text()
    assert written.splitlines()[-1] == "PASS"

    absolute = tmp_path / "sub.txt"
    code, _, _ = run_cli(capsys, "verify", "lemma6", "--out", str(absolute))
    assert code == 0
    assert absolute.exists()
