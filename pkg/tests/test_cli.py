import json

from drgkit.cli import main
from drgkit.corpus import builtin_corpus, save_corpus


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "{3,2,2;1,1,3}")
    assert code == 0
    assert "sqrt(2)" in out and "mult 6" in out
    assert "v = 14" in out


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "{3,2;1,1}", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["v"] == "10"
    assert [m["exact"] for m in payload["spectrum"]["multiplicities"]] == ["1", "5", "4"]
    assert payload["standard_sequences"][2]["sign_changes"] == 2


def test_check_pass_and_fail_exit_codes(capsys):
    code, out, _ = run(capsys, "check", "{3,2,2;1,1,3}")
    assert code == 0 and "overall: pass" in out
    code, out, _ = run(capsys, "check", "{3,1,2;1,1,3}")
    assert code == 1 and "basic.b-monotone" in out


def test_check_json_matches_text_verdicts(capsys):
    code, out, _ = run(capsys, "check", "{4,2,1;1,1,4}", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    verdicts = {c["name"]: c["verdict"] for c in payload["conditions"]}
    code, out, _ = run(capsys, "check", "{4,2,1;1,1,4}")
    for name, verdict in verdicts.items():
        assert name in out
    assert payload["passed"] is True


def test_usage_errors_exit_2(capsys):
    code, _, err = run(capsys, "check")
    assert code == 2 and "exactly one" in err
    code, _, err = run(capsys, "analyze", "{3,2;1,1}", "--entry", "petersen")
    assert code == 2
    code, _, err = run(capsys, "analyze", "{3,2;1,1,1}")
    assert code == 2 and "error" in err


def test_entry_input(capsys):
    code, out, _ = run(capsys, "analyze", "--entry", "petersen")
    assert code == 0 and "{3,2;1,1}" in out


def test_file_input(capsys, tmp_path):
    p = tmp_path / "arr.txt"
    p.write_text("{6,4,2;1,2,3}\n")
    code, out, _ = run(capsys, "analyze", "--file", str(p))
    assert code == 0 and "shilla=true" in out


def test_enumerate_stream_and_summary(capsys):
    code, out, _ = run(capsys, "enumerate", "--k-min", "3", "--k-max", "4",
                       "--d-min", "3", "--d-max", "3",
                       "--theta1-lo", "1", "--theta1-hi", "2",
                       "--format", "json")
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    accepted = [obj["array"] for obj in lines[:-1]]
    summary = lines[-1]
    assert summary["accepted"] == accepted
    assert "{3,2,2;1,1,3}" in accepted
    assert summary["window"] == ["1", "2"]


def test_enumerate_node_budget_exit(capsys):
    code, _, err = run(capsys, "enumerate", "--k-min", "3", "--k-max", "10",
                       "--d-min", "3", "--d-max", "3", "--node-budget", "10")
    assert code == 1 and "budget" in err


def test_corpus_verify_builtin(capsys):
    code, out, _ = run(capsys, "corpus-verify")
    assert code == 0
    assert out.count("ok") >= 27


def test_corpus_verify_detects_mismatch(capsys, tmp_path):
    entries = builtin_corpus()[:1]
    path = tmp_path / "c.json"
    save_corpus(entries, path)
    data = json.loads(path.read_text())
    data[0]["spectrum"] = [["3", 1], ["1", 6], ["-1", 6], ["-3", 1]]
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "corpus-verify", "--file", str(path))
    assert code == 1 and "MISMATCH" in out


def test_corpus_env_var(capsys, tmp_path, monkeypatch):
    path = tmp_path / "c.json"
    save_corpus(builtin_corpus()[:2], path)
    monkeypatch.setenv("DRGKIT_CORPUS", str(path))
    code, out, _ = run(capsys, "corpus-verify")
    assert code == 0
    assert out.count("ok") == 2
