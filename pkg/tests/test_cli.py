import json

import pytest

from kroncover.cli import main


V4_LINE = '{"name":"V4","degree":4,"generators":["(0 1)(2 3)","(0 2)(1 3)"],"order":4}'
S3_LINE = '{"name":"S3","degree":3,"generators":["(0 1)","(0 1 2)"],"order":6}'
A5A5_LINE = (
    '{"name":"A5xA5","degree":10,"generators":'
    '["(0 1 2)","(0 1 2 3 4)","(5 6 7)","(5 6 7 8 9)"],"order":3600}'
)


@pytest.fixture
def small_corpus(tmp_path):
    p = tmp_path / "corpus.jsonl"
    p.write_text(V4_LINE + "\n" + S3_LINE + "\n")
    return str(p)


def test_verify_tsv(small_corpus, capsys):
    rc = main(["verify", "--corpus", small_corpus, "--checks", "jordan"])
    assert rc == 0
    out = capsys.readouterr().out
    lines = out.splitlines()
    header = [l for l in lines if l.startswith("# ")]
    assert any("h_constant" in l for l in header)
    body = [l for l in lines if l and not l.startswith("#")]
    assert body[0].split("\t")[0] == "check"
    assert all(row.split("\t")[0] == "jordan" for row in body[1:])
    assert len(body) > 1


def test_verify_json_out_file(small_corpus, tmp_path):
    out = tmp_path / "report.json"
    rc = main(
        [
            "verify",
            "--corpus",
            small_corpus,
            "--checks",
            "jordan,theorem",
            "--format",
            "json",
            "--out",
            str(out),
        ]
    )
    assert rc == 0
    parsed = json.loads(out.read_text())
    assert parsed["config"]["h_constant"] == 2.0
    checks = {r["check"] for r in parsed["records"]}
    assert checks == {"jordan", "theorem"}


def test_verify_unknown_check(small_corpus, capsys):
    rc = main(["verify", "--corpus", small_corpus, "--checks", "nope"])
    assert rc == 1
    assert "unknown checks" in capsys.readouterr().err


def test_verify_bad_corpus(tmp_path, capsys):
    p = tmp_path / "bad.jsonl"
    p.write_text('{"name":"X"\n')
    rc = main(["verify", "--corpus", str(p), "--checks", "jordan"])
    assert rc == 1
    assert "corpus error" in capsys.readouterr().err


def test_verify_missing_corpus_file(tmp_path, capsys):
    rc = main(["verify", "--corpus", str(tmp_path / "absent.jsonl")])
    assert rc == 1


def test_verify_counterexample_exit_code(small_corpus, monkeypatch, capsys):
    import kroncover.harness as hz

    real = hz.covers

    def lying(U, A):
        inst = real(U, A)
        object.__setattr__(inst, "covered", not inst.covered)
        return inst

    monkeypatch.setattr(hz, "covers", lying)
    rc = main(["verify", "--corpus", small_corpus, "--checks", "jordan"])
    assert rc == 2
    assert "COUNTEREXAMPLE" in capsys.readouterr().err


def test_bounds_g_table(capsys):
    rc = main(["bounds", "--table", "g", "--n-max", "3", "--c-max", "2"])
    assert rc == 0
    out = capsys.readouterr().out
    rows = [l for l in out.splitlines() if l and not l.startswith("#")]
    assert rows[0] == "n\tc\tkind\tvalue"
    assert len(rows) == 1 + 3 * 3  # header + n in 1..3, c in 0..2
    first = rows[1].split("\t")
    assert first[:3] == ["1", "0", "exact"] and first[3] == "1"


def test_bounds_h_constant_changes_values(capsys):
    main(["bounds", "--table", "h", "--n-max", "6"])
    a = capsys.readouterr().out
    main(["bounds", "--table", "h", "--n-max", "6", "--h-constant", "3.0"])
    b = capsys.readouterr().out
    assert a != b


def test_decompose_diagonal(tmp_path, capsys):
    p = tmp_path / "corpus.jsonl"
    p.write_text(A5A5_LINE + "\n")
    rc = main(
        [
            "decompose",
            "--corpus",
            str(p),
            "--group",
            "A5xA5",
            "--subgroup",
            "(0 1 2)(5 6 7); (0 1 2 3 4)(5 6 7 8 9)",
        ]
    )
    assert rc == 0
    out = capsys.readouterr().out
    assert "|U| = 60" in out
    assert "[0, 1]" in out


def test_decompose_not_full_projection(tmp_path, capsys):
    p = tmp_path / "corpus.jsonl"
    p.write_text(A5A5_LINE + "\n")
    rc = main(
        [
            "decompose",
            "--corpus",
            str(p),
            "--group",
            "A5xA5",
            "--subgroup",
            "(0 1 2)",
        ]
    )
    assert rc == 0
    assert "not full" in capsys.readouterr().out


def test_decompose_rejects_non_power(small_corpus, capsys):
    rc = main(
        ["decompose", "--corpus", small_corpus, "--group", "V4", "--subgroup", "(0 1)(2 3)"]
    )
    assert rc == 1
    assert "not a recognizable power" in capsys.readouterr().err


def test_decompose_unknown_group(small_corpus, capsys):
    rc = main(["decompose", "--corpus", small_corpus, "--group", "Z9", "--subgroup", "()"])
    assert rc == 1
    assert "not in corpus" in capsys.readouterr().err
