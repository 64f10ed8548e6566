import json

import pytest

from salient import cli, posets


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_formula(capsys):
    code, out, _ = run(capsys, "count", "--n", "7", "--method", "formula")
    assert code == 0 and out == "1824\n"


def test_count_methods_agree(capsys):
    values = set()
    for method in ("bfs", "formula", "series"):
        code, out, _ = run(capsys, "count", "--n", "5", "--method", method)
        assert code == 0
        values.add(out)
    assert values == {"42\n"}


def test_class_size_only(capsys):
    code, out, _ = run(capsys, "class", "--word", "321", "--size-only")
    assert code == 0 and out == "3\n"


def test_class_members_json(capsys):
    code, out, _ = run(capsys, "class", "--word", "321", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"representative": "231", "size": 3,
                       "members": ["231", "312", "321"]}


def test_classes_json_round_trip(capsys):
    code, out, _ = run(capsys, "classes", "--n", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 3
    assert [c["size"] for c in payload["classes"]] == [3, 3]
    code, out2, _ = run(capsys, "classes", "--n", "3", "--format", "json")
    assert out == out2


def test_classes_members_threshold(capsys):
    code, out, _ = run(capsys, "classes", "--n", "4", "--format", "json",
                       "--members-limit", "2")
    payload = json.loads(out)
    sizes = {c["size"] for c in payload["classes"]}
    assert any(s > 2 for s in sizes)
    for c in payload["classes"]:
        assert ("members" in c) == (c["size"] <= 2)


def test_salient_command(capsys):
    code, out, _ = run(capsys, "salient", "--word", "4321")
    assert code == 0 and out == "3412\n"


def test_singletons(capsys):
    code, out, _ = run(capsys, "singletons", "--n", "6")
    assert code == 0 and out == "90\n"
    code, out, _ = run(capsys, "singletons", "--n", "12", "--method", "series")
    assert code == 0
    code, out, _ = run(capsys, "singletons", "--n", "12")
    assert code == 2


def test_multiset(capsys):
    code, out, _ = run(capsys, "multiset", "--spec", "1:2,2:1,3:2",
                       "--count-only")
    assert code == 0 and out == "6\n"
    code, out, _ = run(capsys, "multiset", "--spec", "1:2,2:2",
                       "--format", "json")
    payload = json.loads(out)
    assert payload["spec"] == "1:2,2:2"
    assert [c["size"] for c in payload["classes"]] == [6]


def test_cf_json(capsys):
    code, out, _ = run(capsys, "cf", "--n", "3", "--caps", "1,1,1",
                       "--format", "json")
    assert code == 0
    records = json.loads(out)
    by_exps = {tuple(r["exponents"]): r["coefficient"] for r in records}
    assert by_exps[(1, 1, 1)] == "2"
    assert all(isinstance(r["coefficient"], str) for r in records)


def test_f4(capsys):
    code, out, _ = run(capsys, "f4", "--exps", "2,1,0,2")
    assert code == 0 and out == "18\n"
    code, out, _ = run(capsys, "f4", "--exps", "1,1,1,1", "--t", "1")
    assert code == 0 and out == "8\n"
    code, out, _ = run(capsys, "f4", "--exps", "1,1,1")
    assert code == 1


def test_umbral(capsys):
    code, out, _ = run(capsys, "umbral", "--k", "1", "--upto", "8")
    assert code == 0 and out == "1 1 1 2 8 42 258 1824 14664\n"
    code, out, _ = run(capsys, "umbral", "--k", "2", "--upto", "4")
    assert out == "1 1 1 6 216\n"


def test_poset_beta_gamma(capsys):
    code, out, _ = run(capsys, "poset", "beta", "--gamma", "01")
    assert code == 0
    assert out.splitlines() == [
        "S=- alpha=1 beta=1",
        "S=1 alpha=2 beta=1",
        "S=2 alpha=2 beta=1",
        "S=1,2 alpha=3 beta=0",
    ]


def test_poset_beta_json_and_file(capsys, tmp_path):
    path = tmp_path / "poset.json"
    path.write_text(posets.GradedPoset.boolean_lattice(2).to_json(),
                    encoding="utf-8")
    code, out, _ = run(capsys, "poset", "beta", "--file", str(path),
                       "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert {"S": [1], "alpha": 2, "beta": 1} in rows


def test_poset_beta_dot(capsys):
    code, out, _ = run(capsys, "poset", "beta", "--gamma", "01",
                       "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")


def test_poset_extensions(capsys):
    code, out, _ = run(capsys, "poset", "extensions", "--qn", "5")
    assert code == 0 and out == "8\n"
    code, out, _ = run(capsys, "poset", "extensions", "--gamma", "0101")
    assert code == 0 and out == "8\n"
    code, out, _ = run(capsys, "poset", "extensions")
    assert code == 1


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--by", "rank", "--max", "4")
    assert code == 0 and out == "1 2 6 21\n"
    code, out, _ = run(capsys, "enumerate", "--by", "elements", "--max", "6",
                       "--format", "json")
    assert json.loads(out) == [1, 1, 2, 3, 7]


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "count-triple")
    assert code == 0
    assert out.startswith("PASS  1 count-triple")
    code, _, err = run(capsys, "verify", "--suite", "no-such-suite")
    assert code == 1


def test_exit_codes(capsys):
    code, _, err = run(capsys, "count", "--n", "12", "--method", "bfs")
    assert code == 2 and "exceeds" in err
    code, _, err = run(capsys, "class", "--word", "3x1")
    assert code == 1
    code, _, err = run(capsys, "count", "--n", "3", "--method", "sorcery")
    assert code == 1
    code, _, err = run(capsys, "poset", "beta", "--file", "/no/such/file")
    assert code == 1


def test_series_json_round_trip(capsys):
    from salient.series import cf_series
    code, out, _ = run(capsys, "cf", "--n", "3", "--caps", "2,1,2",
                       "--format", "json")
    assert code == 0
    rebuilt = {tuple(r["exponents"]): int(r["coefficient"])
               for r in json.loads(out)}
    assert rebuilt == cf_series(3, (2, 1, 2)).coeffs


def test_class_json_round_trip(capsys):
    from salient.classes import class_of
    from salient.words import parse_word
    code, out, _ = run(capsys, "class", "--word", "2143", "--format", "json")
    payload = json.loads(out)
    members = tuple(parse_word(w) for w in payload["members"])
    original = class_of((2, 1, 4, 3))
    assert members == original.members
    assert parse_word(payload["representative"]) == original.representative
    assert payload["size"] == original.size


def test_guard_override(capsys):
    code, out, _ = run(capsys, "count", "--n", "9", "--method", "bfs",
                       "--limit", "9")
    assert code == 0
    code, out2, _ = run(capsys, "count", "--n", "9", "--method", "formula")
    assert out == out2
