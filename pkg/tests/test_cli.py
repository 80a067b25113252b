"""Command line interface: schemas, determinism, exit codes."""

import json

from kschur.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_cores_json_schema(capsys):
    code, out = run(capsys, "cores", "--n", "4", "--max-deg", "3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data[0]["core"] == {"n": 4, "shape": []}
    assert all(set(row) == {"degree", "core", "bounded", "word"} for row in data)


def test_output_deterministic(capsys):
    _, out1 = run(capsys, "strips", "--n", "4", "--core", "3,1,1", "--m", "2", "--json")
    _, out2 = run(capsys, "strips", "--n", "4", "--core", "3,1,1", "--m", "2", "--json")
    assert out1 == out2
    data = json.loads(out1)
    assert {tuple(d["nu"]["shape"]) for d in data} == {
        (3, 1, 1, 1),
        (4, 1, 1),
        (3, 2, 1),
    }


def test_pieri_agreement(capsys):
    code, out = run(capsys, "pieri", "--n", "4", "--core", "3,1,1", "--m", "1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["weak_horizontal_agree"] is True
    assert len(data["weak"]) == 3


def test_abc_roundtrip_schema(capsys):
    code, out = run(
        capsys, "abc", "--n", "6", "--core", "4,3", "--weight", "3,3,1", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert any(
        entry["lambda_chain"] == [[], [3], [4, 2], [4, 3]] for entry in data
    )
    for entry in data:
        assert entry["weight"] == [3, 3, 1]
        assert "cocharge" in entry


def test_kf_table_weak_at_one(capsys):
    code, out = run(
        capsys, "kf-table", "--n", "6", "--deg", "7", "--weak", "--at-t", "1", "--json"
    )
    assert code == 0
    data = json.loads(out)
    row = next(r for r in data["rows"] if r["lambda"] == [4, 3])
    entry = next(e for e in row["entries"] if e["mu"] == [3, 3, 1])
    assert entry["coeff"] >= 1  # the weight-(3,3,1) countertableau exists


def test_expand_dualk(capsys):
    code, out = run(
        capsys, "expand", "--n", "4", "--basis", "dualk", "--core", "3,1,1",
        "--t1", "--json",
    )
    assert code == 0
    data = json.loads(out)
    lead = next(t for t in data["terms"] if t["partition"] == [2, 1, 1])
    assert lead["coeff"] == [1]


def test_verify_prop_main(capsys):
    code, out = run(capsys, "verify", "prop-main", "--n", "4", "--max-deg", "5")
    assert code == 0
    data = json.loads(out)
    assert data["match"] is True
    assert data["instances"] > 0


def test_verify_theta(capsys):
    code, out = run(capsys, "verify", "theta-bijection", "--n", "3", "--max-deg", "5")
    assert code == 0
    assert json.loads(out)["match"] is True


def test_verify_affine_monk(capsys):
    code, out = run(capsys, "verify", "affine-monk", "--n", "4", "--max-size", "5")
    assert code == 0
    assert json.loads(out)["match"] is True


def test_verify_rect_pieri(capsys):
    code, out = run(capsys, "verify", "rect-pieri", "--n", "4", "--max-size", "4")
    assert code == 0
    data = json.loads(out)
    assert data["match"] is True
    assert "reading_disagreements" in data


def test_expand_laurent_coefficients(capsys):
    code, out = run(
        capsys, "expand", "--n", "4", "--basis", "ptilde", "--bounded", "1,1", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["terms"] == [
        {"partition": [1, 1], "coeff": {"valuation": -1, "coeffs": [1]}}
    ]


def test_usage_error_exit_code(capsys):
    assert main(["cores"]) == 1  # missing --n
    assert main(["verify", "nonsense"]) == 1
    assert main(["pieri", "--n", "4", "--core", "3,1,1", "--m", "5"]) == 1


def test_bad_partition_exit_code(capsys):
    assert main(["pieri", "--n", "4", "--core", "1,2", "--m", "1"]) == 1


def test_parallel_sweep_env(capsys, monkeypatch):
    monkeypatch.setenv("ASK_THREADS", "2")
    code, out = run(capsys, "verify", "prop-main", "--n", "3", "--max-deg", "4")
    assert code == 0
    assert json.loads(out)["match"] is True


def test_verify_mismatch_exits_two(capsys, monkeypatch):
    import kschur.cli as cli

    def failing_check(r, lam, n):
        return {
            "conjecture": "affine-monk",
            "n": n,
            "r": r,
            "lambda": list(lam),
            "match": False,
            "lhs": [[[1], 2]],
            "rhs": [[1]],
        }

    monkeypatch.setattr(cli, "affine_monk_check", failing_check)
    code, out = run(capsys, "verify", "affine-monk", "--n", "3", "--max-size", "1")
    assert code == 2
    report = json.loads(out)
    assert report["match"] is False
    assert report["failures"]  # witnesses carried through
