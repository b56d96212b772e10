import json

import pytest

from hyperjet.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def poly(nv, terms):
    return {"vars": nv, "terms": [{"exp": list(e), "num": str(c)} for e, c in terms]}


class TestBounds:
    def test_kobayashi(self, capsys):
        code, doc = run_json(capsys, "bounds", "kobayashi", "--n", "2")
        assert code == 0
        assert (doc["exact"], doc["simplified"]) == (269, 384)
        assert doc["claim"]

    def test_debarre(self, capsys):
        code, doc = run_json(capsys, "bounds", "debarre", "--n", "3")
        assert code == 0 and doc["exact"] == 25011 and doc["params"]["routes_agree"]

    def test_dt(self, capsys):
        code, doc = run_json(capsys, "bounds", "dt", "--n", "3", "--c", "1")
        assert code == 0 and (doc["exact"], doc["simplified"]) == (61265, 118098)

    def test_invalid_range(self, capsys):
        code, _, err = run(capsys, "bounds", "dt", "--n", "3", "--c", "5")
        assert code == 2 and "error" in err


class TestDecompose:
    def test_feasible(self, capsys):
        code, doc = run_json(capsys, "decompose", "--d", "265", "--n", "2", "--c", "1")
        assert code == 0 and (doc["eps"], doc["r"]) == (1, 65)

    def test_infeasible(self, capsys):
        code, out, _ = run(capsys, "decompose", "--d", "100", "--n", "2", "--c", "1")
        doc = json.loads(out)
        # infeasibility is a correct answer below the threshold, not a failed check
        assert code == 0
        assert "INFEASIBLE" in out and doc["d0"] == 265


class TestKJet:
    def test_pass_and_fail(self, capsys, tmp_path):
        good = write(tmp_path, "good.json", {"n": 2, "c": 1, "eps": [1], "deltas": [4], "r": 65})
        bad = write(tmp_path, "bad.json", {"n": 2, "c": 1, "eps": [1], "deltas": [4], "r": 0})
        assert run_json(capsys, "kjet-check", "--spec", good)[0] == 0
        assert run_json(capsys, "kjet-check", "--spec", bad)[0] == 1

    def test_malformed(self, capsys, tmp_path):
        path = write(tmp_path, "x.json", {"n": 2})
        assert run(capsys, "kjet-check", "--spec", path)[0] == 2


WRONSKIAN_INPUT = {"k": 2, "g": [poly(1, [((0,), 1)]), poly(1, [((1,), 1)]), poly(1, [((2,), 1)])]}


class TestWronskian:
    def test_eval(self, capsys, tmp_path):
        path = write(tmp_path, "w.json", WRONSKIAN_INPUT)
        code, doc = run_json(capsys, "wronskian", "eval", "--input", path)
        assert code == 0 and doc["weighted_degree"] == 3
        # 2 (z1')^3 over slots z1, z1', z1''
        assert doc["wronskian"]["terms"] == [{"exp": [0, 3, 0], "num": "2", "den": "1"}]

    def test_invariance_and_oracle(self, capsys, tmp_path):
        path = write(tmp_path, "w.json", WRONSKIAN_INPUT)
        for action in ("invariance", "oracle"):
            code, doc = run_json(capsys, "wronskian", action, "--input", path, "--seed", "4")
            assert code == 0 and doc["verdict"] and doc["seed"] == 4

    def test_explicit_germ(self, capsys, tmp_path):
        doc = dict(WRONSKIAN_INPUT)
        doc["germ"] = {"components": [{"order": 2, "coeffs": [0, 1, 0]}]}
        doc["phi"] = {"order": 2, "coeffs": [0, 3, 1]}
        path = write(tmp_path, "w.json", doc)
        code, out = run_json(capsys, "wronskian", "invariance", "--input", path)
        assert code == 0
        assert out["lhs"] == {"num": "54", "den": "1"} and out["phi_prime_0"]["num"] == "3"

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "wronskian", "eval", "--input", str(tmp_path / "none.json"))[0] == 2


class TestFermat:
    def test_build(self, capsys, tmp_path):
        path = write(tmp_path, "f.json", {"n": 1, "eps": 0, "delta": 1, "r": 1, "k": 1, "coeffs": "diagonal"})
        code, doc = run_json(capsys, "fermat", "build", "--spec", path)
        assert code == 0 and doc["degrees"] == [2]

    def test_probe(self, capsys, tmp_path):
        spec = {"n": 2, "eps": 0, "delta": 1, "r": 1, "k": 1, "coeffs": "diagonal", "p": 7, "trials": 50}
        path = write(tmp_path, "f.json", spec)
        code, doc = run_json(capsys, "fermat", "probe", "--spec", path)
        assert code == 0 and doc["probe"]["tested"] == 50 and doc["probe"]["failures"] == []

    def test_family_hypotheses(self, capsys, tmp_path):
        member = {"n": 3, "eps": 2, "delta": 9, "r": 1, "k": 2, "coeffs": "random"}
        path = write(tmp_path, "f.json", {"family": [member]})
        code, doc = run_json(capsys, "fermat", "build", "--spec", path)
        assert code == 0 and doc["hypotheses"]["r_ok"] is False


class TestVerify:
    def test_single(self, capsys):
        code, doc = run_json(capsys, "verify", "single-mult", "--N", "2", "--delta", "2")
        assert code == 0 and (doc["computed"], doc["expected"], doc["verdict"]) == (2, 2, "PASS")

    def test_product(self, capsys):
        code, doc = run_json(capsys, "verify", "product-mult", "--c", "2", "--k", "1", "--deltas", "2,3", "--i", "1")
        assert code == 0 and doc["computed"] == 18

    def test_plucker(self, capsys, tmp_path):
        path = write(tmp_path, "c.json", {"mode": "product", "c": 2, "k": 1, "deltas": [2, 3], "i": 2})
        code, doc = run_json(capsys, "verify", "plucker", "--spec", path)
        assert code == 0 and doc["degrees"] == [0, 1]

    def test_fiber(self, capsys, tmp_path):
        path = write(tmp_path, "m.json", {"N": 2, "delta": 2, "rows": [[1, 0, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0]]})
        code, doc = run_json(capsys, "verify", "fiber", "--matrix", path, "--p", "5")
        assert code == 0 and (doc["status"], doc["count"], doc["heuristic"]) == ("finite", 1, True)

    def test_fiber_rank_deficient(self, capsys, tmp_path):
        path = write(tmp_path, "m.json", {"N": 2, "delta": 1, "rows": [[1, 0, 0], [2, 0, 0]]})
        assert run(capsys, "verify", "fiber", "--matrix", path, "--p", "5")[0] == 2


class TestContract:
    def test_unknown_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["bounds", "kobayashi", "--n", "2", "--bogus"])
        assert exc.value.code == 2

    def test_deterministic(self, capsys, tmp_path):
        path = write(tmp_path, "w.json", WRONSKIAN_INPUT)
        first = run(capsys, "wronskian", "invariance", "--input", path, "--seed", "9")[1]
        second = run(capsys, "wronskian", "invariance", "--input", path, "--seed", "9")[1]
        assert first == second

    def test_text_format(self, capsys):
        code, out, _ = run(capsys, "--format", "text", "verify", "single-mult", "--N", "3", "--delta", "2")
        assert code == 0 and "x2^2 + x3" in out

    def test_numbers_exact(self, capsys):
        _, out, _ = run(capsys, "bounds", "kobayashi", "--n", "12")
        doc = json.loads(out)
        assert isinstance(doc["exact"], int) and "e+" not in out

    def test_selftest_quick(self, capsys):
        code, out, err = run(capsys, "selftest", "--quick")
        assert code == 0
        assert err.count("PASS") == 8
