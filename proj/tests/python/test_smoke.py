import pytest

import dicksonlab as dl


@pytest.fixture(scope="module")
def f5():
    return dl.Field(5)


def test_field_basics(f5):
    assert (f5.p, f5.e, f5.q) == (5, 1, 5)
    assert f5.nonresidue == 2
    assert f5.inv(2) == 3
    f25 = dl.Field(5, 2)
    assert f25.q == 25
    assert f25.render(7) == "2,1"
    assert f25.modulus == [1, 1, 1]


def test_bad_characteristic():
    with pytest.raises(dl.DicksonError, match="CompositeP"):
        dl.Field(4)
    with pytest.raises(ValueError):
        dl.Field(3)


def test_evaluate(f5):
    assert [dl.evaluate(f5, 4, 3, x) for x in range(5)] == [1, 4, 0, 4, 1]
    assert dl.evaluate(f5, 0, 3, 2) == 4
    f7 = dl.Field(7)
    for k in range(7):
        for x in range(7):
            for n in (0, 1, 17, 48, 10**12):
                values = {dl.evaluate_all(f7, m, n, k, x) for m in ("recursion", "matrix", "functional")}
                assert len(values) == 1
                if n < 100:
                    assert values == {dl.evaluate_all(f7, "coeff", n, k, x)}


def test_coefficients(f5):
    # D_{2,3}(1, x) = 1 + x
    assert dl.coefficients(f5, 2, 3) == [1, 1]


def test_permutation(f5):
    rows = dl.scan_pp(f5, 3, 0, 24, jobs=2)
    assert [r["n"] for r in rows] == list(range(25))
    assert not rows[5]["is_pp"]
    for r in rows:
        assert r["is_pp"] == dl.is_pp(f5, r["n"], 3, "two-to-one")[0]
        if r["is_pp"]:
            assert r["mod6_class"] != 1 and r["witness"] is None
        else:
            x1, x2 = r["witness"]
            assert dl.evaluate(f5, r["n"], 3, x1) == dl.evaluate(f5, r["n"], 3, x2)


def test_moments(f5):
    for k in range(5):
        rows = dl.moments(f5, k, 1, 24)
        assert all(r["agrees"] for r in rows)
    assert dl.first_moment(f5, 2, 0) == 0
    assert dl.first_moment(f5, 7, 3, reconstructed=True) == dl.first_moment(f5, 7, 3)
    with pytest.raises(dl.DicksonError, match="OutOfRange"):
        dl.first_moment(f5, 0, 1, reconstructed=True)
    assert dl.b_table(f5)[8] == 4


def test_verify_and_errata(f5):
    report = dl.verify(f5)
    assert report["passed"]
    assert [e["status"] for e in report["errata"]] == ["validated"] * 5
    partial = dl.verify(f5, skip=["moments"])
    assert "not-run" in {e["status"] for e in partial["errata"]}


def test_cli_bridge():
    code, out, err = dl.run_cli(["--p", "5", "--k", "3", "--n", "4", "eval"])
    assert code == 0 and out.splitlines()[2] == "4,3,1,4"
    code, out, err = dl.run_cli(["--p", "4", "eval"])
    assert code == 2 and "p must be a prime greater than 3" in err
