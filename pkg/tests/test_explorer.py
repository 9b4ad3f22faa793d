import pytest

import oracles
from monomial_conductor.config import Limits
from monomial_conductor.explorer import FuzzConfig, analyze_instance, dumps, random_instance, scan
from monomial_conductor.semigroup import NumericalSemigroup, dimension


def test_config_validation():
    with pytest.raises(ValueError):
        FuzzConfig(seed=1, count=0)
    with pytest.raises(ValueError):
        FuzzConfig(seed=1, count=1, mode="tropical")
    with pytest.raises(ValueError):
        FuzzConfig(seed=1, count=1, sop_degree_cap=0)
    with pytest.raises(ValueError):
        FuzzConfig(seed=1, count=1, max_generator=1)
    assert "dim" not in FuzzConfig(seed=1, count=1).to_dict()
    assert FuzzConfig(seed=1, count=1, mode="affine").to_dict()["dim"] == 2


def test_instances_depend_only_on_seed_and_index():
    c = FuzzConfig(seed=42, count=200)
    assert random_instance(c, 17) == random_instance(FuzzConfig(seed=42, count=5), 17)
    assert random_instance(c, 17) != random_instance(FuzzConfig(seed=43, count=200), 17)


def test_pinned_instances():
    c = FuzzConfig(seed=42, count=200)
    assert analyze_instance(c, 0) == {
        "index": 0, "instance": {"numerical": [1, 5, 7]}, "mu": 1, "dim": 1, "excess": [],
        "verdict": "Normal", "conductor": [[0]], "status": "normal"}
    r = analyze_instance(c, 1)
    assert r["instance"] == {"numerical": [8, 9, 10]}
    assert r["conductor"] == [[n] for n in range(32, 40)]
    assert r["status"] == "no counterexample up to degree 6"


def test_numerical_instances_are_valid():
    c = FuzzConfig(seed=5, count=50, max_generator=30)
    for i in range(50):
        N = random_instance(c, i)
        assert isinstance(N, NumericalSemigroup)
        assert max(N.generators) <= 30


def test_affine_instances_are_full_rank():
    c = FuzzConfig(seed=5, count=30, mode="affine", dim=3, max_generator=3)
    for i in range(30):
        S = random_instance(c, i)
        assert S.dim == 3 and dimension(S) == 3
        assert all(0 <= a <= 3 for g in S.generators for a in g)


def test_conductor_in_report_matches_oracle():
    c = FuzzConfig(seed=11, count=40, max_generator=15)
    for i in range(40):
        r = analyze_instance(c, i)
        gens = r["instance"]["numerical"]
        _, _, want = oracles.numerical_invariants(gens)
        assert [v[0] for v in r["conductor"]] == want


def test_scan_deterministic_across_workers():
    c = FuzzConfig(seed=42, count=60)
    one = dumps(scan(c, workers=1))
    assert dumps(scan(c, workers=3)) == one
    assert dumps(scan(c, workers=1)) == one


def test_scan_summary():
    rep = scan(FuzzConfig(seed=42, count=200), workers=2)
    assert sum(rep["summary"].values()) == 200
    assert rep["counterexamples"] == 0
    assert [r["index"] for r in rep["instances"]] == list(range(200))
    # a verdict of "true" is never claimed from the bounded search
    for r in rep["instances"]:
        if r["status"] == "certified":
            assert r["verdict"] == "CertifiedUniversal"
        if r.get("verdict") == "Inconclusive":
            assert r["status"].startswith("no counterexample up to degree")


def test_345_has_no_counterexample():
    from monomial_conductor.conductor import conductor_generators
    from monomial_conductor.ikeda import check_sop_containment, monomial_sops
    N = NumericalSemigroup([3, 4, 5])
    C = conductor_generators(N)
    sops = monomial_sops(N.to_affine(), 6)
    assert [xs[0][0] for xs in sops] == [3, 4, 5, 6]
    assert not any(check_sop_containment(N, C, xs) for xs in sops)


def test_affine_scan_reports_uncertified_honestly():
    rep = scan(FuzzConfig(seed=3, count=8, mode="affine", dim=3, max_generator=3,
                          limits=Limits(conductor_degree_cap=8)), workers=1)
    for r in rep["instances"]:
        assert r["status"] in ("normal", "certified", "uncertified", "guard", "counterexample") \
            or r["status"].startswith("no counterexample")
        if r["status"] == "uncertified":
            assert "verdict" not in r
