import json

import pytest

import pdtool


def test_group_construction():
    q8 = pdtool.Group.family("Q8")
    assert q8.order == 8
    assert q8.name == "Q8"
    assert q8.validate()
    assert sorted(q8.element_orders).count(2) == 1


def test_permutation_input():
    d8 = pdtool.Group.from_permutations([[1, 2, 3, 0], [0, 3, 2, 1]])
    assert d8.order == 8
    with pytest.raises(ValueError):
        pdtool.Group.from_permutations([])


def test_cohomology_of_quaternion_group():
    q8 = pdtool.Group.family("Q8")
    assert pdtool.cohomology(q8, 4) == {"free_rank": 0, "torsion": [8]}
    assert pdtool.cohomology(q8, 2) == {"free_rank": 0, "torsion": [2, 2]}
    assert pdtool.homology(q8, 0) == {"free_rank": 1, "torsion": []}


def test_cyclic_routes_agree():
    c6 = pdtool.Group.family("C6")
    for n in range(5):
        assert pdtool.cohomology(c6, n, route="periodic") == pdtool.cohomology(c6, n, route="bar")


def test_periodicity():
    assert pdtool.period(pdtool.Group.family("Q8")) == 4
    assert pdtool.period(pdtool.Group.family("C2xC2")) is None
    report = pdtool.periodicity_report(pdtool.Group.family("SL23"))
    assert report["via_abelian"] and report["via_sylow"]
    assert report["period"] == 4


def test_swan_counts():
    q8 = pdtool.Group.family("Q8")
    c = pdtool.classify_hreps(q8, 3)
    assert (c["oriented_count"], c["unoriented_count"], c["k_invariants"]) == (4, 2, [1, 3, 5, 7])
    assert pdtool.count_free_invertible_spectra(q8, 3) == 2
    assert pdtool.classify_hreps(pdtool.Group.family("C2"), 4)["special_case"] == "order_two"


def test_connectivity():
    assert pdtool.isov_space_connectivity([(2, 9)]) == 2
    assert pdtool.isov_space_connectivity([(2, 4)]) is None
    assert pdtool.isov_space_connectivity([(0, 3)], one_connected=True) == 1
    trace = pdtool.explain_isov_connectivity([(2, 9)])
    assert trace["result"] == {"k": 2, "meaning": "2-connected"}


def test_smith_normal_form():
    s = pdtool.smith_normal_form([[2, 0], [0, 3]])
    assert s["pivots"] == [1, 6]


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        pdtool.period(pdtool.Group.family("C1"))
    with pytest.raises(pdtool.CapacityError):
        pdtool.cohomology(pdtool.Group.family("Q8"), 9)


def test_cli_in_process():
    code, out, err = pdtool.run_cli(["isov", "--components", "2:9", "--format", "json"])
    assert code == 0
    assert json.loads(out) == {"k": 2, "meaning": "2-connected"}
    code, _, err = pdtool.run_cli(["isov", "--components", "2:4", "--strict"])
    assert code == 4
