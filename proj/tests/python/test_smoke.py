import json

import pytest

import hfscover as hf

SPACE = {
    "universe": ["x", "y"],
    "parameters": ["e1", "e2"],
    "soft_set": {
        "e1": {"x": ["0.7", "0.2"], "y": ["0.5"]},
        "e2": {"x": ["0.6"], "y": ["0.8", "0.4"]},
    },
    "beta": ["0.6", "0.3"],
    "kind": "p",
}


def make_space(**kw):
    return hf.Space(json.dumps(SPACE), **kw)


def test_element_ops():
    assert hf.element_union(["0.7", "0.2"], ["0.6"]) == ["0.7", "0.6"]
    assert hf.element_intersect(["0.7", "0.2"], ["0.6"]) == ["0.6", "0.2"]
    assert hf.element_complement(["0.8", "0.5", "0.1"]) == ["0.9", "0.5", "0.2"]
    assert hf.element_mean(["0.7", "0.2"]) == "9/20"
    assert hf.includes("p", ["0.5", "0.1"], ["0.6"])
    assert not hf.includes("n", ["0.5", "0.1"], ["0.6", "0.2"])


def test_element_errors():
    with pytest.raises(hf.HfsError):
        hf.element_union([], ["0.5"])
    with pytest.raises(hf.HfsError):
        hf.includes("q", ["0.5"], ["0.5"])
    with pytest.raises(hf.HfsError):
        hf.element_mean(["1.5"])


def test_space_basics():
    s = make_space()
    assert s.objects == ["x", "y"]
    assert s.parameters == ["e1", "e2"]
    assert s.kind == "p"
    assert s.beta == ["0.6", "0.3"]


def test_space_overrides_win():
    s = make_space(kind="n", beta=["0.2"])
    assert s.kind == "n"
    assert s.beta == ["0.2"]


def test_space_rejects_non_covering():
    with pytest.raises(hf.HfsError):
        make_space(beta=["0.9"])


def test_neighborhoods():
    s = make_space()
    assert s.qualifying("x") == ["e1", "e2"]
    assert s.fuzzy_neighborhood("x") == {"x": ["0.6", "0.2"], "y": ["0.5", "0.4"]}
    assert s.crisp_neighborhood("x") == ["x"]
    assert s.qualifying("y") == ["e2"]
    assert s.crisp_neighborhood("y") == ["x", "y"]
    with pytest.raises(hf.HfsError):
        s.fuzzy_neighborhood("z")


def test_null_neighborhood_is_none():
    doc = {
        "universe": ["x", "y"],
        "parameters": ["e1", "e2"],
        "soft_set": {
            "e1": {"x": ["0.6", "0.1"], "y": ["0.8"]},
            "e2": {"x": ["0.5", "0.2"], "y": ["0.7", "0.3"]},
        },
        "beta": ["0.4"],
        "kind": "m",
    }
    s = hf.Space(json.dumps(doc))
    assert s.qualifying("x") == []
    assert s.fuzzy_neighborhood("x") is None
    assert s.crisp_neighborhood("x") is None
    assert s.crisp_neighborhood("y") == ["y"]


def test_hesitant_approximations():
    s = make_space()
    target = {"x": ["0.5"], "y": ["0.9", "0.7"]}
    assert s.hesitant_lower(target) == {"x": ["0.8", "0.7", "0.5"], "y": ["0.5"]}
    assert s.hesitant_upper(target) == {"x": ["0.5", "0.5", "0.4"], "y": ["0.8", "0.7", "0.5"]}
    with pytest.raises(hf.HfsError):
        s.hesitant_lower({"x": ["0.5"]})


def test_crisp_approximations():
    s = make_space()
    assert s.crisp_lower(["x"]) == ["x"]
    assert s.crisp_upper(["x"]) == ["x", "y"]
    assert s.crisp_lower(["y"]) == []
    assert s.crisp_upper(["y"]) == ["y"]
    assert s.crisp_lower(["x", "y"]) == ["x", "y"]
    assert s.crisp_upper([]) == []


def test_fixtures_all_pass():
    failing, diag = hf.run_fixtures()
    assert failing == [], diag


def test_law_suite_short_run():
    rep = hf.run_laws(seed=1, cases=5)
    assert rep["laws"] > 100
    assert rep["failed"] == 0, rep["failing"]
