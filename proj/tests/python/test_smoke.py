from fractions import Fraction

import pytest

import degspec

FIB = {"type": "monomial", "A": [[2, 1], [1, 1]], "variety": "P1k"}
SIGMA = {
    "type": "polynomial",
    "vars": 3,
    "components": [
        [{"exps": [0, 1, 1], "coef": 1}],
        [{"exps": [1, 0, 1], "coef": 1}],
        [{"exps": [1, 1, 0], "coef": 1}],
    ],
}


def test_models_and_hodge():
    names = degspec.models()
    assert "BlP3line" in names
    assert degspec.hodge_signature("BlP3line") == (1, 1, 0)
    assert degspec.hodge_signature("P1xP1xK(3)") == (1, 2, 0)


def test_degree_sequences_are_exact():
    assert degspec.degree_sequence(FIB, 5) == [5, 13, 34, 89, 233]
    assert all(isinstance(v, Fraction) for v in degspec.degree_sequence(FIB, 3))
    assert degspec.degree_sequence(SIGMA, 8) == [2, 1] * 4


def test_stability_and_fekete():
    rot = {"type": "monomial", "A": [[1, -1], [1, 1]]}
    assert degspec.stability_check(rot, 10) == (1, 2)
    assert degspec.stability_check(FIB, 10) == (10, None)
    est = degspec.fekete_estimate(degspec.degree_sequence(FIB, 20))
    assert est["violations"] == []
    assert abs(est["window_slope"] - 2.618034) < 1e-3


def test_compose_cremona_is_involution():
    twice = degspec.compose(SIGMA, SIGMA)
    assert degspec.degree_sequence(twice, 2) == [1, 1]


def test_spectral_verdicts():
    assert degspec.spectral_gap_report([[2, 1], [1, 1]], 1)["verdict"] == "PASS"
    assert degspec.spectral_gap_report([[2, 0], [0, 2]], 1)["verdict"] == "CONCLUSION_VIOLATED"
    assert degspec.spectral_gap_report([[1, -1], [1, 1]], 2)["verdict"] == "NOT_APPLICABLE"
    dual = degspec.threefold_duality_check([[0, 0, 1], [1, 0, 1], [0, 1, 0]])
    assert dual["verdict"] == "PASS"


def test_run_request_and_errors():
    report, code = degspec.run_request({"map": FIB, "analyses": [{"kind": "theorem1"}]}, threads=2)
    assert code == 0
    assert report["analyses"][0]["status"] == "PASS"
    with pytest.raises(degspec.DegspecError):
        degspec.run_request({"map": FIB, "analyses": [{"kind": "duality"}]})
    with pytest.raises(ValueError):
        degspec.degree_sequence({"type": "monomial", "A": [[1, 1], [1, 1]]}, 3)
