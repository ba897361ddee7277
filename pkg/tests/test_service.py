import pytest
from fastapi.testclient import TestClient

from urybench.service import create_app


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


SPACE = "monoid nat-star\npoints a b c\nd a b 1\nd a c 2\nd b c 1\n"


def test_monoid_check(client):
    resp = client.post("/monoid/check", json={"monoid": "nat-star"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["passed"] is True
    names = [c["name"] for c in body["checks"]]
    assert "associativity" in names and "infinity-absorption" in names


def test_monoid_check_broken_table(client):
    resp = client.post("/monoid/check", json={"monoid": "set:0,1,2,4"})
    assert resp.status_code == 422
    body = resp.json()
    assert body["kind"] == "DomainError"
    assert "not associative" in body["message"]


def test_monoid_threshold(client):
    resp = client.post("/monoid/threshold",
                       json={"monoid": "trunc:1", "r": "1", "n": 2})
    assert resp.status_code == 200
    assert resp.json()["equivalence"] is True
    resp2 = client.post("/monoid/threshold",
                        json={"monoid": "nat-star", "r": "1", "n": 2})
    assert resp2.json()["equivalence"] is False


def test_monoid_sop(client):
    resp = client.post("/monoid/sop", json={"monoid": "nat-star", "n": 3})
    assert resp.status_code == 200
    assert resp.json()["witness"] == "1"
    none = client.post("/monoid/sop", json={"monoid": "trunc:1", "n": 3})
    assert none.json()["witness"] is None


def test_distance_set_check(client):
    ok = client.post("/distance-set/check", json={"values": "0,1,3"})
    assert ok.status_code == 200
    assert ok.json() == {"fraisse": True, "witness": None}
    bad = client.post("/distance-set/check", json={"values": "0,1,2,3,5"})
    assert bad.json() == {"fraisse": False, "witness": ["1", "2", "2"]}


def test_generate_deterministic(client):
    req = {"monoid": "nat-star", "points": 6, "seed": 42}
    first = client.post("/spaces/generate", json=req)
    second = client.post("/spaces/generate", json=req)
    assert first.status_code == 200
    assert first.json()["dms"] == second.json()["dms"]
    assert first.json()["dms"].startswith("monoid nat-star\n")


def test_generate_honours_params(client):
    req = {"monoid": "nat-star", "points": 6, "seed": 1,
           "max_finite": "2", "max_components": 1}
    resp = client.post("/spaces/generate", json=req)
    dms = resp.json()["dms"]
    assert "inf" not in dms
    for line in dms.splitlines():
        if line.startswith("d "):
            assert int(line.split()[-1]) <= 2


def test_generate_rejects_bad_designator(client):
    resp = client.post("/spaces/generate",
                       json={"monoid": "euclid", "points": 4, "seed": 1})
    assert resp.status_code == 422
    assert resp.json()["kind"] == "DomainError"


def test_validate(client):
    resp = client.post("/spaces/validate", json={"dms": SPACE})
    assert resp.status_code == 200
    assert resp.json()["passed"] is True
    broken = SPACE.replace("d a c 2", "d a c 9")
    resp2 = client.post("/spaces/validate", json={"dms": broken})
    body = resp2.json()
    assert body["passed"] is False
    failing = [c for c in body["checks"] if not c["passed"]]
    assert failing[0]["name"] == "triangle"
    assert failing[0]["witness"] == ["a", "b", "c"]


def test_amalgamate(client):
    left = "monoid nat-star\npoints a c\nd a c 1\n"
    right = "monoid nat-star\npoints b c\nd b c 2\n"
    resp = client.post("/spaces/amalgamate",
                       json={"left": left, "right": right, "common": ["c"]})
    assert resp.status_code == 200
    assert "d a b 3" in resp.json()["dms"]


def test_amalgamate_disagreement(client):
    left = "monoid nat-star\npoints a c\nd a c 1\n"
    right = "monoid nat-star\npoints a c\nd a c 2\n"
    resp = client.post("/spaces/amalgamate",
                       json={"left": left, "right": right, "common": ["a", "c"]})
    assert resp.status_code == 422
    body = resp.json()
    assert body["kind"] == "DomainError"
    assert "disagree" in body["message"]


def test_independence_evaluate(client):
    resp = client.post("/independence/evaluate",
                       json={"rel": "alg", "dms": SPACE,
                             "a": ["a"], "b": ["b"], "c": []})
    assert resp.status_code == 200
    assert resp.json()["verdict"] is True
    resp2 = client.post("/independence/evaluate",
                        json={"rel": "infty", "dms": SPACE,
                              "a": ["a"], "b": ["b"], "c": []})
    assert resp2.json()["verdict"] is False


def test_independence_evaluate_unsupported(client):
    dms = "monoid trunc:3\npoints a b\nd a b 1\n"
    resp = client.post("/independence/evaluate",
                       json={"rel": "infty", "dms": dms,
                             "a": ["a"], "b": ["b"], "c": []})
    assert resp.status_code == 422
    assert resp.json()["kind"] == "UnsupportedOperationError"


def test_axioms_single(client):
    resp = client.post("/independence/axioms",
                       json={"rel": "alg", "monoid": "nat-star",
                             "trials": 10, "size": 5, "seed": 6, "axiom": "iii"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["passed"] is True
    assert len(body["reports"]) == 1
    assert body["reports"][0]["axiom"] == "iii"
    assert body["text"].splitlines()[0] == "AXIOM alg iii trials=10 violations=0 seed=6"


def test_axioms_full_sweep(client):
    resp = client.post("/independence/axioms",
                       json={"rel": "infty", "monoid": "nat-star",
                             "trials": 8, "size": 5, "seed": 6})
    body = resp.json()
    assert body["passed"] is True
    assert [r["axiom"] for r in body["reports"]] == "i ii iii iv v vi vii viii ix".split()
    vii = body["reports"][6]
    assert vii["kappa_bound_observed"] is not None


def test_axioms_rejects_bad_inputs(client):
    resp = client.post("/independence/axioms",
                       json={"rel": "alg", "monoid": "nat-star",
                             "trials": 5, "size": 5, "seed": 1, "axiom": "xii"})
    assert resp.status_code == 422
    assert resp.json()["kind"] == "DomainError"
    resp2 = client.post("/independence/axioms",
                        json={"rel": "alg", "monoid": "nat-star",
                              "trials": 0, "size": 5, "seed": 1})
    assert resp2.status_code == 422       # pydantic bound


def test_counterexample(client):
    resp = client.post("/independence/counterexample", json={"monoid": "q-star"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["alg"] is True and body["infty"] is False
    assert body["line"] == "alg=true infty=false"
    assert "d a b 1" in body["config"]


def test_counterexample_needs_infinity(client):
    resp = client.post("/independence/counterexample", json={"monoid": "trunc:4"})
    assert resp.status_code == 422
    assert resp.json()["kind"] == "UnsupportedOperationError"
