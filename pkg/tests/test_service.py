import time

import pytest
from fastapi.testclient import TestClient

from graphenergy.graph6 import encode
from graphenergy.graphs import complement, union_of_cycles
from graphenergy.service import create_app
from graphenergy.spectra import PHI

PENTAGON_VALUES = [PHI - 1] * 4 + [-PHI] * 4

CANDIDATE_FIELDS = {
    "p", "q", "x", "y", "energy", "third_moment_over_6",
    "passes_moment_test", "sign_split", "coincident", "display",
}


@pytest.fixture()
def client(tmp_path):
    app = create_app(session_dir=str(tmp_path))
    with TestClient(app) as c:
        yield c


def _create(client, n=18, m=135, known=(15.0,)):
    resp = client.post("/sessions", json={"n": n, "m": m, "known": list(known)})
    assert resp.status_code == 200, resp.text
    return resp.json()["session"]


def _wait_job(client, job_id, timeout=60.0):
    deadline = time.monotonic() + timeout
    while time.monotonic() < deadline:
        body = client.get(f"/jobs/{job_id}").json()["job"]
        if body["status"] in ("done", "error"):
            return body
        time.sleep(0.02)
    raise TimeoutError(f"job {job_id} did not finish")


def test_session_lifecycle_field_names(client):
    session = _create(client)
    assert set(session) == {
        "id", "n", "m", "known", "history", "motif_count", "realizations",
    }
    assert set(session["known"]) == {"values", "c_plus", "c_minus", "c", "d"}
    assert session["known"]["c"] == 15.0
    assert session["known"]["d"] == 225.0

    got = client.get(f"/sessions/{session['id']}")
    assert got.status_code == 200
    assert got.json()["session"]["id"] == session["id"]


def test_candidate_table_shape_and_display(client):
    session = _create(client)
    body = client.get(f"/sessions/{session['id']}/candidates").json()
    assert set(body) == {"n", "m", "known", "rows"}
    assert len(body["rows"]) == 16
    row = body["rows"][0]
    assert set(row) == CANDIDATE_FIELDS
    assert set(row["display"]) == {"x", "y", "energy", "third_moment_over_6"}
    passing = [r for r in body["rows"] if r["passes_moment_test"]]
    assert len(passing) == 1
    assert passing[0]["display"]["energy"] == "30.0000"
    assert passing[0]["p"] == 5


def test_identical_requests_identical_bodies(client):
    session = _create(client)
    url = f"/sessions/{session['id']}/candidates"
    assert client.get(url).content == client.get(url).content


def test_extend_values_and_motif_and_adopt(client):
    session = _create(client)
    sid = session["id"]

    resp = client.post(f"/sessions/{sid}/extend", json={"values": [-3.0, -3.0, -3.0]})
    assert resp.status_code == 200
    assert len(resp.json()["session"]["history"]) == 2
    rows = client.get(f"/sessions/{sid}/candidates").json()["rows"]
    assert len(rows) == 14

    resp = client.post(
        f"/sessions/{sid}/extend",
        json={"motif": {"kind": "cycle-in-complement", "length": 5}},
    )
    assert resp.status_code == 200
    body = resp.json()["session"]
    assert body["motif_count"] == 1
    assert len(body["known"]["values"]) == 8

    other = _create(client)
    resp = client.post(
        f"/sessions/{other['id']}/extend",
        json={"adopt": {"p": 5, "x": -3.0, "x_count": 3}},
    )
    assert resp.status_code == 200
    rows2 = client.get(f"/sessions/{other['id']}/candidates").json()["rows"]
    assert rows == rows2


def test_extend_validation_errors(client):
    session = _create(client)
    sid = session["id"]
    resp = client.post(
        f"/sessions/{sid}/extend",
        json={"values": [1.0], "adopt": {"p": 1, "x": 0.0, "x_count": 1}},
    )
    assert resp.status_code == 400
    assert resp.json()["error"]["constraint"] == "extend-kind"

    resp = client.post(f"/sessions/{sid}/extend", json={"values": [50.0]})
    assert resp.status_code == 400
    assert resp.json()["error"]["constraint"] == "second-moment"


def test_unknown_ids_are_404(client):
    assert client.get("/sessions/nope").status_code == 404
    assert client.get("/jobs/nope").status_code == 404


def test_infeasible_session_is_400(client):
    resp = client.post("/sessions", json={"n": 10, "m": 30, "known": [9.0]})
    assert resp.status_code == 400
    assert resp.json()["error"]["constraint"] == "second-moment"


def test_realization_job_via_target(client):
    session = _create(client, known=[15.0, -3.0, -3.0, -3.0])
    sid = session["id"]
    client.post(f"/sessions/{sid}/extend", json={"values": PENTAGON_VALUES})
    rows = client.get(f"/sessions/{sid}/candidates").json()["rows"]
    winner = next(r for r in rows if r["passes_moment_test"])
    assert winner["display"]["energy"] == "38.9443"

    resp = client.post(
        f"/sessions/{sid}/realize",
        json={
            "candidate": {"p": winner["p"], "x": winner["x"]},
            "constraints": {"complement_cycles": True},
        },
    )
    assert resp.status_code == 200
    job_id = resp.json()["job"]["id"]
    body = _wait_job(client, job_id)
    assert body["status"] == "done"
    assert set(body["progress"]) == {"graphs_examined", "elapsed_seconds"}
    result = body["result"]
    assert result["exhausted"] is True
    assert result["certified_empty"] is False
    assert len(result["found"]) == 1
    found = result["found"][0]
    assert set(found) == {"graph6", "energy", "spectrum", "groups", "display"}
    assert found["display"]["energy"] == "38.9443"
    assert found["graph6"] == encode(complement(union_of_cycles((5, 5, 4, 4))))

    refreshed = client.get(f"/sessions/{sid}").json()["session"]
    assert refreshed["realizations"]
    assert refreshed["realizations"][-1]["found"] == [found["graph6"]]


def test_realization_job_certified_empty(client):
    session = _create(client, n=10, m=30, known=[6.0])
    sid = session["id"]
    target = [6.0] + [1.4415] * 3 + [-1.7208] * 6
    resp = client.post(
        f"/sessions/{sid}/realize",
        json={"target": target, "match_tol": 1e-3},
    )
    assert resp.status_code == 200
    body = _wait_job(client, resp.json()["job"]["id"])
    assert body["status"] == "done"
    assert body["result"]["certified_empty"] is True
    assert body["result"]["found"] == []
    assert any("third moment" in r for r in body["result"]["fast_fail_reasons"])


def test_realize_validation(client):
    session = _create(client)
    sid = session["id"]
    resp = client.post(f"/sessions/{sid}/realize", json={})
    assert resp.status_code == 400
    assert resp.json()["error"]["constraint"] == "realize-kind"

    resp = client.post(f"/sessions/{sid}/realize", json={"target": [1.0, -1.0]})
    assert resp.status_code == 400
    assert resp.json()["error"]["constraint"] == "target-length"


def test_stateless_complete_endpoint(client):
    resp = client.post("/complete", json={"n": 16, "m": 80, "known": [10.0]})
    assert resp.status_code == 200
    body = resp.json()
    assert len(body["rows"]) == 14
    best = max(body["rows"], key=lambda r: r["energy"])
    assert best["display"]["energy"] == "40.0000"
    assert best["passes_moment_test"] is True

    resp = client.post("/complete", json={"n": 10, "m": 1, "known": [10.0]})
    assert resp.status_code == 400
    assert resp.json()["error"]["constraint"] == "infeasible"


def test_sessions_persist_across_app_instances(tmp_path):
    app1 = create_app(session_dir=str(tmp_path))
    with TestClient(app1) as c1:
        session = _create(c1)
        c1.post(f"/sessions/{session['id']}/extend", json={"values": [-3.0] * 3})
    app2 = create_app(session_dir=str(tmp_path))
    with TestClient(app2) as c2:
        body = c2.get(f"/sessions/{session['id']}").json()["session"]
        assert len(body["history"]) == 2
        rows = c2.get(f"/sessions/{session['id']}/candidates").json()["rows"]
        assert len(rows) == 14
