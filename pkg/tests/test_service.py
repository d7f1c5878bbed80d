import time

import pytest
from fastapi.testclient import TestClient

from graphlets import graphlet_census
from graphlets.generate import clique_plus_pendant, complete_graph, star_graph
from graphlets.graph import to_edge_list_text
from graphlets.service import create_app


@pytest.fixture
def client():
    return TestClient(create_app())


def upload(client, graph):
    response = client.post("/graphs", content=to_edge_list_text(graph))
    assert response.status_code == 200, response.text
    return response.json()


class TestUpload:
    def test_k4(self, client):
        data = upload(client, complete_graph(4))
        assert data["n"] == 4 and data["m"] == 6
        assert data["counts"]["g4_1"] == 1
        assert sorted(map(tuple, data["edges"])) == [
            (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]

    def test_empty_body_400(self, client):
        response = client.post("/graphs", content="")
        assert response.status_code == 400
        assert response.json()["code"] == "parse_error"

    def test_parse_error_includes_line(self, client):
        response = client.post("/graphs", content="0 1\nbroken\n")
        assert response.status_code == 400
        assert response.json()["detail"]["line"] == 2

    def test_over_cap_413(self):
        app = create_app(max_edges=3)
        client = TestClient(app)
        response = client.post("/graphs",
                               content=to_edge_list_text(complete_graph(4)))
        assert response.status_code == 413

    def test_unknown_session_404(self, client):
        assert client.get("/graphs/zzz/counts").status_code == 404


class TestCountsAndGfd:
    def test_counts_roundtrip(self, client):
        sid = upload(client, complete_graph(4))["id"]
        data = client.get(f"/graphs/{sid}/counts").json()
        assert data["counts"] == graphlet_census(complete_graph(4)).to_json_dict()["counts"]

    def test_gfd_params(self, client):
        sid = upload(client, complete_graph(4))["id"]
        data = client.get(f"/graphs/{sid}/gfd", params={"k": 4, "scope": "connected"}).json()
        assert data["values"] == [1.0, 0.0, 0.0, 0.0, 0.0, 0.0]
        bad = client.get(f"/graphs/{sid}/gfd", params={"k": 7})
        assert bad.status_code == 422


class TestSelection:
    def test_select_all_k4_then_drop_vertex(self, client):
        sid = upload(client, complete_graph(4))["id"]
        ops = [{"action": "add_vertex", "vertex": v} for v in range(4)]
        data = client.post(f"/graphs/{sid}/selection/ops", json={"ops": ops}).json()
        assert data["counts"]["g4_1"] == 1 and data["n_active"] == 4
        data = client.post(f"/graphs/{sid}/selection/ops", json={
            "ops": [{"action": "remove_vertex", "vertex": 3}]}).json()
        expected = graphlet_census(complete_graph(3))
        assert data["counts"] == expected.to_json_dict()["counts"]
        assert data["deltas"]["g4_1"] == -1

    def test_add_idempotent(self, client):
        sid = upload(client, complete_graph(4))["id"]
        once = client.post(f"/graphs/{sid}/selection/ops", json={
            "ops": [{"action": "add_vertex", "vertex": 0}]}).json()
        twice = client.post(f"/graphs/{sid}/selection/ops", json={
            "ops": [{"action": "add_vertex", "vertex": 0}]}).json()
        assert once["counts"] == twice["counts"]
        assert twice["seq"] == once["seq"] + 1

    def test_invalid_ops_422(self, client):
        sid = upload(client, complete_graph(4))["id"]
        for ops in ([{"action": "warp", "vertex": 0}],
                    [{"action": "add_vertex"}],
                    [{"action": "add_vertex", "vertex": 99}],
                    "not-a-list"):
            response = client.post(f"/graphs/{sid}/selection/ops", json={"ops": ops})
            assert response.status_code == 422, ops

    def test_client_seq_echo(self, client):
        sid = upload(client, complete_graph(4))["id"]
        data = client.post(f"/graphs/{sid}/selection/ops", json={
            "ops": [], "client_seq": 41}).json()
        assert data["client_seq"] == 41

    def test_random_stream_matches_audit(self, client):
        import numpy as np
        from graphlets.generate import random_graph_avg_degree

        g = random_graph_avg_degree(60, 5, seed=12)
        sid = upload(client, g)["id"]
        rng = np.random.default_rng(0)
        orig = g.orig_ids.tolist()
        for _ in range(25):
            v = int(orig[rng.integers(g.n)])
            action = "add_vertex" if rng.random() < 0.7 else "remove_vertex"
            response = client.post(f"/graphs/{sid}/selection/ops", json={
                "ops": [{"action": action, "vertex": v}]})
            assert response.status_code == 200
        audit = client.get(f"/graphs/{sid}/audit")
        assert audit.status_code == 200
        assert audit.json()["consistent"] is True
        counts = client.post(f"/graphs/{sid}/selection/ops", json={"ops": []}).json()["counts"]
        assert counts == audit.json()["selection"]["counts"]


class TestEdgeWeights:
    def test_star4_weights(self, client):
        sid = upload(client, star_graph(5))["id"]
        data = client.get(f"/graphs/{sid}/edges/weights",
                          params={"pattern": "star4"}).json()
        assert data["weights"] == [6] * 5
        assert len(data["edges"]) == 5

    def test_clique4_k5_pendant(self, client):
        sid = upload(client, clique_plus_pendant(5))["id"]
        data = client.get(f"/graphs/{sid}/edges/weights",
                          params={"pattern": "clique4"}).json()
        assert sorted(data["weights"]) == [0] + [3] * 10

    def test_weights_sum_consistency(self, client):
        from graphlets.generate import gnp_random_graph

        g = gnp_random_graph(25, 0.3, seed=5)
        sid = upload(client, g)["id"]
        counts = client.get(f"/graphs/{sid}/counts").json()["counts"]
        weights = client.get(f"/graphs/{sid}/edges/weights",
                             params={"pattern": "clique4"}).json()["weights"]
        assert sum(weights) == 6 * counts["g4_1"]

    def test_unknown_pattern_422(self, client):
        sid = upload(client, star_graph(3))["id"]
        response = client.get(f"/graphs/{sid}/edges/weights",
                              params={"pattern": "hexagon"})
        assert response.status_code == 422


class TestSessions:
    def test_isolation(self, client):
        sid_a = upload(client, complete_graph(4))["id"]
        sid_b = upload(client, star_graph(3))["id"]
        client.post(f"/graphs/{sid_a}/selection/ops", json={
            "ops": [{"action": "add_vertex", "vertex": 0}]})
        state_b = client.post(f"/graphs/{sid_b}/selection/ops", json={"ops": []}).json()
        assert state_b["n_active"] == 0
        a = client.get(f"/graphs/{sid_a}/counts").json()
        b = client.get(f"/graphs/{sid_b}/counts").json()
        assert a["counts"]["g4_1"] == 1 and b["counts"]["g4_1"] == 0

    def test_ttl_eviction(self):
        app = create_app(ttl=0.2)
        client = TestClient(app)
        sid = upload(client, complete_graph(3))["id"]
        assert client.get(f"/graphs/{sid}/counts").status_code == 200
        time.sleep(0.3)
        assert client.get(f"/graphs/{sid}/counts").status_code == 404


def test_upload_published_dataset_summary(client):
    from pathlib import Path
    from conftest import dataset_graph

    dataset_graph("bio-celegans")  # skips with instructions when absent
    for suffix in (".mtx", ".edges", ".txt"):
        path = Path(__file__).resolve().parent.parent / "data" / f"bio-celegans{suffix}"
        if path.exists():
            body = path.read_text()
            break
    response = client.post("/graphs", content=body)
    assert response.status_code == 200
    assert response.json()["n"] == 453


def test_selection_ops_use_original_ids(client):
    # Remapped, non-contiguous input ids: the wire speaks original ids.
    response = client.post("/graphs", content="10 20\n20 30\n")
    assert response.status_code == 200
    sid = response.json()["id"]
    assert response.json()["nodes"] == [10, 20, 30]
    data = client.post(f"/graphs/{sid}/selection/ops", json={
        "ops": [{"action": "add_vertex", "vertex": v} for v in (10, 20, 30)]}).json()
    assert data["counts"]["g3_2"] == 1 and data["counts"]["g2_1"] == 2
    data = client.post(f"/graphs/{sid}/selection/ops", json={
        "ops": [{"action": "remove_edge", "u": 20, "v": 30}]}).json()
    assert data["counts"]["g2_1"] == 1
    bad = client.post(f"/graphs/{sid}/selection/ops", json={
        "ops": [{"action": "add_vertex", "vertex": 99}]})
    assert bad.status_code == 422
