"""HTTP service: endpoints, payload conventions, error mapping."""

import math

import pytest
from fastapi.testclient import TestClient
from numpy.testing import assert_allclose

import resladder as rl
from resladder.service import create_app

RTOL_WIRE = 1e-12
DELTA_CFG = {
    "potential_minus": {"kind": "delta", "beta": [1.0, 0.0]},
    "potential_plus": {"kind": "delta", "beta": [1.0, 0.0]},
    "ell": 100.0,
}
BARRIER_WELL_CFG = {
    "potential_minus": {"kind": "step", "beta": [0.0, 2.0]},
    "potential_plus": {"kind": "step", "beta": [1.0, 0.0]},
    "ell": 100.0,
}


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestMeta:
    def test_info(self, client):
        body = client.get("/").json()
        assert body["service"] == "resladder"
        assert "/solve" in body["endpoints"]

    def test_health(self, client):
        assert client.get("/health").json() == {"status": "ok"}


class TestRadiusEndpoint:
    def test_delta_geometry(self, client):
        body = client.post("/radius", json=DELTA_CFG).json()
        g = body["geometry"]
        assert_allclose(g["radius"], 0.16638540184645642, rtol=RTOL_WIRE)
        assert_allclose(g["threshold"], 1.0 - math.exp(-math.pi / 2.0), rtol=RTOL_WIRE)
        assert g["n_max"] == 10
        assert g["contraction_margin"] < 1.0
        adm = body["admissibility"]
        assert adm["admissible"]
        assert_allclose(adm["minus_derivative"], [1.0, 0.0], atol=1e-15)

    def test_rejects_zero_separation(self, client):
        cfg = dict(DELTA_CFG, ell=0.0)
        resp = client.post("/radius", json=cfg)
        assert resp.status_code == 400
        body = resp.json()
        assert body["detail"] == "ell must be positive"
        assert body["error_type"] == "NonPositiveSeparation"

    def test_rejects_inadmissible_problem(self, client):
        cfg = {
            "potential_minus": {"kind": "piecewise", "breaks": [0.0, 1.0], "values": [[0.0, 0.0]]},
            "potential_plus": {"kind": "delta", "beta": [1.0, 0.0]},
            "ell": 10.0,
        }
        resp = client.post("/radius", json=cfg)
        assert resp.status_code == 400
        assert resp.json()["detail"].startswith("inadmissible problem")
        assert "minus-half" in resp.json()["detail"]


@pytest.fixture(scope="module")
def solved(client):
    resp = client.post("/solve", json=DELTA_CFG)
    assert resp.status_code == 200
    return resp.json()


class TestSolveEndpoint:
    def test_auto_range_covers_certified_indices(self, solved):
        assert [e["n"] for e in solved["entries"]] == list(range(-10, 11))
        assert solved["failures"] == []

    def test_entries_carry_certificates(self, solved):
        for e in solved["entries"]:
            assert e["certified"] is True
            assert e["residual"] <= 1e-11
            assert e["iterations"] <= 15

    def test_wire_lambda_is_k_squared(self, solved):
        for e in solved["entries"]:
            k = complex(e["k_re"], e["k_im"])
            assert_allclose([(k * k).real, (k * k).imag], [e["lambda_re"], e["lambda_im"]], atol=1e-15)

    def test_first_rung_value(self, solved):
        e1 = next(e for e in solved["entries"] if e["n"] == 1)
        assert_allclose(e1["k_re"], 0.015552487775037272, rtol=1e-10)
        assert_allclose(e1["k_im"], -2.39371532354111e-06, rtol=1e-6)
        assert e1["classification"] == "resonance"
        assert_allclose(e1["a_n"], math.pi / 200.0, rtol=RTOL_WIRE)

    def test_explicit_index_range(self, client):
        cfg = dict(DELTA_CFG, n_range=[2, 5])
        body = client.post("/solve", json=cfg).json()
        assert [e["n"] for e in body["entries"]] == [2, 3, 4, 5]

    def test_reversed_range_rejected(self, client):
        cfg = dict(DELTA_CFG, n_range=[5, 2])
        resp = client.post("/solve", json=cfg)
        assert resp.status_code == 400
        assert resp.json()["error_type"] == "ConfigError"

    def test_partial_failure_reported_not_fatal(self, client):
        cfg = dict(DELTA_CFG, max_iter=2)
        body = client.post("/solve", json=cfg).json()
        assert body["failures"]
        assert {f["error_type"] for f in body["failures"]} == {"NotConverged"}

    def test_mixed_signs_for_gain_loss_steps(self, client):
        cfg = {
            "potential_minus": {"kind": "step", "beta": [3.0, 2.0]},
            "potential_plus": {"kind": "step", "beta": [1.0, 0.0]},
            "ell": 100.0,
        }
        body = client.post("/solve", json=cfg).json()
        kinds = {e["classification"] for e in body["entries"]}
        assert "eigenvalue" in kinds and "resonance" in kinds


class TestScanEndpoint:
    def test_axis_values_and_order(self, client):
        cfg = dict(
            DELTA_CFG, re_min=-0.1, re_max=0.1, im_min=0.0, im_max=0.0, n_re=3, n_im=1
        )
        rows = client.post("/scan", json=cfg).json()["rows"]
        assert [r["k_re"] for r in rows] == [-0.1, 0.0, 0.1]
        center = rows[1]
        assert_allclose(center["F_re"], 1.0, rtol=RTOL_WIRE)
        assert_allclose(center["F_im"], 0.0, atol=1e-15)
        assert_allclose(center["abs_F_minus_1"], 0.0, atol=1e-15)
        assert_allclose(center["abs_F_prime"], 4.0, rtol=1e-9)
        edge = rows[2]
        assert_allclose([edge["F_re"], edge["F_im"]], [0.96, -0.4], rtol=RTOL_WIRE)
        assert_allclose(edge["abs_F_minus_1"], math.sqrt(0.1616), rtol=RTOL_WIRE)
        assert_allclose(edge["abs_F_prime"], math.sqrt(16.64), rtol=1e-9)

    def test_imaginary_axis_is_outer_loop(self, client):
        cfg = dict(
            DELTA_CFG, re_min=0.0, re_max=0.01, im_min=-0.01, im_max=0.01, n_re=2, n_im=3
        )
        rows = client.post("/scan", json=cfg).json()["rows"]
        assert [(r["k_re"], r["k_im"]) for r in rows[:3]] == [
            (0.0, -0.01),
            (0.01, -0.01),
            (0.0, 0.0),
        ]
        assert len(rows) == 6

    def test_empty_grid(self, client):
        cfg = dict(
            DELTA_CFG, re_min=0.0, re_max=1.0, im_min=0.0, im_max=1.0, n_re=0, n_im=3
        )
        assert client.post("/scan", json=cfg).json()["rows"] == []

    def test_negative_count_rejected(self, client):
        cfg = dict(
            DELTA_CFG, re_min=0.0, re_max=1.0, im_min=0.0, im_max=1.0, n_re=-1, n_im=3
        )
        assert client.post("/scan", json=cfg).status_code == 422


class TestVerifyEndpoint:
    def test_full_agreement(self, client):
        body = client.post("/verify", json=DELTA_CFG).json()
        assert body["all_agree"] is True
        assert len(body["reports"]) == 21
        for r in body["reports"]:
            assert r["winding"] == 1
            assert r["agrees"] is True
            assert r["distance_to_ladder"] <= 1e-12
            assert r["error"] is None


class TestSeriesEndpoint:
    def test_rows_pair_both_centers(self, client):
        cfg = dict(DELTA_CFG, n_range=[1, 3], series_order=3)
        body = client.post("/series", json=cfg).json()
        rows = body["rows"]
        assert [(r["n"], r["center"]) for r in rows] == [
            (1, "ball_center"),
            (1, "zero"),
            (2, "ball_center"),
            (2, "zero"),
            (3, "ball_center"),
            (3, "zero"),
        ]
        for r in rows:
            assert r["order"] == 3
            assert r["useful"] is True

    def test_zero_rows_match_three_term_formula(self, client):
        cfg = dict(DELTA_CFG, n_range=[2, 2], series_order=3)
        rows = client.post("/series", json=cfg).json()["rows"]
        zero_row = next(r for r in rows if r["center"] == "zero")
        expected = rl.three_term_delta(1.0, 1.0, 2, 100.0)
        assert_allclose(
            [zero_row["value_re"], zero_row["value_im"]],
            [expected.real, expected.imag],
            rtol=1e-9,
        )


class TestValidationLayer:
    def test_unknown_potential_kind(self, client):
        cfg = dict(DELTA_CFG, potential_minus={"kind": "gaussian", "beta": [1.0, 0.0]})
        assert client.post("/solve", json=cfg).status_code == 422

    def test_missing_field(self, client):
        assert client.post("/solve", json={"ell": 10.0}).status_code == 422

    def test_complex_pairs_are_two_element_arrays(self, client):
        cfg = dict(DELTA_CFG, potential_minus={"kind": "delta", "beta": [1.0]})
        assert client.post("/solve", json=cfg).status_code == 422
