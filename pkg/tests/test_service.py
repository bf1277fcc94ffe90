"""HTTP layer over the same library calls the CLI uses."""

import pytest
from fastapi.testclient import TestClient

from tripower.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


class TestHealth:
    def test_ok(self, client):
        r = client.get("/health")
        assert r.status_code == 200
        assert r.json()["status"] == "ok"


class TestTriangle:
    def test_u_rows(self, client):
        r = client.get("/triangle/u", params={"rows": 4})
        assert r.status_code == 200
        body = r.json()
        assert body["entries"][-1] == ["1", "19", "25", "19", "1"]

    def test_unknown_kind_404(self, client):
        assert client.get("/triangle/zzz", params={"rows": 2}).status_code == 404

    def test_negative_rows_rejected(self, client):
        # pydantic query validation answers before the handler runs
        assert client.get("/triangle/u", params={"rows": -3}).status_code == 422


class TestExpand:
    def test_value_and_terms(self, client):
        r = client.get(
            "/expand", params={"x": 4, "n": 3, "strategy": "v-row", "terms": True}
        )
        assert r.status_code == 200
        body = r.json()
        assert body["value"] == "64"
        assert body["terms"] == ["1", "21", "21", "21"]

    def test_terms_excluded_when_not_requested(self, client):
        body = client.get("/expand", params={"x": 2, "n": 5,
                                             "strategy": "u-row"}).json()
        assert "terms" not in body

    def test_bad_strategy_400(self, client):
        r = client.get("/expand", params={"x": 2, "n": 2, "strategy": "junk"})
        assert r.status_code == 400


class TestDifftable:
    def test_columns(self, client):
        r = client.get("/difftable", params={"n": 3, "xmax": 10, "depth": 3})
        assert r.status_code == 200
        assert r.json()["columns"][3] == ["6"] * 8

    def test_bad_depth_400(self, client):
        r = client.get("/difftable", params={"n": 3, "xmax": 2, "depth": 9})
        assert r.status_code == 400


class TestAudit:
    def test_full_document(self, client):
        r = client.get("/audit")
        assert r.status_code == 200
        body = r.json()
        assert body["report"] == "identity-audit"
        assert body["counts"] == {
            "records": 58,
            "verified_claim": 42,
            "audited_claim": 13,
            "non_evaluable": 3,
        }
        assert body["exit_status"] == 0

    def test_single_record(self, client):
        r = client.get("/audit/E3_14")
        assert r.status_code == 200
        body = r.json()
        (rec,) = body["records"]
        assert rec["validity"] == "holds iff n=3 or x=2 (on tested grid)"

    def test_unknown_404(self, client):
        assert client.get("/audit/E0_0").status_code == 404

    def test_non_evaluable_400(self, client):
        assert client.get("/audit/E4_1").status_code == 400


class TestExp:
    def test_digits(self, client):
        r = client.get("/exp", params={"x": 1, "digits": 15})
        assert r.status_code == 200
        body = r.json()
        assert body["decimal"]["text"] == "2.718281828459045"
        assert body["terms_used"] == 17

    def test_terms(self, client):
        body = client.get("/exp", params={"x": 2, "terms": 8}).json()
        assert body["terms_used"] == 8

    def test_both_given_400(self, client):
        r = client.get("/exp", params={"x": 1, "digits": 5, "terms": 5})
        assert r.status_code == 400


class TestOeis:
    def test_check(self, client):
        r = client.get("/oeis/A287326/check")
        assert r.status_code == 200
        body = r.json()
        assert body["ok"] is True and body["terms_compared"] == 120

    def test_terms(self, client):
        r = client.get("/oeis/A000124/terms", params={"count": 5})
        assert r.status_code == 200
        assert r.json()["values"] == ["1", "2", "4", "7", "11"]

    def test_bad_id_400(self, client):
        assert client.get("/oeis/banana/check").status_code == 400
