import json

import pytest
from fastapi.testclient import TestClient

from nonfield.refdata import data_file
from nonfield.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


CFG_4HE = {"z": 2, "a": 4, "calibration": "so",
           "occupancy": [{"n": 0, "l": 0, "sign": "plus", "count": 4,
                          "protons": 2}]}

OBSERVED_4HE = [20.21, 23.64, 24.25, 25.28, 27.42, 28.31, 28.39, 28.64, 28.67]


class TestLevels:
    def test_4he_base_ground_pair(self, client):
        r = client.get("/api/nuclides/2/4/levels?calibration=base")
        assert r.status_code == 200
        doc = r.json()
        rows = {x["state"]: x for x in doc["levels"]}
        assert rows["0,0"]["pair_binding_mev"] == pytest.approx(14.146, abs=0.01)
        assert doc["calibration"]["tag"] == "base"

    def test_so_split_rows(self, client):
        r = client.get("/api/nuclides/2/4/levels?calibration=so")
        rows = {x["state"]: x for x in r.json()["levels"]}
        assert rows["0,1+"]["pair_binding_mev"] == pytest.approx(5.628, abs=0.01)
        assert rows["0,1-"]["pair_binding_mev"] == pytest.approx(5.639, abs=0.01)

    def test_single_row_table(self, client):
        r = client.get("/api/nuclides/2/4/levels?max_n=0&max_l=0")
        assert len(r.json()["levels"]) == 1

    def test_unknown_nuclide_404(self, client):
        assert client.get("/api/nuclides/9/4/levels").status_code == 404
        assert client.get("/api/nuclides/1/9/levels").status_code == 404

    def test_bad_range_422(self, client):
        assert client.get("/api/nuclides/2/4/levels?max_n=44").status_code == 422
        assert client.get(
            "/api/nuclides/2/4/levels?calibration=x").status_code == 422


class TestConfiguration:
    def test_4he_ground(self, client):
        r = client.post("/api/configuration",
                        json={"config": CFG_4HE, "observed_binding": 28.296})
        assert r.status_code == 200
        doc = r.json()
        assert doc["binding_with_subtraction"] == pytest.approx(28.29, abs=0.02)
        # implied gluonic subtraction per nucleon for two (0,0) pairs
        assert doc["required_subtraction"] == pytest.approx(0.654, abs=0.02)
        assert set(doc["open_states"]) == {"open", "resonance"}

    def test_6he_halo(self, client):
        cfg = json.loads(data_file("config_6He.json").read_text())
        r = client.post("/api/configuration",
                        json={"config": cfg, "observed_binding": 29.269})
        assert r.status_code == 200
        doc = r.json()
        assert doc["required_subtraction"] == pytest.approx(1.43, abs=0.02)
        assert "2,0" in doc["open_states"]["resonance"]

    def test_occupancy_violation_409(self, client):
        bad = dict(CFG_4HE, occupancy=[{"n": 0, "l": 0, "sign": "plus",
                                        "count": 2, "protons": 1}])
        assert client.post("/api/configuration",
                           json={"config": bad}).status_code == 409

    def test_schema_violation_400(self, client):
        r = client.post("/api/configuration",
                        json={"config": {"z": 2, "a": 4}})
        assert r.status_code == 422  # pydantic rejects the missing field

    def test_all_fields_present(self, client):
        r = client.post("/api/configuration", json={"config": CFG_4HE})
        doc = r.json()
        for key in ("pionic_total", "required_subtraction", "open_states",
                    "binding_with_subtraction"):
            assert key in doc


class TestExcitations:
    def _rules(self):
        return json.loads(data_file("rules_4He.json").read_text())

    def test_whole_nucleus_list(self, client):
        r = client.post("/api/excitations",
                        json={"config": CFG_4HE, "rules": self._rules()})
        assert r.status_code == 200
        energies = [t["energy_mev"] for t in r.json()["transitions"]]
        assert energies == sorted(energies)
        assert min(abs(e - 23.914) for e in energies) < 0.02
        assert min(abs(e - 25.264) for e in energies) < 0.02

    def test_zero_max_energy(self, client):
        r = client.post("/api/excitations",
                        json={"config": CFG_4HE, "rules": self._rules(),
                              "max_energy_mev": 0.0})
        assert r.json()["transitions"] == []

    def test_single_match(self, client):
        r = client.post("/api/excitations",
                        json={"config": CFG_4HE, "rules": self._rules(),
                              "observed": [25.28], "tol": 0.05})
        matches = r.json()["matches"]
        assert len(matches) == 1
        assert matches[0]["energy_mev"] == pytest.approx(25.264, abs=0.02)

    def test_full_assignment(self, client):
        r = client.post("/api/excitations",
                        json={"config": CFG_4HE, "rules": self._rules(),
                              "observed": OBSERVED_4HE, "tol": 0.4})
        assert len(r.json()["matches"]) == 9

    def test_bad_rules_400(self, client):
        r = client.post("/api/excitations",
                        json={"config": CFG_4HE,
                              "rules": {"groups": [{"allowed_from": ["zz"]}]}})
        assert r.status_code == 400


class TestReferenceAndSpectrum:
    def test_reference(self, client):
        r = client.get("/api/reference/heII")
        assert r.status_code == 200
        assert any(row["label"] == "2p3/2" for row in r.json()["rows"])
        assert client.get("/api/reference/zzz").status_code == 404

    def test_spectrum_default(self, client):
        r = client.get("/api/atomic/heII/spectrum")
        doc = r.json()
        assert doc["ground_binding_ev"] == pytest.approx(54.4177630, abs=1e-6)
        lines = {x["state"]: x["transition_ev"] for x in doc["lines"]}
        assert lines["2p3/2"] == pytest.approx(40.8137552, abs=2e-6)

    def test_spectrum_override(self, client):
        r = client.get("/api/atomic/hydrogen/spectrum?d=0.1&g=0.3")
        assert r.json()["parameters"] == {"d": 0.1, "g": 0.3}
        assert client.get("/api/atomic/helium3/spectrum").status_code == 404


class TestStatelessness:
    def test_request_order_irrelevant(self, client):
        a1 = client.get("/api/nuclides/2/4/levels?calibration=so").json()
        client.post("/api/configuration", json={"config": CFG_4HE,
                                                "observed_binding": 28.296})
        client.get("/api/atomic/heII/spectrum")
        a2 = client.get("/api/nuclides/2/4/levels?calibration=so").json()
        assert a1 == a2

    def test_schema_version_everywhere(self, client):
        for doc in (client.get("/api/nuclides/2/4/levels").json(),
                    client.post("/api/configuration",
                                json={"config": CFG_4HE}).json(),
                    client.get("/api/reference/constants").json(),
                    client.get("/api/atomic/heII/spectrum").json()):
            assert doc["schema_version"] == 1
