from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from sydra import __version__
from sydra.model_io import MODEL_SUFFIX, export_model_json
from sydra.pipeline import RunConfig, run_pipeline
from sydra.service import create_app

from conftest import MINI_ENGINE, MINI_RULES
from corpus import make_corpus


@pytest.fixture(scope="module")
def model_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("models")
    run_pipeline(
        RunConfig(
            root=str(MINI_ENGINE),
            rules_path=str(MINI_RULES),
            include_paths=(".",),
            engine_name="mini_engine",
            commit_ref="fixture",
            output_dir=str(out),
        )
    )
    for model in make_corpus():
        (out / f"{model.engine_name}{MODEL_SUFFIX}").write_bytes(
            export_model_json(model)
        )
    manifest = out / "corpus.txt"
    manifest.write_text(
        "".join(f"engine{i:02d}{MODEL_SUFFIX}\n" for i in range(10))
    )
    return out


@pytest.fixture(scope="module")
def client(model_dir):
    return TestClient(create_app(model_dir=str(model_dir)))


class TestHealth:
    def test_ok(self, client):
        response = client.get("/api/health")
        assert response.status_code == 200
        assert response.json() == {"status": "ok", "version": __version__}


class TestAnalyze:
    def test_fixture_tree(self, client):
        response = client.post(
            "/api/analyze",
            json={
                "root": str(MINI_ENGINE),
                "rules_path": str(MINI_RULES),
                "include_paths": ["."],
                "engine_name": "mini_engine",
                "commit_ref": "fixture",
            },
        )
        assert response.status_code == 200
        document = response.json()
        assert document["schema_version"] == "1"
        assert len(document["files"]) == 34
        assert document["subsystem_graph"]["node_count"] == 16

    def test_bad_rules_path_is_400(self, client):
        response = client.post(
            "/api/analyze",
            json={"root": str(MINI_ENGINE), "rules_path": "/nonexistent.rules"},
        )
        assert response.status_code == 400
        assert "nonexistent.rules" in response.json()["detail"]

    def test_missing_body_is_422(self, client):
        assert client.post("/api/analyze", json={}).status_code == 422


class TestMap:
    def test_tags_paths(self, client):
        response = client.post(
            "/api/map",
            json={
                "paths": ["servers/audio/fx.h", "weird/thing.h"],
                "rules_text": "AUD servers/audio/**",
            },
        )
        assert response.status_code == 200
        assert response.json() == {
            "tags": {"servers/audio/fx.h": "AUD", "weird/thing.h": "UNK"}
        }

    def test_bad_rules_text_is_400(self, client):
        response = client.post(
            "/api/map", json={"paths": [], "rules_text": "NOPE x/**"}
        )
        assert response.status_code == 400
        assert "line 1" in response.json()["detail"]


class TestSuggest:
    def test_suggests_from_paths(self, client):
        response = client.post(
            "/api/suggest",
            json={"paths": ["servers/audio/a.h", "editor/gui/b.h", "misc/c.h"]},
        )
        assert response.status_code == 200
        rules = {(r["subsystem"], r["pattern"]) for r in response.json()["rules"]}
        assert ("AUD", "servers/audio/**") in rules
        assert ("EDI", "editor/**") in rules

    def test_custom_keyword_table(self, client):
        response = client.post(
            "/api/suggest",
            json={
                "paths": ["jukebox/a.h"],
                "keyword_table": {"jukebox": "AUD"},
            },
        )
        assert response.json()["rules"] == [
            {"subsystem": "AUD", "pattern": "jukebox/**"}
        ]


class TestAggregate:
    def test_manifest(self, client, model_dir):
        response = client.post(
            "/api/aggregate",
            json={"manifest_path": str(model_dir / "corpus.txt"), "k_inner": 3},
        )
        assert response.status_code == 200
        document = response.json()
        assert document["inner_core"] == ["COR", "LLR", "RES"]
        assert document["threshold"] == 8
        assert len(document["edges"]) == 10

    def test_missing_manifest_is_400(self, client):
        response = client.post(
            "/api/aggregate", json={"manifest_path": "/nonexistent.txt"}
        )
        assert response.status_code == 400


class TestModels:
    def test_list(self, client):
        response = client.get("/api/models")
        names = response.json()["models"]
        assert f"mini_engine{MODEL_SUFFIX}" in names
        assert len(names) == 11  # mini_engine + ten synthetic

    def test_get(self, client):
        response = client.get(f"/api/models/mini_engine{MODEL_SUFFIX}")
        assert response.status_code == 200
        assert response.json()["engine_name"] == "mini_engine"

    def test_get_unknown_is_404(self, client):
        assert client.get(f"/api/models/ghost{MODEL_SUFFIX}").status_code == 404

    def test_traversal_rejected(self, client):
        # Encoded slash: the router drops it before our handler (404).
        assert client.get(f"/api/models/..%2fsecret{MODEL_SUFFIX}").status_code in (
            400,
            404,
        )
        # Backslash reaches the handler and trips its own guard.
        assert client.get(f"/api/models/..%5csecret{MODEL_SUFFIX}").status_code == 400

    def test_non_model_name_rejected(self, client):
        assert client.get("/api/models/corpus.txt").status_code == 400

    def test_no_model_dir(self):
        client = TestClient(create_app())
        assert client.get("/api/models").json() == {"models": []}
        assert client.get(f"/api/models/x{MODEL_SUFFIX}").status_code == 404


class TestIndex:
    def test_fallback_page(self, client):
        response = client.get("/")
        assert response.status_code == 200
        assert "viewer" in response.text

    def test_static_frontend_mount(self, model_dir, tmp_path_factory):
        static = tmp_path_factory.mktemp("static")
        (static / "index.html").write_text("<html><body>viewer!</body></html>")
        client = TestClient(
            create_app(model_dir=str(model_dir), frontend_dir=str(static))
        )
        assert "viewer!" in client.get("/").text
        # API routes take precedence over the static mount.
        assert client.get("/api/health").status_code == 200
