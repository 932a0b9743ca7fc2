from __future__ import annotations

import json
import shutil
import subprocess

import jsonschema
import pytest

from sydra.aggregate import emergent_tiers
from sydra.cohesion import cohesion_report, folder_stats
from sydra.mapping import map_files, mapping_coverage
from sydra.metrics import build_model
from sydra.model_io import (
    MODEL_SUFFIX,
    SCHEMA_VERSION,
    cohesion_summary,
    coverage_csv,
    emergent_to_document,
    export_dot,
    export_model_json,
    folder_csv,
    frequency_csv,
    import_model_json,
    metrics_csv,
    model_to_document,
    presence_csv,
)

from conftest import FIXTURES, GOLDEN
from corpus import make_corpus, make_engine


@pytest.fixture(scope="module")
def mini_model(mini_files, mini_graph, mini_rule_set):
    tags = map_files(mini_files, mini_rule_set)
    return build_model("mini_engine", "fixture", mini_graph, tags, tool_version="0.1.0")


@pytest.fixture(scope="module")
def schema():
    return json.loads((FIXTURES.parent.parent / "docs" / "model.schema.json").read_text())


class TestModelJson:
    def test_golden_bytes(self, mini_model):
        golden = (GOLDEN / f"mini_engine{MODEL_SUFFIX}").read_bytes()
        assert export_model_json(mini_model) == golden

    def test_ends_with_newline_and_is_ascii(self, mini_model):
        data = export_model_json(mini_model)
        assert data.endswith(b"\n")
        data.decode("ascii")

    def test_key_order_is_fixed(self, mini_model):
        document = model_to_document(mini_model)
        assert list(document) == [
            "schema_version",
            "engine_name",
            "commit_ref",
            "tool_version",
            "files",
            "file_edges",
            "external_refs",
            "subsystem_graph",
            "emergent",
        ]
        assert document["schema_version"] == SCHEMA_VERSION

    def test_round_trip(self, mini_model):
        clone = import_model_json(export_model_json(mini_model))
        assert clone == mini_model
        assert export_model_json(clone) == export_model_json(mini_model)

    def test_round_trip_with_emergent(self):
        corpus = make_corpus()
        arch = emergent_tiers(corpus, k_inner=3)
        model = corpus[0]
        from dataclasses import replace

        enriched = replace(model, emergent=emergent_to_document(arch))
        clone = import_model_json(export_model_json(enriched))
        assert clone.emergent == enriched.emergent

    def test_unsupported_schema_version_rejected(self, mini_model):
        document = model_to_document(mini_model)
        document["schema_version"] = "99"
        with pytest.raises(ValueError, match="schema_version"):
            import_model_json(json.dumps(document))

    def test_validates_against_schema(self, mini_model, schema):
        jsonschema.validate(json.loads(export_model_json(mini_model)), schema)

    def test_emergent_document_validates(self, schema):
        corpus = make_corpus()
        arch = emergent_tiers(corpus, k_inner=3)
        document = model_to_document(corpus[1])
        document["emergent"] = emergent_to_document(arch)
        jsonschema.validate(document, schema)

    def test_schema_rejects_unknown_keys(self, mini_model, schema):
        document = model_to_document(mini_model)
        document["extra"] = True
        with pytest.raises(jsonschema.ValidationError):
            jsonschema.validate(document, schema)

    def test_schema_rejects_unknown_tag(self, mini_model, schema):
        document = model_to_document(mini_model)
        document["files"][0]["tag"] = "XXX"
        with pytest.raises(jsonschema.ValidationError):
            jsonschema.validate(document, schema)


class TestDot:
    def test_subsystem_graph(self, mini_model):
        dot = export_dot(mini_model.subsystem_graph)
        assert dot.startswith("digraph sydra {\n")
        assert dot.endswith("}\n")
        assert '  "AUD";' in dot
        assert '"LLR" -> "COR" [label="3"];' in dot

    def test_file_graph(self, mini_graph):
        dot = export_dot(mini_graph)
        assert '"core/object.cpp" -> "core/object.h";' in dot

    def test_quoting(self):
        model = make_engine("q", [("COR", "LLR")])
        dot = export_dot(model.subsystem_graph)
        assert '"COR" -> "LLR"' in dot

    @pytest.mark.skipif(shutil.which("dot") is None, reason="graphviz not installed")
    def test_graphviz_accepts_output(self, mini_model, tmp_path):
        path = tmp_path / "g.dot"
        path.write_text(export_dot(mini_model.subsystem_graph))
        subprocess.run(["dot", "-Tcanon", str(path)], check=True, capture_output=True)


class TestCsvReports:
    def test_metrics_csv(self, mini_model):
        lines = metrics_csv(mini_model).splitlines()
        assert lines[0] == "node,in_degree,out_degree,betweenness_raw,betweenness_normalized"
        assert len(lines) == 17
        assert lines[1].startswith("AUD,1,2,1.0,")

    def test_coverage_csv(self, mini_files, mini_rule_set):
        coverage = mapping_coverage(mini_files, mini_rule_set)
        lines = coverage_csv(coverage).splitlines()
        assert lines[0] == "subsystem,file_count"
        assert "COR,4" in lines

    def test_presence_csv(self):
        from sydra.aggregate import subsystem_presence

        matrix = subsystem_presence(make_corpus())
        lines = presence_csv(matrix).splitlines()
        assert lines[0].startswith("engine,AUD,COR,")
        assert lines[0].endswith(",detected")
        assert len(lines) == 11
        assert lines[1].startswith("engine00,1,1,")
        assert lines[1].endswith(",12")
        assert lines[10].endswith(",6")

    def test_frequency_csv(self):
        from sydra.aggregate import coupling_frequency

        lines = frequency_csv(coupling_frequency(make_corpus())).splitlines()
        assert lines[0] == "from,to,count"
        assert lines[1] == "COR,LLR,9"
        assert len(lines) == 14

    def test_folder_csv(self):
        from sydra.scanning import SourceFile

        stats = folder_stats([SourceFile(0, "a/x.h", "header")])
        lines = folder_csv(stats).splitlines()
        assert lines[0] == "folder,depth,direct_files,recursive_files,children"
        assert lines[1] == ".,0,0,1,1"
        assert lines[2] == "a,1,1,1,0"


class TestCohesionSummary:
    def test_mentions_flags_and_dispersion(self):
        from sydra.scanning import SourceFile

        files = [
            SourceFile(0, "pkg/pkg/a.h", "header"),
            SourceFile(1, "other/b.h", "header"),
        ]
        report = cohesion_report(files, {0: "COR", 1: "COR"})
        text = cohesion_summary(report)
        assert "files: 2" in text
        assert "COR: 2" in text
        assert "pkg contains pkg/pkg" in text

    def test_no_flags_line(self, mini_files, mini_rule_set):
        report = cohesion_report(
            list(mini_files), map_files(mini_files, mini_rule_set)
        )
        assert "repeated-name nesting: none" in cohesion_summary(report)
