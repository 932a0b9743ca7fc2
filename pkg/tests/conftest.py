from __future__ import annotations

from pathlib import Path

import pytest

from sydra.includes import build_file_graph
from sydra.mapping import map_files, parse_rules
from sydra.scanning import scan_tree

FIXTURES = Path(__file__).resolve().parent / "fixtures"
MINI_ENGINE = FIXTURES / "mini_engine"
MINI_RULES = FIXTURES / "mini_engine.rules"
GOLDEN = FIXTURES / "golden"


@pytest.fixture(scope="session")
def mini_files():
    return scan_tree(str(MINI_ENGINE))


@pytest.fixture(scope="session")
def mini_graph(mini_files):
    return build_file_graph(str(MINI_ENGINE), mini_files, include_paths=["."])


@pytest.fixture(scope="session")
def mini_rule_set():
    return parse_rules(MINI_RULES.read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def mini_tags(mini_files, mini_rule_set):
    return map_files(mini_files, mini_rule_set)
