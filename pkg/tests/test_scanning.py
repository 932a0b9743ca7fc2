from __future__ import annotations

import os

import pytest

from sydra.scanning import DEFAULT_EXTENSIONS, classify_kind, scan_tree


def _touch(root, rel, content=""):
    path = root / rel
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(content, encoding="utf-8")


def test_empty_directory(tmp_path):
    assert scan_tree(str(tmp_path)) == []


def test_extension_filter(tmp_path):
    for rel in ["src/a.cpp", "src/a.h", "README.md", "build.py", "notes.txt"]:
        _touch(tmp_path, rel)
    files = scan_tree(str(tmp_path))
    assert [f.path for f in files] == ["src/a.cpp", "src/a.h"]


def test_ids_contiguous_in_lexicographic_order(tmp_path):
    for rel in ["z.h", "a/b.h", "a/a.h", "m.cpp"]:
        _touch(tmp_path, rel)
    files = scan_tree(str(tmp_path))
    assert [f.path for f in files] == ["a/a.h", "a/b.h", "m.cpp", "z.h"]
    assert [f.id for f in files] == [0, 1, 2, 3]


def test_excludes(tmp_path):
    _touch(tmp_path, "core/x.h")
    _touch(tmp_path, "thirdparty/y.h")
    files = scan_tree(str(tmp_path), excludes=["thirdparty/**"])
    assert [f.path for f in files] == ["core/x.h"]


def test_custom_extensions(tmp_path):
    _touch(tmp_path, "shader.glsl")
    _touch(tmp_path, "a.cpp")
    files = scan_tree(str(tmp_path), extensions={"glsl"})
    assert [f.path for f in files] == ["shader.glsl"]
    assert files[0].kind == "other"


def test_kind_classification():
    assert classify_kind("a/b.h") == "header"
    assert classify_kind("a/b.hpp") == "header"
    assert classify_kind("a/b.inl") == "header"
    assert classify_kind("a/b.cpp") == "implementation"
    assert classify_kind("a/b.mm") == "implementation"
    assert classify_kind("a/b.glsl") == "other"
    assert "mm" in DEFAULT_EXTENSIONS


def test_missing_root_is_fatal(tmp_path):
    with pytest.raises(NotADirectoryError):
        scan_tree(str(tmp_path / "nope"))


def test_symlinked_files_and_dirs_are_skipped(tmp_path):
    _touch(tmp_path, "real/a.h")
    os.symlink(tmp_path / "real" / "a.h", tmp_path / "alias.h")
    os.symlink(tmp_path / "real", tmp_path / "realalias")
    files = scan_tree(str(tmp_path))
    assert [f.path for f in files] == ["real/a.h"]
