"""Source-tree walking: discover the C/C++ file universe to analyze."""
from __future__ import annotations

import os
import posixpath
from dataclasses import dataclass

from . import globs

#: Extensions (without dot) scanned by default.
DEFAULT_EXTENSIONS = frozenset(
    {"h", "hpp", "hh", "hxx", "inl", "c", "cc", "cpp", "cxx", "mm"}
)

_HEADER_EXTS = frozenset({"h", "hpp", "hh", "hxx", "inl"})
_IMPL_EXTS = frozenset({"c", "cc", "cpp", "cxx", "mm"})


@dataclass(frozen=True)
class SourceFile:
    """One scanned file; ids are dense and follow lexicographic path order."""

    id: int
    path: str  # tree-relative, '/'-separated
    kind: str  # header | implementation | other


def classify_kind(path: str) -> str:
    ext = path.rsplit(".", 1)[-1].lower() if "." in path else ""
    if ext in _HEADER_EXTS:
        return "header"
    if ext in _IMPL_EXTS:
        return "implementation"
    return "other"


def scan_tree(
    root: str,
    excludes: tuple[str, ...] | list[str] = (),
    extensions: frozenset[str] | set[str] = DEFAULT_EXTENSIONS,
    diagnostics: list[str] | None = None,
) -> list[SourceFile]:
    """Walk ``root`` and return SourceFiles sorted by path, ids from 0.

    Excludes are matched against tree-relative paths. Symbolic links are
    never followed (directory links are not descended, file links are
    skipped) so one physical file cannot appear under two identities.
    Unreadable subdirectories are skipped with a diagnostic; an unreadable
    root is fatal.
    """
    if not os.path.isdir(root):
        raise NotADirectoryError(f"scan root does not exist: {root}")

    def on_error(err: OSError) -> None:
        if diagnostics is not None:
            rel = os.path.relpath(getattr(err, "filename", root), root)
            diagnostics.append(
                f"{rel.replace(os.sep, '/')}:0: unreadable-dir {err.strerror}"
            )

    exts = {e.lower().lstrip(".") for e in extensions}
    paths: list[str] = []
    for dirpath, dirnames, filenames in os.walk(
        root, onerror=on_error, followlinks=False
    ):
        dirnames.sort()
        rel_dir = os.path.relpath(dirpath, root).replace(os.sep, "/")
        for name in filenames:
            ext = name.rsplit(".", 1)[-1].lower() if "." in name else ""
            if ext not in exts:
                continue
            if os.path.islink(os.path.join(dirpath, name)):
                continue
            rel = name if rel_dir == "." else f"{rel_dir}/{name}"
            rel = posixpath.normpath(rel)
            if any(globs.match(pat, rel) for pat in excludes):
                continue
            paths.append(rel)

    paths.sort()
    return [SourceFile(i, p, classify_kind(p)) for i, p in enumerate(paths)]
