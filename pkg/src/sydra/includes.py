"""Include-directive parsing, resolution, and file-graph construction.

Parsing is textual, not a real preprocessor: directives in any conditional
branch are all reported (architecture recovery wants the superset of
potential dependencies), while directives inside comments are not.
Computed includes (``#include MACRO``) cannot be resolved without macro
expansion and are only tallied.
"""
from __future__ import annotations

import posixpath
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .scanning import SourceFile

_DIRECTIVE_RE = re.compile(r"^\s*#\s*include\b\s*(.*)$")

# Diagnostic codes used in `path:line: code message` report lines.
MALFORMED = "malformed-include"
COMPUTED = "computed-include"
AMBIGUOUS = "ambiguous-include"
UNREADABLE = "unreadable-file"


@dataclass(frozen=True)
class IncludeDirective:
    spelled_path: str
    style: str  # quoted | angled
    line: int  # 1-based


@dataclass(frozen=True)
class ResolutionResult:
    target: int | str  # SourceFile id when resolved/ambiguous, spelled path when external
    status: str  # resolved | external | ambiguous


@dataclass(frozen=True)
class FileGraph:
    nodes: tuple[SourceFile, ...]
    edges: tuple[tuple[int, int], ...]  # sorted, duplicate-free, no self-edges
    external_refs: dict[str, int] = field(default_factory=dict)


def strip_comments(content: str) -> str:
    """Blank out comments, preserving newlines so line numbers survive.

    String and character literals are tracked so that `//` or `/*` inside
    them does not start a comment; literals terminate at end of line (an
    unescaped raw newline is not legal inside them anyway).
    """
    out = list(content)
    i, n = 0, len(content)
    state = "code"  # code | line | block | string | char
    while i < n:
        c = content[i]
        if state == "code":
            if c == "/" and i + 1 < n:
                if content[i + 1] == "/":
                    state = "line"
                    out[i] = out[i + 1] = " "
                    i += 1
                elif content[i + 1] == "*":
                    state = "block"
                    out[i] = out[i + 1] = " "
                    i += 1
            elif c == '"':
                state = "string"
            elif c == "'":
                state = "char"
        elif state == "line":
            if c == "\n":
                state = "code"
            else:
                out[i] = " "
        elif state == "block":
            if c == "*" and i + 1 < n and content[i + 1] == "/":
                state = "code"
                out[i] = out[i + 1] = " "
                i += 1
            elif c != "\n":
                out[i] = " "
        else:  # string or char
            quote = '"' if state == "string" else "'"
            if c == "\\" and i + 1 < n and content[i + 1] != "\n":
                i += 1
            elif c == quote or c == "\n":
                state = "code"
        i += 1
    return "".join(out)


def parse_includes(
    content: str, issues: list[tuple[int, str, str]] | None = None
) -> list[IncludeDirective]:
    """Extract include directives from source text, in line order.

    ``issues`` (optional) collects (line, code, message) tuples for
    malformed and computed directives.
    """
    directives: list[IncludeDirective] = []
    for lineno, line in enumerate(strip_comments(content).split("\n"), start=1):
        m = _DIRECTIVE_RE.match(line)
        if m is None:
            continue
        rest = m.group(1)
        if not rest:
            if issues is not None:
                issues.append((lineno, MALFORMED, "missing include target"))
            continue
        opener = rest[0]
        if opener not in "\"<":
            if issues is not None:
                issues.append((lineno, COMPUTED, f"`{rest.strip()}`"))
            continue
        closer = '"' if opener == '"' else ">"
        end = rest.find(closer, 1)
        if end <= 0:
            if issues is not None:
                issues.append((lineno, MALFORMED, f"unterminated `{opener}`"))
            continue
        spelled = rest[1:end]
        if not spelled:
            if issues is not None:
                issues.append((lineno, MALFORMED, "empty include target"))
            continue
        directives.append(
            IncludeDirective(spelled, "quoted" if opener == '"' else "angled", lineno)
        )
    return directives


def build_index(files: list[SourceFile]) -> tuple[dict[str, int], dict[str, list[str]]]:
    """Path→id map plus basename→paths map (for suffix-match fallback)."""
    index = {f.path: f.id for f in files}
    by_basename: dict[str, list[str]] = {}
    for f in files:
        by_basename.setdefault(posixpath.basename(f.path), []).append(f.path)
    return index, by_basename


def _join_normalized(base: str, spelled: str) -> str | None:
    joined = posixpath.normpath(posixpath.join(base, spelled)) if base else (
        posixpath.normpath(spelled)
    )
    # A path escaping the scanned tree can never be a scanned file.
    if joined.startswith("../") or joined == "..":
        return None
    return joined


def resolve_include(
    directive: IncludeDirective,
    from_file: SourceFile,
    include_paths: tuple[str, ...] | list[str],
    index: dict[str, int],
    by_basename: dict[str, list[str]] | None = None,
) -> ResolutionResult:
    """Resolve one directive against the scan.

    Quoted includes search the including file's directory first, then each
    include path in order; angled includes search include paths only. When
    the ordered search misses, any scanned file whose path ends with the
    spelled path (on a segment boundary) is accepted: a unique such file
    resolves silently, several yield status ``ambiguous`` with the
    lexicographically smallest chosen.
    """
    spelled = directive.spelled_path.replace("\\", "/")
    search: list[str] = []
    if directive.style == "quoted":
        search.append(posixpath.dirname(from_file.path))
    search.extend(include_paths)
    for base in search:
        candidate = _join_normalized(base, spelled)
        if candidate is not None and candidate in index:
            return ResolutionResult(index[candidate], "resolved")

    if by_basename is None:
        by_basename = {}
        for path in index:
            by_basename.setdefault(posixpath.basename(path), []).append(path)
    suffix = "/" + spelled.lstrip("./")
    matches = [
        p
        for p in by_basename.get(posixpath.basename(spelled), ())
        if p == spelled or p.endswith(suffix)
    ]
    if not matches:
        return ResolutionResult(directive.spelled_path, "external")
    if len(matches) == 1:
        return ResolutionResult(index[matches[0]], "resolved")
    return ResolutionResult(index[min(matches)], "ambiguous")


def _parse_one(root: str, f: SourceFile) -> tuple[SourceFile, list, list]:
    issues: list[tuple[int, str, str]] = []
    try:
        with open(posixpath.join(root, f.path), encoding="utf-8", errors="replace") as fh:
            content = fh.read()
    except OSError as err:
        return f, [], [(0, UNREADABLE, err.strerror or str(err))]
    return f, parse_includes(content, issues), issues


def build_file_graph(
    root: str,
    files: list[SourceFile],
    include_paths: tuple[str, ...] | list[str] = (),
    workers: int = 1,
    diagnostics: list[str] | None = None,
) -> FileGraph:
    """Parse and resolve every file, producing the deduplicated edge set.

    Output is deterministic for a given tree regardless of ``workers``:
    per-file parses are independent and the merge walks files in id order.
    """
    index, by_basename = build_index(files)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parsed = list(pool.map(lambda f: _parse_one(root, f), files))
    else:
        parsed = [_parse_one(root, f) for f in files]

    edges: set[tuple[int, int]] = set()
    external: dict[str, int] = {}
    for f, directives, issues in parsed:
        for lineno, code, message in issues:
            if diagnostics is not None:
                diagnostics.append(f"{f.path}:{lineno}: {code} {message}")
        for d in directives:
            result = resolve_include(d, f, include_paths, index, by_basename)
            if result.status == "external":
                external[result.target] = external.get(result.target, 0) + 1
                continue
            if result.status == "ambiguous" and diagnostics is not None:
                chosen = files[result.target].path
                diagnostics.append(
                    f"{f.path}:{d.line}: {AMBIGUOUS} `{d.spelled_path}` -> {chosen}"
                )
            if result.target != f.id:
                edges.add((f.id, result.target))

    return FileGraph(
        nodes=tuple(files),
        edges=tuple(sorted(edges)),
        external_refs=dict(sorted(external.items())),
    )
