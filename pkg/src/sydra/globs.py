"""Path glob matching with `/`-separated semantics.

Patterns match whole tree-relative paths (never partial prefixes) and
support three wildcards:

    ``?``   any single character except ``/``
    ``*``   zero or more characters within one path segment
    ``**``  a whole-segment wildcard spanning zero or more segments

``**`` is only special when it forms an entire segment; ``a**b`` degrades
to ``a*b``. A trailing ``/**`` requires at least one further segment, so
``core/**`` matches ``core/io/file.h`` but not ``core`` itself.
"""
from __future__ import annotations

import re
from functools import lru_cache

# Zero or more complete segments, each ending in '/'.
_ANY_SEGMENTS = r"(?:[^/]+/)*"


def translate(pattern: str) -> str:
    """Translate ``pattern`` into an anchored regular-expression string."""
    segments = pattern.split("/")
    out: list[str] = []
    for idx, segment in enumerate(segments):
        last = idx == len(segments) - 1
        if segment == "**":
            # The construct carries its own separator, so nothing is
            # appended between it and the next segment.
            out.append(_ANY_SEGMENTS + r"[^/]+" if last else _ANY_SEGMENTS)
            continue
        piece = []
        for ch in segment:
            if ch == "*":
                piece.append(r"[^/]*")
            elif ch == "?":
                piece.append(r"[^/]")
            else:
                piece.append(re.escape(ch))
        out.append("".join(piece) + ("" if last else "/"))
    return "^" + "".join(out) + "$"


@lru_cache(maxsize=None)
def compile_glob(pattern: str) -> re.Pattern[str]:
    return re.compile(translate(pattern))


def match(pattern: str, path: str) -> bool:
    """True when ``path`` (tree-relative, `/`-separated) matches ``pattern``."""
    return compile_glob(pattern).match(path) is not None


def literal_prefix_len(pattern: str) -> int:
    """Length of the leading run of non-wildcard characters.

    Used as the specificity measure when several rules match one path:
    a longer literal prefix pins down a deeper location in the tree.
    """
    for i, ch in enumerate(pattern):
        if ch in "*?":
            return i
    return len(pattern)
