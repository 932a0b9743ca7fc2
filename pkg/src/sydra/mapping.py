"""Declarative path-to-subsystem mapping.

A rules file is the reproducible record of the clustering decision: one
`SUBSYSTEM_ID GLOB` per line. Every file gets exactly one tag; UNK marks
the absence of a match and is never a valid rule target.
"""
from __future__ import annotations

import hashlib
import logging
import posixpath
from dataclasses import dataclass, field

from . import globs
from .scanning import SourceFile
from .taxonomy import UNK, is_subsystem_id

log = logging.getLogger("sydra.mapping")


@dataclass(frozen=True)
class MappingRule:
    subsystem: str
    pattern: str
    ordinal: int
    literal_prefix_len: int


@dataclass(frozen=True)
class RuleSet:
    rules: tuple[MappingRule, ...]
    source_digest: str


@dataclass(frozen=True)
class MappingCoverage:
    total: int
    mapped: int
    per_subsystem: dict[str, int]  # non-UNK tags only; counts sum to `mapped`
    unmapped_paths: tuple[str, ...]

    @property
    def detected(self) -> int:
        return sum(1 for count in self.per_subsystem.values() if count > 0)


class RuleError(ValueError):
    """Fatal rules-file problem, message carries the offending line number."""


def parse_rules(text: str, warnings: list[str] | None = None) -> RuleSet:
    """Parse a rules file: `#` comments, blank lines, `ID GLOB` records.

    An unknown subsystem id is fatal. A duplicate identical (id, pattern)
    pair is only a warning; the later occurrence is kept so its ordinal
    reflects the later position.
    """
    seen: dict[tuple[str, str], int] = {}
    records: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(None, 1)
        if len(parts) != 2:
            raise RuleError(f"line {lineno}: expected `SUBSYSTEM_ID GLOB`, got `{line}`")
        subsystem, pattern = parts[0], parts[1].strip().rstrip("/")
        if not is_subsystem_id(subsystem):
            raise RuleError(f"line {lineno}: unknown subsystem id `{subsystem}`")
        key = (subsystem, pattern)
        if key in seen:
            message = (
                f"line {lineno}: duplicate rule `{subsystem} {pattern}` "
                f"(first at line {seen[key]}); keeping the later occurrence"
            )
            if warnings is not None:
                warnings.append(message)
            log.warning("%s", message)
            records = [r for r in records if r != key]
        seen[key] = lineno
        records.append(key)

    rules = tuple(
        MappingRule(sub, pat, i, globs.literal_prefix_len(pat))
        for i, (sub, pat) in enumerate(records)
    )
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    return RuleSet(rules=rules, source_digest=digest)


def map_path(path: str, rule_set: RuleSet) -> str:
    """Tag for one normalized tree-relative path.

    Among matching rules the longest literal prefix wins (deepest pin in
    the tree); equal prefixes fall to the later ordinal so appended
    overrides take effect. No match yields UNK.
    """
    best: MappingRule | None = None
    for rule in rule_set.rules:
        if not globs.match(rule.pattern, path):
            continue
        if (
            best is None
            or rule.literal_prefix_len > best.literal_prefix_len
            or (
                rule.literal_prefix_len == best.literal_prefix_len
                and rule.ordinal > best.ordinal
            )
        ):
            best = rule
    return best.subsystem if best else UNK


def map_files(files: list[SourceFile], rule_set: RuleSet) -> dict[int, str]:
    return {f.id: map_path(f.path, rule_set) for f in files}


#: Keyword → subsystem defaults for the rule suggester. Matching is a
#: case-insensitive substring test on individual path segments.
DEFAULT_KEYWORDS: dict[str, str] = {
    "audio": "AUD",
    "sound": "AUD",
    "core": "COR",
    "render": "LLR",
    "shader": "LLR",
    "camera": "LLR",
    "physics": "PHY",
    "collision": "PHY",
    "editor": "EDI",
    "net": "OMP",
    "multiplayer": "OMP",
    "anim": "SKA",
    "skeleton": "SKA",
    "particle": "VFX",
    "input": "HID",
    "joystick": "HID",
    "platform": "PLA",
    "os": "PLA",
    "resource": "RES",
    "asset": "RES",
    "loader": "RES",
    "thirdparty": "SDK",
    "extern": "SDK",
    "gui": "FES",
    "menu": "FES",
    "hud": "FES",
    "scene": "SGC",
    "cull": "SGC",
    "octree": "SGC",
    "script": "GMP",
    "gameobject": "GMP",
    "profil": "DEB",
    "debug": "DEB",
    "log": "DEB",
}


def parse_keyword_table(text: str) -> dict[str, str]:
    """Parse a `keyword ID` table (same comment/blank conventions as rules)."""
    table: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise RuleError(f"line {lineno}: expected `keyword SUBSYSTEM_ID`")
        keyword, subsystem = parts[0].lower(), parts[1]
        if not is_subsystem_id(subsystem):
            raise RuleError(f"line {lineno}: unknown subsystem id `{subsystem}`")
        table[keyword] = subsystem
    return table


def suggest_rules(
    files: list[SourceFile], keyword_table: dict[str, str] | None = None
) -> list[MappingRule]:
    """Advisory `ID dir/**` suggestions for directories with telling names.

    A directory qualifies when its own name contains a keyword
    (case-insensitive). Several keywords hitting one directory are settled
    by longest keyword, then table order. Suggestions are derived from
    directories that actually hold scanned files, so a suggested pattern
    always matches at least one file. They are never auto-applied.
    """
    table = DEFAULT_KEYWORDS if keyword_table is None else keyword_table
    directories: set[str] = set()
    for f in files:
        parent = posixpath.dirname(f.path)
        while parent:
            directories.add(parent)
            parent = posixpath.dirname(parent)

    suggestions: list[MappingRule] = []
    order = {kw: i for i, kw in enumerate(table)}
    for directory in sorted(directories):
        segment = posixpath.basename(directory).lower()
        hits = [kw for kw in table if kw in segment]
        if not hits:
            continue
        hits.sort(key=lambda kw: (-len(kw), order[kw]))
        pattern = f"{directory}/**"
        suggestions.append(
            MappingRule(
                table[hits[0]],
                pattern,
                len(suggestions),
                globs.literal_prefix_len(pattern),
            )
        )
    return suggestions


def mapping_coverage(files: list[SourceFile], rule_set: RuleSet) -> MappingCoverage:
    per_subsystem: dict[str, int] = {}
    unmapped: list[str] = []
    for f in files:
        tag = map_path(f.path, rule_set)
        if tag == UNK:
            unmapped.append(f.path)
        else:
            per_subsystem[tag] = per_subsystem.get(tag, 0) + 1
    return MappingCoverage(
        total=len(files),
        mapped=len(files) - len(unmapped),
        per_subsystem=dict(sorted(per_subsystem.items())),
        unmapped_paths=tuple(unmapped),
    )
