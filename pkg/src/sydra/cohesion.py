"""Folder-structure cohesion: nesting depth, concentration, dispersion.

Flags the structural smells of large engine trees — a few folders holding
most files, subsystems scattered across many top-level directories, and
the repeated-name nesting pattern (a folder whose child carries the same
name).
"""
from __future__ import annotations

import posixpath
from dataclasses import dataclass

from . import globs
from .scanning import SourceFile

#: Folder path used for the tree root in stats and dispersion buckets.
ROOT = "."


@dataclass(frozen=True)
class FolderStats:
    folder: str
    direct_files: int
    recursive_files: int
    depth: int  # segments from root; the root itself is 0
    children: int  # immediate subfolder count


@dataclass(frozen=True)
class NestingFlag:
    parent: str  # folder path
    child: str  # nested folder path whose name repeats the parent's
    files: tuple[str, ...]  # files under the child


@dataclass(frozen=True)
class CohesionReport:
    total_files: int
    total_folders: int  # non-root folders
    max_depth: int
    concentration: float  # |covering set| / total_folders
    covering: tuple[str, ...]  # the greedy ≥50% covering set
    dispersion: dict[str, int]  # tag → distinct top-level hosts
    flags: tuple[NestingFlag, ...]


def _ancestors(path: str) -> list[str]:
    """All folders containing ``path``, nearest first, excluding the root."""
    out = []
    parent = posixpath.dirname(path)
    while parent:
        out.append(parent)
        parent = posixpath.dirname(parent)
    return out


def folder_stats(files: list[SourceFile]) -> list[FolderStats]:
    """One record per distinct folder (the root included), sorted by path."""
    direct: dict[str, int] = {ROOT: 0}
    recursive: dict[str, int] = {ROOT: 0}
    children: dict[str, set[str]] = {ROOT: set()}
    for f in files:
        chain = _ancestors(f.path)
        direct[chain[0] if chain else ROOT] = (
            direct.get(chain[0] if chain else ROOT, 0) + 1
        )
        recursive[ROOT] = recursive.get(ROOT, 0) + 1
        for folder in chain:
            recursive[folder] = recursive.get(folder, 0) + 1
            parent = posixpath.dirname(folder) or ROOT
            children.setdefault(parent, set()).add(folder)
            children.setdefault(folder, set())

    stats = []
    for folder in sorted(set(direct) | set(recursive) | set(children)):
        stats.append(
            FolderStats(
                folder=folder,
                direct_files=direct.get(folder, 0),
                recursive_files=recursive.get(folder, 0),
                depth=0 if folder == ROOT else folder.count("/") + 1,
                children=len(children.get(folder, ())),
            )
        )
    return stats


def _top_level(path: str) -> str:
    return path.split("/", 1)[0] if "/" in path else ROOT


def concentration_covering(files: list[SourceFile]) -> tuple[tuple[str, ...], float]:
    """Greedy ≥50% covering over disjoint top-level subtrees.

    Returns (chosen folders, |chosen| / non-root folder count). A tree
    with no subfolders degenerates to the root covering everything:
    concentration 1.0, keeping the value in (0, 1].
    """
    stats = folder_stats(files)
    total_files = sum(s.direct_files for s in stats)
    non_root = [s for s in stats if s.folder != ROOT]
    if not non_root or total_files == 0:
        return (ROOT,), 1.0
    top = sorted(
        (s for s in non_root if "/" not in s.folder),
        key=lambda s: (-s.recursive_files, s.folder),
    )
    root_direct = next(s.direct_files for s in stats if s.folder == ROOT)
    chosen: list[str] = []
    covered = 0
    buckets = [(s.folder, s.recursive_files) for s in top]
    if root_direct:
        buckets.append((ROOT, root_direct))
        buckets.sort(key=lambda item: (-item[1], item[0]))
    for folder, count in buckets:
        if covered * 2 >= total_files:
            break
        chosen.append(folder)
        covered += count
    return tuple(chosen), len(chosen) / len(non_root)


def repeated_name_flags(files: list[SourceFile]) -> tuple[NestingFlag, ...]:
    """Folders whose immediate child folder repeats their own name."""
    folders: set[str] = set()
    for f in files:
        folders.update(_ancestors(f.path))
    flags = []
    for folder in sorted(folders):
        parent = posixpath.dirname(folder)
        if parent and posixpath.basename(parent) == posixpath.basename(folder):
            under = tuple(
                f.path for f in files if f.path.startswith(folder + "/")
            )
            flags.append(NestingFlag(parent=parent, child=folder, files=under))
    return tuple(flags)


def cohesion_report(
    files: list[SourceFile],
    tags: dict[int, str],
    dispersion_excludes: tuple[str, ...] = (),
) -> CohesionReport:
    """Assemble the full report; dispersion buckets by first path segment.

    ``dispersion_excludes`` removes matching paths from dispersion
    counting only (e.g. per-platform or test subtrees that every
    subsystem legitimately touches).
    """
    stats = folder_stats(files)
    covering, concentration = concentration_covering(files)
    dispersion: dict[str, set[str]] = {}
    for f in files:
        if any(globs.match(pat, f.path) for pat in dispersion_excludes):
            continue
        dispersion.setdefault(tags[f.id], set()).add(_top_level(f.path))
    return CohesionReport(
        total_files=len(files),
        total_folders=sum(1 for s in stats if s.folder != ROOT),
        max_depth=max((s.depth for s in stats), default=0),
        concentration=concentration,
        covering=covering,
        dispersion={tag: len(hosts) for tag, hosts in sorted(dispersion.items())},
        flags=repeated_name_flags(files),
    )
