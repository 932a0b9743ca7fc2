"""The 16-subsystem reference taxonomy for runtime game engine architecture.

Every scanned file is assigned exactly one of these tags, or UNK when no
mapping rule matches. UNK is never a rule target; it only marks the absence
of a match.
"""
from __future__ import annotations

from dataclasses import dataclass

UNK = "UNK"


@dataclass(frozen=True)
class SubsystemTag:
    id: str
    name: str
    description: str


_TAXONOMY = (
    SubsystemTag("AUD", "Audio", "Manages audio playback and effects."),
    SubsystemTag(
        "COR",
        "Core",
        "Manages engine initialisation and contains libraries for math, memory allocation, etc.",
    ),
    SubsystemTag(
        "DEB",
        "Profiling & Debugging",
        "Manages performance stats, debugging via in-game menus or console.",
    ),
    SubsystemTag("EDI", "World Editor", "Enables visual game world-building."),
    SubsystemTag(
        "FES",
        "Front End",
        "Manages GUI, menus, heads-up display (HUD), and video playback.",
    ),
    SubsystemTag(
        "GMP",
        "Gameplay Foundations",
        "Manages the game object model, scripting and event/messaging system.",
    ),
    SubsystemTag(
        "HID",
        "Human Interface Devices",
        "Manages game-specific input interfaces, physical I/O devices.",
    ),
    SubsystemTag(
        "LLR",
        "Low-Level Renderer",
        "Manages cameras, textures, shaders, fonts, and general drawing tasks.",
    ),
    SubsystemTag(
        "OMP",
        "Online Multiplayer",
        "Manages match-making and game state replication.",
    ),
    SubsystemTag(
        "PHY",
        "Collision & Physics",
        "Manages forces and constraints, rigid bodies, ray/shape casting.",
    ),
    SubsystemTag(
        "PLA",
        "Platform Independence Layer",
        "Manages platform-specific graphics, file systems, threading, etc.",
    ),
    SubsystemTag(
        "RES",
        "Resources",
        "Manages the loading/caching of game assets, such as 3D models, textures, fonts, etc.",
    ),
    SubsystemTag(
        "SDK",
        "Third-Party SDKs",
        "Enables interfacing with DirectX, OpenGL, Havok, PhysX, STL, etc.",
    ),
    SubsystemTag(
        "SKA",
        "Skeletal Animation",
        "Manages animation state tree, inverse kinematics (IK), and mesh rendering.",
    ),
    SubsystemTag(
        "SGC",
        "Scene Graph/Culling Optimizations",
        "Computes spatial hash, occlusion, and level of detail (LOD).",
    ),
    SubsystemTag(
        "VFX",
        "Visual Effects",
        "Enables light mapping, dynamic shadows, particles, decals, etc.",
    ),
    SubsystemTag(UNK, "Unmapped", "Files not matched by any mapping rule."),
)

SUBSYSTEMS: dict[str, SubsystemTag] = {t.id: t for t in _TAXONOMY}

#: All 17 tag ids in declaration order (the 16 reference subsystems, then UNK).
TAG_IDS: tuple[str, ...] = tuple(t.id for t in _TAXONOMY)

#: The 16 reference subsystem ids, sorted lexicographically (canonical order
#: used by serialization and reports).
CANONICAL_IDS: tuple[str, ...] = tuple(sorted(t.id for t in _TAXONOMY if t.id != UNK))


def is_subsystem_id(tag_id: str) -> bool:
    """True for the 16 reference ids; UNK is not a valid rule target."""
    return tag_id in SUBSYSTEMS and tag_id != UNK
