"""Subsystem-level architecture recovery for C/C++ game engines.

Pipeline: scan a source tree, parse and resolve include directives into a
file graph, tag every file with one of 16 reference subsystems via
declarative glob rules, lift to a weighted subsystem graph with coupling
metrics, and optionally aggregate many engines into an emergent
architecture. Models serialize canonically to `.sydra.json` for the
bundled viewer.
"""
__version__ = "0.1.0"

from .includes import FileGraph, IncludeDirective, ResolutionResult  # noqa: F401
from .mapping import MappingCoverage, MappingRule, RuleSet  # noqa: F401
from .metrics import ArchModel, MetricsReport, SubsystemGraph  # noqa: F401
from .scanning import SourceFile  # noqa: F401
from .taxonomy import SUBSYSTEMS, UNK, SubsystemTag  # noqa: F401
