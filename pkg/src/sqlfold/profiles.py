"""Engine profiles: declarative capability descriptions of an engine under test.

A profile is a JSON file describing capability flags, the engine's null-safe
equality token, expected-error patterns, and how to ask for query plans and
expression types.  One embedded engine profile ships ("sqlite"); others can be
pointed at with a file path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path


@dataclass(frozen=True)
class EngineCapabilities:
    strict_binary_typing: bool
    supports_any_all: bool
    null_safe_equality_syntax: str
    requires_boolean_predicates: bool
    plan_explain_prefix: str


@dataclass(frozen=True)
class EngineProfile:
    name: str
    capabilities: EngineCapabilities
    dbapi_module: str
    # Regex fragments matched (case-insensitively) against engine error
    # messages; a match classifies the error as expected rather than a bug.
    expected_errors: tuple[str, ...]
    # "SELECT typeof(({expr}))" style templates used by the type probe.
    type_probe: str
    type_probe_from: str
    # Render folded scalars as CAST(lit AS t).  Off for SQLite: its literals
    # already carry exact storage types, and a CAST wrapper would add column
    # affinity the original expression did not have.
    cast_folded_constants: bool = False
    # Value lists render inline "(1, 2)" when true, else as a UNION chain.
    inline_value_lists: bool = True
    # Scalar functions the expression generator may draw from, with result
    # behavior encoded generator-side.  Non-deterministic functions are listed
    # separately and must never be generated.
    function_denylist: tuple[str, ...] = ()

    def __post_init__(self):
        token = self.capabilities.null_safe_equality_syntax
        if not token or not token.strip():
            raise ValueError(f"profile {self.name!r}: null-safe equality token must be configured")
        if self.capabilities.strict_binary_typing and not self.type_probe:
            raise ValueError(f"profile {self.name!r}: strict typing requires a type probe")


def _from_dict(data: dict) -> EngineProfile:
    caps = EngineCapabilities(**data["capabilities"])
    return EngineProfile(
        name=data["name"],
        capabilities=caps,
        dbapi_module=data.get("dbapi_module", "sqlite3"),
        expected_errors=tuple(data.get("expected_errors", ())),
        type_probe=data.get("type_probe", ""),
        type_probe_from=data.get("type_probe_from", ""),
        cast_folded_constants=data.get("cast_folded_constants", False),
        inline_value_lists=data.get("inline_value_lists", True),
        function_denylist=tuple(data.get("function_denylist", ())),
    )


def load_profile(name_or_path: str) -> EngineProfile:
    """Load a profile by builtin name or from a JSON file path."""
    path = Path(name_or_path)
    if path.suffix == ".json" and path.exists():
        data = json.loads(path.read_text())
        return _from_dict(data)
    ref = resources.files("sqlfold").joinpath(f"profiles/{name_or_path}.json")
    try:
        data = json.loads(ref.read_text())
    except FileNotFoundError:
        raise ValueError(f"unknown engine profile: {name_or_path!r}") from None
    return _from_dict(data)
