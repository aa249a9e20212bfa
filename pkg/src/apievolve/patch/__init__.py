"""Update scripts: generation, text format, application and definition copying."""

from .apply import UpdateReport, apply_script
from .definitions import copy_definitions
from .generate import BothBranchesSameApi, NoGuardFound, UnresolvedNewArgument, generate_script
from .mapping import ApiMapping, ApiSignature, load_mapping, parse_mapping
from .script import ScriptSyntaxError, UndeclaredMetavariable, UpdateScript, parse_script, serialize_script
from .template import BindFailure

__all__ = [
    "ApiMapping", "ApiSignature", "BindFailure", "BothBranchesSameApi", "NoGuardFound",
    "ScriptSyntaxError", "UndeclaredMetavariable", "UnresolvedNewArgument", "UpdateReport",
    "UpdateScript", "apply_script", "copy_definitions", "generate_script", "load_mapping",
    "parse_mapping", "parse_script", "serialize_script",
]
