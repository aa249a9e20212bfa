"""API mapping files: one deprecated signature, its replacement, and the guard.

Mapping file format (UTF-8, ``key: value`` per line, ``#`` comments)::

    deprecated: android.widget.TimePicker#getCurrentMinute()
    replacement: android.widget.TimePicker#getMinute()
    guard-symbol: android.os.Build.VERSION_CODES.M
    guard-level: 23

A signature may end in ``:ReturnType``; normalization uses it to type the
return temporary when the call site gives no better hint.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

_SIG_RE = re.compile(
    r"""^\s*
    (?:(?P<recv>[\w$.<>\[\], ?]+?)\s*\#\s*)?
    (?P<name>[A-Za-z_$][\w$]*)\s*
    \((?P<params>.*)\)\s*
    (?::\s*(?P<ret>\S.*?))?\s*$""",
    re.VERBOSE,
)

_KEYS = ("deprecated", "replacement", "guard-symbol", "guard-level")


class MappingError(ValueError):
    pass


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside of <>, (), [] nesting."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "<([":
            depth += 1
        elif ch in ">)]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    tail = "".join(cur).strip()
    if tail or parts:
        parts.append(tail)
    return parts


def simple_name(qualified: str) -> str:
    return qualified.split("<", 1)[0].rsplit(".", 1)[-1].strip()


@dataclass(frozen=True)
class ApiSignature:
    method: str
    params: tuple[str, ...] = ()
    receiver: str = ""
    returns: str = ""

    @property
    def arity(self) -> int:
        return len(self.params)

    @property
    def receiver_simple(self) -> str:
        return simple_name(self.receiver) if self.receiver else ""

    @classmethod
    def parse(cls, text: str) -> "ApiSignature":
        m = _SIG_RE.match(text)
        if not m:
            raise MappingError(f"malformed signature: {text!r}")
        params = tuple(p for p in split_top_level(m.group("params")) if p)
        if any(not p for p in split_top_level(m.group("params"))) and params:
            raise MappingError(f"empty parameter type in {text!r}")
        return cls(
            method=m.group("name"),
            params=params,
            receiver=(m.group("recv") or "").strip(),
            returns=(m.group("ret") or "").strip(),
        )

    def __str__(self) -> str:
        head = f"{self.receiver}#" if self.receiver else ""
        tail = f":{self.returns}" if self.returns else ""
        return f"{head}{self.method}({','.join(self.params)}){tail}"


@dataclass(frozen=True)
class ApiMapping:
    deprecated: ApiSignature
    replacement: ApiSignature
    guard_symbol: str
    guard_level: int

    def __post_init__(self):
        if self.guard_level < 1:
            raise MappingError(f"guard-level must be >= 1, got {self.guard_level}")

    @property
    def guard_simple(self) -> str:
        """Guard symbol as written in code: ``Build.VERSION_CODES.M``."""
        parts = self.guard_symbol.split(".")
        if "Build" in parts:
            return ".".join(parts[parts.index("Build"):])
        return self.guard_symbol

    def to_text(self) -> str:
        return (
            f"deprecated: {self.deprecated}\n"
            f"replacement: {self.replacement}\n"
            f"guard-symbol: {self.guard_symbol}\n"
            f"guard-level: {self.guard_level}\n"
        )


def parse_mapping(text: str) -> ApiMapping:
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if not sep or key not in _KEYS:
            raise MappingError(f"line {lineno}: expected one of {', '.join(_KEYS)}")
        if key in values:
            raise MappingError(f"line {lineno}: duplicate key {key!r} (mappings are one-to-one)")
        values[key] = value.strip()
    missing = [k for k in _KEYS if k not in values]
    if missing:
        raise MappingError(f"missing keys: {', '.join(missing)}")
    try:
        level = int(values["guard-level"])
    except ValueError:
        raise MappingError(f"guard-level is not an integer: {values['guard-level']!r}") from None
    return ApiMapping(
        deprecated=ApiSignature.parse(values["deprecated"]),
        replacement=ApiSignature.parse(values["replacement"]),
        guard_symbol=values["guard-symbol"],
        guard_level=level,
    )


def load_mapping(path) -> ApiMapping:
    return parse_mapping(Path(path).read_text(encoding="utf-8"))
