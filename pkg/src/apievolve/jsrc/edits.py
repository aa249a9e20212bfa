"""Minimal text edits over a parsed unit."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import OverlapError
from .nodes import Span


@dataclass(frozen=True, order=True)
class Edit:
    start: int
    end: int
    text: str

    @property
    def span(self) -> Span:
        return Span(self.start, self.end)


EditLike = Union[Edit, tuple]


def _coerce(item: EditLike) -> Edit:
    if isinstance(item, Edit):
        return item
    span, text = item
    return Edit(span[0], span[1], text)


def _conflict(a: Edit, b: Edit) -> bool:
    """True when ``a`` (earlier) and ``b`` cannot both apply unambiguously."""
    if a.start == a.end == b.start == b.end:
        return True  # two inserts at one offset: order would be arbitrary
    if b.start == b.end:
        return a.start < b.start < a.end
    if a.start == a.end:
        return b.start < a.start < b.end
    return max(a.start, b.start) < min(a.end, b.end)


class EditSet:
    """Sorted, non-overlapping edits. Submission order does not matter."""

    def __init__(self, edits: Iterable[EditLike] = ()):
        self._edits: list[Edit] = []
        for e in edits:
            self.add(e)

    def add(self, edit: EditLike) -> None:
        edit = _coerce(edit)
        if not 0 <= edit.start <= edit.end:
            raise ValueError(f"bad span {edit.start}..{edit.end}")
        for other in self._edits:
            first, second = sorted((other, edit))
            if _conflict(first, second):
                raise OverlapError(
                    f"edit {edit.start}..{edit.end} overlaps {other.start}..{other.end}"
                )
        self._edits.append(edit)
        self._edits.sort()

    def replace(self, start: int, end: int, text: str) -> None:
        self.add(Edit(start, end, text))

    def insert(self, offset: int, text: str) -> None:
        self.add(Edit(offset, offset, text))

    def __iter__(self):
        return iter(self._edits)

    def __len__(self) -> int:
        return len(self._edits)

    def __bool__(self) -> bool:
        return bool(self._edits)


def render_edits(unit, edits: Iterable[EditLike] = ()) -> str:
    """Apply ``edits`` to the unit's text (or a plain string)."""
    text = unit if isinstance(unit, str) else unit.text
    if not isinstance(edits, EditSet):
        edits = EditSet(edits)
    out: list[str] = []
    pos = 0
    for e in edits:
        if e.end > len(text):
            raise ValueError(f"edit {e.start}..{e.end} past end of text")
        out.append(text[pos:e.start])
        out.append(e.text)
        pos = e.end
    out.append(text[pos:])
    return "".join(out)
