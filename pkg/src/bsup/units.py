"""Incremental detection of candidate function units in accumulated generation text.

Detection is a plausibility filter, not a grammar: it finds spans that are
delimited like a function (indentation blocks for Python-style text, balanced
braces for Java-style text) and leaves real validation to the well-formedness
checker.

Invariants:
    - detect_complete_units is a pure function of (text, language);
    - a unit reported complete for text T keeps the same span for every
      extension of T (monotone completeness);
    - canonical_text is always the exact slice of the fence-stripped text;
    - unit identity is byte equality of canonical_text, nothing else.
"""

from __future__ import annotations

import bisect
import re
from dataclasses import dataclass, field
from enum import Enum


class ObjectLanguage(Enum):
    """Which delimiting convention the generated code follows."""

    PYTHON_LIKE = "python"
    JAVA_LIKE = "java"

    @classmethod
    def from_wire(cls, name: str) -> "ObjectLanguage":
        for lang in cls:
            if lang.value == name:
                return lang
        raise ValueError(f"unknown object language {name!r} (expected 'python' or 'java')")


@dataclass(frozen=True, eq=False)
class CheckingUnit:
    """A candidate function span. Equality and hashing are by canonical_text bytes.

    A discarded unit that is a proper prefix of a longer unit is therefore a
    distinct unit; char_span offsets refer to the fence-stripped text.
    """

    language: ObjectLanguage
    char_span: tuple[int, int]
    signature_text: str
    body_text: str
    canonical_text: str
    name: str
    preamble_refs: tuple[tuple[int, int], ...] = ()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CheckingUnit):
            return NotImplemented
        return self.canonical_text == other.canonical_text

    def __hash__(self) -> int:
        return hash(self.canonical_text)


@dataclass(frozen=True)
class OpenUnit:
    """Marker for a unit whose end has not been seen yet.

    `start` and `signature_end` are offsets into the fence-stripped text.
    """

    start: int
    signature_end: int


@dataclass(frozen=True)
class StrippedText:
    """Fence-stripped view of the accumulated text with an offset map back to it."""

    raw: str
    text: str
    # (stripped_start, raw_start, length) per kept segment, ordered
    segments: tuple[tuple[int, int, int], ...] = field(repr=False)

    def to_raw(self, offset: int) -> int:
        """Map an offset in the stripped text to the original text."""
        if not self.segments:
            return 0
        starts = [s[0] for s in self.segments]
        i = bisect.bisect_right(starts, offset) - 1
        i = max(i, 0)
        s_start, r_start, length = self.segments[i]
        return r_start + min(offset - s_start, length)


_FENCE = re.compile(r"^\s*```")


def strip_fences(raw: str) -> StrippedText:
    """Remove markdown code-fence lines, keeping an offset map to the raw text."""
    out: list[str] = []
    segments: list[tuple[int, int, int]] = []
    pos = 0
    stripped_pos = 0
    for line in raw.splitlines(keepends=True):
        if not _FENCE.match(line):
            out.append(line)
            segments.append((stripped_pos, pos, len(line)))
            stripped_pos += len(line)
        pos += len(line)
    return StrippedText(raw=raw, text="".join(out), segments=tuple(segments))


# --- PythonLike ------------------------------------------------------------

_PY_SIG = re.compile(
    r"^(?:async[ \t]+)?def[ \t]+([A-Za-z_]\w*)[ \t]*\(.*\)[ \t]*(?:->[^:]*)?:[ \t]*(?:#.*)?$"
)
_PY_DECORATOR = re.compile(r"^@\w")
_PY_IMPORT = re.compile(r"^(?:import[ \t]+\S|from[ \t]+\S+[ \t]+import[ \t]+\S)")


def _py_line_kind(line: str) -> str:
    body = line.rstrip("\n")
    if not body.strip():
        return "blank"
    if body.lstrip().startswith("#"):
        return "comment"
    if body[0] in " \t":
        return "indented"
    return "toplevel"


def _scan_python(text: str) -> tuple[list[CheckingUnit], OpenUnit | None]:
    lines = text.splitlines(keepends=True)
    offsets: list[int] = []
    pos = 0
    for line in lines:
        offsets.append(pos)
        pos += len(line)

    units: list[CheckingUnit] = []
    open_unit: OpenUnit | None = None
    i = 0
    n = len(lines)
    while i < n:
        line = lines[i]
        kind = _py_line_kind(line)
        if kind != "toplevel":
            i += 1
            continue
        stripped_line = line.rstrip("\n")
        start_line = i
        # decorators attach to the def that follows them
        if _PY_DECORATOR.match(stripped_line):
            j = i
            while j < n and _PY_DECORATOR.match(lines[j].rstrip("\n")):
                j += 1
            if j < n and _PY_SIG.match(lines[j].rstrip("\n")):
                i = j
                line = lines[i]
                stripped_line = line.rstrip("\n")
            else:
                i += 1
                continue
        if not _PY_SIG.match(stripped_line):
            i += 1
            continue
        name = _PY_SIG.match(stripped_line).group(1)  # type: ignore[union-attr]
        sig_start = offsets[start_line]
        sig_end = offsets[i] + len(lines[i])
        # body: blank, comment-only, or indented lines; a top-level code line ends it
        j = i + 1
        end_line = None
        while j < n:
            k = _py_line_kind(lines[j])
            if k == "toplevel":
                end_line = j
                break
            j += 1
        if end_line is None:
            open_unit = OpenUnit(start=sig_start, signature_end=sig_end)
            break
        raw_span = text[sig_start : offsets[end_line]]
        unit = _make_unit(
            ObjectLanguage.PYTHON_LIKE,
            text,
            sig_start,
            sig_start + len(raw_span.rstrip()),
            signature_end=sig_end,
            name=name,
        )
        if unit is not None:
            units.append(unit)
        i = end_line
    return units, open_unit


def _make_unit(
    language: ObjectLanguage,
    text: str,
    start: int,
    end: int,
    *,
    signature_end: int,
    name: str,
) -> CheckingUnit | None:
    if end <= start:
        return None
    canonical = text[start:end]
    sig_end = min(signature_end, end)
    return CheckingUnit(
        language=language,
        char_span=(start, end),
        signature_text=text[start:sig_end].rstrip("\n"),
        body_text=text[sig_end:end],
        canonical_text=canonical,
        name=name,
    )


# --- JavaLike ---------------------------------------------------------------

_JAVA_MODIFIERS = (
    "public",
    "private",
    "protected",
    "static",
    "final",
    "abstract",
    "synchronized",
    "native",
    "strictfp",
    "default",
)
_JAVA_RESERVED = frozenset(
    {
        "if",
        "else",
        "while",
        "for",
        "switch",
        "return",
        "new",
        "do",
        "try",
        "catch",
        "finally",
        "case",
        "class",
        "interface",
        "enum",
        "assert",
        "break",
        "continue",
        "instanceof",
        "this",
        "super",
        "throw",
        "throws",
        "package",
        "import",
    }
)

_JAVA_SIG = re.compile(
    r"(?:(?:" + "|".join(_JAVA_MODIFIERS) + r")\s+)*"
    r"(?:<[^<>]{0,120}>\s*)?"
    r"((?:[A-Za-z_$][\w$]*\s*\.\s*)*[A-Za-z_$][\w$]*)"
    r"(?:<[^<>(){};]{0,120}>)?"
    r"(?:\s*\[\s*\])*"
    r"\s+([A-Za-z_$][\w$]*)"
    r"\s*\(([^()]*)\)"
    r"(?:\s*throws\s+[\w$.\s,]+?)?"
    r"\s*\{"
)

_JAVA_IMPORT = re.compile(r"^(?:import\s[^;]+;|package\s[^;]+;)\s*$")


def _blank_strings_and_comments(text: str) -> str:
    """Replace string/char literal and comment contents with spaces, keeping newlines.

    Keeps the text length identical so offsets carry over.
    """
    out = list(text)
    i = 0
    n = len(text)
    state = "code"
    while i < n:
        c = text[i]
        if state == "code":
            if c == "/" and i + 1 < n and text[i + 1] == "/":
                state = "line"
                out[i] = out[i + 1] = " "
                i += 2
                continue
            if c == "/" and i + 1 < n and text[i + 1] == "*":
                state = "block"
                out[i] = out[i + 1] = " "
                i += 2
                continue
            if c == '"':
                state = "str"
                out[i] = " "
            elif c == "'":
                state = "char"
                out[i] = " "
            i += 1
        elif state == "line":
            if c == "\n":
                state = "code"
            else:
                out[i] = " "
            i += 1
        elif state == "block":
            if c == "*" and i + 1 < n and text[i + 1] == "/":
                out[i] = out[i + 1] = " "
                state = "code"
                i += 2
                continue
            if c != "\n":
                out[i] = " "
            i += 1
        else:  # str or char
            if c == "\\" and i + 1 < n:
                out[i] = " "
                if text[i + 1] != "\n":
                    out[i + 1] = " "
                i += 2
                continue
            if (state == "str" and c == '"') or (state == "char" and c == "'"):
                out[i] = " "
                state = "code"
            elif c == "\n":
                # string literals do not span lines; recover
                state = "code"
            else:
                out[i] = " "
            i += 1
    return "".join(out)


def _scan_java(text: str) -> tuple[list[CheckingUnit], OpenUnit | None]:
    sanitized = _blank_strings_and_comments(text)
    units: list[CheckingUnit] = []
    open_unit: OpenUnit | None = None
    pos = 0
    n = len(sanitized)
    while pos < n:
        m = _JAVA_SIG.search(sanitized, pos)
        if m is None:
            break
        ret_type = m.group(1).split(".")[-1].strip()
        name = m.group(2)
        if ret_type in _JAVA_RESERVED or name in _JAVA_RESERVED or ret_type in _JAVA_MODIFIERS:
            pos = m.start() + 1
            continue
        brace = m.end() - 1  # the '{'
        depth = 1
        i = brace + 1
        while i < n and depth > 0:
            c = sanitized[i]
            if c == "{":
                depth += 1
            elif c == "}":
                depth -= 1
            i += 1
        if depth > 0:
            open_unit = OpenUnit(start=m.start(), signature_end=brace + 1)
            break
        end = m.start() + len(text[m.start() : i].rstrip())
        unit = _make_unit(
            ObjectLanguage.JAVA_LIKE,
            text,
            m.start(),
            end,
            signature_end=brace + 1,
            name=name,
        )
        if unit is not None:
            units.append(unit)
        pos = i
    return units, open_unit


# --- public surface ----------------------------------------------------------


def scan_units(stripped_text: str, language: ObjectLanguage) -> tuple[list[CheckingUnit], OpenUnit | None]:
    """Detect units in already fence-stripped text."""
    if language is ObjectLanguage.PYTHON_LIKE:
        units, open_unit = _scan_python(stripped_text)
    else:
        units, open_unit = _scan_java(stripped_text)
    refs = _import_spans(stripped_text, language)
    if refs:
        units = [
            CheckingUnit(
                language=u.language,
                char_span=u.char_span,
                signature_text=u.signature_text,
                body_text=u.body_text,
                canonical_text=u.canonical_text,
                name=u.name,
                preamble_refs=tuple(r for r in refs if r[1] <= u.char_span[0]),
            )
            for u in units
        ]
    return units, open_unit


def detect_complete_units(text: str, language: ObjectLanguage) -> tuple[list[CheckingUnit], OpenUnit | None]:
    """Detect complete units in accumulated text (markdown fences are ignored).

    Returns units in textual order; units completed earlier are reported again
    on every call, deduplication is the caller's concern. Offsets in the result
    refer to the fence-stripped text (see strip_fences).
    """
    return scan_units(strip_fences(text).text, language)


def materialize_open(stripped_text: str, marker: OpenUnit, language: ObjectLanguage) -> CheckingUnit | None:
    """Turn an open-unit marker into a checking-unit snapshot of the text so far.

    The snapshot ends at the last non-whitespace character, so successive
    snapshots of a growing unit are byte-distinct only when real content was
    added.
    """
    end = marker.start + len(stripped_text[marker.start :].rstrip())
    if end <= marker.start:
        return None
    sig = stripped_text[marker.start : marker.signature_end].rstrip("\n")
    if language is ObjectLanguage.PYTHON_LIKE:
        m = _PY_SIG.match(sig.splitlines()[-1] if sig else "")
        name = m.group(1) if m else ""
    else:
        m = _JAVA_SIG.match(_blank_strings_and_comments(stripped_text)[marker.start : marker.signature_end])
        name = m.group(2) if m else ""
    if not name:
        return None
    return _make_unit(language, stripped_text, marker.start, end, signature_end=marker.signature_end, name=name)


def candidate_units(stripped_text: str, language: ObjectLanguage) -> list[CheckingUnit]:
    """All units to evaluate at a trigger point, in textual order.

    PythonLike includes a snapshot of the still-open unit: an indentation
    block only closes when a later top-level line arrives, which a correct
    solution may never produce. JavaLike units close themselves on brace
    balance, so only complete units are candidates.
    """
    complete, open_marker = scan_units(stripped_text, language)
    if language is ObjectLanguage.PYTHON_LIKE and open_marker is not None:
        snap = materialize_open(stripped_text, open_marker, language)
        if snap is not None:
            complete = complete + [snap]
    return complete


def _import_spans(text: str, language: ObjectLanguage) -> list[tuple[int, int]]:
    spans: list[tuple[int, int]] = []
    pos = 0
    pattern = _PY_IMPORT if language is ObjectLanguage.PYTHON_LIKE else _JAVA_IMPORT
    for line in text.splitlines(keepends=True):
        body = line.rstrip("\n")
        if pattern.match(body.strip() if language is ObjectLanguage.JAVA_LIKE else body):
            spans.append((pos, pos + len(body)))
        pos += len(line)
    return spans


def extract_preamble(text: str, language: ObjectLanguage) -> str:
    """Concatenate top-level import (and, for JavaLike, package) statements.

    Statements are deduplicated, order of first occurrence preserved.
    """
    stripped = strip_fences(text).text
    seen: set[str] = set()
    out: list[str] = []
    for start, end in _import_spans(stripped, language):
        stmt = stripped[start:end].strip()
        if stmt not in seen:
            seen.add(stmt)
            out.append(stmt)
    return "\n".join(out)
