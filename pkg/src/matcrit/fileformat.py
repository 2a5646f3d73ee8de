"""Plain-text matroid files.

::

    MATROID U_2_3
    ELEMENTS 3
    RANK 2
    BASES
    0 1
    0 2
    1 2
    END

Lines starting with ``#`` are comments.  Inside ``BASES`` each line lists
one basis as strictly ascending element indices; an empty line is the empty
basis of a rank-0 matroid.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matroid import Matroid, MatroidError, SizeLimitError, to_mask


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SemanticError(ValueError):
    """Well-formed input that does not describe a matroid."""


@dataclass(frozen=True)
class MatroidFile:
    name: str
    matroid: Matroid


def serialize(M: Matroid, name: str = "M") -> str:
    if not name or any(ch.isspace() for ch in name):
        raise ValueError(f"matroid name {name!r} must be non-empty without whitespace")
    lines = [f"MATROID {name}", f"ELEMENTS {M.n}", f"RANK {M.r}", "BASES"]
    lines += [" ".join(map(str, b)) for b in M.sorted_bases()]
    lines.append("END")
    return "\n".join(lines) + "\n"


def _keyword(lines, pos: int, word: str) -> tuple[str, int]:
    """Return the argument text of header ``word`` on line ``pos``."""
    if pos >= len(lines):
        raise ParseError(f"expected {word}, found end of input", pos + 1)
    number, text = lines[pos]
    head, _, rest = text.partition(" ")
    if head != word:
        raise ParseError(f"expected {word}, found {head!r}", number)
    return rest.strip(), number


def _count(text: str, number: int, word: str) -> int:
    column = len(word) + 2
    if not text.isdigit():
        raise ParseError(f"{word} needs a non-negative integer, got {text!r}", number, column)
    return int(text)


def parse(text: str) -> MatroidFile:
    raw = text.split("\n")
    if raw and raw[-1] == "":
        raw.pop()
    # keep empty lines only where they can denote the empty basis
    lines = [(i + 1, line.rstrip("\r")) for i, line in enumerate(raw)
             if not line.startswith("#")]
    header = [item for item in lines if item[1].strip()]
    name, number = _keyword(header, 0, "MATROID")
    if not name or len(name.split()) != 1:
        raise ParseError("MATROID needs a single-word name", number, 9)
    n = _count(*_keyword(header, 1, "ELEMENTS"), "ELEMENTS")
    r = _count(*_keyword(header, 2, "RANK"), "RANK")
    rest, bases_line = _keyword(header, 3, "BASES")
    if rest:
        raise ParseError("unexpected text after BASES", bases_line, 7)
    start = next(i for i, item in enumerate(lines) if item[0] == bases_line) + 1

    bases: list[int] = []
    seen: dict[int, int] = {}
    end_line = None
    for number, line in lines[start:]:
        if line.strip() == "END":
            end_line = number
            break
        if not line.strip() and r > 0:
            raise ParseError("empty basis line in a matroid of positive rank", number)
        elements, column = [], 1
        for token in line.split(" "):
            if token:
                if not token.isdigit():
                    raise ParseError(f"bad element {token!r}", number, column)
                e = int(token)
                if e >= n:
                    raise ParseError(f"element {e} outside 0..{n - 1}", number, column)
                if elements and e <= elements[-1]:
                    raise ParseError("elements must be strictly ascending", number, column)
                elements.append(e)
            column += len(token) + 1
        if len(elements) != r:
            raise ParseError(f"basis has {len(elements)} elements, rank is {r}", number)
        mask = to_mask(elements)
        if mask in seen:
            raise ParseError(f"duplicate basis (first on line {seen[mask]})", number)
        seen[mask] = number
        bases.append(mask)
    if end_line is None:
        raise ParseError("missing END", len(raw) + 1)
    trailing = [number for number, line in lines if number > end_line and line.strip()]
    if trailing:
        raise ParseError("text after END", trailing[0])
    if not bases:
        raise ParseError("a matroid needs at least one basis", end_line)
    try:
        return MatroidFile(name, Matroid(n, bases))
    except (MatroidError, SizeLimitError) as exc:
        raise SemanticError(str(exc)) from exc


def read(path) -> MatroidFile:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def write(path, M: Matroid, name: str = "M") -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize(M, name))
