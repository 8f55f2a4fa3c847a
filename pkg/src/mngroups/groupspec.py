"""Line-oriented text format for permutation groups.

::

    # comments start with '#'
    group perm degree=3 [name=S3]
    gen (0 1)
    gen (0 1 2)

Shortcuts: ``builtin NAME PARAMS...`` and ``product (SPEC) (SPEC)``.
A ``;`` separates lines, so a whole spec fits on one command line.
Cycle points are 0-indexed unless ``one_indexed=True``.
"""

from __future__ import annotations

import re
from typing import Optional

from .builtins import builtin
from .core import direct_product
from .errors import GroupSpecError, MNError
from .group import PermGroup
from .perm import Permutation

_HEADER = re.compile(r"group\s+perm\s+degree\s*=\s*(\d+)(?:\s+name\s*=\s*(\S+))?\s*$")
_CYCLE = re.compile(r"\(\s*([^()]*?)\s*\)")
_TOKEN = re.compile(r"[^\s,]+")


def _lines(text: str) -> list[tuple[int, int, str]]:
    """(line number, column offset, content) for each non-empty logical line."""
    out = []
    for lineno, raw in enumerate(text.splitlines() or [""], start=1):
        depth = 0
        start = 0
        pieces = []
        for k, ch in enumerate(raw):
            if ch == "#" and depth == 0:
                raw = raw[:k]
                break
        for k, ch in enumerate(raw):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == ";" and depth == 0:
                pieces.append((start, raw[start:k]))
                start = k + 1
        pieces.append((start, raw[start:]))
        for col, piece in pieces:
            stripped = piece.strip()
            if stripped:
                lead = len(piece) - len(piece.lstrip())
                out.append((lineno, col + lead + 1, stripped))
    return out


def parse_cycles(text: str, degree: int, one_indexed: bool = False,
                 line: int = 1, column: int = 1) -> Permutation:
    """Parse ``(a b c)(d e)`` cycle notation; ``()`` is the identity."""
    pos = 0
    cycles = []
    seen: set[int] = set()
    text_len = len(text)
    while pos < text_len:
        if text[pos].isspace():
            pos += 1
            continue
        m = _CYCLE.match(text, pos)
        if not m:
            raise GroupSpecError(f"expected '(' in cycle notation, found {text[pos]!r}", line, column + pos)
        cycle = []
        for tok_match in _TOKEN.finditer(m.group(1)):
            tok = tok_match.group()
            tok_col = column + m.start(1) + tok_match.start()
            if not tok.lstrip("-").isdigit():
                raise GroupSpecError(f"bad point {tok!r}", line, tok_col)
            point = int(tok) - (1 if one_indexed else 0)
            if not 0 <= point < degree:
                raise GroupSpecError(
                    f"point {tok} outside the {'1' if one_indexed else '0'}-indexed range of degree {degree}",
                    line, tok_col,
                )
            if point in seen:
                raise GroupSpecError(f"non-bijective cycle data: point {tok} repeated", line, tok_col)
            seen.add(point)
            cycle.append(point)
        if cycle:
            cycles.append(cycle)
        pos = m.end()
    return Permutation.from_cycles(cycles, degree)


def _split_product_args(rest: str, line: int, column: int) -> list[tuple[int, str]]:
    args = []
    k = 0
    while k < len(rest):
        if rest[k].isspace():
            k += 1
            continue
        if rest[k] != "(":
            raise GroupSpecError("product arguments must be parenthesized specs", line, column + k)
        depth = 0
        for end in range(k, len(rest)):
            if rest[end] == "(":
                depth += 1
            elif rest[end] == ")":
                depth -= 1
                if depth == 0:
                    break
        if depth != 0:
            raise GroupSpecError("unbalanced parentheses", line, column + k)
        args.append((column + k + 1, rest[k + 1:end]))
        k = end + 1
    return args


def parse_group_spec(text: str, one_indexed: bool = False) -> PermGroup:
    lines = _lines(text)
    if not lines:
        raise GroupSpecError("empty group spec", 1, 1)
    lineno, col, first = lines[0]
    keyword = first.split(None, 1)[0]

    if keyword == "builtin":
        if len(lines) > 1:
            raise GroupSpecError("unexpected content after builtin", lines[1][0], lines[1][1])
        parts = first.split()
        if len(parts) < 2:
            raise GroupSpecError("builtin needs a name", lineno, col + len(first))
        name = parts[1]
        try:
            params = [int(x) for x in parts[2:]]
        except ValueError:
            raise GroupSpecError(f"builtin parameters must be integers: {' '.join(parts[2:])}",
                                 lineno, col) from None
        try:
            return builtin(name, *params)
        except MNError as exc:
            raise GroupSpecError(str(exc), lineno, col) from None

    if keyword == "product":
        if len(lines) > 1:
            raise GroupSpecError("unexpected content after product", lines[1][0], lines[1][1])
        rest = first[len("product"):]
        args = _split_product_args(rest, lineno, col + len("product"))
        if len(args) != 2:
            raise GroupSpecError(f"product takes exactly two specs, got {len(args)}", lineno, col)
        groups = []
        for acol, sub in args:
            try:
                groups.append(parse_group_spec(sub, one_indexed))
            except GroupSpecError as exc:
                raise GroupSpecError(exc.message, lineno, acol + exc.column - 1) from None
        return direct_product(groups[0], groups[1])

    m = _HEADER.match(first)
    if not m:
        raise GroupSpecError("expected 'group perm degree=D', 'builtin ...' or 'product ...'", lineno, col)
    degree = int(m.group(1))
    if degree < 1:
        raise GroupSpecError("degree must be positive", lineno, col + m.start(1))
    name: Optional[str] = m.group(2)
    gens = []
    for lineno, col, content in lines[1:]:
        if not content.startswith("gen"):
            raise GroupSpecError(f"expected 'gen', found {content.split()[0]!r}", lineno, col)
        body = content[3:]
        if body and not body[0].isspace() and body[0] != "(":
            raise GroupSpecError(f"expected 'gen', found {content.split()[0]!r}", lineno, col)
        gens.append(parse_cycles(body, degree, one_indexed, lineno, col + 3))
    if not gens:
        raise GroupSpecError("a perm group needs at least one 'gen' line", lineno, col)
    return PermGroup(gens, degree=degree, name=name)


def format_group_spec(G: PermGroup) -> str:
    header = f"group perm degree={G.degree}"
    if G.name and not any(c.isspace() for c in G.name):
        header += f" name={G.name}"
    return "\n".join([header] + [f"gen {g}" for g in G.generators]) + "\n"
