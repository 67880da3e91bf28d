"""Degree sequences: parsing, rendering, graphicality and greedy realization."""

from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Iterator, Union

if TYPE_CHECKING:
    from .graph import Graph

__all__ = [
    "DegreeSequence",
    "EdgeClass",
    "NotGraphicError",
    "SequenceParseError",
    "as_sequence",
    "class_by_edge_count",
    "havel_hakimi_realize",
    "is_graphic",
    "iter_sequences",
    "parse_sequence",
    "render_sequence",
]


class SequenceParseError(ValueError):
    """Raised for malformed sequence text; ``token`` holds the culprit."""

    def __init__(self, token: str, why: str):
        super().__init__(f"bad token {token!r}: {why}")
        self.token = token


class NotGraphicError(ValueError):
    """Raised when a construction is asked to realize a non-graphic sequence."""


@dataclass(frozen=True)
class DegreeSequence:
    """Non-increasing tuple of non-negative degrees.

    Input order is irrelevant; the constructor sorts.
    """

    degrees: tuple[int, ...]

    def __post_init__(self):
        degs = tuple(sorted((int(d) for d in self.degrees), reverse=True))
        if degs and degs[-1] < 0:
            raise ValueError(f"negative degree in {degs}")
        object.__setattr__(self, "degrees", degs)

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def sum(self) -> int:
        return sum(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __getitem__(self, i):
        return self.degrees[i]

    def __str__(self) -> str:
        return render_sequence(self)


SequenceLike = Union[DegreeSequence, Iterable[int], str]


def as_sequence(D: SequenceLike) -> DegreeSequence:
    """Coerce text, an iterable of ints or a DegreeSequence."""
    if isinstance(D, DegreeSequence):
        return D
    if isinstance(D, str):
        return parse_sequence(D)
    return DegreeSequence(tuple(D))


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_sequence(text: str) -> DegreeSequence:
    """Parse ``"4,2^6"``-style text. Braces around exponents and outer
    parentheses are tolerated, so ``(5,2^5,1^{1})`` also parses.
    """
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    degrees: list[int] = []
    for tok in re.split(r"[,\s]+", body):
        if not tok:
            continue
        m = _TOKEN.match(tok.replace("{", "").replace("}", ""))
        if m is None:
            if tok.lstrip().startswith("-"):
                raise SequenceParseError(tok, "negative value")
            raise SequenceParseError(tok, "expected d or d^c")
        count = 1 if m.group(2) is None else int(m.group(2))
        if count == 0:
            raise SequenceParseError(tok, "exponent must be >= 1")
        degrees.extend([int(m.group(1))] * count)
    return DegreeSequence(tuple(degrees))


def render_sequence(D: SequenceLike) -> str:
    """Exponent form, bases decreasing: ``(5,2,2,2,2,2,1)`` -> ``5,2^5,1``."""
    D = as_sequence(D)
    counts = Counter(D.degrees)
    parts = []
    for d in sorted(counts, reverse=True):
        c = counts[d]
        parts.append(str(d) if c == 1 else f"{d}^{c}")
    return ",".join(parts)


def is_graphic(D: SequenceLike) -> bool:
    """Erdős–Gallai test. The empty sequence is graphic."""
    d = as_sequence(D).degrees
    n = len(d)
    if sum(d) % 2:
        return False
    if n and d[0] > n - 1:
        return False
    lhs = 0
    for k in range(1, n + 1):
        lhs += d[k - 1]
        rhs = k * (k - 1) + sum(min(x, k) for x in d[k:])
        if lhs > rhs:
            return False
    return True


def havel_hakimi_realize(D: SequenceLike) -> "Graph":
    """Greedy realization; vertex ``i`` receives degree ``D[i]``.

    The highest residual vertex (lowest index on ties) is joined to the
    next-highest residual vertices, again lowest index first.
    """
    from .graph import Graph

    D = as_sequence(D)
    if not is_graphic(D):
        raise NotGraphicError(f"({render_sequence(D)}) is not graphic")
    res = list(D.degrees)
    n = len(res)
    edges = []
    while True:
        v = max(range(n), key=lambda i: (res[i], -i))
        if res[v] == 0:
            break
        others = sorted((i for i in range(n) if i != v and res[i] > 0), key=lambda i: (-res[i], i))
        k = res[v]
        if len(others) < k:  # pragma: no cover - excluded by Erdős–Gallai
            raise RuntimeError(f"Havel-Hakimi stalled on {D}")
        res[v] = 0
        for u in others[:k]:
            res[u] -= 1
            edges.append((v, u))
    return Graph.from_edges(n, edges)


class EdgeClass(str, enum.Enum):
    TREE = "tree-candidate"
    UNICYCLIC = "unicyclic-candidate"
    BICYCLIC = "bicyclic-candidate"
    OTHER = "other"


def class_by_edge_count(D: SequenceLike) -> EdgeClass:
    D = as_sequence(D)
    n, s = D.n, D.sum
    if n == 0:
        return EdgeClass.OTHER
    if s == 2 * n - 2:
        return EdgeClass.TREE
    if s == 2 * n:
        return EdgeClass.UNICYCLIC
    if s == 2 * n + 2:
        return EdgeClass.BICYCLIC
    return EdgeClass.OTHER


def iter_sequences(n: int, total: int, max_entry: int | None = None) -> Iterator[DegreeSequence]:
    """All non-increasing length-``n`` sequences with the given sum, in
    lexicographically decreasing order. Entries default to at most ``n - 1``.
    """
    if max_entry is None:
        max_entry = max(n - 1, 0)

    def rec(prefix: list[int], left: int, slots: int, cap: int):
        if slots == 0:
            if left == 0:
                yield DegreeSequence(tuple(prefix))
            return
        hi = min(cap, left)
        for d in range(hi, -1, -1):
            if d * slots < left:
                break
            prefix.append(d)
            yield from rec(prefix, left - d, slots - 1, d)
            prefix.pop()

    yield from rec([], total, n, max_entry)
