"""Exhaustive realization enumeration and the brute-force forcibly-P oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from . import _kernels
from .canonical import canonical_code
from .graph import Graph, StructuralClass, structural_class
from .sequence import (
    EdgeClass,
    SequenceLike,
    as_sequence,
    class_by_edge_count,
    havel_hakimi_realize,
    is_graphic,
    render_sequence,
)

DEFAULT_LIMIT = 10
# masks are int64, so the kernels cannot go past this regardless of --limit
HARD_LIMIT = 62


class LimitExceeded(ValueError):
    def __init__(self, n: int, limit: int):
        super().__init__(f"n={n} exceeds the enumeration vertex limit {limit}")
        self.n = n
        self.limit = limit


def _check_limit(n: int, limit: int) -> None:
    if n > min(limit, HARD_LIMIT):
        raise LimitExceeded(n, min(limit, HARD_LIMIT))


class RealizationStream:
    """Iterable over realizations of ``sequence``; vertex ``i`` has degree
    ``sequence[i]``. ``count`` tracks how many graphs have been emitted.

    ``mode`` is ``"labeled"`` (every labeled graph once) or
    ``"nonisomorphic"`` (first labeled member of each isomorphism class).
    """

    def __init__(self, D: SequenceLike, mode: str = "labeled", limit: int = DEFAULT_LIMIT, batch: int = 4096):
        if mode not in ("labeled", "nonisomorphic"):
            raise ValueError(f"unknown mode {mode!r}")
        self.sequence = as_sequence(D)
        _check_limit(self.sequence.n, limit)
        self.mode = mode
        self.count = 0
        self._batch = batch

    def __iter__(self) -> Iterator[Graph]:
        if not is_graphic(self.sequence):
            return
        search = _kernels.Search(self.sequence.degrees, _kernels.MODE_ALL, self._batch)
        seen: set[tuple[int, int]] = set()
        while not search.done:
            for row in search.step():
                g = Graph.from_masks(row)
                if self.mode == "nonisomorphic":
                    key = canonical_code(g)
                    if key in seen:
                        continue
                    seen.add(key)
                self.count += 1
                yield g


def enumerate_labeled(D: SequenceLike, limit: int = DEFAULT_LIMIT) -> RealizationStream:
    return RealizationStream(D, "labeled", limit)


def enumerate_nonisomorphic(D: SequenceLike, limit: int = DEFAULT_LIMIT) -> RealizationStream:
    return RealizationStream(D, "nonisomorphic", limit)


def count_labeled(D: SequenceLike, limit: int = DEFAULT_LIMIT) -> int:
    """Number of labeled realizations, counted inside the kernel."""
    D = as_sequence(D)
    _check_limit(D.n, limit)
    if not is_graphic(D):
        return 0
    search = _kernels.Search(D.degrees, _kernels.MODE_COUNT)
    search.step()
    return search.hits


def find_disconnected(D: SequenceLike, limit: int = DEFAULT_LIMIT) -> Optional[Graph]:
    """First disconnected labeled realization in search order, or None."""
    D = as_sequence(D)
    _check_limit(D.n, limit)
    if not is_graphic(D):
        return None
    search = _kernels.Search(D.degrees, _kernels.MODE_DISCONNECTED, batch=1)
    rows = search.step()
    return Graph.from_masks(rows[0]) if len(rows) else None


@dataclass(frozen=True)
class ForcibleCheck:
    """Oracle outcome: ``holds``, ``counterexample`` or ``not-graphic``."""

    status: str
    counterexample: Optional[Graph] = None
    reason: Optional[str] = None

    @property
    def holds(self) -> bool:
        return self.status == "holds"


def check_forcibly(D: SequenceLike, predicate: Callable[[Graph], bool], limit: int = DEFAULT_LIMIT) -> ForcibleCheck:
    """Test ``predicate`` on every non-isomorphic realization.

    ``predicate`` must be isomorphism-invariant. Stops at the first failure.
    """
    D = as_sequence(D)
    _check_limit(D.n, limit)
    if not is_graphic(D):
        return ForcibleCheck("not-graphic", reason="not graphic")
    for g in enumerate_nonisomorphic(D, limit):
        if not predicate(g):
            return ForcibleCheck("counterexample", g)
    return ForcibleCheck("holds")


_TARGETS = {
    StructuralClass.TREE: EdgeClass.TREE,
    StructuralClass.UNICYCLIC: EdgeClass.UNICYCLIC,
    StructuralClass.BICYCLIC: EdgeClass.BICYCLIC,
}


def _oracle(D: SequenceLike, target: StructuralClass, limit: int) -> ForcibleCheck:
    # With the right degree sum every realization has the target edge count,
    # so it has the target class exactly when it is connected. The kernel's
    # disconnected-only mode therefore decides the same question as
    # check_forcibly(D, lambda g: structural_class(g) is target) but without
    # materializing the connected realizations.
    D = as_sequence(D)
    _check_limit(D.n, limit)
    if not is_graphic(D):
        return ForcibleCheck("not-graphic", reason="not graphic")
    if class_by_edge_count(D) is not _TARGETS[target]:
        return ForcibleCheck("counterexample", havel_hakimi_realize(D), reason="sum-mismatch")
    g = find_disconnected(D, limit)
    if g is None:
        return ForcibleCheck("holds")
    if structural_class(g) is target:  # pragma: no cover - kernel invariant
        raise AssertionError(f"kernel returned a connected graph for ({render_sequence(D)})")
    return ForcibleCheck("counterexample", g, reason="disconnected")


def oracle_forcibly_tree(D: SequenceLike, limit: int = DEFAULT_LIMIT) -> ForcibleCheck:
    return _oracle(D, StructuralClass.TREE, limit)


def oracle_forcibly_unicyclic(D: SequenceLike, limit: int = DEFAULT_LIMIT) -> ForcibleCheck:
    return _oracle(D, StructuralClass.UNICYCLIC, limit)


def oracle_forcibly_bicyclic(D: SequenceLike, limit: int = DEFAULT_LIMIT) -> ForcibleCheck:
    return _oracle(D, StructuralClass.BICYCLIC, limit)


ORACLES = {
    "tree": oracle_forcibly_tree,
    "unicyclic": oracle_forcibly_unicyclic,
    "bicyclic": oracle_forcibly_bicyclic,
}
