"""Closed-form forcibly tree / unicyclic / bicyclic classifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .enumeration import DEFAULT_LIMIT, ORACLES, ForcibleCheck
from .sequence import DegreeSequence, EdgeClass, SequenceLike, as_sequence, class_by_edge_count, is_graphic

__all__ = [
    "CLASS_OF",
    "CrossCheck",
    "ForciblyVerdict",
    "classify",
    "classify_forcibly_bicyclic",
    "classify_forcibly_tree",
    "classify_forcibly_unicyclic",
    "cross_check",
    "matching_families",
]


@dataclass(frozen=True)
class ForciblyVerdict:
    decision: bool
    family: Optional[str] = None
    params: dict = field(default_factory=dict)
    reason: Optional[str] = None

    def as_record(self) -> dict:
        return {"decision": self.decision, "family": self.family, "params": dict(self.params), "reason": self.reason}


def _seq(*parts) -> tuple[int, ...]:
    """``_seq((4, 1), (2, 6))`` -> ``(4, 2, 2, 2, 2, 2, 2)``; counts may be 0."""
    out: list[int] = []
    for d, c in parts:
        if c < 0:
            return ()
        out.extend([d] * c)
    return tuple(out)


def _literal(*d: int) -> DegreeSequence:
    return DegreeSequence(d)


# (family, matcher) pairs; a matcher returns params on a match, else None.
Matcher = Callable[[tuple[int, ...], int], Optional[dict]]


def _tree_star(d, n):
    if n >= 1 and d == _seq((n - 1, 1), (1, n - 1)):
        return {"n": n}
    return None


def _tree_double_star(d, n):
    if n >= 4 and all(x == 1 for x in d[2:]) and d[1] >= 2 and d[0] + d[1] == n:
        return {"a": d[0], "b": d[1], "n": n}
    return None


_U1 = {_literal(2, 2, 2, 2, 2).degrees, _literal(3, 2, 2, 2, 2, 1).degrees}


def _u1(d, n):
    return {"n": n} if d in _U1 else None


def _u2(d, n):
    if n >= 4 and d == _seq((n - 2, 1), (2, 3), (1, n - 4)):
        return {"n": n}
    return None


def _u3(d, n):
    if n >= 3 and all(x == 1 for x in d[3:]) and d[2] >= 2 and d[0] + d[1] + d[2] == n + 3:
        return {"r": d[0], "s": d[1], "t": d[2], "n": n}
    return None


_B1 = {
    s.degrees
    for s in (
        _literal(3, 3, 2, 2, 2, 2),
        _literal(3, 3, 3, 2, 2, 1),
        _literal(3, 3, 3, 2, 2, 2, 1),
        _literal(4, 2, 2, 2, 2, 2, 2),
        _literal(4, 3, 2, 2, 2, 2, 1),
        _literal(5, 2, 2, 2, 2, 2, 2, 1),
    )
}


def _b1(d, n):
    return {"n": n} if d in _B1 else None


def _b2(d, n):
    if n >= 5 and d == _seq((n - 1, 1), (2, 4), (1, n - 5)):
        return {"n": n}
    return None


def _b3(d, n):
    if n >= 6 and d == _seq((n - 2, 1), (2, 5), (1, n - 6)):
        return {"n": n}
    return None


def _b4(d, n):
    if n >= 5 and d == _seq((n - 2, 1), (3, 1), (2, 3), (1, n - 5)):
        return {"n": n}
    return None


def _b5(d, n):
    if (
        n >= 4
        and d[3] == 2
        and all(x == 1 for x in d[4:])
        and d[1] >= 3
        and d[2] >= 2
        and d[0] + d[1] + d[2] == n + 4
    ):
        return {"r": d[0], "s": d[1], "t": d[2], "n": n}
    return None


FAMILIES: dict[str, list[tuple[str, Matcher]]] = {
    "tree": [("T-star", _tree_star), ("T-double-star", _tree_double_star)],
    "unicyclic": [("U1", _u1), ("U2", _u2), ("U3", _u3)],
    "bicyclic": [("B1", _b1), ("B2", _b2), ("B3", _b3), ("B4", _b4), ("B5", _b5)],
}

_MIN_N = {"tree": 1, "unicyclic": 3, "bicyclic": 4}
_SUM = {"tree": -2, "unicyclic": 0, "bicyclic": 2}


def matching_families(D: SequenceLike, cls: str) -> list[tuple[str, dict]]:
    """Every clause of ``cls`` matched by ``D`` (pattern only, no graphicality)."""
    d = as_sequence(D).degrees
    out = []
    for name, match in FAMILIES[cls]:
        params = match(d, len(d))
        if params is not None:
            out.append((name, params))
    return out


def _classify(D: SequenceLike, cls: str) -> ForciblyVerdict:
    D = as_sequence(D)
    if not is_graphic(D):
        return ForciblyVerdict(False, reason="not graphic")
    if D.sum != 2 * D.n + _SUM[cls]:
        return ForciblyVerdict(False, reason="sum mismatch")
    if D.n < _MIN_N[cls]:
        return ForciblyVerdict(False, reason="too small")
    hits = matching_families(D, cls)
    if not hits:
        return ForciblyVerdict(False, reason="no family matched")
    name, params = hits[0]
    assert D.sum == 2 * D.n + _SUM[cls]
    return ForciblyVerdict(True, name, params)


def classify_forcibly_tree(D: SequenceLike) -> ForciblyVerdict:
    """Stars ``(n-1, 1^(n-1))`` and double-stars ``(a, b, 1^(n-2))``, ``a+b = n``."""
    return _classify(D, "tree")


def classify_forcibly_unicyclic(D: SequenceLike) -> ForciblyVerdict:
    return _classify(D, "unicyclic")


def classify_forcibly_bicyclic(D: SequenceLike) -> ForciblyVerdict:
    return _classify(D, "bicyclic")


CLASSIFIERS = {
    "tree": classify_forcibly_tree,
    "unicyclic": classify_forcibly_unicyclic,
    "bicyclic": classify_forcibly_bicyclic,
}

CLASS_OF = {EdgeClass.TREE: "tree", EdgeClass.UNICYCLIC: "unicyclic", EdgeClass.BICYCLIC: "bicyclic"}


def classify(D: SequenceLike, cls: str = "auto") -> tuple[Optional[str], ForciblyVerdict]:
    """Dispatch on ``cls``; ``auto`` picks the class from the degree sum."""
    D = as_sequence(D)
    if cls == "auto":
        picked = CLASS_OF.get(class_by_edge_count(D))
        if picked is None:
            reason = "not graphic" if not is_graphic(D) else "sum mismatch"
            return None, ForciblyVerdict(False, reason=reason)
        cls = picked
    return cls, CLASSIFIERS[cls](D)


@dataclass(frozen=True)
class CrossCheck:
    sequence: DegreeSequence
    cls: Optional[str]
    verdict: Optional[ForciblyVerdict]
    oracle: Optional[ForcibleCheck]

    @property
    def agree(self) -> bool:
        if self.cls is None:
            return True
        return self.verdict.decision == self.oracle.holds

    def as_record(self) -> dict:
        from .sequence import render_sequence

        rec = {
            "sequence": render_sequence(self.sequence),
            "class": self.cls,
            "agree": self.agree,
        }
        if self.cls is not None:
            rec["classifier"] = self.verdict.as_record()
            rec["oracle"] = {
                "status": self.oracle.status,
                "reason": self.oracle.reason,
                "counterexample": None if self.oracle.counterexample is None else [list(e) for e in self.oracle.counterexample.edges],
            }
        return rec


def cross_check(D: SequenceLike, cls: Optional[str] = None, limit: int = DEFAULT_LIMIT) -> CrossCheck:
    """Closed form vs. enumeration oracle for the class picked by the degree sum
    (or ``cls`` when given). Sequences of no class trivially agree."""
    D = as_sequence(D)
    if cls is None:
        cls = CLASS_OF.get(class_by_edge_count(D))
    if cls is None:
        return CrossCheck(D, None, None, None)
    return CrossCheck(D, cls, CLASSIFIERS[cls](D), ORACLES[cls](D, limit))
