"""Acceptance criteria, one test each.

Every test records a one-line PASS/FAIL verdict in ``RESULTS``; the
conftest hook prints them at the end of the run. ``python3 -m
tests.test_acceptance`` runs the same checks without pytest.
"""

import random
import time

from forcibly.classifier import (
    FAMILIES,
    classify_forcibly_bicyclic,
    classify_forcibly_tree,
    classify_forcibly_unicyclic,
    cross_check,
)
from forcibly.enumeration import enumerate_nonisomorphic
from forcibly.graph import (
    Graph,
    bicyclic_core,
    degree_sequence,
    girth,
    is_connected,
    make_bowtie,
    make_sandglass,
    make_theta,
    two_core,
)
from forcibly.sequence import DegreeSequence, is_graphic, iter_sequences, parse_sequence
from forcibly.switching import apply_switch, bowtie_normalize, sandglass_to_theta, theta_normalize
from forcibly.witness import WitnessUndecided, disconnected_witness

from .conftest import random_graph
from .test_switching import hang_trees, random_move

RESULTS: dict[int, str] = {}

OFFSET = {"tree": -2, "unicyclic": 0, "bicyclic": 2}
CLASSIFIER = {
    "tree": classify_forcibly_tree,
    "unicyclic": classify_forcibly_unicyclic,
    "bicyclic": classify_forcibly_bicyclic,
}

UNICYCLIC_SMALL = ["2,2,2", "2,2,2,2", "3,2,2,1", "2,2,2,2,2", "3,2,2,2,1", "3,3,2,1,1", "4,2,2,1,1"]
BICYCLIC_SMALL = [
    "3,3,2,2",
    "3,3,2,2,2", "3,3,3,2,1", "4,2,2,2,2", "4,3,2,2,1",
    "3,3,2,2,2,2", "3,3,3,2,2,1", "4,2,2,2,2,2", "4,3,2,2,2,1",
    "4,3,3,2,1,1", "4,4,2,2,1,1", "5,2,2,2,2,1", "5,3,2,2,1,1",
]


def report(k: int, ok: bool, detail: str) -> None:
    line = f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[k] = line
    print(line)
    assert ok, line


def positives(cls: str, lo: int, hi: int) -> list[DegreeSequence]:
    fn = CLASSIFIER[cls]
    return [D for n in range(lo, hi + 1) for D in iter_sequences(n, 2 * n + OFFSET[cls]) if fn(D).decision]


def sweep(cls: str, lo: int, hi: int):
    t0 = time.perf_counter()
    checked = bad = pos = 0
    bad_seqs = []
    for n in range(lo, hi + 1):
        # every non-increasing sequence, graphic or not
        for D in iter_sequences(n, 2 * n + OFFSET[cls]):
            res = cross_check(D, cls)
            checked += 1
            pos += res.verdict.decision
            if not res.agree:
                bad += 1
                bad_seqs.append(str(D))
    return checked, pos, bad, bad_seqs, time.perf_counter() - t0


def _sweep_criterion(k, cls, lo, hi):
    checked, pos, bad, bad_seqs, dt = sweep(cls, lo, hi)
    report(k, bad == 0, f"{cls} n={lo}..{hi}: {checked} sequences, {pos} positive, {bad} discrepancies {bad_seqs[:5]} in {dt:.1f}s")


def test_criterion_1_unicyclic_sweep():
    _sweep_criterion(1, "unicyclic", 3, 9)


def test_criterion_2_bicyclic_sweep():
    _sweep_criterion(2, "bicyclic", 4, 9)


def test_criterion_3_tree_sweep():
    checked, pos, bad, bad_seqs, dt = sweep("tree", 2, 9)
    # positives must be exactly stars and double-stars
    shape_bad = []
    for D in positives("tree", 2, 9):
        d, n = D.degrees, D.n
        star = d == (n - 1,) + (1,) * (n - 1)
        double = n >= 4 and d[0] + d[1] == n and d[1] >= 2 and all(x == 1 for x in d[2:])
        if not (star or double):
            shape_bad.append(str(D))
    ok = bad == 0 and not shape_bad
    report(3, ok, f"tree n=2..9: {checked} sequences, {pos} positive, {bad} discrepancies, {len(shape_bad)} non-star shapes in {dt:.1f}s")


def test_criterion_4_small_goldens():
    from .test_cli import GOLDEN
    import json

    def listed(name):
        lines = (GOLDEN / name).read_text().splitlines()
        return [p for line in lines[:-1] for p in json.loads(line)["positive_sequences"]]

    want_u = [str(parse_sequence(s)) for s in UNICYCLIC_SMALL]
    want_b = [str(parse_sequence(s)) for s in BICYCLIC_SMALL]
    got_u = [str(D) for D in positives("unicyclic", 3, 5)]
    got_b = [str(D) for D in positives("bicyclic", 4, 6)]
    ok = (
        sorted(got_u) == sorted(want_u) == sorted(listed("verify-unicyclic-5.jsonl"))
        and sorted(got_b) == sorted(want_b) == sorted(listed("verify-bicyclic-6.jsonl"))
        and len(want_u) == 7
        and len(want_b) == 13
    )
    report(4, ok, f"unicyclic n<=5: {len(got_u)}/7 listed, bicyclic n<=6: {len(got_b)}/13 listed")


def test_criterion_5_girth_at_most_5():
    viol, graphs_seen = [], 0
    for D in positives("unicyclic", 3, 9):
        for g in enumerate_nonisomorphic(D):
            graphs_seen += 1
            if girth(g) > 5:
                viol.append(str(D))
    report(5, not viol, f"{graphs_seen} non-isomorphic realizations of unicyclic positives n<=9, {len(viol)} with girth > 5")


def _family_members(cls: str, n: int):
    """Candidate sequences for every family of ``cls`` at order ``n``."""
    out = set()
    for r in range(1, n):
        for s in range(1, r + 1):
            for t in range(1, s + 1):
                tail = n - 3
                for k2 in range(0, 5):
                    if tail - k2 < 0:
                        break
                    d = (r, s, t) + (2,) * k2 + (1,) * (tail - k2)
                    d = tuple(sorted(d, reverse=True))
                    if sum(d) == 2 * n + OFFSET[cls]:
                        out.add(d)
    # star-like families: a big entry and a short middle
    for big in range(2, n):
        for k3 in range(0, 2):
            for k2 in range(0, 7):
                k1 = n - 1 - k3 - k2
                if k1 >= 0:
                    d = (big,) + (3,) * k3 + (2,) * k2 + (1,) * k1
                    d = tuple(sorted(d, reverse=True))
                    if sum(d) == 2 * n + OFFSET[cls]:
                        out.add(d)
    return out


def test_criterion_6_entry_bounds():
    def uni_ok(d):
        return len(d) < 6 or (d[5] == 1 and d[3] <= 2)

    excluded = {(4,) + (2,) * 6, (5,) + (2,) * 6 + (1,)}

    def bi_ok(d):
        return len(d) < 7 or d in excluded or (d[6] == 1 and d[3] == 2)

    viol = []
    # symbolic: every family member up to n = 50
    fam_count = 0
    for n in range(3, 51):
        for cls, ok in (("unicyclic", uni_ok), ("bicyclic", bi_ok)):
            for d in _family_members(cls, n):
                if CLASSIFIER[cls](d).decision:
                    fam_count += 1
                    if not ok(d):
                        viol.append((cls, d))
    # the generator must cover every clause somewhere
    covered = {CLASSIFIER[c](d).family for n in range(3, 12) for c in ("unicyclic", "bicyclic") for d in _family_members(c, n)}
    missing = {name for c in ("unicyclic", "bicyclic") for name, _ in FAMILIES[c]} - covered
    # exhaustive up to n = 9
    ex_count = 0
    for cls, ok in (("unicyclic", uni_ok), ("bicyclic", bi_ok)):
        for D in positives(cls, 3, 9):
            ex_count += 1
            if not ok(D.degrees):
                viol.append((cls, D.degrees))
    report(6, not viol and not missing, f"{fam_count} family members n<=50, {ex_count} exhaustive positives n<=9, {len(viol)} violations, uncovered families {sorted(missing)}")


def test_criterion_7_switch_soundness():
    rng = random.Random(20261016)
    done = fails = 0
    while done < 10_000:
        n = rng.randint(4, 12)
        g = random_graph(rng, n, rng.uniform(0.2, 0.7))
        m = random_move(g, rng)
        if m is None:
            continue
        h = apply_switch(g, m)
        back = apply_switch(h, m.inverse())
        if degree_sequence(h) != degree_sequence(g) or back != g:
            fails += 1
        done += 1
    report(7, fails == 0, f"{done} random switches on n<=12, {fails} failures")


def _core(g: Graph):
    keep = sorted(two_core(g))
    idx = {v: i for i, v in enumerate(keep)}
    sub = Graph.from_edges(len(keep), [(idx[u], idx[v]) for u, v in g.edges if u in idx and v in idx])
    return bicyclic_core(sub)


def test_criterion_8_transforms():
    rng = random.Random(8)
    fails, total = [], 0
    t0 = time.perf_counter()
    for decorate in (False, True):
        for r in range(3, 7):
            for s in range(r, 7):
                for t in range(1, 7):
                    g = make_sandglass(r, s, t)
                    g = hang_trees(g, rng, 3) if decorate else g
                    h = sandglass_to_theta(g, bicyclic_core(g))
                    c = _core(h)
                    total += 1
                    if (c.kind, c.params) != ("theta", tuple(sorted((3, r + s - 3, t)))) or not is_connected(h):
                        fails.append(("S", r, s, t))
                g = make_bowtie(r, s)
                g = hang_trees(g, rng, 3) if decorate else g
                c = _core(bowtie_normalize(g, bicyclic_core(g)))
                total += 1
                if (c.kind, c.params) != ("bowtie", (3, r + s - 3)):
                    fails.append(("B", r, s))
        for r in range(1, 7):
            for s in range(max(r, 2), 7):
                for t in range(s, 7):
                    g = make_theta(r, s, t)
                    g = hang_trees(g, rng, 3) if decorate else g
                    c = _core(theta_normalize(g, bicyclic_core(g)))
                    total += 1
                    if (c.kind, c.params) != ("theta", (1, 2, r + s + t - 3)):
                        fails.append(("T", r, s, t))
    report(8, not fails, f"{total} transforms with parameters <= 6, {len(fails)} failures {fails[:5]} in {time.perf_counter() - t0:.1f}s")


def test_criterion_9_witness_completeness():
    undecided, invalid, total = [], [], 0
    methods: dict[str, int] = {}
    for cls in ("tree", "unicyclic", "bicyclic"):
        for n in range(4, 9):
            for D in iter_sequences(n, 2 * n + OFFSET[cls]):
                if not is_graphic(D) or CLASSIFIER[cls](D).decision:
                    continue
                total += 1
                try:
                    w = disconnected_witness(D)
                except WitnessUndecided:
                    undecided.append(str(D))
                    continue
                if w is None or degree_sequence(w.graph) != D or is_connected(w.graph):
                    invalid.append(str(D))
                    continue
                methods[w.method] = methods.get(w.method, 0) + 1
    ok = not undecided and not invalid
    report(9, ok, f"{total} rejected sequences n=4..8, {len(undecided)} undecided, {len(invalid)} invalid; methods {dict(sorted(methods.items()))}")


if __name__ == "__main__":  # pragma: no cover
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
