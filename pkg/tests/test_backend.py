import json
import os
import subprocess
import sys

from forcibly import _accel
from forcibly.enumeration import count_labeled, find_disconnected

SEQS = [(2, 2, 2, 2, 2, 2), (4, 3, 2, 2, 2, 1), (3, 3, 3, 3, 2, 2), (4, 2, 2, 2, 2, 1, 1), (3, 3, 1, 1, 1, 1), (2,) * 8]

PROBE = """
import json, sys
from forcibly import _accel
from forcibly.enumeration import count_labeled, find_disconnected
seqs = [tuple(s) for s in json.loads(sys.argv[1])]
print(json.dumps({
    "backend": _accel.BACKEND,
    "counts": [count_labeled(s) for s in seqs],
    "disconnected": [None if (g := find_disconnected(s)) is None else [list(e) for e in g.edges] for s in seqs],
}))
"""


def run_backend(**env):
    out = subprocess.run(
        [sys.executable, "-c", PROBE, json.dumps(SEQS)],
        env={**os.environ, **env}, capture_output=True, text=True, check=True,
    )
    return json.loads(out.stdout)


def test_python_backend_matches():
    py = run_backend(FORCIBLY_BACKEND="python")
    assert py["backend"] == "python"
    assert py["counts"] == [count_labeled(s) for s in SEQS]
    here = [find_disconnected(s) for s in SEQS]
    assert py["disconnected"] == [None if g is None else [list(e) for e in g.edges] for g in here]


def test_disable_flag():
    assert run_backend(FORCIBLY_DISABLE_NUMBA="1", FORCIBLY_BACKEND="numba")["backend"] == "python"


def test_default_backend_is_numba():
    assert _accel.BACKEND in ("numba", "python")
    if os.environ.get("FORCIBLY_BACKEND", "numba") == "numba" and not os.environ.get("FORCIBLY_DISABLE_NUMBA"):
        assert _accel.BACKEND == "numba"
