"""Smoke test for the equimult_py extension module.

Build the module first, then run this script:

    cargo build --release -p equimult-py
    cp target/release/libequimult_py.so python/equimult_py.so
    python3 python/smoke_test.py
"""

import json
import os
import shutil
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
ROOT = os.path.dirname(HERE)

if not os.path.exists(os.path.join(HERE, "equimult_py.so")):
    built = os.path.join(ROOT, "target", "release", "libequimult_py.so")
    if os.path.exists(built):
        shutil.copy(built, os.path.join(HERE, "equimult_py.so"))

sys.path.insert(0, HERE)

import equimult_py as eq  # noqa: E402


def main():
    assert eq.partitions(4) == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]

    assert eq.num_standard_tableaux([2, 1]) == 2
    assert sum(eq.num_standard_tableaux(p) for p in eq.partitions(4)) == 10
    assert len(eq.standard_tableaux([2, 2])) == 2

    # sign character on a transposition
    assert eq.character([1, 1, 1], [2, 1]) == -1

    # one nilpotent Jordan block of size 3
    x = [[0, 1, 0], [0, 0, 1], [0, 0, 0]]
    assert eq.jordan_type(x) == [3]
    assert eq.lattice_type(x) == [3]

    comps = eq.components([2, 1])
    assert len(comps) == 2
    for tableau, multidegree, mult in comps:
        assert len(tableau) == 2
        assert multidegree
        assert mult

    verdict, perm, diag, transposed = eq.conjecture([2, 1])
    assert verdict == "PASS", verdict
    assert sorted(perm) == list(range(len(perm)))
    assert not transposed

    assert eq.relations_hold("cotangent", 3, 3)
    assert eq.relations_hold("grothendieck", 3, 3)
    assert eq.convolution_identity_holds("cotangent", 3, 1)
    assert eq.convolution_identity_holds("grothendieck", 3, 2)

    report = json.loads(eq.verify_all(2, seed=7))
    assert report["all_pass"] is True
    assert {r["check"] for r in report["records"]} >= {"conjecture", "lattice"}

    print("smoke test passed")


if __name__ == "__main__":
    main()
