#!/usr/bin/env python3
"""Smoke test for the arcanon_py extension module.

Builds the cdylib with cargo, loads it, and exercises the bindings:
recognition, canonical strings under relabeling, isomorphism, the oracle
and the text format round-trip.
"""

import shutil
import subprocess
import sys
import sysconfig
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]


def build_module(tmp: Path) -> Path:
    subprocess.run(
        ["cargo", "build", "-p", "arcanon-py"], cwd=ROOT, check=True
    )
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    built = ROOT / "target" / "debug" / "libarcanon_py.so"
    target = tmp / f"arcanon_py{suffix}"
    shutil.copyfile(built, target)
    return target


def main() -> None:
    tmp = Path(tempfile.mkdtemp(prefix="arcanon-smoke-"))
    build_module(tmp)
    sys.path.insert(0, str(tmp))
    import arcanon_py as ap

    # P4 is a circular-arc graph; its canonical string is relabeling-invariant.
    p4 = ap.Graph(4, [(1, 2), (2, 3), (3, 4)])
    assert p4.recognize()
    base = p4.canonical_string()
    assert base is not None
    relabeled = p4.permuted([3, 1, 4, 2])
    assert relabeled.canonical_string() == base
    assert ap.isomorphic(p4, relabeled)

    # Two disjoint 4-cycles are not a circular-arc graph.
    c4c4 = ap.Graph(
        8,
        [(1, 2), (2, 3), (3, 4), (1, 4), (5, 6), (6, 7), (7, 8), (5, 8)],
    )
    assert not c4c4.recognize()
    assert c4c4.canonical_string() is None
    assert not ap.oracle_is_ca(c4c4)
    try:
        ap.isomorphic(p4, c4c4)
    except ValueError:
        pass
    else:
        raise AssertionError("isomorphic() must reject non-CA inputs")

    # Random CA graphs are recognized, and the text format round-trips.
    g = ap.random_ca_graph(7, seed=42)
    assert g.recognize()
    assert ap.Graph.parse(g.to_text()).edges() == g.edges()

    # Colors refine the canonical form.
    colored = ap.Graph(2, [(1, 2)])
    colored.set_color(1, 3)
    plain = ap.Graph(2, [(1, 2)])
    assert colored.canonical_string() != plain.canonical_string()

    print("smoke test: OK")


if __name__ == "__main__":
    main()
