import json

import pytest

from npure.rings import build_ring, ring_to_json, FiniteRing
from npure.suite import corpus_rings


@pytest.fixture(scope="session")
def z12():
    return build_ring("zmod:12")


@pytest.fixture(scope="session")
def corpus16():
    return corpus_rings(16)


@pytest.fixture(scope="session")
def corpus32():
    return corpus_rings(32)


def square_zero_plane() -> FiniteRing:
    """F2[x,y]/(x,y)^2: basis 1, x, y; index = c0 + 2 c1 + 4 c2.

    Its maximal ideal (x, y) needs two generators.
    """
    def vec(i):
        return [(i >> k) & 1 for k in range(3)]

    def idx(v):
        return v[0] + 2 * v[1] + 4 * v[2]

    add = [[idx([(a + b) % 2 for a, b in zip(vec(i), vec(j))]) for j in range(8)] for i in range(8)]
    mul = []
    for i in range(8):
        row = []
        for j in range(8):
            u, v = vec(i), vec(j)
            row.append(idx([u[0] * v[0] % 2, (u[0] * v[1] + u[1] * v[0]) % 2,
                            (u[0] * v[2] + u[2] * v[0]) % 2]))
        mul.append(row)
    return FiniteRing(add, mul, 0, 1)


@pytest.fixture(scope="session")
def plane_table(tmp_path_factory):
    path = tmp_path_factory.mktemp("rings") / "plane.json"
    path.write_text(json.dumps(ring_to_json(square_zero_plane())))
    return str(path)


@pytest.fixture(scope="session")
def plane(plane_table):
    return build_ring(f"table:{plane_table}")


@pytest.fixture(scope="session")
def corpus64():
    return corpus_rings(64)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for k in sorted(lines):
            terminalreporter.write_line(lines[k])
