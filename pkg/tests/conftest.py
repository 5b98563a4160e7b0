import pytest

from pachner import WalkConfig, builtin_complex, random_walk

ACCEPTANCE_RESULTS = {}


def corpus_2d():
    base = {
        "boundary_simplex:3": builtin_complex("boundary_simplex", 3),
        "octahedron": builtin_complex("octahedron"),
        "torus7": builtin_complex("torus7"),
        "rp2_6": builtin_complex("rp2_6"),
        "barycentric_boundary:3": builtin_complex("barycentric_boundary", 3),
    }
    base["walked_sphere"] = random_walk(base["boundary_simplex:3"], WalkConfig(60, 11))[0]
    base["walked_torus"] = random_walk(base["torus7"], WalkConfig(40, 5))[0]
    return base


def corpus_3d():
    base = {
        "boundary_simplex:4": builtin_complex("boundary_simplex", 4),
        "cross_polytope_boundary:4": builtin_complex("cross_polytope_boundary", 4),
    }
    base["walked_3sphere"] = random_walk(base["boundary_simplex:4"], WalkConfig(80, 3))[0]
    return base


@pytest.fixture(scope="session")
def surfaces():
    return corpus_2d()


@pytest.fixture(scope="session")
def threefolds():
    return corpus_3d()


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is not None and call.when == "call":
        ok = call.excinfo is None
        prev = ACCEPTANCE_RESULTS.get(marker.args[0], (True, marker.args[1]))
        ACCEPTANCE_RESULTS[marker.args[0]] = (prev[0] and ok, marker.args[1])


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        ok, title = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {title}")
