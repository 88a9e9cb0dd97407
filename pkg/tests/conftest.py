from pathlib import Path

import pytest

from incomplete_open.solids import builtin_solid, load_solid_file
from incomplete_open.symmetry import close_group

DATA = Path(__file__).parent / "data"


def pytest_addoption(parser):
    parser.addoption("--run-large", action="store_true", help="run the full 2**30 sweeps")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-large"):
        return
    skip = pytest.mark.skip(reason="needs --run-large")
    for item in items:
        if "large" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def prism():
    return load_solid_file(DATA / "triangular_prism.json")


@pytest.fixture(scope="session")
def groups():
    return {name: close_group(builtin_solid(name)) for name in
            ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")}


ACCEPTANCE: list[str] = []


@pytest.fixture
def criterion():
    """Record one acceptance line; the test still asserts on its own."""

    def record(label: str, ok: bool, detail: str = "") -> bool:
        ACCEPTANCE.append(f"[{'PASS' if ok else 'FAIL'}] {label}" + (f" -- {detail}" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
