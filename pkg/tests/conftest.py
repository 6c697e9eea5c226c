import numpy as np
import pytest

from lukfre.corpus import benchmark_entries, worked_example
from lukfre.instance import Instance, generate_random


def random_suite(count=200):
    """Seeded consistent instances, m, n <= 6; odd seeds use a 0.1 grid to force ties."""
    out = []
    for seed in range(count):
        rng = np.random.default_rng(10_000 + seed)
        m, n = (int(v) for v in rng.integers(1, 7, size=2))
        grid = 10 if seed % 2 else None
        out.append(generate_random(m, n, seed, consistent=True, grid=grid, name=f"rand-{seed}"))
    return out


@pytest.fixture(scope="session")
def worked():
    return worked_example().instance


@pytest.fixture(scope="session")
def worked_ref():
    return worked_example().reference


@pytest.fixture(scope="session")
def corpus():
    return benchmark_entries()


@pytest.fixture(scope="session")
def random_instances():
    return random_suite()


@pytest.fixture
def tiny_inconsistent():
    return Instance(c=[1.0], A=[[0.5]], b=[0.9])


# -- acceptance reporting -----------------------------------------------------

_criteria: dict[str, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, title): acceptance criterion covered by the test")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    label, title = marker.args
    rec = _criteria.setdefault(label, {"title": title, "ok": True, "notes": []})
    rec["ok"] &= call.excinfo is None
    rec["notes"].extend(v for k, v in item.user_properties if k == "note")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: (len(s), s)):
        rec = _criteria[label]
        tr.write_line(f"criterion {label:<3} {'PASS' if rec['ok'] else 'FAIL'}  {rec['title']}")
        for note in rec["notes"]:
            for line in note.splitlines():
                tr.write_line(f"    {line}")
