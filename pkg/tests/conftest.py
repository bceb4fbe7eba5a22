import pytest

from toroidal_fullerene.lattice import Lattice

ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def all_hnf_lattices(max_index: int) -> list[Lattice]:
    """Every sublattice of Z^2 with index <= max_index, once each."""
    out = []
    for h11 in range(1, max_index + 1):
        for h22 in range(1, max_index // h11 + 1):
            for h21 in range(h22):
                out.append(Lattice.from_hnf(h11, h21, h22))
    return out


@pytest.fixture(scope="session")
def small_lattices():
    return all_hnf_lattices(20)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {k}: {detail}")
