import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from schmidtcheck import corpus as C  # noqa: E402
from schmidtcheck.lattice import all_subgroups  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def full_corpus():
    entries = C.build_corpus()
    for e in entries:
        e.lattice  # noqa: B018 - warm the cached lattice once per session
    return entries


@pytest.fixture(scope="session")
def small_corpus(full_corpus):
    return [e for e in full_corpus if e.group.order <= 30]


@pytest.fixture(scope="session")
def s3():
    return C.symmetric(3)


@pytest.fixture(scope="session")
def q8():
    return C.quaternion()


@pytest.fixture(scope="session")
def q8_acted():
    g, act = C.quaternion_with_order3_action()
    return g, act, all_subgroups(g)


@pytest.fixture(scope="session")
def c4():
    return C.cyclic(4)


@pytest.fixture(scope="session")
def sl23():
    g = C.sl23()
    return g, all_subgroups(g)


@pytest.fixture(scope="session")
def c5_sl23():
    g = C.direct_product(C.cyclic(5), C.sl23())
    return g, all_subgroups(g)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
