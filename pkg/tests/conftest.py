from __future__ import annotations

from pathlib import Path

import pytest

from bipolarpaths.formats import load_dyck_pair, load_orientation, load_triple, load_wood

FIXTURES = Path(__file__).parent / "fixtures"

# Words printed in the caption of the running example (type (6, 3)).
E3_CONTOUR = "acbAbAbABaCCcbABacbaCCcbABABaCCcB"
E3_WORDS = ("aAAAaAaaAAa", "bbbBbBbbBBB", "cCCccCCcCCc")
E3_TREE_WORD = "abAbAbABabABababABABaB"
E3_MATCHING_WORD = "acAAAaCCcAacaCCcAAaCCc"
E3_PATHS = ("RRUURRURR", "RRRURUURR", "RRRURURRU")


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text()


@pytest.fixture
def e1():
    return load_orientation(fixture_text("e1.orientation"))


@pytest.fixture
def e2():
    return load_orientation(fixture_text("e2.orientation"))


@pytest.fixture
def e3():
    return load_orientation(fixture_text("e3.orientation"))


@pytest.fixture
def e3_triple():
    return load_triple(fixture_text("e3.triple"))


@pytest.fixture
def wood1():
    return load_wood(fixture_text("wood1.wood"))


@pytest.fixture
def pair3():
    return load_dyck_pair(fixture_text("pair3.dyckpair"))


@pytest.fixture(scope="session")
def orientations5():
    from bipolarpaths.bipolar import enumerate_bipolar

    return enumerate_bipolar(5)


_acceptance: dict[int, tuple[str, str, float]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        status = "PASS" if report.passed else "FAIL"
        _acceptance[number] = (status, title, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        status, title, seconds = _acceptance[number]
        terminalreporter.write_line(f"{status}  criterion {number}: {title}  ({seconds:.2f}s)")
