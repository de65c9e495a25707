import os

import pytest

ACCEPTANCE_LINES = []


def pytest_addoption(parser):
    parser.addoption("--long", action="store_true", default=False, help="run long sweeps (ell = 11 Chebotarev)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long") or os.environ.get("QR_LONG") == "1":
        return
    skip = pytest.mark.skip(reason="long sweep; pass --long to run")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion."""

    def record(label, passed, detail=""):
        ACCEPTANCE_LINES.append(f"{'PASS' if passed else 'FAIL'}  {label}  {detail}".rstrip())
        return passed

    return record
