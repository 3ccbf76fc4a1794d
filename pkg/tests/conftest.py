from __future__ import annotations

from pathlib import Path

import pytest

from flexsys.textio import parse_system

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def load(name: str):
    return parse_system((DATA / f"{name}.flex").read_text(encoding="utf-8"))


@pytest.fixture
def reference_system():
    return load("reference")


@pytest.fixture
def inconsistent_system():
    return load("inconsistent")


@pytest.fixture
def near_singular():
    return load("near_singular")


@pytest.fixture
def near_singular_perturbed():
    return load("near_singular_perturbed")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
