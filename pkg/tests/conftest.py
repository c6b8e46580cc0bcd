from __future__ import annotations

import pytest

from blockforge.catalog import load_catalog_group, load_catalog_normal
from blockforge.frobenius import build_embedding

_CRITERIA: dict[int, tuple[str, bool]] = {}


def record_criterion(number: int, label: str, ok: bool) -> None:
    _CRITERIA[number] = (label, ok)
    print(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {label}")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        label, ok = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {label}")


@pytest.fixture(scope="session")
def group():
    return load_catalog_group


@pytest.fixture(scope="session")
def embedding():
    def make(g, n):
        return build_embedding(load_catalog_group(g), load_catalog_normal(g, n))
    return make
