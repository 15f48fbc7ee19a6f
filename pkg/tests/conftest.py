import json
from pathlib import Path

import pytest

from curve_spectra.constructions import fixture_dir
from curve_spectra.ribbon import decode, from_beta_sequence, regions_from_faces

# acceptance lines collected by tests/test_acceptance.py
ACCEPTANCE_LINES = []


def load_fixture(name):
    return decode((fixture_dir() / f"{name}.json").read_bytes())


def five_punctured(punctures=(2, 1, 1, 1)):
    base = from_beta_sequence([0, 1], [1, -1])
    return base.with_regions(regions_from_faces(base, list(punctures)))


@pytest.fixture
def f05():
    return load_fixture("F05")


@pytest.fixture
def fixtures_path():
    return fixture_dir()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
