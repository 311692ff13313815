import csv
from importlib import resources

import pytest


def load_golden_sporadic() -> list[tuple[int, ...]]:
    text = resources.files("wcidp").joinpath("data/sporadic_catalog.csv").read_text()
    reader = csv.DictReader(text.splitlines())
    rows = [
        tuple(int(row[k]) for k in ("a0", "a1", "a2", "a3", "a4", "d1", "d2"))
        for row in reader
    ]
    return sorted(rows)


@pytest.fixture(scope="session")
def golden_sporadic():
    return load_golden_sporadic()
