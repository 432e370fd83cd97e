from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def table_rows() -> dict[int, str]:
    """Frozen tex rows of the order-150 tail table, keyed by m."""
    rows = {}
    for line in (DATA / "table_psi_order150.txt").read_text().splitlines():
        m, body = line.split("\t")
        rows[int(m)] = body
    return rows
