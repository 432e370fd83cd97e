"""On-disk cache of recoupling tables.

The file is a JSON object mapping ``"n"`` to the ``(n+1) x (n+1)`` matrix of
``sixj(n, i, j)``, each entry stored as numerator and denominator term
lists.  Loading recomputes one randomly chosen entry per table and rejects
the file if it disagrees.
"""
from __future__ import annotations

import json
import os
import random
from pathlib import Path

from .serialize import rational_from_obj, rational_to_obj
from .websym import SixJTable, _sixj_value, install_sixj_table, sixj_table

ENV_VAR = "SL3JONES_CACHE"
DEFAULT_NAME = "sl3jones-6j.json"


class CacheError(ValueError):
    pass


def default_path() -> Path:
    return Path(os.environ.get(ENV_VAR) or DEFAULT_NAME)


def save_tables(path: Path | str, n_max: int) -> Path:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    data = {}
    for n in range(n_max + 1):
        table = sixj_table(n)
        data[str(n)] = [[rational_to_obj(x) for x in row] for row in table.matrix()]
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(json.dumps(data, separators=(",", ":")))
    tmp.replace(path)
    return path


def load_tables(path: Path | str, *, rng: random.Random | None = None,
                install: bool = True) -> dict[int, SixJTable]:
    """Read, validate and (by default) install every table in ``path``."""
    rng = rng or random.Random()
    try:
        raw = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CacheError(f"cannot read cache {path}: {exc}") from None
    if not isinstance(raw, dict):
        raise CacheError("cache root must be an object keyed by color")
    tables = {}
    for key, matrix in raw.items():
        try:
            n = int(key)
            if len(matrix) != n + 1 or any(len(row) != n + 1 for row in matrix):
                raise CacheError(f"table {n} is not {n + 1}x{n + 1}")
            entries = {(i, j): rational_from_obj(matrix[i][j])
                       for i in range(n + 1) for j in range(n + 1)}
        except CacheError:
            raise
        except (TypeError, ValueError, KeyError) as exc:
            raise CacheError(f"malformed table {key!r}: {exc}") from None
        i, j = rng.randrange(n + 1), rng.randrange(n + 1)
        if entries[i, j] != _sixj_value(n, i, j):
            raise CacheError(f"cache entry ({n}; {i}, {j}) disagrees with a fresh computation")
        tables[n] = SixJTable(n, entries)
    if install:
        for table in tables.values():
            install_sixj_table(table)
    return tables
