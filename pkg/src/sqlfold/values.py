"""SQL value typing and comparison primitives.

A value travelling between the harness and the engine is one of: None (SQL
NULL), int, float, str, or bytes.  Comparison here is oracle comparison: NULL
equals NULL (distinct-from semantics), numbers compare by value across the
int/real divide, and reals tolerate a relative epsilon.
"""

from __future__ import annotations

import math

SqlValue = None | int | float | str | bytes

NULL = "NULL"
INTEGER = "INTEGER"
REAL = "REAL"
TEXT = "TEXT"
BLOB = "BLOB"
BOOLEAN = "BOOLEAN"  # generation-level type; stored as INTEGER on SQLite

STORAGE_TYPES = (NULL, INTEGER, REAL, TEXT, BLOB)

# Largest magnitude at which every integer is exactly representable as a
# double; folded reals beyond it cannot round-trip through SQL text safely.
EXACT_REAL_LIMIT = 2**53

_TYPE_RANK = {NULL: 0, INTEGER: 1, REAL: 1, TEXT: 2, BLOB: 3}


def storage_type(value: SqlValue) -> str:
    """Storage class of a concrete value, as SQLite's typeof() would report."""
    if value is None:
        return NULL
    if isinstance(value, bool):  # guard: sqlite3 never returns bool, we never store one
        return INTEGER
    if isinstance(value, int):
        return INTEGER
    if isinstance(value, float):
        return REAL
    if isinstance(value, str):
        return TEXT
    if isinstance(value, bytes):
        return BLOB
    raise TypeError(f"not a SQL value: {value!r}")


def is_exact_real(value: float) -> bool:
    """True if the real is integral and small enough to round-trip exactly."""
    return (
        not math.isnan(value)
        and not math.isinf(value)
        and value == int(value)
        and abs(value) <= EXACT_REAL_LIMIT
    )


def values_equal(a: SqlValue, b: SqlValue, rel_eps: float = 1e-9) -> bool:
    """Null-safe value equality used by the oracle comparison.

    NULL = NULL holds.  ints and reals compare numerically; two reals (or a
    real against an int) match within `rel_eps` relative tolerance.  Text and
    blobs compare exactly.
    """
    if a is None or b is None:
        return a is None and b is None
    a_num = isinstance(a, (int, float))
    b_num = isinstance(b, (int, float))
    if a_num != b_num:
        return False
    if a_num:
        if isinstance(a, int) and isinstance(b, int):
            return a == b
        fa, fb = float(a), float(b)
        if math.isnan(fa) or math.isnan(fb):
            return math.isnan(fa) and math.isnan(fb)
        if math.isinf(fa) or math.isinf(fb):
            return fa == fb
        return math.isclose(fa, fb, rel_tol=rel_eps, abs_tol=1e-12)
    if type(a) is not type(b):
        return False
    return a == b


def sort_key(value: SqlValue):
    """Total order over mixed-type values, used to align rows for comparison.

    Follows SQLite's cross-type ordering: NULL < numeric < text < blob.
    """
    t = storage_type(value)
    rank = _TYPE_RANK[t]
    if value is None:
        return (rank, 0)
    if isinstance(value, (int, float)):
        if isinstance(value, float) and math.isnan(value):
            return (rank, -math.inf)
        return (rank, float(value), 0 if isinstance(value, int) else 1)
    return (rank, value)


def row_sort_key(row: tuple) -> tuple:
    return tuple(sort_key(v) for v in row)


def rows_equal(a: tuple, b: tuple, rel_eps: float = 1e-9) -> bool:
    return len(a) == len(b) and all(values_equal(x, y, rel_eps) for x, y in zip(a, b))


def render_literal(value: SqlValue) -> str:
    """Canonical SQL literal for a value.

    Integers are decimal, text is single-quoted with doubled quotes, blobs are
    X'..' hex, reals use repr() which round-trips the double exactly.
    """
    if value is None:
        return "NULL"
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            raise ValueError(f"non-finite real not renderable: {value!r}")
        text = repr(value)
        if "e" not in text and "E" not in text and "." not in text:
            text += ".0"
        return text
    if isinstance(value, str):
        if "\x00" in value:
            raise ValueError("text literal with NUL byte is not renderable")
        return "'" + value.replace("'", "''") + "'"
    if isinstance(value, bytes):
        return "X'" + value.hex().upper() + "'"
    raise TypeError(f"not a SQL value: {value!r}")
