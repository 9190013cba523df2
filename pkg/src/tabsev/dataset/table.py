"""In-memory mixed-type table with explicit missingness, plus CSV loading.

Cells live in column-major numpy arrays: object arrays of string tokens
for categorical and target-source columns (``None`` when missing) and
float64 arrays for numeric columns (NaN when missing). The mask is the
source of truth for missingness.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from tabsev.dataset.schema import FeatureSchema
from tabsev.errors import (
    AllMissingColumnError,
    DuplicateHeaderError,
    MissingColumnError,
    TypeMismatchError,
)

# Survey answers treated as missing: non-responses such as refusals and
# "don't know" carry no usable category.
DEFAULT_MISSING_TOKENS = frozenset({"", "refusal", "dont_know", "not_applicable"})


@dataclass(frozen=True)
class DataTable:
    schema: FeatureSchema
    columns: dict[str, np.ndarray]
    missing_mask: np.ndarray  # (n_rows, n_cols) bool, schema column order

    @property
    def n_rows(self) -> int:
        return int(self.missing_mask.shape[0])

    @property
    def n_cols(self) -> int:
        return int(self.missing_mask.shape[1])

    def column(self, name: str) -> np.ndarray:
        return self.columns[name]

    def column_missing(self, name: str) -> np.ndarray:
        j = self.schema.names.index(name)
        return self.missing_mask[:, j]

    def has_missing(self) -> bool:
        return bool(self.missing_mask.any())

    def subset(self, names: list[str]) -> "DataTable":
        """Table restricted to the given columns (schema order kept)."""
        sub = self.schema.subset(names)
        cols = {n: self.columns[n] for n in sub.names}
        idx = [self.schema.names.index(n) for n in sub.names]
        return DataTable(sub, cols, self.missing_mask[:, idx])

    def take(self, indices: np.ndarray) -> "DataTable":
        idx = np.asarray(indices)
        cols = {n: v[idx] for n, v in self.columns.items()}
        return DataTable(self.schema, cols, self.missing_mask[idx])

    def to_csv(self, path) -> None:
        names = self.schema.names
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(names)
            for i in range(self.n_rows):
                row = []
                for j, name in enumerate(names):
                    if self.missing_mask[i, j]:
                        row.append("")
                    else:
                        cell = self.columns[name][i]
                        if self.schema.column(name).kind == "numeric":
                            cell = format(float(cell), ".17g")
                        row.append(cell)
                writer.writerow(row)


def _empty_columns(schema: FeatureSchema, n: int) -> dict[str, np.ndarray]:
    cols: dict[str, np.ndarray] = {}
    for c in schema.columns:
        if c.kind == "numeric":
            cols[c.name] = np.full(n, np.nan)
        else:
            cols[c.name] = np.full(n, None, dtype=object)
    return cols


def load_csv(
    path,
    schema: FeatureSchema,
    missing_tokens: frozenset[str] = DEFAULT_MISSING_TOKENS,
) -> DataTable:
    """Parse a UTF-8, comma-delimited, header-first CSV against ``schema``.

    The header may order columns freely; extra columns are ignored. Cells
    whose token is in ``missing_tokens`` are marked missing. Numeric cells
    that are neither missing nor parseable raise TypeMismatchError.
    """
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise MissingColumnError(f"{path}: empty file") from None
        if len(set(header)) != len(header):
            dupes = sorted({h for h in header if header.count(h) > 1})
            raise DuplicateHeaderError(f"duplicated header columns: {dupes}")
        positions = {}
        for name in schema.names:
            if name not in header:
                raise MissingColumnError(f"column {name!r} not in header")
            positions[name] = header.index(name)
        rows = list(reader)

    n = len(rows)
    cols = _empty_columns(schema, n)
    mask = np.zeros((n, len(schema.columns)), dtype=bool)
    for j, col in enumerate(schema.columns):
        pos = positions[col.name]
        out = cols[col.name]
        for i, row in enumerate(rows):
            token = row[pos] if pos < len(row) else ""
            if token in missing_tokens:
                mask[i, j] = True
                continue
            if col.kind == "numeric":
                try:
                    out[i] = float(token)
                except ValueError:
                    raise TypeMismatchError(
                        f"row {i + 1}, column {col.name!r}: "
                        f"cannot parse {token!r} as a number"
                    ) from None
            else:
                out[i] = token
    return DataTable(schema, cols, mask)


def impute(table: DataTable) -> DataTable:
    """Fill missing cells: numeric -> column mean, categorical -> mode.

    Categorical ties break lexicographically. A column with no observed
    values raises AllMissingColumnError.
    """
    names = table.schema.names
    cols: dict[str, np.ndarray] = {}
    for j, col in enumerate(table.schema.columns):
        values = table.columns[col.name]
        miss = table.missing_mask[:, j]
        if not miss.any():
            cols[col.name] = values.copy()
            continue
        if miss.all():
            raise AllMissingColumnError(f"column {col.name!r} has no observed values")
        filled = values.copy()
        if col.kind == "numeric":
            filled[miss] = float(np.mean(values[~miss]))
        else:
            tokens, counts = np.unique(values[~miss].astype(str), return_counts=True)
            # np.unique sorts tokens, so argmax lands on the lexicographically
            # smallest among the most frequent.
            filled[miss] = tokens[np.argmax(counts)]
        cols[col.name] = filled
    mask = np.zeros((table.n_rows, len(names)), dtype=bool)
    return DataTable(table.schema, cols, mask)
