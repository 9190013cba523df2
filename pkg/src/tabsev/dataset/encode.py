"""Label encoding and standardisation of imputed tables."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass

import numpy as np

from tabsev.dataset.table import DataTable
from tabsev.errors import (
    EncodingError,
    LabelOutOfRangeError,
    NotImputedError,
    StatsDimensionMismatchError,
)


@dataclass(frozen=True)
class EncodedMatrix:
    """Integer codes for categorical columns plus raw/standardised numerics.

    ``vocabularies`` maps each categorical column to its sorted token list;
    a cell's code is its token's index there. ``cont_stats`` holds the
    (mean, population sd) of each numeric column as observed at encoding
    time; ``standardize`` applies them (or supplied train stats).
    """

    cat_codes: np.ndarray  # (n, m_cat) int64
    cont_values: np.ndarray  # (n, m_cont) float64
    cat_names: tuple[str, ...]
    cont_names: tuple[str, ...]
    vocabularies: dict[str, list[str]]
    cont_stats: dict[str, tuple[float, float]]
    standardized: bool = False

    @property
    def n_rows(self) -> int:
        return int(self.cat_codes.shape[0]) if self.cat_codes.size else int(
            self.cont_values.shape[0]
        )

    def vocab_sizes(self) -> list[int]:
        return [len(self.vocabularies[n]) for n in self.cat_names]

    def take(self, indices: np.ndarray) -> "EncodedMatrix":
        idx = np.asarray(indices)
        return EncodedMatrix(
            self.cat_codes[idx],
            self.cont_values[idx],
            self.cat_names,
            self.cont_names,
            self.vocabularies,
            self.cont_stats,
            self.standardized,
        )

    def select_cat(self, names: list[str]) -> np.ndarray:
        cols = [self.cat_names.index(n) for n in names]
        return self.cat_codes[:, cols]


def label_encode(
    table: DataTable, vocabularies: dict[str, list[str]] | None = None
) -> EncodedMatrix:
    """Map categorical tokens to sorted-vocabulary indices.

    Numeric columns are copied unchanged; their stats are recorded but not
    applied. When ``vocabularies`` is given (e.g. reusing a checkpoint's
    encoding), unseen tokens raise EncodingError.
    """
    if table.has_missing():
        raise NotImputedError("table still has missing cells; run impute() first")
    cat_names = tuple(
        c.name for c in table.schema.columns if c.kind != "numeric"
    )
    cont_names = tuple(c.name for c in table.schema.columns if c.kind == "numeric")
    n = table.n_rows

    vocabs: dict[str, list[str]] = {}
    codes = np.zeros((n, len(cat_names)), dtype=np.int64)
    for j, name in enumerate(cat_names):
        tokens = table.columns[name].astype(str)
        if vocabularies is None:
            vocab = sorted(set(tokens.tolist()))
        else:
            if name not in vocabularies:
                raise EncodingError(f"no vocabulary supplied for column {name!r}")
            vocab = list(vocabularies[name])
        lookup = {t: i for i, t in enumerate(vocab)}
        try:
            codes[:, j] = [lookup[t] for t in tokens]
        except KeyError as exc:
            raise EncodingError(
                f"column {name!r}: token {exc.args[0]!r} not in vocabulary"
            ) from None
        vocabs[name] = vocab

    cont = np.zeros((n, len(cont_names)), dtype=np.float64)
    stats: dict[str, tuple[float, float]] = {}
    for j, name in enumerate(cont_names):
        vals = np.asarray(table.columns[name], dtype=np.float64)
        cont[:, j] = vals
        stats[name] = (float(vals.mean()), float(vals.std()))
    return EncodedMatrix(codes, cont, cat_names, cont_names, vocabs, stats)


def standardize(
    matrix: EncodedMatrix, stats: dict[str, tuple[float, float]] | None = None
) -> EncodedMatrix:
    """Apply (x - mean) / sd to numeric columns.

    ``stats`` lets a test split reuse the train split's statistics. A zero
    variance column is left centred with sd treated as 1.
    """
    use = stats if stats is not None else matrix.cont_stats
    if set(use) != set(matrix.cont_names):
        raise StatsDimensionMismatchError(
            f"stats columns {sorted(use)} != numeric columns {sorted(matrix.cont_names)}"
        )
    cont = matrix.cont_values.copy()
    for j, name in enumerate(matrix.cont_names):
        mean, sd = use[name]
        if sd < 1e-12:
            sd = 1.0
        cont[:, j] = (cont[:, j] - mean) / sd
    return EncodedMatrix(
        matrix.cat_codes,
        cont,
        matrix.cat_names,
        matrix.cont_names,
        matrix.vocabularies,
        dict(use),
        standardized=True,
    )


def one_hot_targets(labels: np.ndarray, c: int) -> np.ndarray:
    """Integer class labels -> (n, c) one-hot float matrix."""
    labels = np.asarray(labels, dtype=np.int64)
    if labels.size and (labels.min() < 0 or labels.max() >= c):
        raise LabelOutOfRangeError(
            f"labels must lie in [0, {c}); saw range "
            f"[{labels.min()}, {labels.max()}]"
        )
    out = np.zeros((labels.shape[0], c), dtype=np.float64)
    out[np.arange(labels.shape[0]), labels] = 1.0
    return out


def export_encoded(matrix: EncodedMatrix, csv_path, sidecar_path) -> None:
    """Write codes/values as CSV plus a JSON sidecar with vocabularies."""
    names = list(matrix.cat_names) + list(matrix.cont_names)
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(names)
        for i in range(matrix.n_rows):
            row = [int(v) for v in matrix.cat_codes[i]]
            row += [format(v, ".17g") for v in matrix.cont_values[i]]
            writer.writerow(row)
    sidecar = {
        "vocabularies": matrix.vocabularies,
        "cont_stats": {k: list(v) for k, v in matrix.cont_stats.items()},
        "standardized": matrix.standardized,
    }
    with open(sidecar_path, "w", encoding="utf-8") as fh:
        json.dump(sidecar, fh, indent=2, sort_keys=True)
