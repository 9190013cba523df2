"""Tabular data handling: schema, ingestion, encoding, splits, synthesis."""

from tabsev.dataset.schema import Column, FeatureSchema, default_schema
from tabsev.dataset.table import (
    DEFAULT_MISSING_TOKENS,
    DataTable,
    impute,
    load_csv,
)
from tabsev.dataset.encode import (
    EncodedMatrix,
    export_encoded,
    label_encode,
    one_hot_targets,
    standardize,
)
from tabsev.dataset.split import SplitPlan, class_marginals, kfold, split
from tabsev.dataset.synth import (
    SynthSpec,
    default_level_proportions,
    default_response_prob,
    synth_generate,
)

__all__ = [
    "Column",
    "FeatureSchema",
    "default_schema",
    "DEFAULT_MISSING_TOKENS",
    "DataTable",
    "load_csv",
    "impute",
    "EncodedMatrix",
    "label_encode",
    "standardize",
    "one_hot_targets",
    "export_encoded",
    "SplitPlan",
    "split",
    "kfold",
    "class_marginals",
    "SynthSpec",
    "synth_generate",
    "default_level_proportions",
    "default_response_prob",
]
