"""Seeded synthetic survey generator.

Stands in for the (access-restricted) real survey. Each row first draws a
severity level, then answers the 23 activity questions as independent
Bernoullis with level-specific yes-rates, then draws every feature from a
noisy channel: with probability ``signal_strength`` the feature emits its
level-informative token, otherwise a uniform token. Age is drawn from a
level-shifted range. Everything is a single deterministic stream per seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from tabsev.dataset.schema import FeatureSchema, default_schema
from tabsev.dataset.table import DataTable
from tabsev.errors import InvalidSpecError

# Token catalogs for the default schema's features. Unknown features fall
# back to a generic three-level vocabulary.
_TOKEN_SETS: dict[str, list[str]] = {
    "sex": ["female", "male"],
    "marital_status": ["married", "single", "divorced", "widowed"],
    "employment_status": [
        "retired",
        "employed",
        "care_for_family",
        "permanently_sick",
        "self_employed",
        "unemployed",
        "other",
    ],
    "education": ["high", "middle", "low"],
    "self_rated_health": ["excellent", "very_good", "good", "fair", "poor"],
    "smoke_ever": ["no", "yes"],
    "smoke_now": ["no", "yes"],
    "drink_freq": [
        "never",
        "special_occasions",
        "monthly",
        "weekly",
        "daily",
        "more_than_daily",
    ],
    "vigorous_activity": ["never", "monthly", "weekly", "more_than_weekly"],
    "moderate_activity": ["never", "monthly", "weekly", "more_than_weekly"],
    "mild_activity": ["never", "monthly", "weekly", "more_than_weekly"],
    "public_transport": ["never", "rarely", "sometimes", "quite_often", "a_lot"],
    "urinary_incontinence": ["no", "yes"],
    "high_blood_pressure": ["no", "yes"],
    "chest_pain": ["no", "yes"],
    "heart_trouble": ["no", "yes"],
    "stroke": ["no", "yes"],
    "lung_disease": ["no", "yes"],
    "arthritis": ["no", "yes"],
    "parkinsons": ["no", "yes"],
    "psychiatric_problem": ["no", "yes"],
    "dementia": ["no", "yes"],
    "eyesight": ["excellent", "very_good", "good", "fair", "poor"],
    "hearing": ["excellent", "very_good", "good", "fair", "poor"],
}
_GENERIC_TOKENS = ["a", "b", "c"]

_AGE_BASE = 50
_AGE_SPAN = 28  # ages drawn uniformly from [lo, lo + span)
_AGE_SHIFT_PER_LEVEL = 8.0  # scaled by the age column's signal strength


@dataclass(frozen=True)
class SynthSpec:
    n_rows: int
    level_proportions: tuple[float, ...]
    response_prob: np.ndarray  # (levels, n_target_questions)
    signal_strength: dict[str, float]  # feature column -> association in [0, 1]
    seed: int

    @property
    def levels(self) -> int:
        return len(self.level_proportions)


def default_level_proportions(levels: int) -> tuple[float, ...]:
    """Severity shares matching the source survey's published counts."""
    table = {
        2: (0.8443, 0.1557),
        3: (0.1793, 0.6823, 0.1384),
        4: (0.0317, 0.6823, 0.1384, 0.1476),
    }
    if levels not in table:
        raise InvalidSpecError(f"no default proportions for {levels} levels")
    return table[levels]


def default_response_prob(levels: int, n_questions: int = 23) -> np.ndarray:
    """Yes-rates rising with severity, varied slightly per question."""
    bases = {
        2: [0.06, 0.70],
        3: [0.05, 0.30, 0.75],
        4: [0.04, 0.25, 0.55, 0.85],
    }
    if levels not in bases:
        raise InvalidSpecError(f"no default response profile for {levels} levels")
    offsets = np.linspace(-0.10, 0.10, n_questions)
    probs = np.asarray(bases[levels])[:, None] + offsets[None, :]
    return np.clip(probs, 0.01, 0.99)


def planted_response_prob(
    levels: int, n_questions: int, purity: float, seed: int
) -> np.ndarray:
    """Random distinct binary answer patterns, matched with prob ``purity``.

    Used to plant recoverable clusters: rows of level l answer question q
    "yes" with probability purity when pattern[l, q] is set, else 1-purity.
    """
    rng = np.random.default_rng(seed)
    while True:
        pattern = rng.integers(0, 2, size=(levels, n_questions))
        if len({tuple(p) for p in pattern}) == levels:
            break
    return np.where(pattern == 1, purity, 1.0 - purity)


def make_spec(
    n_rows: int,
    levels: int,
    seed: int,
    signal_strength: float | dict[str, float] = 0.4,
    level_proportions: tuple[float, ...] | None = None,
    response_prob: np.ndarray | None = None,
    schema: FeatureSchema | None = None,
) -> SynthSpec:
    """Assemble a SynthSpec with defaults filled in for ``schema``."""
    schema = schema if schema is not None else default_schema()
    props = (
        tuple(level_proportions)
        if level_proportions is not None
        else default_level_proportions(levels)
    )
    rp = (
        np.asarray(response_prob, dtype=np.float64)
        if response_prob is not None
        else default_response_prob(levels, len(schema.target_names))
    )
    feature_cols = schema.categorical_names + schema.numeric_names
    if isinstance(signal_strength, dict):
        strengths = {n: float(signal_strength.get(n, 0.0)) for n in feature_cols}
    else:
        strengths = {n: float(signal_strength) for n in feature_cols}
    return SynthSpec(n_rows, props, rp, strengths, seed)


def _validate(spec: SynthSpec, schema: FeatureSchema) -> None:
    if spec.n_rows < 1:
        raise InvalidSpecError(f"n_rows must be >= 1, got {spec.n_rows}")
    props = np.asarray(spec.level_proportions, dtype=np.float64)
    if props.size < 2:
        raise InvalidSpecError("need at least two severity levels")
    if abs(props.sum() - 1.0) > 1e-12:
        raise InvalidSpecError(f"level proportions sum to {props.sum()!r}, not 1")
    if (props < 0).any() or (props > 1).any():
        raise InvalidSpecError("level proportions must lie in [0, 1]")
    rp = np.asarray(spec.response_prob, dtype=np.float64)
    expected = (spec.levels, len(schema.target_names))
    if rp.shape != expected:
        raise InvalidSpecError(f"response_prob shape {rp.shape} != {expected}")
    if (rp < 0).any() or (rp > 1).any():
        raise InvalidSpecError("response probabilities must lie in [0, 1]")
    feature_cols = set(schema.categorical_names + schema.numeric_names)
    if set(spec.signal_strength) != feature_cols:
        raise InvalidSpecError("signal_strength must cover every feature column")
    for name, s in spec.signal_strength.items():
        if not 0.0 <= s <= 1.0:
            raise InvalidSpecError(f"signal_strength[{name!r}]={s} outside [0, 1]")


def synth_generate(
    spec: SynthSpec, schema: FeatureSchema | None = None
) -> tuple[DataTable, np.ndarray]:
    """Draw a complete table plus the ground-truth severity level per row."""
    schema = schema if schema is not None else default_schema()
    _validate(spec, schema)
    rng = np.random.default_rng(spec.seed)
    n = spec.n_rows

    levels = rng.choice(spec.levels, size=n, p=np.asarray(spec.level_proportions))

    cols: dict[str, np.ndarray] = {}
    for q, name in enumerate(schema.target_names):
        yes = rng.random(n) < np.asarray(spec.response_prob)[levels, q]
        cols[name] = np.where(yes, "yes", "no").astype(object)

    for name in schema.categorical_names:
        tokens = np.asarray(_TOKEN_SETS.get(name, _GENERIC_TOKENS), dtype=object)
        v = len(tokens)
        s = spec.signal_strength[name]
        informative = rng.random(n) < s
        uniform_idx = rng.integers(0, v, size=n)
        idx = np.where(informative, levels % v, uniform_idx)
        cols[name] = tokens[idx]

    for name in schema.numeric_names:
        s = spec.signal_strength[name]
        lo = _AGE_BASE + np.round(_AGE_SHIFT_PER_LEVEL * s * levels)
        cols[name] = (lo + rng.integers(0, _AGE_SPAN, size=n)).astype(np.float64)

    mask = np.zeros((n, len(schema.columns)), dtype=bool)
    ordered = {name: cols[name] for name in schema.names}
    return DataTable(schema, ordered, mask), levels.astype(np.int64)
