"""Column schema for mixed categorical/numeric survey tables.

A schema lists the columns in order, tags each as ``categorical``,
``numeric``, or ``target_source``, and for target-source columns records
which activity group (mobility / adl / iadl) the question belongs to.
Target-source columns hold the binary activity-limitation responses that
severity labels are derived from; they are never model features.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from tabsev.errors import InvalidSpecError

KINDS = ("categorical", "numeric", "target_source")
GROUPS = ("mobility", "adl", "iadl")


@dataclass(frozen=True)
class Column:
    name: str
    kind: str
    group: str | None = None


@dataclass(frozen=True)
class FeatureSchema:
    columns: tuple[Column, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        names = [c.name for c in self.columns]
        if len(set(names)) != len(names):
            raise InvalidSpecError("schema column names must be unique")
        for c in self.columns:
            if c.kind not in KINDS:
                raise InvalidSpecError(f"unknown column kind {c.kind!r}")
            if c.kind == "target_source" and c.group not in GROUPS:
                raise InvalidSpecError(
                    f"target_source column {c.name!r} needs a group in {GROUPS}"
                )
            if c.kind != "target_source" and c.group is not None:
                raise InvalidSpecError(
                    f"column {c.name!r} of kind {c.kind!r} must not carry a group"
                )

    @property
    def names(self) -> list[str]:
        return [c.name for c in self.columns]

    def kinds(self, kind: str) -> list[str]:
        return [c.name for c in self.columns if c.kind == kind]

    @property
    def categorical_names(self) -> list[str]:
        return self.kinds("categorical")

    @property
    def numeric_names(self) -> list[str]:
        return self.kinds("numeric")

    @property
    def target_names(self) -> list[str]:
        return self.kinds("target_source")

    def column(self, name: str) -> Column:
        for c in self.columns:
            if c.name == name:
                return c
        raise KeyError(name)

    def subset(self, names: list[str]) -> "FeatureSchema":
        """Schema restricted to ``names``, keeping this schema's order."""
        wanted = set(names)
        return FeatureSchema(tuple(c for c in self.columns if c.name in wanted))

    def feature_view(self) -> "FeatureSchema":
        """Only the model-input columns (categorical + numeric)."""
        return FeatureSchema(
            tuple(c for c in self.columns if c.kind != "target_source")
        )

    def target_view(self) -> "FeatureSchema":
        """Only the activity-limitation response columns."""
        return FeatureSchema(
            tuple(c for c in self.columns if c.kind == "target_source")
        )

    # --- JSON round trip -------------------------------------------------

    def to_json(self) -> str:
        doc = {
            "columns": [
                {"name": c.name, "kind": c.kind}
                | ({"group": c.group} if c.group else {})
                for c in self.columns
            ]
        }
        return json.dumps(doc, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "FeatureSchema":
        doc = json.loads(text)
        cols = tuple(
            Column(item["name"], item["kind"], item.get("group"))
            for item in doc["columns"]
        )
        return cls(cols)


# Survey question names for the default table layout: 24 categorical
# features, one numeric feature (age), and the 23 activity questions
# (10 mobility, 6 ADL, 7 IADL) that severity labels derive from.
_FEATURES = [
    "sex",
    "marital_status",
    "employment_status",
    "education",
    "self_rated_health",
    "smoke_ever",
    "smoke_now",
    "drink_freq",
    "vigorous_activity",
    "moderate_activity",
    "mild_activity",
    "public_transport",
    "urinary_incontinence",
    "high_blood_pressure",
    "chest_pain",
    "heart_trouble",
    "stroke",
    "lung_disease",
    "arthritis",
    "parkinsons",
    "psychiatric_problem",
    "dementia",
    "eyesight",
    "hearing",
]

_MOBILITY = [
    "mob_walk_100yds",
    "mob_sit_2hrs",
    "mob_up_from_chair",
    "mob_several_stairs",
    "mob_one_stair",
    "mob_stoop_kneel",
    "mob_reach_above_shoulder",
    "mob_pull_push_large",
    "mob_lift_10lbs",
    "mob_pick_up_coin",
]

_ADL = [
    "adl_dressing",
    "adl_walk_across_room",
    "adl_bathing",
    "adl_eating",
    "adl_in_out_bed",
    "adl_using_toilet",
]

_IADL = [
    "iadl_using_map",
    "iadl_hot_meal",
    "iadl_shopping",
    "iadl_telephone",
    "iadl_medication",
    "iadl_housework",
    "iadl_managing_money",
]


def default_schema() -> FeatureSchema:
    """The stock survey layout: 24 categorical + age + 23 target questions."""
    cols = [Column(n, "categorical") for n in _FEATURES]
    cols.append(Column("age", "numeric"))
    cols += [Column(n, "target_source", "mobility") for n in _MOBILITY]
    cols += [Column(n, "target_source", "adl") for n in _ADL]
    cols += [Column(n, "target_source", "iadl") for n in _IADL]
    return FeatureSchema(tuple(cols))
