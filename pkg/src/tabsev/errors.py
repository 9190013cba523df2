"""Exception hierarchy shared across the package."""


class TabsevError(Exception):
    """Base class for all tabsev errors."""


# --- dataset -----------------------------------------------------------


class MissingColumnError(TabsevError):
    """A schema column is absent from the input header."""


class DuplicateHeaderError(TabsevError):
    """The CSV header names a column more than once."""


class TypeMismatchError(TabsevError):
    """A numeric cell could not be parsed as a number."""


class AllMissingColumnError(TabsevError):
    """Imputation has no observed values to work with."""


class NotImputedError(TabsevError):
    """Encoding requires a fully imputed table."""


class EncodingError(TabsevError):
    """A token has no code in the supplied vocabulary."""


class StatsDimensionMismatchError(TabsevError):
    """Supplied standardisation stats do not match the matrix columns."""


class LabelOutOfRangeError(TabsevError):
    """A class label falls outside [0, class_count)."""


class EmptySplitError(TabsevError):
    """A requested split would leave the train or test side empty."""


class BadKError(TabsevError):
    """Fold count outside [2, train size]."""


class EmptyInputError(TabsevError):
    """An operation received an empty vector."""


class InvalidSpecError(TabsevError):
    """A synthetic-data spec violates its invariants."""


# --- kmodes ------------------------------------------------------------


class LengthMismatchError(TabsevError):
    """Code vectors of unequal length."""


class DimensionMismatchError(TabsevError):
    """Data and modes disagree on the column count."""


class EmptyClusterError(TabsevError):
    """A mode update saw a cluster with no members."""


class TooFewDistinctRowsError(TabsevError):
    """K exceeds the number of distinct rows in the data."""


# --- tensor core -------------------------------------------------------


class ShapeMismatchError(TabsevError):
    """Operand shapes are incompatible for the requested op."""


class IndexOutOfRangeError(TabsevError):
    """An embedding code exceeds its table."""


class NonFiniteInputError(TabsevError):
    """An op requiring finite input saw NaN or infinity."""


class HeadDivisibilityError(TabsevError):
    """Embedding width not divisible by the head count."""


class NotNormalizedError(TabsevError):
    """Probability rows do not sum to one."""


class NonScalarLossError(TabsevError):
    """backward() needs a scalar loss node."""


# --- models / trainer --------------------------------------------------


class ConfigMismatchError(TabsevError):
    """Model configuration inconsistent with the data schema."""


class EmptyDataError(TabsevError):
    """Training or evaluation received no rows."""


class NonFiniteLossError(TabsevError):
    """A training step produced a NaN or infinite loss."""


# --- metrics -----------------------------------------------------------


class OneClassOnlyError(TabsevError):
    """ROC needs at least one positive and one negative."""


class ClassAbsentError(TabsevError):
    """A class has no positive examples, so its AUC is undefined."""


class CheckpointError(TabsevError):
    """A checkpoint file is unreadable or inconsistent."""
