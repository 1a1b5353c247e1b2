"""Exception types raised by the nwfe package."""


class NwfeError(Exception):
    """Base class for all nwfe errors."""


class EmptyFile(NwfeError):
    pass


class RaggedRow(NwfeError):
    def __init__(self, row: int, expected: int, got: int):
        self.row = row
        super().__init__(f"row {row}: expected {expected} fields, got {got}")


class NonNumericFeature(NwfeError):
    def __init__(self, row: int, col: str, value: str):
        self.row = row
        self.col = col
        super().__init__(f"row {row}, column {col!r}: {value!r} is not a finite number")


class MissingLabelColumn(NwfeError):
    pass


class InvalidSigma(NwfeError):
    pass


class EmptyTargetClass(NwfeError):
    pass


class FewerThanTwoClasses(NwfeError):
    pass


class SingletonClass(NwfeError):
    def __init__(self, class_id: int):
        self.class_id = class_id
        super().__init__(
            f"class {class_id} has a single sample; its within-class scatter is undefined"
        )


class ZeroDiagonal(NwfeError):
    def __init__(self, feature: int):
        self.feature = feature
        super().__init__(f"feature {feature} has zero within-class weighted variance")


class NotPositiveDefinite(NwfeError):
    pass


class DimensionMismatch(NwfeError):
    pass


class ClassMissingFromFold(NwfeError):
    pass
