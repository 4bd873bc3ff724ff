from __future__ import annotations


class SpechtCohError(Exception):
    """Base error. `exit_code` is what the CLI returns when this escapes."""
    exit_code: int = 1


class ConfigError(SpechtCohError):
    exit_code = 2


class InvalidPrimeError(SpechtCohError):
    exit_code = 2


class InvalidPartitionError(SpechtCohError):
    exit_code = 2


class SizeMismatchError(SpechtCohError):
    pass


class OverflowBoundError(SpechtCohError):
    pass


class BoundExceededError(SpechtCohError):
    exit_code = 3

    def __init__(self, what: str, value: int, limit: int):
        super().__init__(f"{what}: {value} exceeds configured bound {limit}")
        self.what = what
        self.value = value
        self.limit = limit


class NonUniqueMaximumError(SpechtCohError):
    pass


class IndexOutOfRangeError(SpechtCohError):
    pass


class OddMultipleError(SpechtCohError):
    pass


class NotDominantError(SpechtCohError):
    pass


class RankBoundError(SpechtCohError):
    exit_code = 3


class PreconditionFailedError(SpechtCohError):
    pass


class FalsifiedLemmaError(SpechtCohError):
    pass


class NotTwoPartError(SpechtCohError):
    exit_code = 2


class DegreeMismatchError(SpechtCohError):
    pass


class RelationCheckFailedError(SpechtCohError):
    pass


class UnknownSuiteError(SpechtCohError):
    exit_code = 2
