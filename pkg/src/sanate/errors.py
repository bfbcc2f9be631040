"""Exception types raised by resource loaders and the pipeline."""


class SanateError(Exception):
    """Base class for all errors raised by this package."""


class IoFailure(SanateError):
    """A resource file could not be opened or read."""


class MalformedLine(SanateError):
    """A lexicon or config file line does not match the expected format."""

    def __init__(self, line_number: int, detail: str = ""):
        self.line_number = line_number
        msg = f"malformed line {line_number}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class MalformedRow(SanateError):
    """A CSV row does not have the expected two columns."""

    def __init__(self, row_number: int, detail: str = ""):
        self.row_number = row_number
        msg = f"malformed row {row_number}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class UnknownPolarityLabel(SanateError):
    """A sentiment CSV row carries a label other than positive/negative."""

    def __init__(self, row_number: int, label: str):
        self.row_number = row_number
        self.label = label
        super().__init__(f"row {row_number}: unknown polarity label {label!r}")


class DegenerateLength(SanateError):
    """Overlap measures requested for an empty text or hypothesis."""

    def __init__(self, m: int, n: int):
        self.m = m
        self.n = n
        super().__init__(f"degenerate sentence lengths m={m}, n={n}")


class MalformedRecord(SanateError):
    """A dataset line is not a valid pair record."""

    def __init__(self, line_number: int, detail: str = ""):
        self.line_number = line_number
        msg = f"malformed record at line {line_number}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class DuplicateId(SanateError):
    """Two dataset records share the same id."""

    def __init__(self, pair_id: str):
        self.pair_id = pair_id
        super().__init__(f"duplicate pair id {pair_id!r}")


class MissingGoldLabel(SanateError):
    """Evaluation requested for a record without a gold label."""

    def __init__(self, pair_id: str):
        self.pair_id = pair_id
        super().__init__(f"record {pair_id!r} has no gold label")
