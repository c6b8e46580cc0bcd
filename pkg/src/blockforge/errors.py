"""Exception hierarchy shared by every module."""


class BlockforgeError(ValueError):
    """Base class for all library errors."""


class GroupTooLarge(BlockforgeError):
    pass


class NotInSubfield(BlockforgeError):
    pass


class ReductionError(BlockforgeError):
    """Element cannot be pushed into the residue field."""


class TableInconsistent(BlockforgeError):
    """Internal guard: a computed or ingested table fails a sanity relation."""


class PartitionFailure(BlockforgeError):
    pass


class ParseError(BlockforgeError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f" at line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(message + where)
        self.line = line
        self.column = column


class ValidationError(BlockforgeError):
    pass
