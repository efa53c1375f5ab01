"""Exception hierarchy.

Every domain error carries a short machine-readable ``kind`` string which the
CLI reports verbatim.
"""


class SupermatError(Exception):
    kind = "DOMAIN_ERROR"


class ChainMismatch(SupermatError):
    kind = "CHAIN_MISMATCH"


class FieldMismatch(SupermatError):
    kind = "FIELD_MISMATCH"


class DepthExceeded(SupermatError):
    kind = "DEPTH_EXCEEDED"


class RadixMismatch(SupermatError):
    kind = "RADIX_MISMATCH"


class InvalidWord(SupermatError):
    kind = "INVALID_WORD"


class UnbalancedWords(SupermatError):
    kind = "UNBALANCED_WORDS"


class UnbalancedOnGeneralChain(SupermatError):
    kind = "UNBALANCED_ON_GENERAL_CHAIN"


class NotDegreeZero(SupermatError):
    kind = "NOT_DEGREE_ZERO"


class ParameterError(SupermatError):
    kind = "PARAMETER_ERROR"


class RankDeficient(SupermatError):
    kind = "RANK_DEFICIENT"


class KindMismatch(SupermatError):
    kind = "KIND_MISMATCH"


class ValidationFailure(SupermatError):
    kind = "VALIDATION_FAILURE"


class ParseError(SupermatError):
    kind = "SYNTAX_ERROR"

    def __init__(self, message, column):
        super().__init__(f"{message} at column {column}")
        self.column = column
