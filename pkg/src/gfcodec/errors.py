"""Exception hierarchy shared by all gfcodec modules.

Every domain error raised by the library derives from CodecError, so the
CLI can map any of them to exit code 1 and print the class name.
"""


class CodecError(Exception):
    """Base class for all domain errors."""


# field tower
class NotPrime(CodecError):
    pass


class ReducibleModulus(CodecError):
    pass


class NoDlogTable(CodecError):
    pass


class DivisionByZero(CodecError):
    pass


class InvalidSubfieldDegree(CodecError):
    pass


class NotInSubfield(CodecError):
    pass


class OrderNotDividing(CodecError):
    pass


class SearchExhausted(CodecError):
    pass


# cyclotomic
class NotCoprime(CodecError):
    pass


class Overflow(CodecError):
    pass


# spectral codec
class WrongOrder(CodecError):
    pass


class LengthMismatch(CodecError):
    pass


class NotConsistent(CodecError):
    pass


class SeedNotInSubfield(CodecError):
    pass


# trace transform
class MemoryCapExceeded(CodecError):
    pass


class TableMismatch(CodecError):
    pass


# residual codec
class IndexNotInClass(CodecError):
    pass


class NormalBasisMissing(CodecError):
    pass


class IndexOutOfRange(CodecError):
    pass


# analysis
class TooLarge(CodecError):
    pass


# sparse backend
class SingularHankel(CodecError):
    pass


class RootNotInGroup(CodecError):
    pass
