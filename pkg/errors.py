"""Exception hierarchy. ``exit_code`` is what the command line returns."""


class MingrpError(Exception):
    exit_code = 1


class DegreeMismatchError(MingrpError, ValueError):
    pass


class NotInGroupError(MingrpError, ValueError):
    pass


class LimitExceededError(MingrpError):
    exit_code = 4


class CycleFormatError(MingrpError, ValueError):
    exit_code = 2


class GroupNameError(MingrpError, ValueError):
    exit_code = 2


class NotPrimePowerError(GroupNameError):
    pass


class NotSimpleNameError(GroupNameError):
    pass


class ParameterOverflowError(GroupNameError, OverflowError):
    pass


class FieldError(MingrpError, ArithmeticError):
    pass


class UnsupportedFamilyError(MingrpError):
    exit_code = 3


class NotNormalError(MingrpError, ValueError):
    pass


class UnidentifiedQuotientError(MingrpError):
    pass


class LatticeError(MingrpError, RuntimeError):
    pass
