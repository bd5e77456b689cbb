from typing import Optional


class ConstaDesignError(Exception):
    """Base error; `code` is the machine-readable name, `exit_code` the CLI status"""

    code = "ConstaDesignError"
    exit_code = 2

    def __init__(self, message: str, detail: Optional[dict] = None):
        super().__init__(message)
        self.message = message
        self.detail = detail or {}


class CapExceeded(ConstaDesignError):
    code = "CapExceeded"


class NotPrime(ConstaDesignError):
    code = "NotPrime"


class NotPrimePower(ConstaDesignError):
    code = "NotPrimePower"


class DivisionByZero(ConstaDesignError, ZeroDivisionError):
    code = "DivisionByZero"


class TowerMismatch(ConstaDesignError):
    code = "TowerMismatch"


class InvalidLevels(ConstaDesignError):
    code = "InvalidLevels"


class NotADivisor(ConstaDesignError):
    code = "NotADivisor"


class LevelMismatch(ConstaDesignError):
    code = "LevelMismatch"


class NotCoprime(ConstaDesignError):
    code = "NotCoprime"


class InvalidR(ConstaDesignError):
    code = "InvalidR"


class RankDeficient(ConstaDesignError):
    code = "RankDeficient"


class LengthMismatch(ConstaDesignError):
    code = "LengthMismatch"


class BudgetExceeded(ConstaDesignError):
    code = "BudgetExceeded"


class UnsupportedQ(ConstaDesignError):
    code = "UnsupportedQ"


class ZeroCode(ConstaDesignError):
    code = "ZeroCode"


class NotOdd(ConstaDesignError):
    code = "NotOdd"


class InvalidRegime(ConstaDesignError):
    code = "InvalidRegime"


class DimensionMismatch(ConstaDesignError):
    code = "DimensionMismatch"


class ShiftConstantEqual(ConstaDesignError):
    code = "ShiftConstantEqual"


class LocalityUndefined(ConstaDesignError):
    code = "LocalityUndefined"


class UsageError(ConstaDesignError):
    """Missing or conflicting command-line arguments"""

    code = "UsageError"


class VerificationFailed(ConstaDesignError):
    """A computed object contradicts a construction invariant or a theorem conclusion"""

    code = "VerificationFailed"
    exit_code = 1
