class EngineError(Exception):
    """Base class for every error raised by the engine package."""


class ModelError(EngineError, ValueError):
    pass


class DimensionMismatch(EngineError, ValueError):
    def __init__(self, expected: int, got: int, what: str = 'form'):
        super().__init__(f"{what} has {got} entries, expected {expected}")
        self.expected = expected
        self.got = got


class InvalidPoint(EngineError, ValueError):
    pass


class StatementSyntaxError(EngineError, ValueError):
    def __init__(self, text: str, reason: str):
        super().__init__(f"cannot parse {text!r}: {reason}")
        self.text = text
        self.reason = reason


class InvalidEpsilon(EngineError, ValueError):
    pass


class InfeasibleError(EngineError):
    """The premise constraints admit no point of the probability simplex."""


class SolverError(EngineError, RuntimeError):
    """Internal solver failure (unbounded LP or failed exactness re-check)."""


class OracleScaleExceeded(EngineError, ValueError):
    pass
