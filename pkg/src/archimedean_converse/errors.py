from __future__ import annotations

from typing import Any, Optional, Tuple


class ArchimedeanError(Exception):
    """Base class for every error raised by archimedean_converse."""


class FieldMismatchError(ArchimedeanError, ValueError):
    """Objects over R and over C were combined."""


class ParameterError(ArchimedeanError, ValueError):
    """Invalid constituent or expression data."""


class ParseError(ArchimedeanError, ValueError):
    def __init__(
        self,
        code: str,
        position: Optional[Tuple[int, int]] = None,
        message: Optional[str] = None,
    ) -> None:
        self.code = code
        self.position = position
        self.message = message or "syntax error"
        super().__init__(self.message if position is None else f"{self.message} at {position[0]}")

    def caret(self) -> str:
        """The offending text with the error span underlined."""
        if self.position is None:
            return self.code
        start, end = self.position
        return f"{self.code}\n{' ' * start}{'^' * max(1, end - start)}"


class SingularEvaluationError(ArchimedeanError, ArithmeticError):
    """Numeric evaluation requested on (or within tolerance of) a Gamma pole."""


class GenericityMismatchError(ArchimedeanError, AssertionError):
    def __init__(self, parameter: Any, comb: Any, analytic: Any) -> None:
        self.parameter = parameter
        self.comb = comb
        self.analytic = analytic
        super().__init__(
            f"genericity routes disagree for {parameter}: "
            f"inequalities say {comb}, L-holomorphy says {analytic}"
        )


class ReconstructionError(ArchimedeanError):
    def __init__(self, message: str, character: Any = None, expression: Any = None) -> None:
        self.character = character
        self.expression = expression
        super().__init__(message if character is None else f"{message} (query {character})")


class MissingQueryError(ReconstructionError):
    """A transcript oracle was asked for a character it does not contain."""


class SearchExhaustedError(ArchimedeanError):
    def __init__(self, p: Any, q: Any, tried: int) -> None:
        self.p = p
        self.q = q
        self.tried = tried
        super().__init__(f"no twist among {tried} candidates separates {p} from {q}")
