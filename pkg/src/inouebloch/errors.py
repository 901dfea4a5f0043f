class DomainError(ValueError):
    """An input that violates a mathematical precondition."""


class ConfigError(ValueError):
    """Malformed structured-text input; carries 1-based line/column."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None, source: str | None = None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        where = source or "<input>"
        if line is not None:
            where += f":{line}"
            if column is not None:
                where += f":{column}"
        super().__init__(f"{where}: {message}")
