class UnknownName(ValueError):
    pass


class ParseError(ValueError):
    pass


class ValidationError(ValueError):
    def __init__(self, field: str, message: str) -> None:
        super().__init__(f"{field}: {message}")
        self.field = field
        self.message = message
