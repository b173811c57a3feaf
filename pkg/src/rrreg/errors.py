"""Exception hierarchy.

``InputError`` subclasses describe bad user data (CLI exit code 1).
``InternalCheckError`` means a proven identity failed at runtime, which can
only be a bug (CLI exit code 2).
"""


class InputError(ValueError):
    pass


class IdealSyntaxError(InputError):
    def __init__(self, message: str, text: str = "", pos: int | None = None):
        self.text = text
        self.pos = pos
        if pos is not None and text:
            message = f"{message} at position {pos}\n  {text}\n  {' ' * pos}^"
        super().__init__(message)


class NotEqualDegreeError(InputError):
    pass


class NotMPrimaryError(InputError):
    pass


class FormsNotInIdealError(InputError):
    pass


class DegenerateReductionError(InputError):
    pass


class InternalCheckError(RuntimeError):
    pass
