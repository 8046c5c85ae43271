"""Exception hierarchy shared by all spectree packages."""


class SpectreeError(Exception):
    """Base class for every error spectree reports on purpose."""


class CapExceededError(SpectreeError):
    """An input is larger than a configured size cap."""

    def __init__(self, what: str, requested: int, cap: int):
        super().__init__(f"{what}: requested size {requested} exceeds cap {cap}")
        self.what = what
        self.requested = requested
        self.cap = cap


class VerificationError(SpectreeError):
    """A reproduction or theorem check found mismatches."""

    def __init__(self, message: str, mismatches: list[str] | None = None):
        super().__init__(message)
        self.mismatches = mismatches or []
