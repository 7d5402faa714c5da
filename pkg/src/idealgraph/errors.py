"""Exception types raised across the package."""


class NotAModuleError(ValueError):
    """Raised when Z_n is not a Z_m-module, i.e. n does not divide m."""


class OracleLimitError(RuntimeError):
    """An exact search was asked to run on an instance above its size cap."""

    def __init__(self, what: str, size: int, limit: int, hint: str = ""):
        self.what = what
        self.size = size
        self.limit = limit
        msg = f"{what}: size {size} exceeds limit {limit}"
        if hint:
            msg += f" ({hint})"
        super().__init__(msg)
