class InvalidArgumentException(ValueError):
    pass


class InvariantViolationException(Exception):
    pass


class PrimeTableFormatException(Exception):
    pass


class BudgetExhaustedException(Exception):
    def __init__(self, message: str, partial=None):
        """
        Parameters
        ----------
        message: str
            What ran out and where
        partial
            Whatever was completed before the cap was hit
        """
        super().__init__(message)
        self.partial = partial
