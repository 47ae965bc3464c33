class BusbarError(Exception):
    """
    Base class for every error raised by the busbar package.
    """


class DomainError(BusbarError, ValueError):
    """
    A geometry or argument outside the range where the force integrals hold.
    """
    def __init__(self, reason):
        super(DomainError, self).__init__(reason)
        self.reason = reason


class ArgumentError(BusbarError, ValueError):
    pass


class ConvergenceError(BusbarError, ArithmeticError):
    """
    Adaptive quadrature ran out of subdivisions. Carries the best estimate
    and the error it reached.
    """
    def __init__(self, estimate, error, message=None):
        message = message or 'quadrature did not converge: estimate {0!r}, error {1:.3e}'.format(estimate, error)
        super(ConvergenceError, self).__init__(message)
        self.estimate = estimate
        self.error = error


class ConfigError(BusbarError):
    """
    A run config or sweep grid with one or more problems. Every problem is
    listed, not just the first.
    """
    def __init__(self, messages):
        if isinstance(messages, str):
            messages = [messages]
        self.messages = list(messages)
        super(ConfigError, self).__init__('; '.join(self.messages))
