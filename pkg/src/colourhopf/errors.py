"""Exception hierarchy for colourhopf."""


class QAlgebraError(Exception):
    """Base class for every error raised by this package."""


class SingularPoint(QAlgebraError, ValueError):
    """A structure function was evaluated where G(z) vanishes, z = 1/(q-1)."""


class EmptySampleSet(QAlgebraError, ValueError):
    pass


class ColourMismatch(QAlgebraError, ValueError):
    """Representation colours disagree with the colours of a coproduct leg."""


class ColourMismatchWarning(UserWarning):
    """Advisory form of :class:`ColourMismatch`, emitted by coproduct builders."""


class LogDomainError(QAlgebraError, ValueError):
    """log_q(c G(J0)) requested on an eigenvalue where c G(m) <= 0."""


class DegenerateSpectrum(QAlgebraError, ValueError):
    pass


class DegenerateKernel(QAlgebraError, ArithmeticError):
    pass


class MalformedExpr(QAlgebraError, TypeError):
    pass


class SeriesTruncationError(QAlgebraError, ArithmeticError):
    """The R-matrix series did not terminate by nilpotency before the hard cap."""


class ConfigError(QAlgebraError, ValueError):
    pass


class EmptyReport(QAlgebraError, ValueError):
    pass
