"""Exception hierarchy shared by every valab module."""


class ValabError(Exception):
    """Base class for all library errors."""


class InputError(ValabError):
    """Malformed user input (exit code 2 in the CLI)."""


class ParseError(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class NotSymmetric(InputError):
    pass


class GradingViolation(InputError):
    pass


class PreconditionViolated(ValabError):
    """A hypothesis required by a computation does not hold (exit code 3)."""


class NotLocal(PreconditionViolated):
    pass


class NotGorenstein(PreconditionViolated):
    pass


class NotSl2Triple(PreconditionViolated):
    pass


class MissingGorensteinData(PreconditionViolated):
    pass


class InvalidLOne(PreconditionViolated):
    pass


class NoGenerator(PreconditionViolated):
    """No g with g_0 t = t exists (M is all of V_1)."""


class NotInSpan(PreconditionViolated):
    """g_1 g does not lie in span{1, t}."""


class BetaZero(PreconditionViolated):
    """The coefficient of 1 in g_1 g vanishes."""


class NoSolution(ValabError):
    """An inhomogeneous linear system is inconsistent."""


class Inconsistent(NoSolution):
    """Pinning constraints contradict an affine solution family."""


class OutOfWeightRange(ValabError):
    """A mode product would land in weight >= 2."""


class WindowOverflow(ValabError):
    """A loop-module index leaves the finite Laurent window."""
