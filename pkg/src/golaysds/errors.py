"""Exception hierarchy.

Every error raised on bad input derives from :class:`GolayError`, which is a
``ValueError`` so callers that only care about "bad value" can catch that.
"""


class GolayError(ValueError):
    pass


# core
class OddLength(GolayError):
    pass


class NegativeLambda(GolayError):
    pass


class DecompositionFails(GolayError):
    pass


# orbits
class NotAUnit(GolayError):
    pass


class NotARepresentative(GolayError):
    pass


class DuplicateIndex(GolayError):
    pass


class NotOrbitUnion(GolayError):
    pass


# sds
class NotComplementary(GolayError):
    """PAF_A(s) + PAF_B(s) != 0 at ``shift``."""

    def __init__(self, shift, total):
        self.shift = shift
        self.total = total
        super().__init__(f"PAF sum at shift {shift} is {total}, expected 0")


class ParameterInfeasible(GolayError):
    pass


# conditions
class OddExponent(GolayError):
    pass


# search
class UnreachableCardinality(GolayError):
    pass


class CountExceedsLambda(GolayError):
    pass


class IncompatibleModuli(GolayError):
    pass


class PlanError(GolayError):
    """Invalid search plan; ``fields`` names every offending entry."""

    def __init__(self, problems):
        self.problems = list(problems)
        self.fields = [field for field, _ in self.problems]
        msg = "; ".join(f"{field}: {why}" for field, why in self.problems)
        super().__init__(f"invalid plan: {msg}")


# fixtures
class FixtureError(GolayError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ParseError(FixtureError):
    pass


class RepNotCanonical(FixtureError):
    pass


class ParamMismatch(FixtureError):
    pass
