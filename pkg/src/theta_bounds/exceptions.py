# Copyright 2026 Open Collector, Inc,
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

class ThetaBoundsError(Exception):
    pass


class DomainError(ThetaBoundsError, ValueError):
    pass


class SingularMatrix(ThetaBoundsError):
    pass


class InvalidProblem(ThetaBoundsError):
    pass


class NumericalBreakdown(ThetaBoundsError):
    """Raised by the floating-point simplex when it cannot be trusted.

    Callers should retry the same program in exact mode.
    """


class InvalidPermutation(ThetaBoundsError):
    pass


class ShapeMismatch(ThetaBoundsError):
    pass


class NoncommutativeCommutant(ThetaBoundsError):
    pass


class NotInvariant(ThetaBoundsError):
    pass


class TooLarge(ThetaBoundsError):
    pass


class NotHomogeneous(ThetaBoundsError):
    pass


class DegreeMismatch(ThetaBoundsError):
    pass


class ReductionFailure(ThetaBoundsError):
    """The zonal kernel did not reduce to a polynomial in x . y.

    This always indicates a bug, never a legitimate outcome.
    """


class InfeasibleAtDegree(ThetaBoundsError):
    def __init__(self, message: str, *, degree: int) -> None:
        super().__init__(message, degree)

    @property
    def message(self) -> str:
        return self.args[0]

    @property
    def degree(self) -> int:
        return self.args[1]

    def __str__(self) -> str:
        return f"degree {self.degree}: {self.message}"
