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

import enum
import os
import typing

WORKERS_ENVVAR = "THETA_BOUNDS_WORKERS"


class StrEnum(str, enum.Enum):
    def __str__(self) -> str:
        return self.value


class Unspecified:
    def __repr__(self) -> str:
        return "UNSPECIFIED"


UNSPECIFIED = Unspecified()


def resolve_worker_count(
    requested: typing.Optional[int] = None,
    environ: typing.Optional[typing.Mapping[str, str]] = None,
) -> int:
    if requested is not None:
        if requested < 1:
            raise ValueError(f"worker count must be positive, got {requested}")
        return requested
    env = os.environ if environ is None else environ
    v = env.get(WORKERS_ENVVAR)
    if v:
        try:
            n = int(v)
        except ValueError:
            raise ValueError(f"{WORKERS_ENVVAR} must be an integer, got {v!r}")
        if n < 1:
            raise ValueError(f"{WORKERS_ENVVAR} must be positive, got {n}")
        return n
    return os.cpu_count() or 1
