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

import typing


def escape_component(v: str) -> str:
    return v.replace("~", "~0").replace("/", "~1")


Component = typing.Union[str, int]


class DocumentPath:
    """Location of a value inside a loaded input document.

    Rendered in JSON pointer notation so that error messages point at the
    offending entry, e.g. ``/generators/1/4``.
    """

    components: typing.Tuple[Component, ...]

    def __init__(self, components: typing.Iterable[Component] = ()) -> None:
        self.components = tuple(components)

    def __truediv__(self, c: typing.Any) -> "DocumentPath":
        if not isinstance(c, (str, int)) or isinstance(c, bool):
            raise TypeError(f"path component must be a string or an index, got {c!r}")
        return self.__class__(self.components + (c,))

    def __str__(self) -> str:
        if not self.components:
            return "/"
        return "".join(f"/{escape_component(str(c))}" for c in self.components)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({str(self)!r})"

    def __eq__(self, that: typing.Any) -> bool:
        return isinstance(that, DocumentPath) and that.components == self.components

    def __hash__(self) -> int:
        return hash(self.components)
