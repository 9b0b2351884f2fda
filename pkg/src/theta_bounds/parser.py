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

"""Validated loading of input documents (graph files, certificate files).

Documents are JSON or YAML; both are read through the YAML safe loader. Every
validator takes the :class:`DocumentPath` of the value it checks so that
errors point at the offending entry.
"""

import collections.abc
import dataclasses
import pathlib
import typing

import yaml

from .document_path import DocumentPath
from .exact import Rational, parse_rational
from .exceptions import DomainError
from .utils import UNSPECIFIED, Unspecified


class InvalidDocumentError(Exception):
    def __init__(self, message: str, *, ctx: DocumentPath) -> None:
        super().__init__(message, ctx)

    @property
    def message(self) -> str:
        return typing.cast(str, self.args[0])

    @property
    def ctx(self) -> DocumentPath:
        return typing.cast(DocumentPath, self.args[1])

    def __str__(self) -> str:
        return f"{self.ctx}: {self.message}"


def validate_as_string(ctx: DocumentPath, v: typing.Any) -> str:
    if not isinstance(v, str):
        raise InvalidDocumentError(f"value must be a string, got {v!r}", ctx=ctx)
    return v


def validate_as_integer(ctx: DocumentPath, v: typing.Any) -> int:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise InvalidDocumentError(f"value must be an integer, got {v!r}", ctx=ctx)
    if isinstance(v, float):
        if not v.is_integer():
            raise InvalidDocumentError(f"value must be an integer, got {v!r}", ctx=ctx)
        v = int(v)
    return v


def validate_as_rational(ctx: DocumentPath, v: typing.Any) -> Rational:
    """Accept ``"p/q"`` strings and integers; floats are never exact enough."""
    if isinstance(v, bool):
        raise InvalidDocumentError(f"value must be a rational, got {v!r}", ctx=ctx)
    if isinstance(v, int):
        return Rational(v)
    if not isinstance(v, str):
        raise InvalidDocumentError(
            f'value must be a rational written as "p/q", got {v!r}', ctx=ctx
        )
    try:
        return parse_rational(v)
    except DomainError as e:
        raise InvalidDocumentError(str(e), ctx=ctx)


SCALAR_VALIDATORS: typing.Mapping[type, typing.Callable[[DocumentPath, typing.Any], typing.Any]] = {
    str: validate_as_string,
    int: validate_as_integer,
    Rational: validate_as_rational,
}

T = typing.TypeVar("T")


def validate_as_array(
    ctx: DocumentPath, class_: typing.Type[T], v: typing.Any
) -> typing.List[T]:
    if isinstance(v, (str, bytes)) or not isinstance(v, collections.abc.Sequence):
        raise InvalidDocumentError("value must be an array", ctx=ctx)
    validator = SCALAR_VALIDATORS.get(class_)
    if validator is None:
        return list(v)
    return [typing.cast(T, validator(ctx / i, e)) for i, e in enumerate(v)]


def validate_as_object(ctx: DocumentPath, v: typing.Any) -> typing.Mapping[str, typing.Any]:
    if not isinstance(v, collections.abc.Mapping):
        raise InvalidDocumentError(f"value must be an object, got {v!r}", ctx=ctx)
    return v


def _lookup(
    ctx: DocumentPath,
    m: typing.Mapping[str, typing.Any],
    prop_name: str,
    default: typing.Any,
) -> typing.Any:
    v = m.get(prop_name, UNSPECIFIED)
    if v is UNSPECIFIED:
        if default is UNSPECIFIED:
            raise InvalidDocumentError("no such property", ctx=ctx / prop_name)
        v = default
    return v


def get_as_str(
    ctx: DocumentPath,
    m: typing.Mapping[str, typing.Any],
    prop_name: str,
    default: typing.Union[str, Unspecified] = UNSPECIFIED,
) -> str:
    return validate_as_string(ctx / prop_name, _lookup(ctx, m, prop_name, default))


def get_as_int(
    ctx: DocumentPath,
    m: typing.Mapping[str, typing.Any],
    prop_name: str,
    default: typing.Union[int, Unspecified] = UNSPECIFIED,
) -> int:
    return validate_as_integer(ctx / prop_name, _lookup(ctx, m, prop_name, default))


def get_as_rational(
    ctx: DocumentPath,
    m: typing.Mapping[str, typing.Any],
    prop_name: str,
    default: typing.Union[Rational, Unspecified] = UNSPECIFIED,
) -> Rational:
    v = _lookup(ctx, m, prop_name, default)
    if isinstance(v, Rational):
        return v
    return validate_as_rational(ctx / prop_name, v)


def get_as_array(
    ctx: DocumentPath,
    m: typing.Mapping[str, typing.Any],
    prop_name: str,
    class_: typing.Type[T],
    default: typing.Union[typing.Sequence[T], Unspecified] = UNSPECIFIED,
) -> typing.List[T]:
    return validate_as_array(ctx / prop_name, class_, _lookup(ctx, m, prop_name, default))


def validate_index(ctx: DocumentPath, v: typing.Any, size: int) -> int:
    i = validate_as_integer(ctx, v)
    if not 0 <= i < size:
        raise InvalidDocumentError(f"index {i} is out of range [0, {size})", ctx=ctx)
    return i


@dataclasses.dataclass
class GraphDocument:
    ctx: DocumentPath
    vertices: int
    edges: typing.List[typing.Tuple[int, int]]
    generators: typing.List[typing.List[int]]


def build_graph_document_from_repr(ctx: DocumentPath, v: typing.Any) -> GraphDocument:
    """``{"vertices": N, "edges": [[i, j], ...], "generators": [[...], ...]}``."""
    m = validate_as_object(ctx, v)
    vertices = get_as_int(ctx, m, "vertices")
    if vertices < 1:
        raise InvalidDocumentError(
            f"need at least one vertex, got {vertices}", ctx=ctx / "vertices"
        )
    edges: typing.List[typing.Tuple[int, int]] = []
    for i, e in enumerate(get_as_array(ctx, m, "edges", object, [])):
        e_ctx = ctx / "edges" / i
        pair = validate_as_array(e_ctx, object, e)
        if len(pair) != 2:
            raise InvalidDocumentError(
                f"an edge has two endpoints, got {len(pair)}", ctx=e_ctx
            )
        a, b = (validate_index(e_ctx / j, x, vertices) for j, x in enumerate(pair))
        if a == b:
            raise InvalidDocumentError(f"loop at vertex {a}", ctx=e_ctx)
        edges.append((a, b))
    generators: typing.List[typing.List[int]] = []
    for i, g in enumerate(get_as_array(ctx, m, "generators", object, [])):
        g_ctx = ctx / "generators" / i
        images = validate_as_array(g_ctx, object, g)
        if len(images) != vertices:
            raise InvalidDocumentError(
                f"a generator lists {vertices} images, got {len(images)}", ctx=g_ctx
            )
        generators.append(
            [validate_index(g_ctx / j, x, vertices) for j, x in enumerate(images)]
        )
    return GraphDocument(ctx=ctx, vertices=vertices, edges=edges, generators=generators)


def load_document(path: pathlib.Path) -> typing.Any:
    with path.open("r") as f:
        try:
            return yaml.load(f, Loader=yaml.SafeLoader)
        except yaml.YAMLError as e:
            raise InvalidDocumentError(str(e), ctx=DocumentPath())


def load_graph_document(path: pathlib.Path) -> GraphDocument:
    return build_graph_document_from_repr(DocumentPath(), load_document(path))
