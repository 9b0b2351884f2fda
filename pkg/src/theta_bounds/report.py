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

"""Rendering of command results as text, JSON or CSV."""

import csv
import io
import json
import typing

import jinja2

from .exact import Rational, UniPoly, format_rational
from .utils import StrEnum


class OutputFormat(StrEnum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


def format_poly(p: UniPoly, var: str = "t") -> str:
    if p.is_zero():
        return "0"
    terms = []
    for i in range(p.degree, -1, -1):
        c = p.coefficients[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = format_rational(abs(c))
        if i == 0:
            body = mag
        else:
            power = var if i == 1 else f"{var}^{i}"
            body = power if mag == "1" else f"{mag}*{power}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def format_scalar(v: typing.Union[Rational, float, int]) -> str:
    if isinstance(v, float):
        return f"{v:.6f}"
    return format_rational(v)


def format_decimal(v: typing.Union[Rational, float, int]) -> str:
    return f"{float(v):.6f}"


def make_environment() -> jinja2.Environment:
    env = jinja2.Environment(
        loader=jinja2.PackageLoader(__name__.rpartition(".")[0], "templates"),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
        undefined=jinja2.StrictUndefined,
    )
    env.filters.update(
        {
            "rational": format_rational,
            "scalar": format_scalar,
            "decimal": format_decimal,
            "poly": format_poly,
        }
    )
    return env


_environment: typing.Optional[jinja2.Environment] = None


def render_text(template: str, **context: typing.Any) -> str:
    global _environment
    if _environment is None:
        _environment = make_environment()
    return _environment.get_template(f"{template}.txt.jinja2").render(**context)


def render_json(document: typing.Mapping[str, typing.Any]) -> str:
    return json.dumps(document, sort_keys=True) + "\n"


def render_csv(header: typing.Sequence[str], rows: typing.Iterable[typing.Sequence[typing.Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()
