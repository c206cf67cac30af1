"""JSON system files.

A system file looks like::

    {
      "variables": ["x", "y"],
      "system": [
        [{"coeff": "1", "exponent": [1, 0]}, {"coeff": "-2", "exponent": [0, 0]}],
        [{"coeff": "1/2", "exponent": [0, 1]}, {"coeff": "3", "exponent": [0, 0]}]
      ]
    }

Coefficients are strings holding exact rationals (``"p/q"``, ``"p"``);
integers are accepted too. Floats are refused since they are not exact.
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, UnknownVariable
from .laurent import LaurentPoly


@dataclass(frozen=True)
class SystemFile:
    variables: tuple
    polys: tuple

    @property
    def n(self):
        return len(self.variables)

    def index(self, name):
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariable(f"unknown variable {name!r}; have {list(self.variables)}") from None


def parse_coeff(value, where):
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError("coefficient must be an exact rational string or integer", where)
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise ParseError("coefficient must be a string", where)
    try:
        return Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"cannot parse {value!r} as a rational", where) from None


def parse_poly(terms, n, where="poly", allow_empty=False):
    """Parse a term list (or a bare constant) into a :class:`LaurentPoly`."""
    if isinstance(terms, (str, int)) and not isinstance(terms, bool):
        return LaurentPoly.constant(parse_coeff(terms, where), n)
    if not isinstance(terms, list):
        raise ParseError("polynomial must be a list of terms", where)
    if not terms and not allow_empty:
        raise ParseError("polynomial has no terms", where)
    out = []
    for k, term in enumerate(terms):
        tw = f"{where}[{k}]"
        if not isinstance(term, dict) or set(term) != {"coeff", "exponent"}:
            raise ParseError("term must be an object with keys 'coeff' and 'exponent'", tw)
        exp = term["exponent"]
        if not isinstance(exp, list) or not all(isinstance(e, int) and not isinstance(e, bool) for e in exp):
            raise ParseError("exponent must be a list of integers", tw + ".exponent")
        if len(exp) != n:
            raise ParseError(f"exponent has length {len(exp)}, expected {n}", tw + ".exponent")
        out.append((tuple(exp), parse_coeff(term["coeff"], tw + ".coeff")))
    return LaurentPoly(out, n)


def parse_system(data):
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", "$")
    variables = data.get("variables")
    system = data.get("system")
    if not isinstance(variables, list) or not variables or not all(isinstance(v, str) for v in variables):
        raise ParseError("'variables' must be a nonempty list of names", "$.variables")
    if len(set(variables)) != len(variables):
        raise ParseError("duplicate variable names", "$.variables")
    n = len(variables)
    if not isinstance(system, list):
        raise ParseError("'system' must be a list of polynomials", "$.system")
    if len(system) != n:
        raise ParseError(f"need {n} polynomials for {n} variables, got {len(system)}", "$.system")
    polys = tuple(parse_poly(p, n, f"$.system[{i}]") for i, p in enumerate(system))
    for i, p in enumerate(polys):
        if p.is_zero():
            raise ParseError("polynomial is identically zero", f"$.system[{i}]")
    return SystemFile(tuple(variables), polys)


def loads(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    return parse_system(data)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def format_rational(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def poly_to_terms(p):
    return [{"coeff": format_rational(c), "exponent": list(e)} for e, c in p]


def dump_system(sf):
    return {"variables": list(sf.variables), "system": [poly_to_terms(p) for p in sf.polys]}


def dumps(sf, indent=2):
    return json.dumps(dump_system(sf), indent=indent)
