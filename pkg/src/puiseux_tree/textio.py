"""Text forms for series, points and verification reports.

Series grammar (whitespace insensitive)::

    series := ['+'|'-'] term (('+'|'-') term)*
    term   := coeff | coeff '*' mono | mono | 'O' '(' mono ')'
    mono   := 'X' ['^' exp]
    exp    := int | '(' int ['/' int] ')'
    coeff  := int ['/' int]

``O(X^e)`` marks a truncated series and may appear once.  Output always
parenthesizes exponents other than 0 and 1, writes coefficients as ``p/q``
in lowest terms, and lists terms by descending exponent.
"""

import json
from fractions import Fraction

from .series import PuiseuxSeries, make_series

__all__ = [
    "SeriesSyntaxError",
    "ZeroDenominator",
    "parse_series",
    "format_series",
    "parse_rational",
    "format_rational",
    "parse_point",
    "format_point",
    "parse_tree_point",
    "format_tree_point",
    "report_to_json",
    "reports_to_json",
    "GRAMMAR_HELP",
]

GRAMMAR_HELP = """\
series  := ['-'] term (('+'|'-') term)*    e.g.  X^(-1/2) + 3/4*X^(-3/4) - 2
term    := coeff | coeff '*' mono | mono | 'O(' mono ')'  (truncation, at most once)
mono    := 'X' ['^' exp]               exp := int | '(' int ['/' int] ')'
coeff   := int ['/' int]
point   := series ';' series           x ; y   with y > 0
tree pt := series ';' rational         u ; t   (u is truncated above t)"""


class SeriesSyntaxError(ValueError):
    """Malformed series text; ``offset`` is the byte offset of the problem."""

    def __init__(self, message, text, offset):
        self.text = text
        self.offset = offset
        super().__init__(f"{message} at byte {offset}")


class ZeroDenominator(SeriesSyntaxError):
    pass


class _Parser:
    def __init__(self, text):
        self.text = text
        self.data = text.encode("utf-8")
        self.pos = 0

    def error(self, message, cls=SeriesSyntaxError, offset=None):
        raise cls(message, self.text, self.pos if offset is None else offset)

    def skip_ws(self):
        while self.pos < len(self.data) and self.data[self.pos] in b" \t\r\n":
            self.pos += 1

    def peek(self):
        self.skip_ws()
        if self.pos < len(self.data):
            return chr(self.data[self.pos])
        return ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self, signed=False):
        self.skip_ws()
        start = self.pos
        if signed and self.peek() in ("+", "-"):
            self.pos += 1
            self.skip_ws()
        digits_start = self.pos
        while self.pos < len(self.data) and chr(self.data[self.pos]).isdigit():
            self.pos += 1
        if self.pos == digits_start:
            self.error("expected an integer")
        if self.pos < len(self.data) and chr(self.data[self.pos]) in ".eE":
            self.error("decimal literals are not accepted; write p/q")
        raw = self.data[start:self.pos].decode("ascii").replace(" ", "")
        return int(raw)

    def fraction(self, signed=False):
        num = self.integer(signed)
        if self.peek() == "/":
            self.pos += 1
            slash = self.pos
            den = self.integer()
            if den == 0:
                self.error("zero denominator", ZeroDenominator, offset=slash)
            return Fraction(num, den)
        return Fraction(num)

    def exponent(self):
        if self.peek() == "(":
            self.pos += 1
            value = self.fraction(signed=True)
            self.expect(")")
            return value
        return Fraction(self.integer(signed=True))

    def mono(self):
        self.expect("X")
        if self.peek() == "^":
            self.pos += 1
            return self.exponent()
        return Fraction(1)

    def term(self):
        """Return ('term', exp, coeff) or ('O', exp)."""
        ch = self.peek()
        if ch == "O":
            self.pos += 1
            self.expect("(")
            e = self.mono()
            self.expect(")")
            return ("O", e)
        if ch == "X":
            return ("term", self.mono(), Fraction(1))
        if ch.isdigit():
            c = self.fraction()
            if self.peek() == "*":
                self.pos += 1
                return ("term", self.mono(), c)
            return ("term", Fraction(0), c)
        self.error("expected a term")

    def series(self):
        pairs = []
        precision = None
        sgn = 1
        if self.peek() in ("+", "-"):
            sgn = -1 if self.peek() == "-" else 1
            self.pos += 1
        while True:
            self.skip_ws()
            start = self.pos
            item = self.term()
            if item[0] == "O":
                if precision is not None:
                    self.error("more than one O(...) term", offset=start)
                precision = item[1]
            else:
                pairs.append((item[1], sgn * item[2]))
            ch = self.peek()
            if ch in ("+", "-"):
                sgn = -1 if ch == "-" else 1
                self.pos += 1
                continue
            break
        return make_series(pairs, precision)


def parse_series(text):
    """Parse series text into a canonical :class:`PuiseuxSeries`."""
    p = _Parser(text)
    result = p.series()
    if p.peek():
        p.error("unexpected trailing input")
    return result


def parse_rational(text):
    p = _Parser(text)
    value = p.fraction(signed=True)
    if p.peek():
        p.error("unexpected trailing input")
    return value


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _format_mono(e):
    if e == 1:
        return "X"
    return f"X^({format_rational(e)})"


def _format_term(e, c):
    # c > 0 here; the sign is emitted by the caller
    if e == 0:
        return format_rational(c)
    if c == 1:
        return _format_mono(e)
    return f"{format_rational(c)}*{_format_mono(e)}"


def format_series(s):
    parts = []
    for e, c in s.terms:
        body = _format_term(e, abs(c))
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    if s.precision is not None:
        o = f"O({_format_mono(s.precision)})"
        parts.append(f"+ {o}" if parts else o)
    return " ".join(parts) if parts else "0"


def _split_pair(text, what):
    pieces = text.split(";")
    if len(pieces) != 2:
        raise SeriesSyntaxError(f"{what} must look like 'a ; b'", text, len(text.encode("utf-8")))
    first, second = pieces
    return first, second, len(first.encode("utf-8")) + 1


def _parse_part(text, offset, fn):
    try:
        return fn(text)
    except SeriesSyntaxError as exc:
        raise type(exc)(str(exc).rsplit(" at byte", 1)[0], text, exc.offset + offset) from None


def parse_point(text):
    """Parse ``"x ; y"`` into an :class:`~puiseux_tree.hplane.HPoint`."""
    from .hplane import HPoint

    x_text, y_text, offset = _split_pair(text, "point")
    x = _parse_part(x_text, 0, parse_series)
    y = _parse_part(y_text, offset, parse_series)
    return HPoint(x, y)


def format_point(z):
    return f"{format_series(z.x)} ; {format_series(z.y)}"


def parse_tree_point(text):
    """Parse ``"u ; t"``; ``u`` is canonicalized by truncating above ``t``."""
    from .tree import TreePoint

    u_text, t_text, offset = _split_pair(text, "tree point")
    u = _parse_part(u_text, 0, parse_series)
    t = _parse_part(t_text, offset, parse_rational)
    return TreePoint.canonical(u, t)


def format_tree_point(p):
    return f"{format_series(p.u)} ; {format_rational(p.t)}"


def _jsonable(value):
    if isinstance(value, PuiseuxSeries):
        return format_series(value)
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, float):
        return "-inf" if value == float("-inf") else repr(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, "to_text"):
        return value.to_text()
    return value


def reports_to_json(command, params, reports):
    """Serialize verification reports with a fixed key order."""
    summary = {"pass": 0, "fail": 0, "skip": 0}
    checks = []
    for r in reports:
        summary[r.status] += 1
        checks.append({"name": r.name, "status": r.status, "witness": _jsonable(r.witness)})
    doc = {"command": command, "params": _jsonable(params), "checks": checks, "summary": summary}
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def report_to_json(report, command=None, params=None):
    return reports_to_json(command or report.name, params if params is not None else report.params, [report])
