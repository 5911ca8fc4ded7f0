"""A small expression language for q-products.

Grammar::

    expr    := product {("+" | "-") product}
    product := factor {("*" | "/") factor}
    factor  := atom ["^" int]
    atom    := uint | "(" expr ")" | poch | jterm
    poch    := "(" ["-"] "q" ["^" uint] ";" "q" ["^" uint] ")"
    jterm   := "J(" uint ["," uint] ")"

``int`` may carry a leading minus. A bare ``q`` is not a factor: monomial
shifts never appear on their own.

    >>> evaluate(parse("1/((-q;q)^2)"), 4).coeffs
    (1, -2, 1, -2, 4)
"""

from __future__ import annotations

from dataclasses import dataclass

from . import series
from .series import PochhammerSpec, QSeries


class QExprSyntaxError(SyntaxError):
    def __init__(self, message: str, offset: int, text: str = ""):
        self.position = offset
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.text = text


@dataclass(frozen=True)
class IntLiteral:
    value: int


@dataclass(frozen=True)
class Pochhammer:
    sign: int
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError("Pochhammer offset and step must be positive")


@dataclass(frozen=True)
class JTerm:
    s: int
    t: int | None = None

    def __post_init__(self):
        if self.t is not None and self.s >= self.t:
            raise ValueError(f"J({self.s},{self.t}) needs s < t")


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int


@dataclass(frozen=True)
class Mul:
    factors: tuple


@dataclass(frozen=True)
class Div:
    numerator: object
    denominator: object


@dataclass(frozen=True)
class Add:
    terms: tuple  # of (sign, node)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.data = text.encode()
        self.pos = 0

    def error(self, expected: str):
        self.skip()
        if self.pos < len(self.data):
            found = repr(chr(self.data[self.pos]))
        else:
            found = "end of input"
        raise QExprSyntaxError(f"expected {expected}, found {found}", self.pos, self.text)

    def skip(self):
        while self.pos < len(self.data) and self.data[self.pos] in b" \t\r\n":
            self.pos += 1

    def peek(self, offset: int = 0) -> str:
        # position of the offset-th non-space character from here
        self.skip()
        i = self.pos
        for _ in range(offset):
            i += 1
            while i < len(self.data) and self.data[i] in b" \t\r\n":
                i += 1
        return chr(self.data[i]) if i < len(self.data) else ""

    def accept(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.accept(ch):
            self.error(repr(ch))

    def uint(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.data) and chr(self.data[self.pos]).isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("an unsigned integer")
        return int(self.data[start : self.pos])

    def signed_int(self) -> int:
        neg = self.accept("-")
        v = self.uint()
        return -v if neg else v

    def parse(self):
        node = self.expr()
        self.skip()
        if self.pos != len(self.data):
            self.error("'+', '-', '*', '/' or end of input")
        return node

    def expr(self):
        terms = [(1, self.product())]
        while self.peek() in ("+", "-") and self.peek():
            sign = 1 if self.peek() == "+" else -1
            self.pos += 1
            terms.append((sign, self.product()))
        return terms[0][1] if len(terms) == 1 else Add(tuple(terms))

    def product(self):
        node = self.factor()
        factors = [node]
        while self.peek() in ("*", "/") and self.peek():
            op = self.peek()
            self.pos += 1
            rhs = self.factor()
            if op == "*":
                factors.append(rhs)
            else:
                num = factors[0] if len(factors) == 1 else Mul(tuple(factors))
                factors = [Div(num, rhs)]
        return factors[0] if len(factors) == 1 else Mul(tuple(factors))

    def factor(self):
        node = self.atom()
        if self.accept("^"):
            node = Power(node, self.signed_int())
        return node

    def atom(self):
        ch = self.peek()
        if ch.isdigit() and ch:
            return IntLiteral(self.uint())
        if ch == "J":
            self.pos += 1
            self.expect("(")
            s = self.uint()
            t = self.uint() if self.accept(",") else None
            self.expect(")")
            if s < 1 or (t is not None and t <= s):
                raise QExprSyntaxError(f"J({s},{t}) needs 1 <= s < t", self.pos, self.text)
            return JTerm(s, t)
        if ch == "(":
            if self.peek(1) == "q" or (self.peek(1) == "-" and self.peek(2) == "q"):
                return self.poch()
            self.pos += 1
            node = self.expr()
            self.expect(")")
            return node
        self.error("an integer, '(' or 'J('")

    def poch(self):
        self.expect("(")
        sign = -1 if self.accept("-") else 1
        self.expect("q")
        a = self.uint() if self.accept("^") else 1
        self.expect(";")
        self.expect("q")
        b = self.uint() if self.accept("^") else 1
        self.expect(")")
        if a < 1 or b < 1:
            raise QExprSyntaxError("Pochhammer exponents must be positive", self.pos, self.text)
        return Pochhammer(sign, a, b)


def parse(text: str):
    return _Parser(text).parse()


def _power_text(p: str, e: int) -> str:
    return p if e == 1 else f"q^{e}"


def to_text(node) -> str:
    """Canonical text form; ``parse(to_text(x)) == x`` for any parsed ``x``."""
    if isinstance(node, IntLiteral):
        return str(node.value)
    if isinstance(node, Pochhammer):
        lead = "-" if node.sign < 0 else ""
        return f"({lead}{_power_text('q', node.a)};{_power_text('q', node.b)})"
    if isinstance(node, JTerm):
        return f"J({node.s})" if node.t is None else f"J({node.s},{node.t})"
    if isinstance(node, Power):
        return f"{_wrap(node.base)}^{node.exponent}"
    if isinstance(node, Mul):
        return "*".join(_wrap(f) for f in node.factors)
    if isinstance(node, Div):
        num = node.numerator
        left = to_text(num) if isinstance(num, (Mul, Div)) else _wrap(num)
        return f"{left}/{_wrap(node.denominator)}"
    if isinstance(node, Add):
        out = []
        for i, (sign, term) in enumerate(node.terms):
            body = to_text(term) if isinstance(term, (Mul, Div)) else _wrap(term)
            if i == 0:
                # a leading minus is not expressible; parse never produces one
                out.append(body)
            else:
                out.append(("+ " if sign > 0 else "- ") + body)
        return " ".join(out)
    raise TypeError(f"not a ProductExpr node: {node!r}")


def _wrap(node) -> str:
    text = to_text(node)
    if isinstance(node, (IntLiteral, Pochhammer, JTerm)):
        return text
    return f"({text})"


def evaluate(node, order: int) -> QSeries:
    if isinstance(node, IntLiteral):
        return series.constant(node.value, order)
    if isinstance(node, Pochhammer):
        return series.pochhammer(PochhammerSpec(node.sign, node.a, node.b), order)
    if isinstance(node, JTerm):
        return series.j_product(node.s, node.t, order)
    if isinstance(node, Power):
        return series.power(evaluate(node.base, order), node.exponent)
    if isinstance(node, Mul):
        return series.product(evaluate(f, order) for f in node.factors)
    if isinstance(node, Div):
        num = evaluate(node.numerator, order)
        if isinstance(node.denominator, IntLiteral):
            return series.int_divide(num, node.denominator.value)
        return num * series.invert(evaluate(node.denominator, order))
    if isinstance(node, Add):
        total = series.zero(order)
        for sign, term in node.terms:
            value = evaluate(term, order)
            total = total + value if sign > 0 else total - value
        return total
    raise TypeError(f"not a ProductExpr node: {node!r}")


def expand(text: str, order: int) -> QSeries:
    return evaluate(parse(text), order)
