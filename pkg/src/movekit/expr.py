"""Function-text interpreter: text to a postfix program, then evaluation.

The accepted language: unsigned decimal numbers like 12 or 0.75, a single
argument written as any of x/p/r (either case), the functions sin cos tg sh
ch th ln lg exp sqrt mod arcsin arccos arctg (case-insensitive, mod meaning
absolute value), the operators + - * / ^ and round brackets.  '^' binds
tightest and associates to the right, so 2^3^2 is 512 and -x^2 is -(x*x).
A '-' at the start of an expression or bracket group negates the whole
additive chain after it.  There is no implicit multiplication.
"""

import math
from dataclasses import dataclass, field
from enum import Enum, auto

from .geometry import LinearMap, map_value


class ErrorKind(Enum):
    UNKNOWN_TOKEN = auto()
    UNBALANCED_BRACKET = auto()
    MISSING_OPERAND = auto()
    MISSING_OPERATOR = auto()
    EMPTY_INPUT = auto()
    BAD_NUMBER = auto()


@dataclass(frozen=True)
class ParseError:
    """What went wrong and where; position is a 0-based index, or the input
    length when the trouble is the input ending too soon."""
    kind: ErrorKind
    position: int


class ElemKind(Enum):
    NUMBER = auto()
    ARGUMENT = auto()
    NEGATE = auto()
    BINARY = auto()
    FUNCTION = auto()


@dataclass(frozen=True)
class Elem:
    kind: ElemKind
    value: float = 0.0
    name: str = ""


@dataclass
class RpnProgram:
    """Evaluation-ordered element list; never underflows, ends with one value."""
    elements: list = field(default_factory=list)


@dataclass(frozen=True)
class EvalOutcome:
    ok: bool
    value: float = 0.0


FUNCTIONS = {
    "sin": math.sin, "cos": math.cos, "tg": math.tan,
    "sh": math.sinh, "ch": math.cosh, "th": math.tanh,
    "ln": math.log, "lg": math.log10, "exp": math.exp,
    "sqrt": math.sqrt, "mod": abs,
    "arcsin": math.asin, "arccos": math.acos, "arctg": math.atan,
}

_VARIABLES = frozenset("xprXPR")
_DIGITS = frozenset("0123456789")


def _is_letter(c):
    return "a" <= c <= "z" or "A" <= c <= "Z"


@dataclass(frozen=True)
class _Token:
    kind: str  # "num" | "var" | "func" | "op" | "(" | ")"
    pos: int
    value: float = 0.0
    name: str = ""


def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c in " \t\r\n":
            i += 1
            continue
        if c in _DIGITS:
            j = i
            while j < n and text[j] in _DIGITS:
                j += 1
            if j < n and text[j] == ".":
                if j + 1 >= n or text[j + 1] not in _DIGITS:
                    return ParseError(ErrorKind.BAD_NUMBER, j)
                j += 1
                while j < n and text[j] in _DIGITS:
                    j += 1
            tokens.append(_Token("num", i, value=float(text[i:j])))
            i = j
            continue
        if c == ".":  # a dot needs digits before it
            return ParseError(ErrorKind.BAD_NUMBER, i)
        if _is_letter(c):
            j = i
            while j < n and _is_letter(text[j]):
                j += 1
            word = text[i:j]
            if word.lower() in FUNCTIONS:
                tokens.append(_Token("func", i, name=word.lower()))
            elif len(word) == 1 and word in _VARIABLES:
                tokens.append(_Token("var", i))
            else:
                return ParseError(ErrorKind.UNKNOWN_TOKEN, i)
            i = j
            continue
        if c in "+-*/^":
            tokens.append(_Token("op", i, name=c))
            i += 1
            continue
        if c in "()":
            tokens.append(_Token(c, i))
            i += 1
            continue
        return ParseError(ErrorKind.UNKNOWN_TOKEN, i)
    return tokens


class _Bail(Exception):
    def __init__(self, kind, pos):
        super().__init__(kind)
        self.error = ParseError(kind, pos)


class _Parser:
    def __init__(self, tokens, length):
        self.tokens = tokens
        self.i = 0
        self.length = length
        self.out = []

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def here(self):
        t = self.peek()
        return t.pos if t is not None else self.length

    def expression(self):
        t = self.peek()
        negated = t is not None and t.kind == "op" and t.name == "-"
        if negated:
            self.i += 1
        self.additive()
        if negated:
            self.out.append(Elem(ElemKind.NEGATE))

    def additive(self):
        self.multiplicative()
        while True:
            t = self.peek()
            if t is None or t.kind != "op" or t.name not in ("+", "-"):
                return
            self.i += 1
            self.multiplicative()
            self.out.append(Elem(ElemKind.BINARY, name=t.name))

    def multiplicative(self):
        self.power()
        while True:
            t = self.peek()
            if t is None or t.kind != "op" or t.name not in ("*", "/"):
                return
            self.i += 1
            self.power()
            self.out.append(Elem(ElemKind.BINARY, name=t.name))

    def power(self):
        self.atom()
        t = self.peek()
        if t is not None and t.kind == "op" and t.name == "^":
            self.i += 1
            self.power()
            self.out.append(Elem(ElemKind.BINARY, name="^"))

    def atom(self):
        t = self.peek()
        if t is None:
            raise _Bail(ErrorKind.MISSING_OPERAND, self.length)
        if t.kind == "num":
            self.i += 1
            self.out.append(Elem(ElemKind.NUMBER, value=t.value))
            return
        if t.kind == "var":
            self.i += 1
            self.out.append(Elem(ElemKind.ARGUMENT))
            return
        if t.kind == "func":
            self.i += 1
            u = self.peek()
            if u is None or u.kind != "(":
                raise _Bail(ErrorKind.MISSING_OPERAND, self.here())
            self.i += 1
            self.expression()
            self.close_bracket()
            self.out.append(Elem(ElemKind.FUNCTION, name=t.name))
            return
        if t.kind == "(":
            self.i += 1
            self.expression()
            self.close_bracket()
            return
        raise _Bail(ErrorKind.MISSING_OPERAND, t.pos)

    def close_bracket(self):
        t = self.peek()
        if t is None or t.kind != ")":
            raise _Bail(ErrorKind.UNBALANCED_BRACKET, self.here())
        self.i += 1


def analyse(text):
    """Parse text into a program, or hand back the first defect found.

    Returns an RpnProgram on success and a ParseError otherwise; no input
    raises.
    """
    tokens = _tokenize(text)
    if isinstance(tokens, ParseError):
        return tokens
    if not tokens:
        return ParseError(ErrorKind.EMPTY_INPUT, 0)
    parser = _Parser(tokens, len(text))
    try:
        parser.expression()
    except _Bail as bail:
        return bail.error
    t = parser.peek()
    if t is not None:
        if t.kind == ")":
            return ParseError(ErrorKind.UNBALANCED_BRACKET, t.pos)
        return ParseError(ErrorKind.MISSING_OPERATOR, t.pos)
    return RpnProgram(parser.out)


def _apply_binary(op, a, b):
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    return math.pow(a, b)


def calculate(program, arg):
    """Run the program on one argument.

    Domain trouble (square root of a negative, logarithm at or below zero,
    division by zero, a result running away to infinity) comes back as
    ok=False; nothing raises.
    """
    stack = []
    try:
        for e in program.elements:
            if e.kind is ElemKind.NUMBER:
                stack.append(e.value)
            elif e.kind is ElemKind.ARGUMENT:
                stack.append(float(arg))
            elif e.kind is ElemKind.NEGATE:
                stack[-1] = -stack[-1]
            elif e.kind is ElemKind.FUNCTION:
                stack[-1] = FUNCTIONS[e.name](stack[-1])
            else:
                b = stack.pop()
                stack[-1] = _apply_binary(e.name, stack[-1], b)
    except (ValueError, OverflowError, ZeroDivisionError):
        return EvalOutcome(False)
    value = stack[-1]
    if not math.isfinite(value):
        return EvalOutcome(False)
    return EvalOutcome(True, value)


def sample_y_of_x(program, x_range, n_pixels):
    """One sample per pixel column over x_range; None marks a gap.

    The result always has n_pixels entries.
    """
    if n_pixels < 2:
        raise ValueError("need at least two pixels")
    lo, hi = x_range
    m = LinearMap(lo, hi, 0.0, float(n_pixels - 1))
    points = []
    for px in range(n_pixels):
        x = map_value(m, float(px))
        out = calculate(program, x)
        points.append((x, out.value) if out.ok else None)
    return points


def sample_parametric(x_program, y_program, r_range, step):
    """Sweep r from low to high inclusive; each good r yields an (x, y) point.

    A failure of either coordinate leaves a None, splitting the polyline.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    lo, hi = r_range
    slack = step * 1e-9
    rs = []
    k = 0
    r = lo
    while r <= hi + slack:
        rs.append(r)
        k += 1
        r = lo + k * step
    if rs and hi - rs[-1] > slack:
        rs.append(hi)
    points = []
    for r in rs:
        ox = calculate(x_program, r)
        oy = calculate(y_program, r)
        points.append((ox.value, oy.value) if ox.ok and oy.ok else None)
    return points
