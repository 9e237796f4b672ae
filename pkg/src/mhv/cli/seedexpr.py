"""Parser for vector expressions such as ``h(-1/2)^2 * d(0) * w + 2*w`` or ``t^2 (x) w``.

Grammar::

    expr    := ['+' | '-'] term (('+' | '-') term)*
    term    := [scalar '*'] (key | '(' expr ')')
    key     := group ('(x)' group)*
    group   := factor ('*' factor)*
    factor  := 'd(' int ')' ['^' int] | 'h(' int '/' int ')' ['^' int] | 'w' | 't' ['^' int]
    scalar  := int ['/' int]

A group denotes one basis key of a non-tensor module: a canonical PBW
monomial ending in ``w``, or ``t^j``.  The number of groups must match the
number of tensor factors of the module.
"""
import re
from fractions import Fraction

from ..errors import BasisKeyError, ParseError
from ..liealg.algebra import Generator
from ..modops.modules import OmegaModule, TensorModule
from ..modops.vectors import Vector, add_into

_TOKEN = re.compile(r"\s*(?:(?P<tensor>\(x\))|(?P<num>\d+)|(?P<sym>[-+*/^()])|(?P<name>[dhwt]))")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise ParseError(pos, "a token", text)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text, module):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.module = module

    # -- token helpers
    def peek(self, k=0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def fail(self, expected):
        raise ParseError(self.peek()[2], expected, self.text)

    def accept(self, value):
        if self.peek()[1] == value and self.peek()[0] != "end":
            self.i += 1
            return True
        return False

    def expect(self, value):
        if not self.accept(value):
            self.fail(repr(value))

    def integer(self, signed=False):
        neg = signed and self.accept("-")
        kind, val, _ = self.peek()
        if kind != "num":
            self.fail("an integer")
        self.i += 1
        return -int(val) if neg else int(val)

    # -- grammar
    def expr(self):
        out = {}
        sign = -1 if self.accept("-") else 1
        if sign == 1:
            self.accept("+")
        while True:
            for k, c in self.term().items():
                add_into(out, k, sign * c)
            if self.accept("+"):
                sign = 1
            elif self.accept("-"):
                sign = -1
            else:
                return out
            if self.accept("-"):
                sign = -sign

    def term(self):
        coef = Fraction(1)
        if self.peek()[0] == "num":
            num = self.integer()
            den = self.integer() if self.accept("/") else 1
            if den == 0:
                self.fail("a nonzero denominator")
            coef = Fraction(num, den)
            self.expect("*")
        if self.peek()[1] == "(":
            self.i += 1
            inner = self.expr()
            self.expect(")")
            return {k: coef * c for k, c in inner.items()}
        start = self.peek()[2]
        groups = [self.group()]
        while self.peek()[0] == "tensor":
            self.i += 1
            groups.append(self.group())
        key = _assemble(self.module, groups, start, self.text)
        return {key: coef}

    def group(self):
        factors = [self.factor()]
        while self.peek()[1] == "*":
            self.i += 1
            factors.append(self.factor())
        return factors

    def factor(self):
        kind, val, pos = self.peek()
        if kind != "name":
            self.fail("d(...), h(...), w or t")
        self.i += 1
        if val == "w":
            return ("w", pos)
        if val == "t":
            power = self.integer() if self.accept("^") else 1
            return ("t", power, pos)
        self.expect("(")
        if val == "d":
            gen = Generator("d", self.integer(signed=True))
        else:
            num = self.integer(signed=True)
            self.expect("/")
            if self.integer() != 2 or num % 2 == 0:
                self.fail("a half-odd index p/2")
            gen = Generator("h", num)
        self.expect(")")
        power = self.integer() if self.accept("^") else 1
        return ("g", gen, power, pos)


def _leaves(module):
    if isinstance(module, TensorModule):
        return _leaves(module.left) + _leaves(module.right)
    return [module]


def _group_key(module, factors, text):
    pos = factors[0][-1]
    if factors[0][0] == "t":
        if len(factors) != 1:
            raise ParseError(factors[1][-1], "end of a t^j factor", text)
        key = factors[0][1]
    else:
        if factors[-1][0] != "w":
            raise ParseError(factors[-1][-1], "a monomial ending in w", text)
        mono = []
        for f in factors[:-1]:
            if f[0] != "g":
                raise ParseError(f[-1], "d(...) or h(...)", text)
            mono.extend([f[1]] * f[2])
        key = tuple(mono)
    try:
        module.check_key(key)
    except BasisKeyError as exc:
        raise BasisKeyError(f"at position {pos}: {exc}") from None
    return key


def _assemble(module, groups, start, text):
    leaves = _leaves(module)
    if len(groups) != len(leaves):
        raise ParseError(start, f"{len(leaves)} tensor factor(s)", text)
    keys = iter([_group_key(m, g, text) for m, g in zip(leaves, groups)])

    def build(mod):
        if isinstance(mod, TensorModule):
            left = build(mod.left)
            return (left, build(mod.right))
        return next(keys)
    return build(module)


def parse_seed(text, module):
    """The vector denoted by ``text`` in ``module``."""
    p = _Parser(text, module)
    if p.peek()[1] == "0" and p.peek(1)[0] == "end":
        return module.zero()
    coords = p.expr()
    if p.peek()[0] != "end":
        p.fail("'+', '-' or end of input")
    return Vector._raw(module, coords)


def render(v):
    return v.render()
