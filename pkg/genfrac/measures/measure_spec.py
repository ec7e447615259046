"""
Parser for the textual measure grammar used by the CLI and problem files.

Grammar (whitespace is ignored between tokens)::

    measure  := stable | tempered | atoms | trunc | mix | sum
    stable   := "stable" "(" "beta" "=" NUM ["," "c" "=" NUM] ")"
    tempered := "tempered" "(" "beta" "=" NUM ["," "theta" "=" NUM] ["," "c" "=" NUM] ")"
    atoms    := "atoms" "[" [pair ("," pair)*] "]"
    pair     := "(" NUM "," NUM ")"                  position, mass
    trunc    := "trunc" "(" measure "," "eps" "=" NUM ")"
    mix      := "mix" "(" term ("," term)* ")"
    term     := [NUM "*"] stable                    weight multiplies c
    sum      := "sum" "(" measure ("," measure)* ")"

Examples: ``stable(beta=0.5,c=1)``, ``atoms[(1,2.0),(3,0.5)]``,
``trunc(stable(beta=0.5,c=1),eps=1e-3)``,
``mix(0.3*stable(beta=0.4),0.7*stable(beta=0.8))``.

Errors raise :class:`MeasureSpecError` with the character position.
"""
import re
from typing import Dict, List, Tuple

from genfrac.errors import InvalidMeasureError, MeasureSpecError
from genfrac.measures.levy_measure import (
    FiniteDiscrete,
    LevyMeasure,
    StableFractional,
    StableMixture,
    Sum,
    TemperedStable,
    Truncated,
)

_NUMBER = re.compile(r'[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?')
_NAME = re.compile(r'[A-Za-z_]+')


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int = None):
        raise MeasureSpecError(message, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def expect(self, char: str):
        if self.peek() != char:
            found = self.peek() or 'end of input'
            self.error(f"expected '{char}' but found '{found}'")
        self.pos += 1

    def name(self) -> str:
        self.skip()
        match = _NAME.match(self.text, self.pos)
        if not match:
            self.error("expected a name")
        self.pos = match.end()
        return match.group(0)

    def number(self) -> float:
        self.skip()
        match = _NUMBER.match(self.text, self.pos)
        if not match:
            self.error("expected a number")
        self.pos = match.end()
        return float(match.group(0))

    def kwargs(self, allowed: Tuple[str, ...]) -> Dict[str, float]:
        values: Dict[str, float] = {}
        self.expect('(')
        while True:
            start = self.pos
            key = self.name()
            if key not in allowed:
                self.error(f"unknown parameter '{key}', expected one of {', '.join(allowed)}", start)
            if key in values:
                self.error(f"duplicate parameter '{key}'", start)
            self.expect('=')
            values[key] = self.number()
            if self.peek() == ',':
                self.pos += 1
                continue
            break
        self.expect(')')
        return values

    def measure(self) -> LevyMeasure:
        start = self.pos
        kind = self.name()
        try:
            if kind == 'stable':
                params = self.kwargs(('beta', 'c'))
                return self._stable(params, start)
            if kind == 'tempered':
                params = self.kwargs(('beta', 'theta', 'c'))
                if 'beta' not in params:
                    self.error("tempered(...) requires beta", start)
                return TemperedStable(params['beta'], params.get('theta', 0.0), params.get('c', 1.0))
            if kind == 'atoms':
                return FiniteDiscrete(tuple(self._atoms()))
            if kind == 'trunc':
                self.expect('(')
                base = self.measure()
                self.expect(',')
                key_pos = self.pos
                if self.name() != 'eps':
                    self.error("expected 'eps'", key_pos)
                self.expect('=')
                eps = self.number()
                self.expect(')')
                if eps <= 0:
                    self.error("eps must be positive", key_pos)
                return Truncated(base, eps)
            if kind == 'mix':
                return StableMixture(tuple(self._mix_terms()))
            if kind == 'sum':
                self.expect('(')
                members = [self.measure()]
                while self.peek() == ',':
                    self.pos += 1
                    members.append(self.measure())
                self.expect(')')
                return Sum(tuple(members))
        except InvalidMeasureError as e:
            raise MeasureSpecError(str(e), self.text, start) from e
        self.error(f"unknown measure '{kind}'", start)

    def _stable(self, params: Dict[str, float], start: int) -> StableFractional:
        if 'beta' not in params:
            self.error("stable(...) requires beta", start)
        return StableFractional(params['beta'], params.get('c', 1.0))

    def _atoms(self) -> List[Tuple[float, float]]:
        atoms = []
        self.expect('[')
        if self.peek() == ']':
            self.pos += 1
            return atoms
        while True:
            self.expect('(')
            y = self.number()
            self.expect(',')
            b = self.number()
            self.expect(')')
            atoms.append((y, b))
            if self.peek() == ',':
                self.pos += 1
                continue
            break
        self.expect(']')
        return atoms

    def _mix_terms(self) -> List[Tuple[float, float]]:
        terms = []
        self.expect('(')
        while True:
            weight = 1.0
            if self.peek() and (self.peek().isdigit() or self.peek() in '.+-'):
                weight = self.number()
                self.expect('*')
            start = self.pos
            if self.name() != 'stable':
                self.error("mixture terms must be stable(...)", start)
            component = self._stable(self.kwargs(('beta', 'c')), start)
            terms.append((component.beta, weight * component.c))
            if self.peek() == ',':
                self.pos += 1
                continue
            break
        self.expect(')')
        return terms


def parse_measure(text: str) -> LevyMeasure:
    """
    Parse a measure specification string.

    Args:
        text: Specification, e.g. ``"trunc(stable(beta=0.5,c=1),eps=1e-3)"``

    Returns:
        The corresponding LevyMeasure
    """
    if not text or not text.strip():
        raise MeasureSpecError("empty measure specification", text or '', 0)
    parser = _Parser(text)
    measure = parser.measure()
    if parser.peek():
        parser.error("unexpected trailing input")
    return measure
