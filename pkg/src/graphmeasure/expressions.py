"""Parser for function expressions and set literals.

Grammar::

    expr     := term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := rational | "ind" "{" wordlist "}" | "g" "[" word "]"
              | "g" "^" integer | "(" expr ")"
    rational := integer ["/" positive-integer]

A rational literal denotes the constant function with that value; ``1`` is
the constant function 1.  Word literals follow :func:`parse_word`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from graphmeasure.errors import IdentifierError, ParseError
from graphmeasure.graph import Graph
from graphmeasure.words import Word, format_word, parse_word


@dataclass(frozen=True)
class Node:
    pos: int = field(default=0, compare=False, kw_only=True)


@dataclass(frozen=True)
class Number(Node):
    value: Fraction


@dataclass(frozen=True)
class Indicator(Node):
    words: tuple


@dataclass(frozen=True)
class Neighborhood(Node):
    word: object


@dataclass(frozen=True)
class Monomial(Node):
    n: int


@dataclass(frozen=True)
class BinOp(Node):
    op: str
    left: Node
    right: Node


_WORD_RE = re.compile(r"[A-Za-z0-9_]+(?:\^-1)?(?:\s*\.\s*[A-Za-z0-9_]+(?:\^-1)?)*")


class _Parser:
    def __init__(self, text: str, graph: Graph | None):
        self.text = text
        self.i = 0
        self.graph = graph

    def error(self, message, pos=None):
        pos = self.i if pos is None else pos
        return ParseError(f"{message} at position {pos + 1}", 1, pos + 1)

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.i)

    def expect(self, s: str):
        if not self.peek(s):
            found = self.text[self.i:self.i + 1] or "end of input"
            raise self.error(f"expected {s!r}, found {found!r}")
        self.i += len(s)

    def at_end(self) -> bool:
        self.skip()
        return self.i >= len(self.text)

    def integer(self, signed=False) -> int:
        self.skip()
        m = re.compile(r"-?\d+" if signed else r"\d+").match(self.text, self.i)
        if not m:
            raise self.error("expected an integer")
        self.i = m.end()
        return int(m.group())

    def word(self):
        self.skip()
        start = self.i
        m = _WORD_RE.match(self.text, self.i)
        if not m:
            raise self.error("expected a word literal")
        self.i = m.end()
        literal = re.sub(r"\s+", "", m.group())
        if self.graph is None:
            return literal
        try:
            return parse_word(literal, self.graph)
        except (IdentifierError, ParseError) as exc:
            raise self.error(f"unknown word literal {literal!r} ({exc})", start) from None

    def expr(self) -> Node:
        node = self.term()
        while True:
            self.skip()
            pos = self.i
            if self.peek("+"):
                self.i += 1
                node = BinOp("+", node, self.term(), pos=pos)
            elif self.peek("-"):
                self.i += 1
                node = BinOp("-", node, self.term(), pos=pos)
            else:
                return node

    def term(self) -> Node:
        node = self.factor()
        while True:
            self.skip()
            pos = self.i
            if self.peek("*"):
                self.i += 1
                node = BinOp("*", node, self.factor(), pos=pos)
            else:
                return node

    def factor(self) -> Node:
        self.skip()
        pos = self.i
        if self.peek("("):
            self.i += 1
            node = self.expr()
            self.expect(")")
            return node
        if self.peek("ind"):
            self.i += 3
            self.expect("{")
            words = []
            if not self.peek("}"):
                words.append(self.word())
                while self.peek(","):
                    self.i += 1
                    words.append(self.word())
            self.expect("}")
            return Indicator(tuple(words), pos=pos)
        if self.peek("g"):
            self.i += 1
            if self.peek("["):
                self.i += 1
                w = self.word()
                self.expect("]")
                return Neighborhood(w, pos=pos)
            if self.peek("^"):
                self.i += 1
                at = self.i
                n = self.integer(signed=True)
                if n == 0:
                    raise self.error("exponent must be nonzero", at)
                return Monomial(n, pos=pos)
            raise self.error("expected '[' or '^' after 'g'")
        if self.peek("-") and not self.text[self.i + 1:self.i + 2].isdigit():
            self.i += 1
            return BinOp("*", Number(Fraction(-1), pos=pos), self.factor(), pos=pos)
        if self.peek("-") or (self.i < len(self.text) and self.text[self.i].isdigit()):
            num = self.integer(signed=True)
            den = 1
            if self.peek("/"):
                self.i += 1
                at = self.i
                den = self.integer()
                if den == 0:
                    raise self.error("denominator must be positive", at)
            return Number(Fraction(num, den), pos=pos)
        found = self.text[self.i:self.i + 1] or "end of input"
        raise self.error(f"unexpected {found!r}")


def parse_expression(text: str, graph: Graph | None = None) -> Node:
    """Parse ``text``; with a graph, word literals are resolved to words."""
    p = _Parser(text, graph)
    node = p.expr()
    if not p.at_end():
        raise p.error(f"unexpected {p.text[p.i]!r}")
    return node


def _word_text(w) -> str:
    return format_word(w) if isinstance(w, Word) else w


def format_expression(node: Node) -> str:
    """Canonical text form; parsing it gives back an equal tree."""
    if isinstance(node, Number):
        v = node.value
        text = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return text
    if isinstance(node, Indicator):
        return "ind{" + ",".join(_word_text(w) for w in node.words) + "}"
    if isinstance(node, Neighborhood):
        return f"g[{_word_text(node.word)}]"
    if isinstance(node, Monomial):
        return f"g^{node.n}"
    if isinstance(node, BinOp):
        left = format_expression(node.left)
        right = format_expression(node.right)
        if node.op == "*":
            if isinstance(node.left, BinOp) and node.left.op != "*":
                left = f"({left})"
            if isinstance(node.right, BinOp):
                right = f"({right})"
        elif isinstance(node.right, BinOp) and node.right.op != "*":
            right = f"({right})"
        return f"{left} {node.op} {right}"
    raise TypeError(f"not an expression node: {node!r}")


def parse_set_literal(text: str, graph: Graph) -> list:
    """Parse ``{w1, w2, ...}`` into a list of words."""
    stripped = text.strip()
    if not (stripped.startswith("{") and stripped.endswith("}")):
        raise ParseError(f"set literal must be enclosed in braces: {text!r}")
    body = stripped[1:-1].strip()
    if not body:
        return []
    words = []
    for part in body.split(","):
        try:
            words.append(parse_word(part, graph))
        except IdentifierError as exc:
            raise ParseError(f"unknown word literal {part.strip()!r} ({exc})") from None
    return words


def format_set_literal(words) -> str:
    return "{" + ",".join(_word_text(w) for w in words) + "}"
