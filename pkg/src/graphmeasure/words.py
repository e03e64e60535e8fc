"""Words of the free semigroupoid of a (shadowed) graph.

A :class:`Word` is the empty word, a vertex, or an admissible nonempty
sequence of signed edges.  Concatenation of non-composable words yields the
empty word, which absorbs every further product.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from graphmeasure._core import kernels
from graphmeasure.errors import DomainError, IdentifierError, ParseError, UndefinedEndpointError
from graphmeasure.graph import INVERSE_MARKER, Edge, Graph


@dataclass(frozen=True)
class Word:
    vertex: str | None = None
    edges: tuple = ()

    def __post_init__(self):
        edges = tuple(self.edges)
        if self.vertex is not None and edges:
            raise DomainError("a word is either a vertex or a path, not both")
        for a, b in zip(edges, edges[1:]):
            if a.target != b.source:
                raise DomainError(f"inadmissible word: {a.id} then {b.id}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def empty(cls) -> Word:
        return cls()

    @classmethod
    def at(cls, v: str) -> Word:
        return cls(vertex=v)

    @classmethod
    def path(cls, edges: Iterable[Edge]) -> Word:
        edges = tuple(edges)
        if not edges:
            raise DomainError("a path needs at least one edge")
        return cls(edges=edges)

    @property
    def is_empty(self) -> bool:
        return self.vertex is None and not self.edges

    @property
    def is_vertex(self) -> bool:
        return self.vertex is not None

    @property
    def is_path(self) -> bool:
        return bool(self.edges)

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def source(self) -> str:
        if self.vertex is not None:
            return self.vertex
        if not self.edges:
            raise UndefinedEndpointError("the empty word has no source")
        return self.edges[0].source

    @property
    def range(self) -> str:
        if self.vertex is not None:
            return self.vertex
        if not self.edges:
            raise UndefinedEndpointError("the empty word has no range")
        return self.edges[-1].target

    @property
    def is_loop(self) -> bool:
        return self.is_path and self.source == self.range

    def __mul__(self, other: Word) -> Word:
        return concat(self, other)

    def __invert__(self) -> Word:
        return inverse(self)

    def __pow__(self, n: int) -> Word:
        return power(self, n)

    def __str__(self):
        return format_word(self)


EMPTY = Word()


def concat(w1: Word, w2: Word) -> Word:
    if w1.is_empty or w2.is_empty or w1.range != w2.source:
        return EMPTY
    if w1.is_vertex:
        return w2
    if w2.is_vertex:
        return w1
    return Word(edges=w1.edges + w2.edges)


def inverse(w: Word) -> Word:
    if not w.is_path:
        return w
    return Word(edges=tuple(~e for e in reversed(w.edges)))


def power(w: Word, n: int) -> Word:
    """``w**n`` under concatenation; negative ``n`` uses the inverse."""
    if n == 0:
        raise DomainError("zeroth power of a word is not a word")
    base = inverse(w) if n < 0 else w
    out = base
    for _ in range(abs(n) - 1):
        out = concat(out, base)
    return out


def reduce(w: Word) -> Word:
    """Cancel adjacent ``x x^-1`` pairs until none remain.

    A path that cancels completely becomes the vertex it started from.
    """
    if not w.is_path:
        return w
    stack: list = []
    for e in w.edges:
        if stack and stack[-1] == ~e:
            stack.pop()
        else:
            stack.append(e)
    if not stack:
        return Word.at(w.source)
    return Word(edges=tuple(stack))


def is_reduced(w: Word) -> bool:
    return all(b != ~a for a, b in zip(w.edges, w.edges[1:]))


def word_key(g: Graph, w: Word):
    """Deterministic ordering: length, then edge codes, then vertex order."""
    if w.is_empty:
        return (-1, ())
    if w.is_vertex:
        return (0, (g.vertices.index(w.vertex),))
    return (w.length, tuple(g.edge_code(e) for e in w.edges))


def enumerate_words(g: Graph, max_len: int) -> list:
    """Vertices and all admissible paths of length at most ``max_len``."""
    if max_len < 0:
        raise DomainError("max_len must be nonnegative")
    n, src, dst, codes, _, by_code = g.kernel_tables()
    words = [Word.at(v) for v in g.vertices]
    if max_len >= 1 and codes:
        for seq in kernels.walks(n, src, dst, codes, max_len):
            words.append(Word(edges=tuple(by_code[c] for c in seq)))
    return words


def signed_edge(g: Graph, token: str) -> Edge:
    """Resolve ``e`` or ``e^-1`` against the declared edges of ``g``."""
    inverse_ = token.endswith(INVERSE_MARKER)
    name = token[: -len(INVERSE_MARKER)] if inverse_ else token
    for e in g.edges:
        if e.name == name:
            base = e if not e.inverse else ~e
            return ~base if inverse_ else base
    raise IdentifierError(f"unknown edge {name!r}")


_TOKEN_RE = re.compile(r"[A-Za-z0-9_]+(?:\^-1)?\Z")


def parse_word(text: str, g: Graph) -> Word:
    """Parse a word literal: a vertex id or ``.``-joined signed edges."""
    text = text.strip()
    if not text:
        raise ParseError("empty word literal")
    if text in g.vertices:
        return Word.at(text)
    parts = text.split(".")
    edges = []
    for part in parts:
        part = part.strip()
        if not _TOKEN_RE.match(part):
            raise ParseError(f"malformed word literal {text!r}")
        edges.append(signed_edge(g, part))
    try:
        return Word.path(edges)
    except DomainError as exc:
        raise DomainError(f"word {text!r}: {exc}") from None


def format_word(w: Word) -> str:
    if w.is_empty:
        return "<empty>"
    if w.is_vertex:
        return w.vertex
    return ".".join(e.id for e in w.edges)
