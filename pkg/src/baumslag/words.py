"""Free words over a generator alphabet, presentations, and the shared
word grammar.

Grammar (used by the CLI, graph-of-groups files, and test fixtures):

    word  := term*
    term  := atom ("^" int)?
    atom  := ident | "(" word ")"
    ident := letter (letter | digit | "_")*
    int   := "-"? digit+

Whitespace between terms is optional.  Generator tokens are matched
maximal-munch against the declared alphabet, so single-letter generators
may be juxtaposed ("tat" over {a, t}) while multi-letter names such as
"e_bar" still tokenise as one generator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


class WordParseError(ValueError):
    """Base for word-syntax errors; carries the 0-based input position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownGeneratorError(WordParseError):
    pass


class MalformedExponentError(WordParseError):
    pass


class UnbalancedParenthesisError(WordParseError):
    pass


def _reduce(pairs: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    # Stack-based merge; cascaded cancellations resolve in one pass.
    stack: list[tuple[int, int]] = []
    for gen, exp in pairs:
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            merged = stack[-1][1] + exp
            stack.pop()
            if merged != 0:
                stack.append((gen, merged))
        else:
            stack.append((gen, exp))
    return tuple(stack)


class Word:
    """A freely reduced word: a sequence of (generator index, exponent)
    syllables with nonzero exponents and distinct adjacent generators.

    Construction normalises, so every Word in circulation is reduced.
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[tuple[int, int]] = ()):
        object.__setattr__(self, "letters", _reduce(letters))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __len__(self) -> int:
        """Number of syllables."""
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __invert__(self) -> "Word":
        return Word((g, -e) for g, e in reversed(self.letters))

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return (~self) ** (-k)
        out = Word()
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"Word({list(self.letters)!r})"

    @property
    def length(self) -> int:
        """Total letter count, counting |exponent| per syllable."""
        return sum(abs(e) for _, e in self.letters)


def free_reduce(letters: "Word | Iterable[tuple[int, int]]") -> Word:
    """Merge adjacent equal-generator syllables and drop zero exponents,
    iterating to a fixed point."""
    if isinstance(letters, Word):
        return Word(letters.letters)
    return Word(letters)


def concat(u: Word, v: Word) -> Word:
    return u * v


def invert_word(w: Word) -> Word:
    return ~w


def substitute(w: Word, images: Sequence[Word]) -> Word:
    """Replace every generator g by images[g], freely reducing the result."""
    out: list[tuple[int, int]] = []
    for gen, exp in w.letters:
        out.extend((images[gen] ** exp).letters)
    return Word(out)


def exponent_sums(w: Word, ngens: int) -> list[int]:
    sums = [0] * ngens
    for gen, exp in w.letters:
        sums[gen] += exp
    return sums


def parse_word(text: str, alphabet: Sequence[str]) -> Word:
    """Parse ``text`` over ``alphabet`` into a freely reduced Word.

    Raises UnknownGeneratorError, MalformedExponentError, or
    UnbalancedParenthesisError, each carrying the offending position.
    """
    index = {name: i for i, name in enumerate(alphabet)}
    # Longest declared name wins at every position.
    names = sorted(index, key=lambda s: (-len(s), s))

    def skip_ws(i: int) -> int:
        while i < len(text) and text[i].isspace():
            i += 1
        return i

    def parse_int(i: int) -> tuple[int, int]:
        start = i
        if i < len(text) and text[i] == "-":
            i += 1
        digits = i
        while i < len(text) and text[i].isdigit():
            i += 1
        if i == digits:
            raise MalformedExponentError("malformed exponent", start)
        return int(text[start:i]), i

    def parse_sequence(i: int, open_at: int | None) -> tuple[list[tuple[int, int]], int]:
        letters: list[tuple[int, int]] = []
        while True:
            i = skip_ws(i)
            if i >= len(text):
                if open_at is not None:
                    raise UnbalancedParenthesisError("unclosed parenthesis", open_at)
                return letters, i
            c = text[i]
            if c == ")":
                if open_at is None:
                    raise UnbalancedParenthesisError("unmatched closing parenthesis", i)
                return letters, i
            if c == "(":
                inner, j = parse_sequence(i + 1, i)
                atom = inner
                i = j + 1  # past ')'
            else:
                hit = next((n for n in names if text.startswith(n, i)), None)
                if hit is None:
                    m = IDENT_RE.match(text, i)
                    if m:
                        raise UnknownGeneratorError(f"unknown generator {m.group()!r}", i)
                    raise WordParseError(f"unexpected character {c!r}", i)
                atom = [(index[hit], 1)]
                i += len(hit)
            i = skip_ws(i)
            if i < len(text) and text[i] == "^":
                exp, i = parse_int(skip_ws(i + 1))
            else:
                exp = 1
            if exp >= 0:
                piece = atom * exp
            else:
                piece = [(g, -e) for g, e in reversed(atom)] * (-exp)
            letters.extend(piece)
        # unreachable

    letters, _ = parse_sequence(0, None)
    return Word(letters)


def format_word(w: Word, alphabet: Sequence[str]) -> str:
    """Inverse of parse_word on normalised words; empty word renders as ''."""
    parts = []
    for gen, exp in w.letters:
        name = alphabet[gen]
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return " ".join(parts)


@dataclass(frozen=True)
class Presentation:
    """A finite presentation: ordered generator names plus relator words
    (each relator over the generator indices of this presentation)."""

    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        seen = set()
        for name in self.generators:
            if not IDENT_RE.fullmatch(name):
                raise ValueError(f"generator name {name!r} is not an identifier")
            if name in seen:
                raise ValueError(f"duplicate generator {name!r}")
            seen.add(name)
        n = len(self.generators)
        for rel in self.relators:
            for gen, _ in rel.letters:
                if not 0 <= gen < n:
                    raise ValueError(f"relator uses undeclared generator index {gen}")

    def parse(self, text: str) -> Word:
        return parse_word(text, self.generators)

    def format(self) -> str:
        gens = ", ".join(self.generators)
        rels = ", ".join(format_word(r, self.generators) for r in self.relators)
        return f"< {gens} | {rels} >"
