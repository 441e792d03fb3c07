"""Words over the Baumslag-Solitar group BS(m, n) = < a, t | t^-1 a^m t = a^n >
and their pinch reduction.

A word is stored in syllable form a^lead (t^s1 a^e1) (t^s2 a^e2) ... with
s_i = +/-1.  A *pinch* is a subword t^-1 a^s t with m | s, or t a^s t^-1
with n | s; rewriting it to a^(s*n/m) (resp. a^(s*m/n)) removes two
t-letters.  A word with no pinch is in reduced form, and a reduced word
represents the identity only when it is the empty word: that yields the
word-problem procedures is_trivial and equal.

Reduced forms are not canonical, so equality of u and v always goes
through reducing u * v^-1 rather than comparing reduced words.  Pinches
are searched leftmost-first; any strategy terminates (each rewrite
removes two t-letters) and the triviality answer does not depend on it.

For the soluble case BS(1, k) the assignment a -> (1, 0), t -> (0, 1) is
an isomorphism onto G(1, k), giving an independent word-problem oracle
(eval_metabelian) used for cross-validation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import DomainError
from .metabelian import MetabelianElement, MetabelianParams
from .words import Word, parse_word, format_word

GENERATORS = ("a", "t")


@dataclass(frozen=True)
class BsParams:
    """Exponents of the defining relation t^-1 a^m t = a^n; nonzero,
    possibly negative, no coprimality assumed."""

    m: int
    n: int

    def __post_init__(self):
        if self.m == 0 or self.n == 0:
            raise DomainError(f"parameters must be nonzero, got ({self.m}, {self.n})")

    def __str__(self) -> str:
        return f"BS({self.m},{self.n})"


def parse_bs_params(text: str) -> BsParams:
    """Parse the textual form ``BS(m,n)``."""
    m = re.match(r"BS\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\Z", text.strip())
    if not m:
        raise ValueError(f"malformed parameters {text!r}, expected 'BS(m,n)'")
    return BsParams(int(m.group(1)), int(m.group(2)))


@dataclass(frozen=True)
class BsWord:
    """Syllable form a^lead t^s1 a^e1 ... t^sk a^ek of a word over {a, t}.

    ``reduced`` records that the word came out of britton_reduce (for the
    parameters it was reduced under); it is ignored by equality.
    """

    lead: int = 0
    tail: tuple[tuple[int, int], ...] = ()
    reduced: bool = field(default=False, compare=False)

    @classmethod
    def from_word(cls, w: Word) -> "BsWord":
        lead = 0
        tail: list[list[int]] = []
        for gen, exp in w.letters:
            if gen == 0:  # a-letter
                if tail:
                    tail[-1][1] += exp
                else:
                    lead += exp
            elif gen == 1:  # t-letter
                sign = 1 if exp > 0 else -1
                for _ in range(abs(exp)):
                    tail.append([sign, 0])
            else:
                raise ValueError("BS words use the two-letter alphabet (a, t)")
        return cls(lead, tuple((s, e) for s, e in tail))

    @classmethod
    def from_text(cls, text: str) -> "BsWord":
        return cls.from_word(parse_word(text, GENERATORS))

    def to_word(self) -> Word:
        letters = [(0, self.lead)]
        for sign, exp in self.tail:
            letters.append((1, sign))
            letters.append((0, exp))
        return Word(letters)

    def format(self) -> str:
        return format_word(self.to_word(), GENERATORS)

    @property
    def t_length(self) -> int:
        return len(self.tail)

    def __mul__(self, other: "BsWord") -> "BsWord":
        if not self.tail:
            return BsWord(self.lead + other.lead, other.tail)
        last_sign, last_exp = self.tail[-1]
        tail = self.tail[:-1] + ((last_sign, last_exp + other.lead),) + other.tail
        return BsWord(self.lead, tail)

    def __invert__(self) -> "BsWord":
        exps = (self.lead,) + tuple(e for _, e in self.tail)
        signs = tuple(s for s, _ in self.tail)
        lead = -exps[-1]
        tail = tuple(
            (-signs[k], -exps[k]) for k in range(len(signs) - 1, -1, -1)
        )
        return BsWord(lead, tail)

    def __pow__(self, k: int) -> "BsWord":
        base = self if k >= 0 else ~self
        out = BsWord()
        for _ in range(abs(k)):
            out = out * base
        return out


def commutator_word(u: BsWord, v: BsWord) -> BsWord:
    return ~u * ~v * u * v


def find_pinch(w: BsWord, params: BsParams) -> int | None:
    """Index j of the leftmost pinch t^sj a^ej t^s(j+1), or None."""
    for j in range(len(w.tail) - 1):
        sign, exp = w.tail[j]
        next_sign = w.tail[j + 1][0]
        if sign == -1 and next_sign == 1 and exp % params.m == 0:
            return j
        if sign == 1 and next_sign == -1 and exp % params.n == 0:
            return j
    return None


def britton_reduce(w: BsWord, params: BsParams) -> BsWord:
    """Rewrite pinches leftmost-first until none remain.

    t^-1 a^s t -> a^(s*n/m) when m | s, and t a^s t^-1 -> a^(s*m/n) when
    n | s; every step removes two t-letters, so the loop terminates.
    """
    lead = w.lead
    tail = [[s, e] for s, e in w.tail]
    j = 0
    while j < len(tail) - 1:
        sign, exp = tail[j]
        next_sign, next_exp = tail[j + 1]
        if sign == -1 and next_sign == 1 and exp % params.m == 0:
            merged = exp // params.m * params.n + next_exp
        elif sign == 1 and next_sign == -1 and exp % params.n == 0:
            merged = exp // params.n * params.m + next_exp
        else:
            j += 1
            continue
        del tail[j : j + 2]
        if j == 0:
            lead += merged
        else:
            tail[j - 1][1] += merged
        j = max(j - 1, 0)
    return BsWord(lead, tuple((s, e) for s, e in tail), reduced=True)


def is_trivial(w: BsWord, params: BsParams) -> bool:
    """Word problem: True iff w represents the identity of BS(m, n).

    The reduced form of a trivial word cannot contain a t-letter (any
    t-letter in a pinch-free word survives in the group), so triviality
    is just emptiness of the reduced form.
    """
    r = britton_reduce(w, params)
    return not r.tail and r.lead == 0


def equal(u: BsWord, v: BsWord, params: BsParams) -> bool:
    """True iff u and v represent the same element of BS(m, n)."""
    return is_trivial(u * ~v, params)


def eval_metabelian(w: BsWord, k: int) -> MetabelianElement:
    """Evaluate a word over BS(1, k) in G(1, k) via a -> (1, 0),
    t -> (0, 1); this map is an isomorphism, so the result is the
    identity exactly when the word is trivial."""
    if k < 1:
        raise DomainError(f"metabelian evaluation needs k >= 1, got {k}")
    params = MetabelianParams(1, k)
    a = MetabelianElement(params, 1, 0)
    t = MetabelianElement(params, 0, 1)
    result = a ** w.lead
    for sign, exp in w.tail:
        result = result * t ** sign * a ** exp
    return result


@dataclass(frozen=True)
class Z2WitnessReport:
    """Verification data for the rank-2 free abelian subgroup
    < t^-1 a t a, a^n > of BS(m, n), |m|, |n| > 1.

    The commutator check is exact.  Faithfulness is checked for all
    mixed powers u^i v^j with |i|, |j| <= bound, which is evidence for
    rank 2 at the tested scale, not a proof of the unbounded statement.
    """

    params: BsParams
    bound: int
    u: BsWord
    v: BsWord
    commutator_is_trivial: bool
    pairs_checked: int
    collapsed_pairs: tuple[tuple[int, int], ...]

    @property
    def verified(self) -> bool:
        return self.commutator_is_trivial and not self.collapsed_pairs


def z2_witness(params: BsParams, bound: int) -> Z2WitnessReport:
    """Check that u = t^-1 a t a and v = a^n commute and that no small
    nonzero power u^i v^j collapses.  Requires |m|, |n| > 1."""
    if abs(params.m) <= 1 or abs(params.n) <= 1:
        raise DomainError(
            f"witness needs |m|, |n| > 1, got ({params.m}, {params.n})"
        )
    if bound < 1:
        raise DomainError(f"bound must be >= 1, got {bound}")
    u = BsWord(0, ((-1, 1), (1, 1)))  # t^-1 a t a
    v = BsWord(params.n)
    comm_trivial = is_trivial(commutator_word(u, v), params)
    collapsed = []
    checked = 0
    powers_u = {i: u ** i for i in range(-bound, bound + 1)}
    powers_v = {j: v ** j for j in range(-bound, bound + 1)}
    for i in range(-bound, bound + 1):
        for j in range(-bound, bound + 1):
            if i == 0 and j == 0:
                continue
            checked += 1
            if is_trivial(powers_u[i] * powers_v[j], params):
                collapsed.append((i, j))
    return Z2WitnessReport(
        params=params,
        bound=bound,
        u=u,
        v=v,
        commutator_is_trivial=comm_trivial,
        pairs_checked=checked,
        collapsed_pairs=tuple(collapsed),
    )
