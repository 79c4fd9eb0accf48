"""Upper and lower L-fuzzy rough approximations and composed operator words."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .errors import MixedContext, WordTooLong
from .fuzzy import FuzzyRelation, FuzzySet

LOWER = "L"
UPPER = "U"
WORD_CAP = 4


@dataclass(frozen=True)
class OperatorWord:
    """Composition of L and U, outermost letter first.

    ``OperatorWord(("L", "U"))`` applied to A is L(U(A)); the empty word is
    the identity and prints as ``"I"``.
    """

    letters: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        letters = tuple(self.letters)
        for c in letters:
            if c not in (LOWER, UPPER):
                raise ValueError(f"operator word letters must be L or U, got {c!r}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str) -> OperatorWord:
        text = text.strip().upper()
        if text in ("", "I", "ID"):
            return cls(())
        return cls(tuple(text))

    def dual(self) -> OperatorWord:
        """Swap L and U: ``(w(A'))' = w.dual()(A)``."""
        return OperatorWord(tuple(UPPER if c == LOWER else LOWER for c in self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(self.letters) or "I"


IDENTITY = OperatorWord(())


def all_words(max_len: int) -> Iterator[OperatorWord]:
    """Every word of length 0..max_len, shortest first, L before U."""
    for k in range(max_len + 1):
        for letters in product((LOWER, UPPER), repeat=k):
            yield OperatorWord(letters)


# index-level kernels; callers guarantee matching contexts


def upper_values(alg, rows, vals) -> tuple[int, ...]:
    join, meet, bot = alg.join, alg.meet, alg.bottom
    out = []
    for row in rows:
        acc = bot
        for r, v in zip(row, vals):
            acc = join[acc][meet[r][v]]
        out.append(acc)
    return tuple(out)


def lower_values(alg, rows, vals) -> tuple[int, ...]:
    join, meet, neg, top = alg.join, alg.meet, alg.neg, alg.top
    out = []
    for row in rows:
        acc = top
        for r, v in zip(row, vals):
            acc = meet[acc][join[neg[r]][v]]
        out.append(acc)
    return tuple(out)


def lower_residuated_values(alg, rows, vals) -> tuple[int, ...]:
    meet, imp, top = alg.meet, alg.implies, alg.top
    out = []
    for row in rows:
        acc = top
        for r, v in zip(row, vals):
            acc = meet[acc][imp[r][v]]
        out.append(acc)
    return tuple(out)


def word_values(alg, rows, letters: tuple[str, ...], vals) -> tuple[int, ...]:
    for c in reversed(letters):
        vals = upper_values(alg, rows, vals) if c == UPPER else lower_values(alg, rows, vals)
    return vals


def _check(r: FuzzyRelation, a: FuzzySet) -> None:
    if r.algebra is not a.algebra or r.universe != a.universe:
        raise MixedContext("relation and set belong to different contexts")


def upper(r: FuzzyRelation, a: FuzzySet) -> FuzzySet:
    _check(r, a)
    return FuzzySet(a.algebra, a.universe, upper_values(a.algebra, r.rows, a.values))


def lower(r: FuzzyRelation, a: FuzzySet) -> FuzzySet:
    _check(r, a)
    return FuzzySet(a.algebra, a.universe, lower_values(a.algebra, r.rows, a.values))


def lower_residuated(r: FuzzyRelation, a: FuzzySet) -> FuzzySet:
    """Lower approximation with the Heyting implication in place of ``x' | y``."""
    _check(r, a)
    return FuzzySet(a.algebra, a.universe, lower_residuated_values(a.algebra, r.rows, a.values))


def apply_word(
    r: FuzzyRelation, w: OperatorWord | str, a: FuzzySet, cap: int = WORD_CAP
) -> FuzzySet:
    if isinstance(w, str):
        w = OperatorWord.parse(w)
    if len(w) > cap:
        raise WordTooLong(f"word {w} has length {len(w)} > {cap}")
    _check(r, a)
    return FuzzySet(a.algebra, a.universe, word_values(a.algebra, r.rows, w.letters, a.values))
