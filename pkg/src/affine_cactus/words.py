"""Cactus words and their text form.

Grammar: letters ``s(i,j)`` separated by whitespace or ``*``. Any letter or
parenthesized group may carry an exponent ``^m``; negative exponents repeat
the reversed group, which is the inverse since every generator is an
involution.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .perm import wrap


class ParseError(ValueError):
    pass


class Letter(NamedTuple):
    i: int
    j: int

    def __str__(self) -> str:
        return f"s({self.i},{self.j})"


def support_size(letter: Letter, n: int) -> int:
    """|[i,j]_c|."""
    return (letter.j - letter.i) % n + 1


@dataclass(frozen=True)
class CactusWord:
    """A word in the generators sigma_{i,j} of AJ_n, 1 <= i != j <= n."""
    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need n >= 2, got {self.n}")
        letters = tuple(Letter(*map(int, x)) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        for a in letters:
            self._check_letter(a)

    def _check_letter(self, a: Letter) -> None:
        if not (1 <= a.i <= self.n and 1 <= a.j <= self.n) or a.i == a.j:
            raise ValueError(f"{a} is not a generator for n={self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, k):
        if isinstance(k, slice):
            return type(self)(self.n, self.letters[k])
        return self.letters[k]

    def _same_n(self, other: "CactusWord") -> None:
        if self.n != other.n:
            raise ValueError(f"words over different strand counts ({self.n} vs {other.n})")

    def __mul__(self, other: "CactusWord") -> "CactusWord":
        self._same_n(other)
        return type(self)(self.n, self.letters + other.letters)

    def inverse(self) -> "CactusWord":
        return type(self)(self.n, self.letters[::-1])

    def __pow__(self, m: int) -> "CactusWord":
        base = self if m >= 0 else self.inverse()
        return type(self)(self.n, base.letters * abs(m))

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))

    def to_json(self) -> dict:
        return {"n": self.n, "letters": [list(a) for a in self.letters]}

    @classmethod
    def from_json(cls, data: dict) -> "CactusWord":
        return cls(int(data["n"]), tuple(tuple(x) for x in data["letters"]))

    @classmethod
    def parse(cls, text: str, n: int) -> "CactusWord":
        try:
            return cls(n, parse_letters(text))
        except ParseError:
            raise
        except ValueError as exc:
            raise ParseError(str(exc)) from exc

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "CactusWord":
        return cls(n, tuple(Letter(i, j) for i, j in pairs))


@dataclass(frozen=True)
class ClassicCactusWord(CactusWord):
    """A word in the generators sigma_{i,j} of J_n, 1 <= i < j <= n."""

    def _check_letter(self, a: Letter) -> None:
        if not 1 <= a.i < a.j <= self.n:
            raise ValueError(f"{a} is not a generator of J_{self.n} (need i < j)")


def rotate_letter(a: Letter, d: int, n: int) -> Letter:
    return Letter(wrap(a.i + d, n), wrap(a.j + d, n))


_TOKEN = re.compile(r"\s*(?:(?P<letter>s\(\s*(?P<i>-?\d+)\s*,\s*(?P<j>-?\d+)\s*\))"
                    r"|(?P<pow>\^\s*(?P<m>[-+]?\d+))|(?P<open>\()|(?P<close>\))|(?P<star>\*))")


def _tokenize(text: str) -> list[tuple[str, object]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected input at column {pos + 1}: {text[pos:pos + 12]!r}")
        pos = m.end()
        if m.group("letter"):
            tokens.append(("letter", Letter(int(m.group("i")), int(m.group("j")))))
        elif m.group("pow"):
            tokens.append(("pow", int(m.group("m"))))
        elif m.group("open"):
            tokens.append(("open", None))
        elif m.group("close"):
            tokens.append(("close", None))
    return tokens


def parse_letters(text: str) -> tuple[Letter, ...]:
    tokens = _tokenize(text)
    letters, pos = _parse_sequence(tokens, 0)
    if pos != len(tokens):
        raise ParseError("unbalanced ')'")
    return tuple(letters)


def _parse_sequence(tokens, pos):
    out: list[Letter] = []
    while pos < len(tokens) and tokens[pos][0] != "close":
        kind, value = tokens[pos]
        if kind == "letter":
            group = [value]
            pos += 1
        elif kind == "open":
            group, pos = _parse_sequence(tokens, pos + 1)
            if pos >= len(tokens):
                raise ParseError("missing ')'")
            pos += 1
        else:
            raise ParseError("exponent without a preceding letter or group")
        if pos < len(tokens) and tokens[pos][0] == "pow":
            m = tokens[pos][1]
            group = (group if m >= 0 else group[::-1]) * abs(m)
            pos += 1
        out.extend(group)
    return out, pos
