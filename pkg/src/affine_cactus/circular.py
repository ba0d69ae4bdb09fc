"""Circular intervals and circular sets over {1..n}, and the S_n action on them.

A circular set is an ordered tuple of distinct strands listed in the cyclic
order of Z/nZ starting from its first entry. Two rotations of the same
subset are different circular sets.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .perm import AffinePermutation, Permutation, adjacent_decomposition, circular_interval_points, wrap


def is_circular(seq: Sequence[int], n: int) -> bool:
    _check_entries(seq, n)
    offsets = [(p - seq[0]) % n for p in seq]
    return all(a < b for a, b in zip(offsets, offsets[1:]))


def _check_entries(seq: Sequence[int], n: int) -> None:
    if len(seq) == 0:
        raise ValueError("empty circular set")
    if any(not 1 <= p <= n for p in seq):
        raise ValueError(f"entries of {tuple(seq)} outside 1..{n}")
    if len(set(seq)) != len(seq):
        raise ValueError(f"repeated entries in {tuple(seq)}")


@dataclass(frozen=True, order=True)
class CircularSet:
    n: int
    seq: tuple[int, ...]

    def __post_init__(self):
        seq = tuple(self.seq)
        object.__setattr__(self, "seq", seq)
        if not is_circular(seq, self.n):
            raise ValueError(f"{seq} is not circular for n={self.n}")

    def __len__(self) -> int:
        return len(self.seq)

    def __iter__(self):
        return iter(self.seq)

    def elements(self) -> frozenset[int]:
        return frozenset(self.seq)

    def sort_key(self) -> tuple:
        return (len(self.seq), self.seq)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.seq)) + ")"

    def to_text(self) -> str:
        return f"{self}@{self.n}"

    @classmethod
    def from_text(cls, text: str) -> "CircularSet":
        body, _, n = text.strip().partition("@")
        if not n or not body.startswith("(") or not body.endswith(")"):
            raise ValueError(f"cannot parse circular set {text!r}")
        return cls(int(n), tuple(int(x) for x in body[1:-1].split(",")))


@dataclass(frozen=True)
class CircularInterval:
    n: int
    i: int
    j: int

    def __post_init__(self):
        circular_interval_points(self.n, self.i, self.j)

    def elements(self) -> tuple[int, ...]:
        return tuple(circular_interval_points(self.n, self.i, self.j))

    def __len__(self) -> int:
        return (self.j - self.i) % self.n + 1

    def as_set(self) -> CircularSet:
        return CircularSet(self.n, self.elements())


def interval_set(n: int, i: int, j: int) -> CircularSet:
    """[i,j]_c as a circular set."""
    return CircularSet(n, tuple(circular_interval_points(n, i, j)))


def _same_n(a: CircularSet, b: CircularSet) -> None:
    if a.n != b.n:
        raise ValueError(f"circular sets over different n ({a.n} vs {b.n})")


def csubset(a: CircularSet, b: CircularSet) -> bool:
    """a is a c-subset of b: a.seq is a subsequence of b.seq."""
    _same_n(a, b)
    it = iter(b.seq)
    return all(p in it for p in a.seq)


def disjoint(a: CircularSet, b: CircularSet) -> bool:
    _same_n(a, b)
    return not (set(a.seq) & set(b.seq))


def commute_ad(a: CircularSet, b: CircularSet) -> bool:
    """Whether tau_a and tau_b commute in AD_n."""
    return disjoint(a, b) or csubset(a, b) or csubset(b, a)


def act_adjacent(m: int, c: CircularSet) -> CircularSet:
    """Action of rho_m = (m, m+1) on a circular set; m = n swaps n and 1."""
    n = c.n
    if not 1 <= m <= n:
        raise ValueError(f"adjacent index {m} outside 1..{n}")
    a, b = m, wrap(m + 1, n)
    if a in c.seq and b in c.seq:
        return c
    swap = {a: b, b: a}
    image = tuple(swap.get(p, p) for p in c.seq)
    assert is_circular(image, n), (m, c)
    return CircularSet(n, image)


def act_perm(s: Permutation, c: CircularSet, decomposition: Sequence[int] | None = None) -> CircularSet:
    """s . c, computed through a factorization of s into rho_1..rho_{n-1}.

    ``decomposition`` may supply any factorization ``s = rho_{m_1} o ... o rho_{m_r}``;
    by default the bubble-sort one is used.
    """
    if s.n != c.n:
        raise ValueError(f"permutation on {s.n} points acting on circular set over {c.n}")
    if decomposition is None:
        return _act_cached(s.images, c)
    for m in reversed(decomposition):
        c = act_adjacent(m, c)
    return c


@lru_cache(maxsize=1 << 18)
def _act_cached(images: tuple[int, ...], c: CircularSet) -> CircularSet:
    for m in reversed(adjacent_decomposition(Permutation(len(images), images))):
        c = act_adjacent(m, c)
    return c


def enumerate_circular_sets(n: int, min_size: int = 2) -> list[CircularSet]:
    """All circular sets of size >= min_size, ordered by size then sequence."""
    if n < 2 or not 2 <= min_size <= n:
        raise ValueError(f"need n >= 2 and 2 <= min_size <= n, got n={n}, min_size={min_size}")
    return list(_enumerate(n, min_size))


@lru_cache(maxsize=None)
def _enumerate(n: int, min_size: int) -> tuple[CircularSet, ...]:
    out = []
    for k in range(min_size, n + 1):
        found = []
        for subset in combinations(range(1, n + 1), k):
            # each rotation of a sorted subset is circular
            for r in range(k):
                found.append(subset[r:] + subset[:r])
        found.sort()
        out.extend(CircularSet(n, seq) for seq in found)
    return tuple(out)


@dataclass(frozen=True)
class AffineSet:
    """A finite set of integers, pairwise distinct mod n, up to translation by nZ.

    Stored as the increasing tuple ``lift`` with ``lift[0]`` in 1..n. It stands
    for the conjugate of a standard parabolic subgroup of the affine symmetric
    group: the periodic permutations of ``lift + nZ`` that move every block
    ``lift + tn`` within itself. A circular set (i_1, ..., i_k) is the case of
    spread ``lift[-1] - lift[0] < n``; affine permutations can push the spread
    beyond that, which is why these are needed at all.
    """
    n: int
    lift: tuple[int, ...]

    def __post_init__(self):
        lift = tuple(int(x) for x in self.lift)
        object.__setattr__(self, "lift", lift)
        if not lift:
            raise ValueError("empty affine set")
        if not 1 <= lift[0] <= self.n:
            raise ValueError(f"lift {lift} must start in 1..{self.n}")
        if any(a >= b for a, b in zip(lift, lift[1:])):
            raise ValueError(f"lift {lift} is not increasing")
        if len({x % self.n for x in lift}) != len(lift):
            raise ValueError(f"lift {lift} repeats a residue mod {self.n}")

    @classmethod
    def from_points(cls, n: int, points) -> "AffineSet":
        lift = sorted(points)
        shift = (wrap(lift[0], n) - lift[0]) if lift else 0
        return cls(n, tuple(x + shift for x in lift))

    @classmethod
    def from_circular(cls, c: CircularSet) -> "AffineSet":
        first = c.seq[0]
        return cls(c.n, tuple(first + (p - first) % c.n for p in c.seq))

    def __len__(self) -> int:
        return len(self.lift)

    def sort_key(self) -> tuple:
        return (len(self.lift), self.lift)

    def residues(self) -> tuple[int, ...]:
        return tuple(wrap(x, self.n) for x in self.lift)

    def is_circular(self) -> bool:
        return self.lift[-1] - self.lift[0] < self.n

    def to_circular(self) -> CircularSet:
        if not self.is_circular():
            raise ValueError(f"{self} spans more than one turn")
        return CircularSet(self.n, self.residues())

    def image(self, f: AffinePermutation) -> "AffineSet":
        if f.n != self.n:
            raise ValueError(f"affine permutation of period {f.n} acting on an affine set over {self.n}")
        return AffineSet.from_points(self.n, (f(x) for x in self.lift))

    def __str__(self) -> str:
        if self.is_circular():
            return str(self.to_circular())
        return "<" + ",".join(map(str, self.lift)) + ">"

    def to_text(self) -> str:
        return f"{self}@{self.n}"

    @classmethod
    def from_text(cls, text: str) -> "AffineSet":
        body = text.strip()
        if body.startswith("<"):
            inner, _, n = body[1:].partition(">@")
            if not n:
                raise ValueError(f"cannot parse affine set {text!r}")
            return cls.from_points(int(n), [int(x) for x in inner.split(",")])
        return cls.from_circular(CircularSet.from_text(body))


def affine_within(a: AffineSet, b: AffineSet) -> bool:
    """Whether a lies inside some translate b + tn (the parabolic of a is inside that of b)."""
    _same_n(a, b)
    n = a.n
    start = a.lift[0]
    members = set(b.lift)
    for y in b.lift:
        if (y - start) % n == 0:
            t = y - start
            return all(x + t in members for x in a.lift)
    return False


def affine_disjoint(a: AffineSet, b: AffineSet) -> bool:
    _same_n(a, b)
    return not ({x % a.n for x in a.lift} & {x % b.n for x in b.lift})


def commute_affine(a: AffineSet, b: AffineSet) -> bool:
    return affine_disjoint(a, b) or affine_within(a, b) or affine_within(b, a)
