"""Permutations of {1..n} and the circular interval reversals s_{k,l}.

Permutations compose right to left: ``compose(s, t)(p) == s(t(p))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def wrap(p: int, n: int) -> int:
    """Normalize an integer into {1..n} modulo n."""
    return (p - 1) % n + 1


@dataclass(frozen=True)
class Permutation:
    n: int
    images: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.n or sorted(images) != list(range(1, self.n + 1)):
            raise ValueError(f"{list(images)} is not a permutation of 1..{self.n}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(n, tuple(images))

    def __call__(self, p: int) -> int:
        if not 1 <= p <= self.n:
            raise ValueError(f"point {p} outside 1..{self.n}")
        return self.images[p - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for p, q in enumerate(self.images, start=1):
            inv[q - 1] = p
        return Permutation(self.n, tuple(inv))

    def is_identity(self) -> bool:
        return all(q == p for p, q in enumerate(self.images, start=1))

    def support(self) -> set[int]:
        return {p for p, q in enumerate(self.images, start=1) if p != q}

    def to_list(self) -> list[int]:
        return list(self.images)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"


def circular_interval_points(n: int, k: int, l: int) -> list[int]:
    """Strands of the circular interval [k,l]_c in circular order."""
    _check_strands(n, k, l)
    return [wrap(k + t, n) for t in range((l - k) % n + 1)]


def _check_strands(n: int, k: int, l: int) -> None:
    if n < 2:
        raise ValueError(f"need at least two strands, got n={n}")
    if not (1 <= k <= n and 1 <= l <= n):
        raise ValueError(f"strand indices ({k},{l}) outside 1..{n}")
    if k == l:
        raise ValueError(f"degenerate interval [{k},{l}]")


def interval_reversal(n: int, k: int, l: int) -> Permutation:
    """The permutation s_{k,l} reversing the circular interval [k,l]_c.

    Points outside the interval are fixed.
    """
    _check_strands(n, k, l)
    images = list(range(1, n + 1))
    for p in circular_interval_points(n, k, l):
        images[p - 1] = (k + l - p - 1) % n + 1
    return Permutation(n, tuple(images))


def compose(s: Permutation, t: Permutation) -> Permutation:
    if s.n != t.n:
        raise ValueError(f"cannot compose permutations of {s.n} and {t.n} points")
    return Permutation(s.n, tuple(s.images[q - 1] for q in t.images))


def compose_all(perms: Iterable[Permutation], n: int) -> Permutation:
    result = Permutation.identity(n)
    for s in perms:
        result = compose(result, s)
    return result


def adjacent_decomposition(s: Permutation) -> list[int]:
    """Indices m_1..m_r with s = rho_{m_1} o ... o rho_{m_r}, rho_m = (m, m+1).

    Built by bubble sort of the image list; only m in 1..n-1 are used.
    """
    arr = list(s.images)
    swaps: list[int] = []
    # arr is s's image table; sorting it by adjacent position swaps
    # right-multiplies by transpositions: s o rho_{m1} o rho_{m2} ... = id
    n = s.n
    for end in range(n - 1, 0, -1):
        for m in range(end):
            if arr[m] > arr[m + 1]:
                arr[m], arr[m + 1] = arr[m + 1], arr[m]
                swaps.append(m + 1)
    # s o rho_{m1} o ... o rho_{mr} = id, so s = rho_{mr} o ... o rho_{m1}
    return swaps[::-1]


def from_adjacent(n: int, indices: Sequence[int]) -> Permutation:
    """Compose rho_{m_1} o ... o rho_{m_r}; m = n means the transposition (n 1)."""
    result = Permutation.identity(n)
    for m in indices:
        result = compose(result, Permutation.transposition(n, m, wrap(m + 1, n)))
    return result


@dataclass(frozen=True)
class AffinePermutation:
    """A bijection f of Z with f(x + n) = f(x) + n, stored by its window f(1..n).

    These are the elements of the affine symmetric group; the generator
    sigma_{i,j} lifts to the reversal of the integer window i..i+|[i,j]_c|-1.
    """
    n: int
    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(x) for x in self.window)
        object.__setattr__(self, "window", window)
        if len(window) != self.n or sorted(wrap(x, self.n) for x in window) != list(range(1, self.n + 1)):
            raise ValueError(f"{list(window)} is not the window of an affine permutation of period {self.n}")
        if sum(window) != self.n * (self.n + 1) // 2:
            raise ValueError(f"window {list(window)} has the wrong sum")

    @classmethod
    def identity(cls, n: int) -> "AffinePermutation":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def interval_reversal(cls, n: int, k: int, l: int) -> "AffinePermutation":
        _check_strands(n, k, l)
        top = k + (l - k) % n
        window = []
        for x in range(1, n + 1):
            t = x + n * ((k - x + n - 1) // n)  # the lift of x at or above k
            window.append(k + top - t + (x - t) if t <= top else x)
        return cls(n, tuple(window))

    def __call__(self, x: int) -> int:
        q, r = divmod(x - 1, self.n)
        return self.window[r] + q * self.n

    def __mul__(self, other: "AffinePermutation") -> "AffinePermutation":
        if self.n != other.n:
            raise ValueError(f"cannot compose affine permutations of periods {self.n} and {other.n}")
        return AffinePermutation(self.n, tuple(self(x) for x in other.window))

    def inverse(self) -> "AffinePermutation":
        inv = [0] * self.n
        for x, y in enumerate(self.window, start=1):
            q, r = divmod(y - 1, self.n)
            inv[r] = x - q * self.n
        return AffinePermutation(self.n, tuple(inv))

    def is_identity(self) -> bool:
        return all(y == x for x, y in enumerate(self.window, start=1))

    def reduce(self) -> Permutation:
        """The permutation of Z/nZ that f induces."""
        return Permutation(self.n, tuple(wrap(y, self.n) for y in self.window))

    def affine_matrix(self) -> list[list[int]]:
        """Faithful (n+1)x(n+1) integer matrix: e_x -> e_{f(x) mod n} + q e_0, e_0 fixed."""
        m = [[0] * (self.n + 1) for _ in range(self.n + 1)]
        m[0][0] = 1
        for x, y in enumerate(self.window, start=1):
            q, r = divmod(y - 1, self.n)
            m[r + 1][x] = 1
            m[0][x] = q
        return m

    def to_list(self) -> list[int]:
        return list(self.window)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.window)) + "]"
