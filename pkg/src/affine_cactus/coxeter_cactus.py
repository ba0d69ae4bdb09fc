"""Coxeter diagrams of types A (paths) and affine A (cycles), and their cactus groups.

The cactus group of a Coxeter system has one involution sigma_I for each
connected subset I of the diagram generating a finite group, with

    sigma_I sigma_J = sigma_J sigma_I           when I, J are disjoint and unlinked,
    sigma_I sigma_J = sigma_J sigma_{w_J(I)}    when I is inside J,

where w_J mirrors J end to end. On a cycle of n vertices these are exactly
the proper arcs, and the arc rho_i..rho_{i+k-1} matches the circular
interval [i, i+k]_c of AJ_n; ``iso_check`` verifies that the two relation
sets correspond under this matching.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .cactus import defining_relations, generators
from .perm import wrap
from .words import CactusWord, Letter

SHAPES = ("path", "cycle")


@dataclass(frozen=True)
class CoxeterDiagram:
    """Vertices rho_1..rho_n; edges join rho_m and rho_{m+1}, and rho_n and rho_1 for a cycle."""
    n: int
    shape: str = "cycle"

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise ValueError(f"unsupported diagram shape {self.shape!r}")
        if self.n < 1 or (self.shape == "cycle" and self.n < 3):
            raise ValueError(f"a {self.shape} diagram needs more vertices than {self.n}")

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edges(self) -> list[tuple[int, int]]:
        out = [(m, m + 1) for m in range(1, self.n)]
        if self.shape == "cycle":
            out.append((self.n, 1))
        return out

    def adjacent(self, u: int, v: int) -> bool:
        if self.shape == "cycle":
            return (u - v) % self.n in (1, self.n - 1)
        return abs(u - v) == 1

    def components(self, vertices: Iterable[int]) -> list[tuple[int, ...]]:
        """Connected components of an induced subdiagram, each listed along the diagram."""
        vs = set(vertices)
        if not vs <= set(self.vertices):
            raise ValueError(f"{sorted(vs)} are not vertices of {self}")
        if self.shape == "cycle" and len(vs) == self.n:
            raise ValueError("the whole cycle is not of finite type")
        out = []
        for v in sorted(vs):
            prev = wrap(v - 1, self.n) if self.shape == "cycle" else v - 1
            if prev in vs:
                continue  # not the first vertex of its component
            run = [v]
            while True:
                nxt = wrap(run[-1] + 1, self.n) if self.shape == "cycle" else run[-1] + 1
                if nxt not in vs:
                    break
                run.append(nxt)
            out.append(tuple(run))
        return out

    def __str__(self) -> str:
        return f"{self.shape}({self.n})"


@dataclass(frozen=True)
class Arc:
    """A connected proper vertex subset, rho_start, rho_{start+1}, ..., of ``length`` vertices."""
    diagram: CoxeterDiagram
    start: int
    length: int

    def __post_init__(self):
        d = self.diagram
        if not 1 <= self.start <= d.n or self.length < 1:
            raise ValueError(f"bad arc ({self.start}, {self.length}) on {d}")
        if d.shape == "path" and self.start + self.length - 1 > d.n:
            raise ValueError(f"arc ({self.start}, {self.length}) runs off {d}")
        if d.shape == "cycle" and self.length >= d.n:
            raise ValueError(f"arc of length {self.length} is not proper on {d}")

    def vertices(self) -> tuple[int, ...]:
        return tuple(wrap(self.start + t, self.diagram.n) for t in range(self.length))

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices())

    @classmethod
    def from_vertices(cls, d: CoxeterDiagram, vertices: Iterable[int]) -> "Arc":
        (component,) = d.components(vertices)
        return cls(d, component[0], len(component))

    def __str__(self) -> str:
        return "c{" + ",".join(map(str, self.vertices())) + "}"


def enumerate_irr_finite(d: CoxeterDiagram) -> list[Arc]:
    """All connected subsets generating a finite group, by length then start."""
    if d.shape == "cycle":
        return [Arc(d, i, k) for k in range(1, d.n) for i in d.vertices]
    return [Arc(d, i, k) for k in range(1, d.n + 1) for i in range(1, d.n - k + 2)]


def omega_action(J: Arc | Iterable[int], I: Iterable[int], diagram: CoxeterDiagram | None = None) -> frozenset[int]:
    """Image of the vertex set I under conjugation by the longest element of W_J.

    Each connected component of J is mirrored end to end. I must lie inside J
    or be disjoint from it.
    """
    if isinstance(J, Arc):
        diagram = J.diagram
        components = [J.vertices()]
    else:
        if diagram is None:
            raise ValueError("a bare vertex set needs its diagram")
        components = diagram.components(J)
    support = {v for c in components for v in c}
    I = frozenset(I)
    if I.isdisjoint(support):
        return I
    if not I <= support:
        raise ValueError(f"{sorted(I)} meets {sorted(support)} without lying inside it")
    mirror = {}
    for c in components:
        mirror.update(zip(c, reversed(c)))
    return frozenset(mirror[v] for v in I)


def product_condition(I: Arc, J: Arc) -> bool:
    """W_{I u J} = W_I x W_J: disjoint and joined by no edge."""
    if I.diagram != J.diagram:
        raise ValueError("arcs on different diagrams")
    a, b = I.vertex_set(), J.vertex_set()
    return a.isdisjoint(b) and not any(I.diagram.adjacent(u, v) for u in a for v in b)


@dataclass(frozen=True)
class Presentation:
    name: str
    generators: tuple
    relations: tuple  # pairs (lhs, rhs) of generator tuples

    def relators(self) -> list[tuple]:
        """Each relation as the word lhs * rhs^-1 (generators are involutions)."""
        return [tuple(lhs) + tuple(reversed(rhs)) for lhs, rhs in self.relations]


def presentation(d: CoxeterDiagram) -> Presentation:
    gens = enumerate_irr_finite(d)
    rels: list[tuple] = [((g, g), ()) for g in gens]
    for a, b in combinations(gens, 2):
        if product_condition(a, b):
            rels.append(((a, b), (b, a)))
    for a in gens:
        for b in gens:
            if a != b and a.vertex_set() <= b.vertex_set():
                rels.append(((a, b), (b, Arc.from_vertices(d, omega_action(b, a.vertex_set())))))
    return Presentation(f"C_W({d})", tuple(gens), tuple(rels))


def arc_to_letter(arc: Arc) -> Letter:
    """rho_i..rho_{i+k-1}  <->  sigma_{i, i+k}: k vertices move k+1 strands."""
    n = arc.diagram.n
    return Letter(arc.start, wrap(arc.start + arc.length, n))


@dataclass(frozen=True)
class IsoCertificate:
    n: int
    ok: bool
    table: tuple[tuple[str, str], ...]
    relation_count: int
    unmatched_coxeter: tuple[str, ...]
    unmatched_cactus: tuple[str, ...]

    def to_json(self) -> dict:
        return {"n": self.n, "ok": self.ok, "bijection": [list(row) for row in self.table],
                "relations": self.relation_count, "unmatched_coxeter": list(self.unmatched_coxeter),
                "unmatched_cactus": list(self.unmatched_cactus)}


def _relation_key(lhs, rhs) -> frozenset:
    return frozenset((tuple(lhs), tuple(rhs)))


def _show(key: frozenset) -> str:
    sides = sorted(key, key=len, reverse=True)
    if len(sides) == 1:
        sides = sides * 2
    return " = ".join(" ".join(map(str, side)) or "1" for side in sides)


def iso_check(n: int) -> IsoCertificate:
    """Match the cactus presentation of the n-cycle with the presentation of AJ_n."""
    if n < 3:
        raise ValueError(f"the cycle diagram needs n >= 3, got {n}")
    d = CoxeterDiagram(n, "cycle")
    pres = presentation(d)
    table = {arc: arc_to_letter(arc) for arc in pres.generators}
    if sorted(table.values()) != sorted(generators(n)):
        raise AssertionError("arc/interval matching is not a bijection")
    mapped = {_relation_key([table[x] for x in lhs], [table[x] for x in rhs]) for lhs, rhs in pres.relations}
    target = {_relation_key(lhs.letters, rhs.letters) for lhs, rhs in defining_relations(n)}
    missing_here = sorted(map(_show, target - mapped))
    missing_there = sorted(map(_show, mapped - target))
    return IsoCertificate(
        n=n,
        ok=not missing_here and not missing_there,
        table=tuple((str(arc), str(letter)) for arc, letter in table.items()),
        relation_count=len(mapped),
        unmatched_coxeter=tuple(missing_there),
        unmatched_cactus=tuple(missing_here),
    )


def relation_words(n: int) -> list[tuple[CactusWord, CactusWord]]:
    """The cycle presentation's relations carried over to AJ_n words."""
    d = CoxeterDiagram(n, "cycle")
    to_word = lambda arcs: CactusWord(n, tuple(arc_to_letter(a) for a in arcs))  # noqa: E731
    return [(to_word(lhs), to_word(rhs)) for lhs, rhs in presentation(d).relations]
