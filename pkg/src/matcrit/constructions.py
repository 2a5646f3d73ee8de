"""Builders for uniform, graphic and rank-3 matroids, the standard
combinators, and the named matroids of the density-critical classification."""

from __future__ import annotations

import re
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from itertools import combinations

import numpy as np

from .matroid import Matroid, MatroidError, elements_of, popcount, to_mask


def _bases_by_extension(n: int, r: int, extends: Callable[[int, int], bool]) -> list[int]:
    """All r-element independent sets, found by growing sets in increasing element order.

    ``extends(S, e)`` must say whether ``S | {e}`` is independent, given that
    ``S`` is independent and ``e`` exceeds every element of ``S``.
    """
    out: list[int] = []

    def grow(S: int, size: int, start: int) -> None:
        if size == r:
            out.append(S)
            return
        for e in range(start, n - (r - size) + 1):
            if extends(S, e):
                grow(S | (1 << e), size + 1, e + 1)

    grow(0, 0, 0)
    return out


def _bases_avoiding(n: int, r: int, circuits: Iterable[int]) -> list[int]:
    by_top: list[list[int]] = [[] for _ in range(n)]
    for c in circuits:
        by_top[c.bit_length() - 1].append(c)

    def extends(S: int, e: int) -> bool:
        T = S | (1 << e)
        return all(c & T != c for c in by_top[e])

    return _bases_by_extension(n, r, extends)


def uniform(m: int, n: int) -> Matroid:
    if not 0 <= m <= n:
        raise ValueError(f"U_{{{m},{n}}} needs 0 <= m <= n")
    return Matroid(n, (to_mask(c) for c in combinations(range(n), m)), check=False)


def free(n: int) -> Matroid:
    return uniform(n, n)


def graphic(vertices: int, edges: Sequence[tuple[int, int]]) -> Matroid:
    """Cycle matroid of a multigraph; element ``i`` is ``edges[i]``."""
    for u, v in edges:
        if not (0 <= u < vertices and 0 <= v < vertices):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{vertices - 1}")

    def components_after(S: int) -> list[int]:
        parent = list(range(vertices))
        for i in elements_of(S):
            u, v = edges[i]
            while parent[u] != u:
                u = parent[u]
            while parent[v] != v:
                v = parent[v]
            parent[u] = v
        return parent

    def root(parent: list[int], x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    full = components_after(to_mask(range(len(edges))))
    rank = vertices - len({root(full, x) for x in range(vertices)})

    def extends(S: int, e: int) -> bool:
        parent = components_after(S)
        u, v = edges[e]
        return root(parent, u) != root(parent, v)

    return Matroid(len(edges), _bases_by_extension(len(edges), rank, extends), check=False)


def complete_graph_edges(k: int) -> list[tuple[int, int]]:
    return list(combinations(range(k), 2))


def wheel_graph_edges(r: int) -> list[tuple[int, int]]:
    """Spokes ``(0, i)`` first, then rim edges ``(i, i+1)``; vertex 0 is the hub."""
    spokes = [(0, i) for i in range(1, r + 1)]
    rim = [(i, i % r + 1) for i in range(1, r + 1)]
    return spokes + rim


def wheel(r: int) -> Matroid:
    if r < 2:
        raise ValueError("wheels have rank at least 2")
    return graphic(r + 1, wheel_graph_edges(r))


def rim(r: int) -> int:
    return to_mask(range(r, 2 * r))


def whirl(r: int) -> Matroid:
    return wheel(r).relax(rim(r))


def rank3_geometry(n: int, lines: Iterable[Iterable[int]]) -> Matroid:
    """Rank-3 simple matroid whose non-trivial lines are ``lines``."""
    masks = [to_mask(line) for line in lines]
    for a, b in combinations(masks, 2):
        if popcount(a & b) > 1:
            raise MatroidError("two lines share more than one point")
    bases = [
        to_mask(t) for t in combinations(range(n), 3)
        if not any(to_mask(t) & L == to_mask(t) for L in masks)
    ]
    return Matroid(n, bases)


def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    """Elements of ``M2`` are shifted up by ``M1.n``."""
    combined = (M1._arr[:, None] | (M2._arr[None, :] << np.uint64(M1.n))).ravel()
    return Matroid._from_masks(M1.n + M2.n, combined)


def parallel_connection(M1: Matroid, p1: int, M2: Matroid, p2: int) -> Matroid:
    """Glue ``M2`` to ``M1`` by identifying ``p2`` with ``p1``.

    Elements of ``M1`` keep their indices (``p1`` becomes the basepoint);
    the other elements of ``M2`` follow in their original order.  The result
    is assembled from its circuits: those of each part, plus
    ``(C1 - p) | (C2 - p)`` for every pair of circuits through the basepoint.
    """
    if M1.loops() >> p1 & 1 or M2.loops() >> p2 & 1:
        raise ValueError("basepoints of a parallel connection must not be loops")
    relabel = {p2: p1}
    for e in range(M2.n):
        if e != p2:
            relabel[e] = M1.n + len(relabel) - 1
    lift = lambda c: to_mask(relabel[e] for e in elements_of(c))  # noqa: E731
    p = 1 << p1
    c1 = M1.circuits()
    c2 = {lift(c) for c in M2.circuits()}
    glued = {(a | b) & ~p for a in c1 if a & p for b in c2 if b & p}
    n = M1.n + M2.n - 1
    r = M1.r + M2.r - 1
    return Matroid(n, _bases_avoiding(n, r, c1 | c2 | glued), check=False)


def p_chain(n: int, attach: Sequence[int] | None = None) -> Matroid:
    """Parallel connection of ``n`` triangles.

    ``attach[i]`` is the element of the current matroid used as the basepoint
    for triangle ``i + 2``; the new triangle contributes two elements appended
    at the end.  By default every triangle is attached at the newest element.
    """
    if n < 1:
        raise ValueError("p_chain needs at least one triangle")
    M = uniform(2, 3)
    if attach is None:
        attach = [3 + 2 * i - 1 for i in range(n - 1)]
    if len(attach) != n - 1:
        raise ValueError(f"{n} triangles need {n - 1} attachment points")
    for p in attach:
        if not 0 <= p < M.n:
            raise ValueError(f"attachment element {p} outside 0..{M.n - 1}")
        M = parallel_connection(M, p, uniform(2, 3), 0)
    return M


def mk4() -> Matroid:
    return graphic(4, complete_graph_edges(4))


def mk5_minus_e() -> Matroid:
    return graphic(5, [e for e in complete_graph_edges(5) if e != (3, 4)])


def k33_edges() -> list[tuple[int, int]]:
    return [(a, b) for a in range(3) for b in range(3, 6)]


def mstar_k33() -> Matroid:
    return graphic(6, k33_edges()).dual()


# Point labels follow the drawing: F7 and F7- share one layout, the last line
# of FANO_LINES is the circle through the three edge midpoints.
FANO_LINES = [(0, 1, 2), (2, 3, 4), (0, 4, 5), (0, 3, 6), (1, 4, 6), (2, 5, 6), (1, 3, 5)]
O7_LINES = [(0, 1, 2, 3), (0, 4, 5), (1, 5, 6), (2, 4, 6)]
P7_LINES = [(0, 1, 2), (3, 4, 5), (0, 3, 6), (1, 4, 6), (2, 5, 6)]


def fano() -> Matroid:
    return rank3_geometry(7, FANO_LINES)


def fano_minus() -> Matroid:
    return fano().relax(to_mask(FANO_LINES[-1]))


def o7() -> Matroid:
    return rank3_geometry(7, O7_LINES)


def p7() -> Matroid:
    return rank3_geometry(7, P7_LINES)


def m18() -> Matroid:
    """A copy of M(K4) attached at each element of a triangle."""
    M = uniform(2, 3)
    for p in range(3):
        M = parallel_connection(M, p, mk4(), 0)
    return M


@dataclass(frozen=True)
class NamedMatroid:
    name: str
    builder: Callable[[], Matroid] = field(repr=False)
    rank: int
    size: int
    density: Fraction
    families: frozenset[str] = frozenset()

    @property
    def matroid(self) -> Matroid:
        return _build(self.name, self.builder)


_BUILT: dict[str, Matroid] = {}


def _build(name: str, builder: Callable[[], Matroid]) -> Matroid:
    if name not in _BUILT:
        _BUILT[name] = builder()
    return _BUILT[name]


THM13 = "thm1.3"
THM16 = "thm1.6"


def _entry(name, builder, rank, size, density, *families) -> NamedMatroid:
    return NamedMatroid(name, builder, rank, size, Fraction(density), frozenset(families))


@cache
def catalog() -> tuple[NamedMatroid, ...]:
    F = Fraction
    entries = [
        _entry("U_1_1", lambda: uniform(1, 1), 1, 1, 1, THM16),
        _entry("U_2_3", lambda: uniform(2, 3), 2, 3, F(3, 2), THM16),
        _entry("U_2_4", lambda: uniform(2, 4), 2, 4, 2, THM16),
        _entry("U_2_5", lambda: uniform(2, 5), 2, 5, F(5, 2), THM13),
        _entry("U_3_6", lambda: uniform(3, 6), 3, 6, 2),
        _entry("MK4", mk4, 3, 6, 2, THM16),
        _entry("F7", fano, 3, 7, F(7, 3), THM13),
        _entry("F7-", fano_minus, 3, 7, F(7, 3), THM13),
        _entry("O7", o7, 3, 7, F(7, 3), THM13),
        _entry("P7", p7, 3, 7, F(7, 3), THM13),
        _entry("P_U24_U24", lambda: parallel_connection(uniform(2, 4), 0, uniform(2, 4), 0),
               3, 7, F(7, 3), THM13),
        _entry("P_U24_MK4", lambda: parallel_connection(uniform(2, 4), 0, mk4(), 0),
               4, 9, F(9, 4), THM13, THM16),
        _entry("MK5-e", mk5_minus_e, 4, 9, F(9, 4), THM13, THM16),
        _entry("Mstar_K33", mstar_k33, 4, 9, F(9, 4), THM13, THM16),
        _entry("P_MK4_MK4", lambda: parallel_connection(mk4(), 0, mk4(), 0),
               5, 11, F(11, 5), THM13, THM16),
    ]
    for r in range(2, 5):
        entries.append(_entry(f"wheel{r}", lambda r=r: wheel(r), r, 2 * r,
                              F(2 * r - 1, 2) if r == 2 else 2))
    for r in range(2, 5):
        entries.append(_entry(f"whirl{r}", lambda r=r: whirl(r), r, 2 * r, 2))
    for n in range(1, 7):
        families = (THM16,) if n >= 2 else ()
        entries.append(_entry(f"P_chain_n{n}", lambda n=n: p_chain(n), n + 1, 2 * n + 1,
                              F(2 * n + 1, n + 1), *families))
    entries.append(_entry("P3_alt", lambda: p_chain(3, attach=[2, 2]), 4, 7, F(7, 4), THM16))
    entries.append(_entry("M18", m18, 8, 18, F(9, 4), THM16))
    return tuple(entries)


def catalog_names() -> list[str]:
    return [entry.name for entry in catalog()]


def named(name: str) -> NamedMatroid:
    for entry in catalog():
        if entry.name == name:
            return entry
    raise KeyError(name)


_PATTERNS = [
    (re.compile(r"U_(\d+)_(\d+)"), lambda m, n: uniform(m, n)),
    (re.compile(r"wheel(\d+)"), wheel),
    (re.compile(r"whirl(\d+)"), whirl),
    (re.compile(r"P_chain_n(\d+)"), p_chain),
]


def lookup(name: str) -> Matroid:
    """Build a catalog matroid by name; parametric families accept any size."""
    try:
        return named(name).matroid
    except KeyError:
        pass
    for pattern, build in _PATTERNS:
        match = pattern.fullmatch(name)
        if match:
            return build(*map(int, match.groups()))
    raise KeyError(f"unknown matroid name {name!r}")


def family(tag: str) -> list[NamedMatroid]:
    return [entry for entry in catalog() if tag in entry.families]
