"""Canonical forms and isomorphism testing for basis-family matroids.

Elements are coloured by iterated refinement on the matrix of pairwise
basis counts.  Individualising one element of a non-singleton colour class
at a time and refining again gives a search tree whose leaves are total
orderings of the ground set; the canonical form is the least sorted list of
relabelled bases over all leaves.  Automorphisms found by comparing leaves
prune branches that lie in a known orbit.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .matroid import Matroid, popcount


def _renumber(table: np.ndarray) -> np.ndarray:
    # rank rows lexicographically; tables are tiny, so tuples beat np.unique
    rows = list(map(tuple, table.tolist()))
    index = {row: i for i, row in enumerate(sorted(set(rows)))}
    return np.array([index[row] for row in rows], dtype=np.int64)


def _refine(pairs: np.ndarray, colors: np.ndarray) -> np.ndarray:
    # Each element's next colour is its current colour followed by the sorted
    # multiset of (colour, pair count) over the other elements.  Rows sort
    # with the current colour first, so the cell order is preserved.
    n = len(colors)
    if n <= 1:
        return colors
    width = int(pairs.max()) + 1
    while True:
        codes = colors[None, :] * width + pairs
        np.fill_diagonal(codes, -1)
        codes.sort(axis=1)
        new = _renumber(np.concatenate([colors[:, None], codes], axis=1))
        if new.max() == colors.max():
            return new
        colors = new


def _individualize(colors: np.ndarray, v: int) -> np.ndarray:
    # v keeps its colour c and sorts first; the rest of its cell moves up one
    c = colors[v]
    out = colors + (colors >= c)
    out[v] = c
    return out


class _Canonizer:
    """Refinement state for one matroid; the full search runs on demand."""

    def __init__(self, M: Matroid):
        self.M = M
        n = M.n
        self.pairs = M._pair_counts
        if n:
            start = _renumber(np.diagonal(self.pairs)[:, None])
            self.colors = _refine(self.pairs, start)
        else:
            self.colors = np.zeros(0, dtype=np.int64)
        self._form: bytes | None = None

    def key(self) -> tuple:
        """A cheap isomorphism invariant used to bucket candidates."""
        M = self.M
        if M.n == 0:
            return (0, M.r, M.num_bases)
        width = int(self.pairs.max()) + 1
        codes = self.colors[None, :] * width + self.pairs
        np.fill_diagonal(codes, -1)
        codes.sort(axis=1)
        table = np.concatenate([self.colors[:, None], codes], axis=1)
        rows, counts = np.unique(table, axis=0, return_counts=True)
        return (M.n, M.r, M.num_bases, rows.tobytes(), counts.tobytes())

    def _code(self, labels: np.ndarray) -> bytes:
        weights = np.left_shift(np.uint64(1), labels.astype(np.uint64))
        relabelled = np.zeros(len(self.M._arr), dtype=np.uint64)
        arr = self.M._arr
        for e in range(self.M.n):
            relabelled |= ((arr >> np.uint64(e)) & np.uint64(1)) * weights[e]
        relabelled.sort()
        return relabelled.astype(">u8").tobytes()

    def form(self) -> bytes:
        if self._form is not None:
            return self._form
        n = self.M.n
        first: list = []
        best: list = []
        generators: list[np.ndarray] = []

        def leaf(labels: np.ndarray) -> None:
            code = self._code(labels)
            if not first:
                first.extend([code, labels])
                best.extend([code, labels])
                return
            for ref_code, ref_labels in (first, best):
                if code == ref_code:
                    inverse = np.argsort(ref_labels)
                    generators.append(inverse[labels])
                    return
            if code < best[0]:
                best[:] = [code, labels]

        def orbit_roots(prefix: list[int]) -> list[int]:
            parent = list(range(n))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for g in generators:
                if all(g[v] == v for v in prefix):
                    for x in range(n):
                        a, b = find(x), find(int(g[x]))
                        if a != b:
                            parent[max(a, b)] = min(a, b)
            return [find(x) for x in range(n)]

        def descend(colors: np.ndarray, prefix: list[int]) -> None:
            sizes = np.bincount(colors)
            if sizes.max() == 1:
                leaf(colors)
                return
            # smallest non-singleton cell, lowest colour on ties
            candidates = np.flatnonzero(sizes > 1)
            target = candidates[np.argmin(sizes[candidates])]
            explored: list[int] = []
            roots, seen_gens = None, 0
            for v in np.flatnonzero(colors == target):
                v = int(v)
                if generators and explored:
                    if len(generators) != seen_gens:
                        roots, seen_gens = orbit_roots(prefix), len(generators)
                    if roots[v] in {roots[u] for u in explored}:
                        continue
                explored.append(v)
                child = _refine(self.pairs, _individualize(colors, v))
                descend(child, prefix + [v])

        if n == 0:
            self._form = b""
        else:
            descend(self.colors, [])
            self._form = best[0]
        return self._form


def canonical_form(M: Matroid) -> tuple[int, int, bytes]:
    """``(n, r, code)`` equal for two matroids exactly when they are isomorphic."""
    return (M.n, M.r, _Canonizer(M).form())


@dataclass(frozen=True)
class IsoCertificate:
    n: int
    r: int
    circuit_sizes: tuple[tuple[int, int], ...]
    triangle_profile: tuple[int, ...]
    form: bytes

    def to_bytes(self) -> bytes:
        head = repr((self.n, self.r, self.circuit_sizes, self.triangle_profile))
        return head.encode() + b"\x00" + self.form


def certificate(M: Matroid) -> IsoCertificate:
    circuits = M.circuits()
    sizes = Counter(popcount(c) for c in circuits)
    tri = Counter()
    for c in circuits:
        if popcount(c) == 3:
            for e in range(M.n):
                if c >> e & 1:
                    tri[e] += 1
    profile = tuple(sorted(tri[e] for e in range(M.n)))
    return IsoCertificate(M.n, M.r, tuple(sorted(sizes.items())), profile, _Canonizer(M).form())


def is_isomorphic(M1: Matroid, M2: Matroid) -> bool:
    if (M1.n, M1.r, M1.num_bases) != (M2.n, M2.r, M2.num_bases):
        return False
    c1, c2 = _Canonizer(M1), _Canonizer(M2)
    if c1.key() != c2.key():
        return False
    return c1.form() == c2.form()


class IsoMemo:
    """A set of matroids up to isomorphism.

    Entries are bucketed by a cheap refinement invariant; canonical forms are
    only computed once a bucket receives a second candidate.
    """

    def __init__(self):
        self._buckets: dict[tuple, list[_Canonizer]] = {}

    def __len__(self) -> int:
        return sum(len(b) for b in self._buckets.values())

    def add(self, M: Matroid) -> bool:
        """Insert ``M``; return ``False`` if an isomorphic copy is already present."""
        canon = _Canonizer(M)
        key = canon.key()
        bucket = self._buckets.get(key)
        if bucket is None:
            self._buckets[key] = [canon]
            return True
        form = canon.form()
        if any(entry.form() == form for entry in bucket):
            return False
        bucket.append(canon)
        return True

    def __contains__(self, M: Matroid) -> bool:
        canon = _Canonizer(M)
        bucket = self._buckets.get(canon.key(), [])
        return bool(bucket) and any(entry.form() == canon.form() for entry in bucket)
