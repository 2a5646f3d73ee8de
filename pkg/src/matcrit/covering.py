"""Covering a matroid by k independent sets.

``is_coverable`` runs the matroid partition algorithm.  Elements are
inserted one at a time; if no part can absorb the new element directly,
a breadth-first search over single-element exchanges looks for a shortest
chain of moves that ends in a part with room.  When the search dies out the
set of reached elements has ``k * r(A) < |A|``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .matroid import Matroid, SizeLimitError, elements_of, format_set, popcount

ORACLE_MAX_ELEMENTS = 20


@dataclass(frozen=True)
class Cover:
    parts: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.parts)

    def is_valid_for(self, M: Matroid) -> bool:
        union = 0
        for part in self.parts:
            if not M.is_independent(part):
                return False
            union |= part
        return union == M.ground

    def __str__(self) -> str:
        return "Cover " + " ".join(format_set(p) for p in self.parts)


@dataclass(frozen=True)
class ViolatingSet:
    subset: int
    k: int

    def is_valid_for(self, M: Matroid) -> bool:
        return self.k * M.rank(self.subset) < popcount(self.subset)

    def __str__(self) -> str:
        return f"ViolatingSet {format_set(self.subset)}"


def _grow(M: Matroid, parts: list[int], owner: dict[int, int], s: int) -> int:
    """Insert ``s`` into the partition; return 0 on success, else the reached set."""
    k = len(parts)
    pred = {s: -1}
    reached = 1 << s
    queue = deque([s])
    while queue:
        x = queue.popleft()
        xbit = 1 << x
        home = owner.get(x, -1)
        for i in range(k):
            if i != home and M.is_independent(parts[i] | xbit):
                _shift_chain(parts, owner, pred, x, i)
                return 0
        for i in range(k):
            if i == home:
                continue
            for y in elements_of(parts[i] & ~reached):
                if M.is_independent((parts[i] & ~(1 << y)) | xbit):
                    pred[y] = x
                    reached |= 1 << y
                    queue.append(y)
    return reached


def _shift_chain(parts, owner, pred, last, sink) -> None:
    chain = [last]
    while pred[chain[-1]] != -1:
        chain.append(pred[chain[-1]])
    chain.reverse()
    # chain[0] is the new element; chain[j] takes the slot of chain[j + 1]
    targets = [owner[y] for y in chain[1:]] + [sink]
    for e in chain:
        if e in owner:
            parts[owner[e]] &= ~(1 << e)
    for e, part in zip(chain, targets):
        parts[part] |= 1 << e
        owner[e] = part


def is_coverable(M: Matroid, k: int) -> Cover | ViolatingSet:
    """Return a cover of ``M`` by ``k`` independent sets or a set witnessing that none exists."""
    if k < 1:
        raise ValueError("k must be at least 1")
    parts = [0] * k
    owner: dict[int, int] = {}
    for s in range(M.n):
        reached = _grow(M, parts, owner, s)
        if reached:
            result = ViolatingSet(reached, k)
            assert result.is_valid_for(M)
            return result
    cover = Cover(tuple(parts))
    assert cover.is_valid_for(M)
    return cover


def _require_loopless(M: Matroid) -> None:
    if M.loops():
        raise ValueError(f"covering number is undefined: loops {format_set(M.loops())}")


def covering_number(M: Matroid) -> int:
    """Least k for which ``M`` is a union of k independent sets."""
    _require_loopless(M)
    if M.n == 0:
        return 0
    k = max(1, -(-M.n // M.r))
    while isinstance(is_coverable(M, k), ViolatingSet):
        k += 1
    return k


def rank_table(M: Matroid) -> np.ndarray:
    """``table[A]`` = rank of the subset with mask ``A``, for all ``2**n`` subsets."""
    n = M.n
    if n > ORACLE_MAX_ELEMENTS:
        raise SizeLimitError(f"rank table needs n <= {ORACLE_MAX_ELEMENTS}, got {n}")
    size = 1 << n
    indep = np.zeros(size, dtype=bool)
    indep[M._arr.astype(np.int64)] = True
    shape = (2,) * n
    cube = indep.reshape(shape)
    # downward closure, one coordinate at a time
    for axis in range(n):
        lo = [slice(None)] * n
        hi = [slice(None)] * n
        lo[axis], hi[axis] = 0, 1
        cube[tuple(lo)] |= cube[tuple(hi)]
    sizes = np.bitwise_count(np.arange(size, dtype=np.uint64)).astype(np.int8)
    table = np.where(indep, sizes, 0).astype(np.int8)
    cube = table.reshape(shape)
    # rank(A) = largest independent subset: max over subsets
    for axis in range(n):
        lo = [slice(None)] * n
        hi = [slice(None)] * n
        lo[axis], hi[axis] = 0, 1
        cube[tuple(hi)] = np.maximum(cube[tuple(hi)], cube[tuple(lo)])
    return table


def covering_number_oracle(M: Matroid, *, flats_only: bool = False) -> int:
    """max over non-empty A of ceil(|A| / r(A)), evaluated directly."""
    _require_loopless(M)
    if M.n == 0:
        return 0
    if flats_only:
        return max(-(-popcount(F) // M.rank(F)) for F in flats(M) if F)
    table = rank_table(M).astype(np.int64)
    sizes = np.bitwise_count(np.arange(1 << M.n, dtype=np.uint64)).astype(np.int64)
    return int((-(-sizes[1:] // table[1:])).max())


def flats(M: Matroid) -> list[int]:
    """All flats, sorted by mask."""
    start = M.closure(0)
    seen = {start}
    stack = [start]
    while stack:
        F = stack.pop()
        for e in elements_of(M.ground & ~F):
            G = M.closure(F | (1 << e))
            if G not in seen:
                seen.add(G)
                stack.append(G)
    return sorted(seen)


def max_subset_density(M: Matroid) -> Fraction:
    """max |A| / r(A) over subsets of positive rank; a scan over flats suffices."""
    if M.r < 1:
        raise ValueError("max_subset_density needs rank at least 1")
    return max(Fraction(popcount(F), M.rank(F)) for F in flats(M) if M.rank(F) > 0)
