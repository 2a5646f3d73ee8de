"""Matroids stored as an explicit family of bases.

Elements are the integers ``0..n-1`` and every subset of the ground set is
an ``int`` bitmask (bit ``i`` set means element ``i`` belongs to the set).
The basis family is the single source of truth: ``rank(A)`` is the largest
intersection of ``A`` with a basis.
"""

from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction
from functools import cached_property

import numpy as np

MAX_ELEMENTS = 64


class MatroidError(ValueError):
    """A family of sets that does not describe a matroid."""


class SizeLimitError(ValueError):
    """The requested computation exceeds a documented size cap."""


def to_mask(elements: int | Iterable[int]) -> int:
    """Return the bitmask of ``elements``; an ``int`` is taken to be a mask already."""
    if isinstance(elements, (int, np.integer)):
        if elements < 0:
            raise ValueError("subset masks are non-negative")
        return int(elements)
    mask = 0
    for e in elements:
        if e < 0:
            raise ValueError(f"negative element {e}")
        mask |= 1 << int(e)
    return mask


def elements_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return int(mask).bit_count()


def format_set(mask: int) -> str:
    return "{" + ",".join(map(str, elements_of(mask))) + "}"


def _u64(x: int) -> np.uint64:
    return np.uint64(x)


def _drop_bits(arr: np.ndarray, removed: int) -> np.ndarray:
    """Compact masks by deleting the bit positions in ``removed``."""
    for e in reversed(elements_of(removed)):
        low = arr & _u64((1 << e) - 1)
        arr = low | ((arr >> _u64(e + 1)) << _u64(e))
    return arr


class Matroid:
    """A matroid on ``range(n)`` given by its bases.

    ``bases`` may contain bitmasks or iterables of elements.  With
    ``check=True`` (the default) the family is run through the basis-exchange
    validator and :class:`MatroidError` is raised if it fails.
    """

    def __init__(self, n: int, bases: Iterable, *, check: bool = True):
        if not 0 <= n <= MAX_ELEMENTS:
            raise SizeLimitError(f"ground set size {n} outside 0..{MAX_ELEMENTS}")
        masks = sorted({to_mask(b) for b in bases})
        if not masks:
            raise MatroidError("a matroid has at least one basis")
        if masks[-1] >> n:
            raise MatroidError(f"basis {format_set(masks[-1])} uses an element >= {n}")
        sizes = {popcount(b) for b in masks}
        if len(sizes) != 1:
            raise MatroidError(f"bases of mixed cardinality {sorted(sizes)}")
        self.n = n
        self._arr = np.array(masks, dtype=np.uint64)
        if check:
            self.validate()

    @classmethod
    def _from_array(cls, n: int, arr: np.ndarray) -> Matroid:
        # arr must already be a sorted array of distinct equal-size masks
        obj = cls.__new__(cls)
        obj.n = n
        obj._arr = arr
        return obj

    @classmethod
    def _from_masks(cls, n: int, arr: np.ndarray) -> Matroid:
        return cls._from_array(n, np.unique(arr))

    # basic data

    @cached_property
    def r(self) -> int:
        return popcount(int(self._arr[0]))

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def bases(self) -> frozenset[int]:
        return frozenset(int(b) for b in self._arr)

    @property
    def num_bases(self) -> int:
        return len(self._arr)

    def sorted_bases(self) -> list[tuple[int, ...]]:
        return sorted(tuple(elements_of(int(b))) for b in self._arr)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._arr, other._arr)

    def __hash__(self) -> int:
        return hash((self.n, self._arr.tobytes()))

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, r={self.r}, bases={self.num_bases})"

    def _subset(self, A) -> int:
        mask = to_mask(A)
        if mask >> self.n:
            raise ValueError(f"{format_set(mask)} is not a subset of the ground set")
        return mask

    # validation

    def exchange_violation(self) -> tuple[int, int, int] | None:
        """Return ``(B1, x, B2)`` witnessing a failure of basis exchange, or ``None``.

        For every basis ``B1`` and ``x`` in ``B1`` the set ``S`` of elements
        ``y`` with ``B1 - x + y`` a basis is computed once; every basis avoiding
        ``x`` must then meet ``S``.
        """
        arr = self._arr
        bases = self.bases
        for b1 in bases:
            outside = elements_of(self.ground & ~b1)
            for x in elements_of(b1):
                rest = b1 & ~(1 << x)
                swaps = 0
                for y in outside:
                    if rest | (1 << y) in bases:
                        swaps |= 1 << y
                bad = ((arr >> _u64(x)) & _u64(1)) == 0
                bad &= (arr & _u64(swaps)) == 0
                if bad.any():
                    return b1, x, int(arr[np.argmax(bad)])
        return None

    def validate(self) -> None:
        witness = self.exchange_violation()
        if witness is not None:
            b1, x, b2 = witness
            raise MatroidError(
                f"basis exchange fails for B1={format_set(b1)}, x={x}, B2={format_set(b2)}"
            )

    # rank oracle and friends

    def rank(self, A) -> int:
        a = self._subset(A)
        return int(np.bitwise_count(self._arr & _u64(a)).max())

    def is_independent(self, A) -> bool:
        a = _u64(self._subset(A))
        return bool(((self._arr & a) == a).any())

    def is_basis(self, A) -> bool:
        return self._subset(A) in self.bases

    def closure(self, A) -> int:
        a = self._subset(A)
        counts = np.bitwise_count(self._arr & _u64(a))
        indep = a & int(self._arr[np.argmax(counts)])
        over = self._arr[(self._arr & _u64(indep)) == _u64(indep)]
        reachable = int(np.bitwise_or.reduce(over))
        return a | (self.ground & ~reachable)

    def is_flat(self, A) -> bool:
        return self.closure(A) == self._subset(A)

    def loops(self) -> int:
        return self.ground & ~int(np.bitwise_or.reduce(self._arr))

    def coloops(self) -> int:
        return int(np.bitwise_and.reduce(self._arr))

    @cached_property
    def _pair_counts(self) -> np.ndarray:
        """``P[e, f]`` = number of bases containing both ``e`` and ``f``."""
        shifts = np.arange(self.n, dtype=np.uint64)
        mat = ((self._arr[:, None] >> shifts) & _u64(1)).astype(np.int64)
        return mat.T @ mat

    def simple_representatives(self) -> int:
        """Mask holding the least element of every parallel class of non-loops."""
        pairs = self._pair_counts
        reps: list[int] = []
        for e in range(self.n):
            if pairs[e, e] == 0:
                continue
            if all(pairs[e, f] for f in reps):
                reps.append(e)
        return to_mask(reps)

    def is_loopless(self) -> bool:
        return self.loops() == 0

    def is_simple(self) -> bool:
        return self.simple_representatives() == self.ground

    def epsilon(self) -> int:
        """Number of rank-one flats."""
        return popcount(self.simple_representatives())

    def density(self) -> Fraction:
        if self.r == 0:
            return Fraction(0)
        return Fraction(self.epsilon(), self.r)

    def simplify(self) -> Matroid:
        return self.restrict(self.simple_representatives())

    @cached_property
    def _circuits(self) -> frozenset[int]:
        # every circuit is the fundamental circuit of some element w.r.t. some basis
        bases = self.bases
        found = set()
        for b in bases:
            for e in elements_of(self.ground & ~b):
                c = 1 << e
                for x in elements_of(b):
                    if (b & ~(1 << x)) | (1 << e) in bases:
                        c |= 1 << x
                found.add(c)
        return frozenset(found)

    def circuits(self) -> frozenset[int]:
        return self._circuits

    def triangles_containing(self, e: int) -> frozenset[int]:
        bit = 1 << e
        return frozenset(c for c in self._circuits if c & bit and popcount(c) == 3)

    def components(self) -> list[int]:
        """Connected components as masks, ordered by least element."""
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in self._circuits:
            els = elements_of(c)
            root = find(els[0])
            for x in els[1:]:
                parent[find(x)] = root
        groups: dict[int, int] = {}
        for e in range(self.n):
            groups[find(e)] = groups.get(find(e), 0) | (1 << e)
        return sorted(groups.values(), key=lambda m: m & -m)

    def is_connected(self) -> bool:
        if self.n == 0:
            raise ValueError("connectivity is defined for non-empty matroids")
        return len(self.components()) == 1

    # minors and duality

    def minor(self, contract=0, delete=0) -> tuple[Matroid, tuple[int, ...]]:
        """Return ``(M / contract \\ delete, index_map)``.

        The surviving elements are renumbered in increasing order and
        ``index_map[i]`` is the original index of new element ``i``.
        """
        c = self._subset(contract)
        d = self._subset(delete)
        if c & d:
            raise ValueError("contract and delete sets must be disjoint")
        arr = self._arr
        if c:
            cu = _u64(c)
            counts = np.bitwise_count(arr & cu)
            arr = arr[counts == counts.max()] & ~cu
        if d:
            keep = _u64(self.ground & ~d)
            counts = np.bitwise_count(arr & keep)
            arr = arr[counts == counts.max()] & keep
        removed = c | d
        arr = _drop_bits(arr, removed)
        kept = tuple(e for e in range(self.n) if not removed >> e & 1)
        return Matroid._from_masks(len(kept), arr), kept

    def delete(self, D) -> Matroid:
        return self.minor(delete=D)[0]

    def contract(self, C) -> Matroid:
        return self.minor(contract=C)[0]

    def restrict(self, X) -> Matroid:
        return self.delete(self.ground & ~self._subset(X))

    def dual(self) -> Matroid:
        return Matroid._from_masks(self.n, self._arr ^ _u64(self.ground))

    def relax(self, X) -> Matroid:
        """Declare the circuit-hyperplane ``X`` a basis."""
        x = self._subset(X)
        is_circuit = (
            popcount(x) == self.r
            and not self.is_independent(x)
            and all(self.is_independent(x & ~(1 << e)) for e in elements_of(x))
        )
        is_hyperplane = self.rank(x) == self.r - 1 and self.is_flat(x)
        if not (is_circuit and is_hyperplane):
            raise MatroidError(f"{format_set(x)} is not a circuit-hyperplane")
        return Matroid._from_masks(self.n, np.append(self._arr, _u64(x)))


def from_bases(n: int, bases: Iterable) -> Matroid:
    """Build and validate a matroid from its bases."""
    return Matroid(n, bases)


def relax_circuit_hyperplane(M: Matroid, X) -> Matroid:
    return M.relax(X)
