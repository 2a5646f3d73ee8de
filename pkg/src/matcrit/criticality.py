"""Density-criticality.

``max_proper_minor_density`` walks the minor poset breadth-first.  Every
state is a simple matroid of positive rank: a child is produced by deleting
or contracting one element and then simplifying, which never changes
density.  States are deduplicated up to isomorphism with an ``IsoMemo``.
Each state remembers which original elements were deleted and contracted
to reach it, so the maximising minor can be replayed on the input.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .iso import IsoMemo
from .matroid import Matroid, elements_of, to_mask


@dataclass(frozen=True)
class MinorSearchResult:
    max_density: Fraction
    delete: int | None
    contract: int | None
    states_explored: int
    stopped_early: bool = False
    max_depth: int | None = None

    @property
    def witness(self) -> tuple[int, int] | None:
        if self.delete is None:
            return None
        return self.delete, self.contract

    @property
    def complete(self) -> bool:
        return not self.stopped_early and self.max_depth is None

    def replay(self, M: Matroid) -> Matroid | None:
        if self.witness is None:
            return None
        return M.minor(contract=self.contract, delete=self.delete)[0]


@dataclass
class _State:
    matroid: Matroid
    labels: tuple[int, ...]
    delete: int
    contract: int
    depth: int


def _step(state: _State, e: int, contract: bool) -> _State:
    M = state.matroid
    bit = 1 << e
    child, kept = M.minor(contract=bit) if contract else M.minor(delete=bit)
    labels = tuple(state.labels[i] for i in kept)
    mark = 1 << state.labels[e]
    delete, contracted = state.delete, state.contract
    if contract:
        contracted |= mark
    else:
        delete |= mark
    extra = child.ground & ~child.simple_representatives()
    if extra:
        child, kept = child.minor(delete=extra)
        delete |= to_mask(labels[i] for i in elements_of(extra))
        labels = tuple(labels[i] for i in kept)
    return _State(child, labels, delete, contracted, state.depth + 1)


def _children(state: _State):
    n = state.matroid.n
    for e in range(n):
        yield _step(state, e, contract=False)
    for e in range(n):
        yield _step(state, e, contract=True)


def max_proper_minor_density(
    M: Matroid,
    stop_at: Fraction | None = None,
    *,
    strict: bool = False,
    max_depth: int | None = None,
) -> MinorSearchResult:
    """Largest density of a proper minor of ``M`` with positive rank.

    With ``stop_at`` the search returns as soon as a minor of density at
    least ``stop_at`` is seen (greater than, when ``strict``).  With
    ``max_depth`` only minors reachable in that many delete/contract steps
    are examined; simplification steps are free.
    """
    if M.r < 1:
        raise ValueError("max_proper_minor_density needs rank at least 1")
    memo = IsoMemo()
    best = Fraction(0)
    witness: tuple[int, int] | None = None
    explored = 0
    queue = deque([_State(M, tuple(range(M.n)), 0, 0, 0)])
    while queue:
        state = queue.popleft()
        if max_depth is not None and state.depth >= max_depth:
            continue
        for child in _children(state):
            N = child.matroid
            if N.r == 0 or not memo.add(N):
                continue
            explored += 1
            d = N.density()
            if d > best:
                best, witness = d, (child.delete, child.contract)
            if stop_at is not None and (d > stop_at if strict else d >= stop_at):
                return MinorSearchResult(best, *witness, explored, True, max_depth)
            queue.append(child)
    delete, contract = witness if witness else (None, None)
    return MinorSearchResult(best, delete, contract, explored, False, max_depth)


def _require_rank(M: Matroid) -> None:
    if M.r < 1:
        raise ValueError("criticality is defined for matroids of positive rank")


def is_density_critical(M: Matroid, *, prune: bool = True) -> bool:
    _require_rank(M)
    d = M.density()
    found = max_proper_minor_density(M, d if prune else None)
    return found.max_density < d


def is_strictly_t_critical(M: Matroid, t: Fraction, *, prune: bool = True) -> bool:
    """d(M) > t while no proper minor has density above t."""
    _require_rank(M)
    t = Fraction(t)
    if M.density() <= t:
        return False
    found = max_proper_minor_density(M, t if prune else None, strict=True)
    return found.max_density <= t


def is_t_critical(M: Matroid, t: Fraction, *, prune: bool = True) -> bool:
    """d(M) >= t while every proper minor has density below t."""
    _require_rank(M)
    t = Fraction(t)
    if M.density() < t:
        return False
    found = max_proper_minor_density(M, t if prune else None)
    return found.max_density < t


@dataclass(frozen=True)
class CriticalityReport:
    name: str
    density: Fraction
    max_minor_density: Fraction
    is_density_critical: bool
    strictly_t_critical: dict[Fraction, bool] = field(default_factory=dict)
    t_critical: dict[Fraction, bool] = field(default_factory=dict)
    lemma_1_4_holds: bool = False


def criticality_report(name: str, M: Matroid, ts=(), *, k: int = 2) -> CriticalityReport:
    """All criticality flags for ``M`` from a single exhaustive search."""
    _require_rank(M)
    d = M.density()
    top = max_proper_minor_density(M).max_density
    ts = [Fraction(t) for t in ts]
    return CriticalityReport(
        name=name,
        density=d,
        max_minor_density=top,
        is_density_critical=top < d,
        strictly_t_critical={t: d > t and top <= t for t in ts},
        t_critical={t: d >= t and top < t for t in ts},
        lemma_1_4_holds=lemma_1_4_holds(M, k),
    )


def lemma_1_4_holds(M: Matroid, k: int = 2) -> bool:
    return k * M.r == M.n - 1 and M.coloops() == 0


EXHAUSTIVE_LIMIT = 14


def contract_inequality_violations(M: Matroid, exhaustive_limit: int = EXHAUSTIVE_LIMIT) -> list[int]:
    """Sets S breaking |E| - eps(M/S) > d(M) r(S).

    S runs over subsets with 0 < r(S) < r(M); for the other subsets the two
    sides coincide.  Every such subset is tried when ``n <= exhaustive_limit``,
    otherwise only sets of one or two elements.
    """
    if M.r < 2:
        raise ValueError("the contraction inequality needs rank at least 2")
    d = M.density()
    if M.n <= exhaustive_limit:
        candidates = range(1, 1 << M.n)
    else:
        candidates = [to_mask(c) for k in (1, 2) for c in combinations(range(M.n), k)]
    bad = []
    for S in candidates:
        rs = M.rank(S)
        if not 0 < rs < M.r:
            continue
        if not M.n - M.contract(S).epsilon() > d * rs:
            bad.append(S)
    return bad


def triangle_counts(M: Matroid) -> list[int]:
    return [len(M.triangles_containing(e)) for e in range(M.n)]


def triangle_corollary_holds(M: Matroid) -> bool:
    """Every element is on a triangle, and on two when d(M) >= 2."""
    need = 2 if M.density() >= 2 else 1
    return all(c >= need for c in triangle_counts(M))


def check_contract_inequality(M: Matroid, exhaustive_limit: int = EXHAUSTIVE_LIMIT) -> bool:
    return not contract_inequality_violations(M, exhaustive_limit) and triangle_corollary_holds(M)


def single_step_minors(M: Matroid):
    """Simplified single-element deletions and contractions, with their labels."""
    root = _State(M, tuple(range(M.n)), 0, 0, 0)
    for e in range(M.n):
        yield f"\\{e}", _step(root, e, contract=False).matroid
    for e in range(M.n):
        yield f"/{e}", _step(root, e, contract=True).matroid


__all__ = [
    "MinorSearchResult",
    "CriticalityReport",
    "max_proper_minor_density",
    "is_density_critical",
    "is_strictly_t_critical",
    "is_t_critical",
    "criticality_report",
    "lemma_1_4_holds",
    "contract_inequality_violations",
    "check_contract_inequality",
    "triangle_corollary_holds",
    "triangle_counts",
    "single_step_minors",
]
