"""Line-oriented verification reports for the classification statements.

A report is a few ``NOTE`` lines, then one ``CHECK <name> PASS|FAIL <detail>``
line per sub-check, then a single ``SUMMARY`` line.  Only membership and
internal consistency are checked; completeness of a classification is a
theorem and is never re-proved here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .constructions import THM13, THM16, catalog, family, named, uniform
from .covering import Cover, ViolatingSet, is_coverable
from .criticality import (
    EXHAUSTIVE_LIMIT,
    MinorSearchResult,
    contract_inequality_violations,
    lemma_1_4_holds,
    max_proper_minor_density,
    single_step_minors,
    triangle_counts,
)
from .iso import certificate
from .matroid import format_set, to_mask

COMPLETENESS_NOTE = (
    "NOTE completeness of the classification is not re-proved; "
    "only membership and internal consistency are checked"
)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"CHECK {self.name} {status} {self.detail}".rstrip()


@dataclass
class Report:
    title: str
    notes: list[str] = field(default_factory=list)
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> Check:
        check = Check(name, bool(ok), detail)
        self.checks.append(check)
        return check

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def summary(self) -> str:
        good = sum(c.ok for c in self.checks)
        status = "PASS" if self.passed else "FAIL"
        return f"SUMMARY {self.title} {status} {good}/{len(self.checks)}"

    def lines(self) -> list[str]:
        return [COMPLETENESS_NOTE, *self.notes, *(c.line() for c in self.checks), self.summary()]

    def text(self) -> str:
        return "\n".join(self.lines()) + "\n"


_SEARCHES: dict[tuple[str, int | None], MinorSearchResult] = {}


def minor_search(name: str, max_depth: int | None = None) -> MinorSearchResult:
    """Full minor search for a catalog entry, cached per process."""
    key = (name, max_depth)
    if key not in _SEARCHES:
        _SEARCHES[key] = max_proper_minor_density(named(name).matroid, max_depth=max_depth)
    return _SEARCHES[key]


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def verify_theorem_1_3() -> Report:
    report = Report("thm1.3")
    entries = family(THM13)
    report.notes.append(f"NOTE {len(entries)} listed matroids; t = 2")
    certs = {e.name: certificate(e.matroid) for e in entries}
    two = Fraction(2)
    for entry in entries:
        M = entry.matroid
        d = M.density()
        top = minor_search(entry.name).max_density
        simple = M.is_simple()
        covered = is_coverable(M, 2)
        steps_ok = all(isinstance(is_coverable(N, 2), Cover) for _, N in single_step_minors(M))
        twins = [o for o in certs if o != entry.name and certs[o] == certs[entry.name]]
        ok = (simple and d > two and top <= two and isinstance(covered, ViolatingSet)
              and steps_ok and not twins and d == entry.density)
        detail = (f"d={d} max_minor={top} simple={_yes(simple)} "
                  f"2-coverable={_yes(isinstance(covered, Cover))} "
                  f"single_steps_2-coverable={_yes(steps_ok)} "
                  f"isomorphic_to={','.join(twins) or 'none'}")
        report.add(entry.name, ok, detail)
    return report


def verify_theorem_1_6(max_chain: int = 6, m18_depth: int | None = None) -> Report:
    if not 2 <= max_chain <= 6:
        raise ValueError("max_chain must be between 2 and 6")
    report = Report("thm1.6")
    mode = "full" if m18_depth is None else f"depth<={m18_depth}"
    report.notes.append(f"NOTE M18 mode={mode}")
    report.notes.append("NOTE only the shipped P_n attachment variants are checked")
    for entry in family(THM16):
        if entry.name.startswith("P_chain_n") and int(entry.name[9:]) > max_chain:
            continue
        if entry.name == "P3_alt" and max_chain < 3:
            continue
        M = entry.matroid
        d = M.density()
        depth = m18_depth if entry.name == "M18" else None
        found = minor_search(entry.name, depth)
        expected = entry.density
        if entry.name.startswith("P_chain_n") or entry.name == "P3_alt":
            n = (M.n - 1) // 2
            expected = Fraction(2 * n + 1, n + 1)
        ok = d == expected == entry.density and found.max_density < d
        detail = (f"d={d} expected={expected} max_minor={found.max_density} "
                  f"states={found.states_explored}")
        if entry.name == "M18":
            detail += f" mode={mode}"
        report.add(entry.name, ok, detail)
    report.add("cross-thm1.3", *_cross_check())
    return report


def _cross_check() -> tuple[bool, str]:
    bound = Fraction(9, 4)
    low = {e.name for e in family(THM13) if e.matroid.density() <= bound}
    shared = {e.name for e in catalog() if THM13 in e.families and THM16 in e.families}
    return low == shared, "thm1.3 with d<=9/4: " + ",".join(sorted(low))


def verify_cross_theorem() -> Report:
    report = Report("cross")
    report.add("thm1.3-in-thm1.6", *_cross_check())
    return report


def verify_prop_1_2(max_k: int = 5) -> Report:
    if not 1 <= max_k <= 5:
        raise ValueError("max_k must be between 1 and 5")
    report = Report("prop1.2")
    for k in range(1, max_k + 1):
        M = uniform(1, k + 1)
        root = is_coverable(M, k)
        minors = failures = 0
        for labels in product(range(3), repeat=M.n):
            if not any(labels):
                continue
            C = to_mask(e for e, x in enumerate(labels) if x == 1)
            D = to_mask(e for e, x in enumerate(labels) if x == 2)
            N = M.minor(contract=C, delete=D)[0]
            if N.loops():
                continue
            minors += 1
            if not isinstance(is_coverable(N, k), Cover):
                failures += 1
        ok = isinstance(root, ViolatingSet) and failures == 0
        detail = f"U_1_{k + 1}: {root}; loopless proper minors={minors} not {k}-coverable={failures}"
        report.add(f"k={k}", ok, detail)
    return report


def verify_lemma_1_4() -> Report:
    report = Report("lemma1.4")
    for entry in family(THM13):
        M = entry.matroid
        detail = f"2*{M.r}={2 * M.r} |E|-1={M.n - 1} coloops={format_set(M.coloops())}"
        report.add(entry.name, lemma_1_4_holds(M, 2), detail)
    return report


def verify_lemma_2_2(exhaustive_limit: int = EXHAUSTIVE_LIMIT) -> Report:
    """Contraction inequality and triangle corollary on density-critical entries."""
    report = Report("lemma2.2")
    report.notes.append(f"NOTE S ranges over all sets with 0 < r(S) < r(M) when n <= {exhaustive_limit}, "
                        "otherwise over sets of size 1 and 2")
    for entry in catalog():
        M = entry.matroid
        if M.r < 2 or minor_search(entry.name).max_density >= M.density():
            continue
        bad = contract_inequality_violations(M, exhaustive_limit)
        counts = triangle_counts(M)
        need = 2 if M.density() >= 2 else 1
        scope = "all" if M.n <= exhaustive_limit else "size<=2"
        tri_ok = min(counts) >= need
        detail = (f"S={scope} violations={len(bad)} min_triangles={min(counts)} need={need}")
        if bad:
            detail += f" first={format_set(bad[0])}"
        report.add(entry.name, not bad and tri_ok, detail)
    return report


VERIFIERS = {
    "thm1.3": verify_theorem_1_3,
    "thm1.6": verify_theorem_1_6,
    "prop1.2": verify_prop_1_2,
    "lemma1.4": verify_lemma_1_4,
    "lemma2.2": verify_lemma_2_2,
}


__all__ = [
    "Check",
    "Report",
    "VERIFIERS",
    "minor_search",
    "verify_theorem_1_3",
    "verify_theorem_1_6",
    "verify_prop_1_2",
    "verify_lemma_1_4",
    "verify_lemma_2_2",
    "verify_cross_theorem",
]
