"""Additive representation counting over finite sets of positive integers.

The central quantity is the number of nondecreasing k-term sums from a set X
that hit a target n.  Everything here is exact: a k-term sum over a finite X
is bounded by k * max(X), so profiles enumerate the complete tuple space and
the reported maximum really is the maximum.

A set whose maximum representation count equals ell is a B_{k,ell}-set; for
ell = 1 all k-term sums are distinct (a B_k-set, and for k = 2 a Sidon set).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import comb

from .certs import Certificate
from .errors import FormatError

# Representations materialized per target before falling back to bare counts.
WITNESS_CAP = 10_000

# Identifiers for the four structural properties of B_{k,ell}-sets checked by
# verify_theorem_properties.
CLAUSE_LOWER_ORDERS = "lower-orders"      # every order h in [2, k-1] is a B_h-set
CLAUSE_CROSS_SIZES = "cross-sizes"        # no target has an i-term and a j-term sum, i<j, i+j<2k
CLAUSE_COUNT_LEVELS = "count-levels"      # representation counts take only values 0, 1, ell
CLAUSE_DISJOINT_TERMS = "disjoint-terms"  # two distinct equal-sum k-tuples share no term

ALL_CLAUSES = (
    CLAUSE_LOWER_ORDERS,
    CLAUSE_CROSS_SIZES,
    CLAUSE_COUNT_LEVELS,
    CLAUSE_DISJOINT_TERMS,
)


class FiniteSet:
    """A finite subset of the positive integers, stored strictly increasing."""

    __slots__ = ("elements",)

    def __init__(self, elements=()):
        elems = tuple(elements)
        for x in elems:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValueError(f"elements must be integers, got {x!r}")
        if elems and elems[0] < 1:
            raise ValueError("elements must be >= 1")
        for a, b in zip(elems, elems[1:]):
            if a >= b:
                raise ValueError("elements must be strictly increasing and distinct")
        self.elements = elems

    @classmethod
    def from_values(cls, values, warn_duplicates: bool = False) -> "FiniteSet":
        """Sort and deduplicate arbitrary values into a FiniteSet."""
        values = list(values)
        distinct = sorted(set(values))
        if warn_duplicates and len(distinct) < len(values):
            warnings.warn(f"{len(values) - len(distinct)} duplicate value(s) ignored")
        return cls(distinct)

    def max(self) -> int:
        if not self.elements:
            raise ValueError("empty set has no maximum")
        return self.elements[-1]

    def issubset(self, other: "FiniteSet") -> bool:
        return set(self.elements) <= set(other.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in set(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __eq__(self, other):
        return isinstance(other, FiniteSet) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"FiniteSet({list(self.elements)!r})"


@dataclass(frozen=True)
class RhoWitness:
    target: int
    representations: tuple[tuple[int, ...], ...]
    truncated: bool


@dataclass(frozen=True)
class RhoProfile:
    """Exact distribution of representation counts for one (X, k).

    histogram maps each achieved count c >= 1 to the number of targets with
    exactly c representations; max_value is the largest achieved count (zero
    for an empty histogram).  witnesses holds one sample target per achieved
    count, with its representations materialized up to the cap.
    """

    k: int
    max_value: int
    histogram: dict[int, int]
    witnesses: dict[int, RhoWitness]


@dataclass(frozen=True)
class Classification:
    is_bkl: bool
    ell: int


def _require_order(k: int, minimum: int = 1) -> None:
    if not isinstance(k, int) or k < minimum:
        raise ValueError(f"order k must be an integer >= {minimum}, got {k!r}")


def rho_count(X: FiniteSet, k: int, n: int, cap: int | None = None):
    """Count the nondecreasing k-term sums from X equal to n.

    Returns (count, representations); the list is lexicographically sorted
    and complete unless a cap is given.  The count is always exact.
    """
    _require_order(k)
    elems = X.elements
    count = 0
    reps: list[tuple[int, ...]] = []
    if not elems:
        return 0, reps
    biggest = elems[-1]

    def descend(start: int, remaining: int, target: int, prefix: list[int]):
        nonlocal count
        if remaining == 0:
            if target == 0:
                count += 1
                if cap is None or len(reps) < cap:
                    reps.append(tuple(prefix))
            return
        if biggest * remaining < target:
            return  # even the largest completion falls short
        for idx in range(start, len(elems)):
            x = elems[idx]
            if x * remaining > target:
                break  # smallest possible completion already overshoots
            prefix.append(x)
            descend(idx, remaining - 1, target - x, prefix)
            prefix.pop()

    descend(0, k, n, [])
    return count, reps


def _iter_tuple_sums(X: FiniteSet, k: int):
    """Yield (sum, last_index) over all nondecreasing k-tuples, lexicographically."""
    elems = X.elements

    def descend(start: int, remaining: int, acc: int):
        if remaining == 0:
            yield acc
            return
        for idx in range(start, len(elems)):
            yield from descend(idx, remaining - 1, acc + elems[idx])

    yield from descend(0, k, 0)


def rho_profile(X: FiniteSet, k: int, witness_cap: int = WITNESS_CAP) -> RhoProfile:
    """Exact count profile over every representable target (complete enumeration)."""
    _require_order(k)
    counts: dict[int, int] = {}
    for total in _iter_tuple_sums(X, k):
        counts[total] = counts.get(total, 0) + 1
    histogram: dict[int, int] = {}
    sample: dict[int, int] = {}
    for target in sorted(counts):
        c = counts[target]
        histogram[c] = histogram.get(c, 0) + 1
        if c not in sample:
            sample[c] = target
    witnesses = {}
    for c, target in sample.items():
        _, reps = rho_count(X, k, target, cap=witness_cap)
        witnesses[c] = RhoWitness(target, tuple(reps), truncated=len(reps) < c)
    return RhoProfile(
        k=k,
        max_value=max(histogram) if histogram else 0,
        histogram=histogram,
        witnesses=witnesses,
    )


def tuple_space_size(X: FiniteSet, k: int) -> int:
    """Number of nondecreasing k-tuples over X: multisets of size k."""
    return comb(len(X) + k - 1, k) if len(X) else 0


def classify(X: FiniteSet, k: int) -> Classification:
    """Report ell = max representation count; X is a B_{k,ell}-set iff ell >= 1."""
    _require_order(k, minimum=2)
    profile = rho_profile(X, k)
    return Classification(is_bkl=profile.max_value >= 1, ell=profile.max_value)


def _representable_targets(X: FiniteSet, size: int) -> dict[int, int]:
    counts: dict[int, int] = {}
    for total in _iter_tuple_sums(X, size):
        counts[total] = counts.get(total, 0) + 1
    return counts


def _check_lower_orders(X: FiniteSet, k: int) -> dict:
    for h in range(2, k):
        profile = rho_profile(X, h)
        if profile.max_value != 1:
            witness = profile.witnesses.get(profile.max_value)
            return {
                "status": "fail",
                "witness": {
                    "order": h,
                    "max_count": profile.max_value,
                    "target": witness.target if witness else None,
                    "representations": list(witness.representations) if witness else [],
                },
            }
    return {"status": "pass", "orders_checked": list(range(2, k))}


def _check_cross_sizes(X: FiniteSet, k: int) -> dict:
    """No target may be representable with both i and j terms when i < j, i + j < 2k.

    This is the operative content of the mixed-size property: on a valid
    instance a target with a j-term sum has no shorter sum at all, so the two
    counts never exceed one combined for sizes below the k/k threshold.
    """
    pairs = [(i, j) for i in range(1, 2 * k) for j in range(i + 1, 2 * k) if i + j < 2 * k]
    needed = sorted({s for pair in pairs for s in pair})
    targets = {s: _representable_targets(X, s) for s in needed}
    for i, j in pairs:
        common = set(targets[i]) & set(targets[j])
        if common:
            n = min(common)
            _, reps_i = rho_count(X, i, n)
            _, reps_j = rho_count(X, j, n)
            return {
                "status": "fail",
                "witness": {
                    "sizes": [i, j],
                    "target": n,
                    "representations": [list(reps_i), list(reps_j)],
                },
            }
    return {"status": "pass", "pairs_checked": [list(p) for p in pairs]}


def _check_count_levels(X: FiniteSet, k: int, ell: int) -> dict:
    counts = _representable_targets(X, k)
    for n in sorted(counts):
        c = counts[n]
        if c not in (1, ell):
            _, reps = rho_count(X, k, n)
            return {
                "status": "fail",
                "witness": {"target": n, "count": c, "representations": list(reps)},
            }
    return {"status": "pass", "targets_checked": len(counts)}


def _check_disjoint_terms(X: FiniteSet, k: int) -> dict:
    counts = _representable_targets(X, k)
    pairs_checked = 0
    for n in sorted(counts):
        if counts[n] < 2:
            continue
        _, reps = rho_count(X, k, n)
        for a_idx in range(len(reps)):
            for b_idx in range(a_idx + 1, len(reps)):
                pairs_checked += 1
                if set(reps[a_idx]) & set(reps[b_idx]):
                    return {
                        "status": "fail",
                        "witness": {
                            "target": n,
                            "representations": [list(reps[a_idx]), list(reps[b_idx])],
                        },
                    }
    return {"status": "pass", "pairs_checked": pairs_checked}


def verify_theorem_properties(
    X: FiniteSet, k: int, ell: int, which=None
) -> Certificate:
    """Check the structural properties of a B_{k,ell}-set on a finite X.

    ``which`` selects a subset of ALL_CLAUSES (default: all four).  Each
    clause reports pass or a concrete refuting witness.
    """
    _require_order(k, minimum=2)
    if not isinstance(ell, int) or ell < 2:
        raise ValueError(f"ell must be an integer >= 2, got {ell!r}")
    if which is None:
        which = ALL_CLAUSES
    requested = []
    for clause in which:
        if clause not in ALL_CLAUSES:
            raise ValueError(f"unknown clause {clause!r}; expected one of {ALL_CLAUSES}")
        if clause not in requested:
            requested.append(clause)
    requested.sort(key=ALL_CLAUSES.index)

    results: dict[str, dict] = {}
    for clause in requested:
        if clause == CLAUSE_LOWER_ORDERS:
            results[clause] = _check_lower_orders(X, k)
        elif clause == CLAUSE_CROSS_SIZES:
            results[clause] = _check_cross_sizes(X, k)
        elif clause == CLAUSE_COUNT_LEVELS:
            results[clause] = _check_count_levels(X, k, ell)
        else:
            results[clause] = _check_disjoint_terms(X, k)

    return Certificate(
        check="bkl-properties",
        params={"k": k, "ell": ell, "clauses": requested, "elements": list(X.elements)},
        passed=all(r["status"] == "pass" for r in results.values()),
        details={"clauses": results},
    )


def read_set_file(path) -> FiniteSet:
    """Read a set file: one decimal value per line, '#' comments, blanks ignored.

    Values are sorted and deduplicated; duplicates trigger a warning.
    """
    values = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                value = int(line)
            except ValueError:
                raise FormatError(f"{path}:{lineno}: expected a decimal integer, got {line!r}") from None
            if value < 1:
                raise FormatError(f"{path}:{lineno}: set elements must be >= 1, got {value}")
            values.append(value)
    return FiniteSet.from_values(values, warn_duplicates=True)


def write_set_file(path, X: FiniteSet) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for x in X.elements:
            fh.write(f"{x}\n")
