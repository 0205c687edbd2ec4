"""Deciding partition relations on finite sets and graphs.

A set X arrows [k, ell] in r colors when every r-coloring of X has a color
class in which some integer attains exactly ell k-term representations (and
none more within that class).  The decision procedure backtracks over
colorings in lexicographic order with the smallest element's color fixed to
1, and returns the first counterexample coloring or exhausts the space.

Pruning uses persistent witnesses only: once a class contains every tuple of
a target that has exactly ell representations in the whole of X, and no
target of X exceeds ell, that class keeps maximum count ell under every
completion.  If some target of X does exceed ell the witness is not
persistent (another target could overtake it inside a class), so pruning is
disabled and the search is fully exhaustive.

The graph variant asks for a monochromatic theta copy under every r-coloring
of the edges.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import kernels
from .config import Config, DEFAULT
from .errors import GuardRefusal
from .ordgraph import OrderedGraph, find_theta_copies
from .repset import FiniteSet, _iter_tuple_sums, rho_count


@dataclass(frozen=True)
class Coloring:
    """A total color assignment on a tuple of items (set elements or edges)."""

    items: tuple
    colors: tuple[int, ...]
    r: int

    def __post_init__(self):
        if len(self.items) != len(self.colors):
            raise ValueError("items and colors must have equal length")
        for c in self.colors:
            if not 1 <= c <= self.r:
                raise ValueError(f"color {c} outside 1..{self.r}")

    def color_of(self, item) -> int:
        return self.colors[self.items.index(item)]

    def classes(self) -> dict[int, list]:
        out: dict[int, list] = {q: [] for q in range(1, self.r + 1)}
        for item, c in zip(self.items, self.colors):
            out[c].append(item)
        return out


@dataclass(frozen=True)
class ArrowVerdict:
    holds: bool
    counterexample: Coloring | None
    colorings_examined: int
    pruned: int

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "counterexample": None
            if self.counterexample is None
            else {
                "items": list(self.counterexample.items),
                "colors": list(self.counterexample.colors),
                "r": self.counterexample.r,
            },
            "colorings_examined": self.colorings_examined,
            "pruned": self.pruned,
        }


@dataclass(frozen=True)
class MonoWitness:
    color_class: int
    target: int
    representations: tuple[tuple[int, ...], ...]


def _check_arrow_args(k: int, ell: int, r: int) -> None:
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")
    if not isinstance(ell, int) or ell < 2:
        raise ValueError(f"ell must be an integer >= 2, got {ell!r}")
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"r must be an integer >= 1, got {r!r}")


def _guard(space: int, limit: int, what: str) -> None:
    if space > limit:
        raise GuardRefusal(
            f"{what} search space of {space} colorings exceeds the guard of {limit}; "
            "raise the guard in the config to proceed"
        )


def _tuple_groups(X: FiniteSet, k: int):
    """Support bitmasks of all nondecreasing k-tuples, grouped by target sum."""
    elems = X.elements
    groups: dict[int, list[int]] = {}

    def descend(start: int, remaining: int, acc: int, mask: int):
        if remaining == 0:
            groups.setdefault(acc, []).append(mask)
            return
        for idx in range(start, len(elems)):
            descend(idx, remaining - 1, acc + elems[idx], mask | (1 << idx))

    descend(0, k, 0, 0)
    return [tuple(groups[s]) for s in sorted(groups)]


def _merge_prefix_results(results):
    """Combine per-prefix searches as the sequential order would have seen them."""
    examined = 0
    pruned = 0
    for hit, coloring, ex, pr in results:
        examined += ex
        pruned += pr
        if hit:
            return True, coloring, examined, pruned
    return False, None, examined, pruned


def _prefix_search(n, r, workers, run_prefix):
    """Run the search whole, or split on the second item's color across threads."""
    if workers <= 1 or n <= 1 or r <= 1:
        return run_prefix((1,))
    prefixes = [(1, c) for c in range(1, r + 1)]
    with ThreadPoolExecutor(max_workers=min(workers, len(prefixes))) as pool:
        results = list(pool.map(run_prefix, prefixes))
    return _merge_prefix_results(results)


def arrow_check(
    X: FiniteSet,
    k: int,
    ell: int,
    r: int,
    workers: int = 1,
    config: Config | None = None,
    backend: str | None = None,
) -> ArrowVerdict:
    """Decide whether every r-coloring of X has a class with maximum count ell.

    Exhaustive with symmetry breaking (smallest element colored 1).  The
    verdict and the counterexample equal the sequential lexicographic-first
    result regardless of the worker count.
    """
    _check_arrow_args(k, ell, r)
    cfg = config or DEFAULT
    n = len(X)
    _guard(r ** max(n - 1, 0), cfg.arrow_max_colorings, "set coloring")

    if n == 0:
        # No class can reach count ell >= 2, so the empty coloring refutes.
        return ArrowVerdict(
            holds=False,
            counterexample=Coloring(items=(), colors=(), r=r),
            colorings_examined=1,
            pruned=0,
        )

    groups = _tuple_groups(X, k)
    ambient_max = max((len(g) for g in groups), default=0)
    prune_enabled = ambient_max <= ell
    witness_unions = []
    if prune_enabled:
        for masks in groups:
            if len(masks) == ell:
                union = 0
                for m in masks:
                    union |= m
                witness_unions.append(union)
    witness_unions = tuple(witness_unions)

    def run_prefix(prefix):
        return kernels.set_search(
            n, r, tuple(groups), witness_unions, ell, prune_enabled, prefix,
            backend=backend,
        )

    hit, coloring, examined, pruned = _prefix_search(n, r, workers, run_prefix)
    counterexample = None
    if hit:
        counterexample = Coloring(items=X.elements, colors=tuple(coloring), r=r)
    return ArrowVerdict(
        holds=not hit,
        counterexample=counterexample,
        colorings_examined=examined,
        pruned=pruned,
    )


def edge_arrow_check(
    H: OrderedGraph,
    k: int,
    ell: int,
    r: int,
    workers: int = 1,
    config: Config | None = None,
    backend: str | None = None,
) -> ArrowVerdict:
    """Decide whether every r-edge-coloring of H leaves a theta copy monochromatic."""
    _check_arrow_args(k, ell, r)
    cfg = config or DEFAULT
    edges = H.sorted_edges()
    n = len(edges)
    _guard(r ** max(n - 1, 0), cfg.edge_arrow_max_colorings, "edge coloring")

    if n == 0:
        # No edges means no theta copy; the empty coloring refutes.
        return ArrowVerdict(
            holds=False,
            counterexample=Coloring(items=(), colors=(), r=r),
            colorings_examined=1,
            pruned=0,
        )

    edge_index = {e: i for i, e in enumerate(edges)}
    copy_masks = []
    for copy in find_theta_copies(H, k, ell):
        mask = 0
        for e in copy.edge_set():
            mask |= 1 << edge_index[e]
        copy_masks.append(mask)
    copy_masks = tuple(sorted(copy_masks))

    def run_prefix(prefix):
        return kernels.edge_search(n, r, copy_masks, prefix, backend=backend)

    hit, coloring, examined, pruned = _prefix_search(n, r, workers, run_prefix)
    counterexample = None
    if hit:
        counterexample = Coloring(items=tuple(edges), colors=tuple(coloring), r=r)
    return ArrowVerdict(
        holds=not hit,
        counterexample=counterexample,
        colorings_examined=examined,
        pruned=pruned,
    )


def mono_class_witness(
    X: FiniteSet, coloring: Coloring, k: int, ell: int
) -> MonoWitness | None:
    """First color class (lowest index) holding a target with exactly ell k-sums.

    Within the class, the smallest such target is reported together with its
    representations.  Returns None when no class qualifies.  The coloring
    must cover X exactly.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be an integer >= 1, got {k!r}")
    if set(coloring.items) != set(X.elements) or len(coloring.items) != len(X):
        raise ValueError("coloring must assign a color to exactly the elements of X")
    for q, members in sorted(coloring.classes().items()):
        class_set = FiniteSet(sorted(members))
        counts: dict[int, int] = {}
        for total in _iter_tuple_sums(class_set, k):
            counts[total] = counts.get(total, 0) + 1
        if counts and max(counts.values()) == ell:
            target = min(n for n, c in counts.items() if c == ell)
            _, reps = rho_count(class_set, k, target)
            return MonoWitness(color_class=q, target=target, representations=tuple(reps))
    return None


def arrow_oracle(X: FiniteSet, k: int, ell: int, r: int) -> ArrowVerdict:
    """Reference decision by enumerating every labeled r-coloring, no pruning.

    Independent of the kernel lanes; used for differential testing and the
    oracle CLI.  Counterexamples are lexicographic-first over all labeled
    colorings (which may differ from arrow_check's symmetry-reduced choice).
    """
    _check_arrow_args(k, ell, r)
    from itertools import product

    elems = X.elements
    examined = 0
    for assignment in product(range(1, r + 1), repeat=len(elems)):
        examined += 1
        satisfied = False
        for q in range(1, r + 1):
            members = [x for x, c in zip(elems, assignment) if c == q]
            counts: dict[int, int] = {}
            for total in _iter_tuple_sums(FiniteSet(members), k):
                counts[total] = counts.get(total, 0) + 1
            if counts and max(counts.values()) == ell:
                satisfied = True
                break
        if not satisfied:
            return ArrowVerdict(
                holds=False,
                counterexample=Coloring(items=elems, colors=assignment, r=r),
                colorings_examined=examined,
                pruned=0,
            )
    return ArrowVerdict(holds=True, counterexample=None, colorings_examined=examined, pruned=0)
