"""Forest-of-copies recognition and extension search.

A family of subgraph copies is a forest of copies when some enumeration adds
each copy so that it meets the union of its predecessors in nothing, a single
vertex, or a two-vertex set that is an edge of both the new copy and an
earlier one.  Whether a copy can be appended depends only on the set already
placed, not on its internal order, so the search memoizes dead subsets.

Families of single edges reduce to ordinary forests, but the property is not
closed under subfamilies: a ring of copies pairwise glued at vertices can be
completed into a forest by adding further copies.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .config import Config, DEFAULT
from .errors import FormatError, GuardRefusal
from .ordgraph import Copy, OrderedGraph, validate_copy, write_graph_file, read_graph_file


@dataclass(frozen=True)
class CopyFamily:
    """A host graph with a set of validated induced copies into it.

    Members are deduplicated: two copies with the same pattern and the same
    host vertices count once.
    """

    host: OrderedGraph
    members: tuple[Copy, ...]

    @classmethod
    def build(cls, host: OrderedGraph, members) -> "CopyFamily":
        seen = []
        for copy in members:
            validate_copy(host, copy)
            if copy not in seen:
                seen.append(copy)
        return cls(host=host, members=tuple(seen))


@dataclass(frozen=True)
class ForestResult:
    is_forest: bool
    ordering: tuple[int, ...] | None
    stuck_subset: tuple[int, ...] | None


@dataclass(frozen=True)
class ExtensionResult:
    found: bool
    extension: tuple[int, ...] | None  # indices into the pool
    subsets_checked: int


def _member_sets(family: CopyFamily):
    vsets = [copy.vertex_set() for copy in family.members]
    esets = [copy.host_edges() for copy in family.members]
    return vsets, esets


def _addable(vset, eset, union_v, union_e) -> bool:
    meet = vset & union_v
    if len(meet) <= 1:
        return True
    if len(meet) == 2:
        pair = tuple(sorted(meet))
        return pair in eset and pair in union_e
    return False


def _find_ordering(vsets, esets, indices) -> tuple[int, ...] | None:
    """Search insertion orders over the given member indices; memoize dead subsets."""
    total = len(indices)
    position = {m: i for i, m in enumerate(indices)}
    dead: set[int] = set()
    order: list[int] = []

    def descend(mask: int, union_v: frozenset, union_e: frozenset) -> bool:
        if len(order) == total:
            return True
        if mask in dead:
            return False
        for m in indices:
            bit = 1 << position[m]
            if mask & bit:
                continue
            if not _addable(vsets[m], esets[m], union_v, union_e):
                continue
            order.append(m)
            if descend(mask | bit, union_v | vsets[m], union_e | esets[m]):
                return True
            order.pop()
        dead.add(mask)
        return False

    if descend(0, frozenset(), frozenset()):
        return tuple(order)
    return None


def is_forest_of_copies(family: CopyFamily, config: Config | None = None) -> ForestResult:
    """Decide the forest property; yield an ordering or a minimal stuck subfamily.

    The refutation is a subfamily that is itself not a forest of copies and
    stays that way under no further member removal (inclusion-minimal).
    """
    cfg = config or DEFAULT
    if not family.members:
        raise ValueError("the family must contain at least one copy")
    if len(family.members) > cfg.forest_max_copies:
        raise GuardRefusal(
            f"family of {len(family.members)} copies exceeds the guard of "
            f"{cfg.forest_max_copies}"
        )
    vsets, esets = _member_sets(family)
    indices = list(range(len(family.members)))
    ordering = _find_ordering(vsets, esets, indices)
    if ordering is not None:
        return ForestResult(is_forest=True, ordering=ordering, stuck_subset=None)

    # Greedy minimization: drop members while the remainder still refutes.
    stuck = list(indices)
    changed = True
    while changed:
        changed = False
        for m in list(stuck):
            trial = [x for x in stuck if x != m]
            if trial and _find_ordering(vsets, esets, trial) is None:
                stuck = trial
                changed = True
    return ForestResult(is_forest=False, ordering=None, stuck_subset=tuple(stuck))


def find_extension(
    family: CopyFamily,
    pool: CopyFamily,
    budget: int,
    config: Config | None = None,
) -> ExtensionResult:
    """Smallest pool subset whose union with the family is a forest of copies.

    Iterative deepening over subset sizes 0..budget; within a size, subsets
    are tried in index order, so the result is deterministic.  Pool copies
    already present in the family are ignored.
    """
    cfg = config or DEFAULT
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    if family.host != pool.host:
        raise ValueError("family and pool must share the same host graph")
    candidates = [
        (i, copy) for i, copy in enumerate(pool.members) if copy not in family.members
    ]
    combined = len(family.members) + len(candidates)
    if combined > cfg.forest_max_copies:
        raise GuardRefusal(
            f"family plus pool holds {combined} copies, exceeding the guard of "
            f"{cfg.forest_max_copies}"
        )

    checked = 0
    for size in range(0, min(budget, len(candidates)) + 1):
        for chosen in combinations(candidates, size):
            checked += 1
            members = list(family.members) + [copy for _, copy in chosen]
            trial = CopyFamily(host=family.host, members=tuple(members))
            vsets, esets = _member_sets(trial)
            if _find_ordering(vsets, esets, list(range(len(members)))) is not None:
                return ExtensionResult(
                    found=True,
                    extension=tuple(i for i, _ in chosen),
                    subsets_checked=checked,
                )
    return ExtensionResult(found=False, extension=None, subsets_checked=checked)


def read_family_file(path) -> CopyFamily:
    """Read a copy-family file.

    Format: the host graph ('v'/'e' records), pattern definitions
    'p <id> <vertex_count> <u1> <v1> <u2> <v2> ...' with flattened edge
    pairs, and copies 'c <pattern_id> <w1> ... <wp>' listing host vertices in
    ascending order.
    """
    host_vertex_count = None
    host_edges = []
    patterns: dict[int, OrderedGraph] = {}
    copies: list[tuple[int, tuple[int, ...]]] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            kind = parts[0]
            try:
                args = [int(tok) for tok in parts[1:]]
            except ValueError:
                raise FormatError(f"{path}:{lineno}: non-integer field") from None
            if kind == "v":
                host_vertex_count = args[0]
            elif kind == "e":
                host_edges.append((args[0], args[1]))
            elif kind == "p":
                pid, count, *flat = args
                if len(flat) % 2 != 0:
                    raise FormatError(f"{path}:{lineno}: pattern edges must come in pairs")
                if pid in patterns:
                    raise FormatError(f"{path}:{lineno}: duplicate pattern id {pid}")
                patterns[pid] = OrderedGraph(count, list(zip(flat[::2], flat[1::2])))
            elif kind == "c":
                pid, *vertices = args
                copies.append((pid, tuple(vertices)))
            else:
                raise FormatError(f"{path}:{lineno}: unknown record {kind!r}")
    if host_vertex_count is None:
        raise FormatError(f"{path}: missing host 'v <count>' line")
    host = OrderedGraph(host_vertex_count, host_edges)
    members = []
    for pid, vertices in copies:
        if pid not in patterns:
            raise FormatError(f"{path}: copy references unknown pattern {pid}")
        try:
            members.append(Copy(pattern=patterns[pid], host_vertices=vertices))
        except ValueError as exc:
            raise FormatError(f"{path}: {exc}") from None
    try:
        return CopyFamily.build(host, members)
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from None


def write_family_file(path, family: CopyFamily) -> None:
    patterns: list[OrderedGraph] = []
    for copy in family.members:
        if copy.pattern not in patterns:
            patterns.append(copy.pattern)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"v {family.host.vertex_count}\n")
        for u, v in family.host.sorted_edges():
            fh.write(f"e {u} {v}\n")
        for pid, pattern in enumerate(patterns):
            flat = " ".join(f"{u} {v}" for u, v in pattern.sorted_edges())
            fh.write(f"p {pid} {pattern.vertex_count} {flat}".rstrip() + "\n")
        for copy in family.members:
            pid = patterns.index(copy.pattern)
            verts = " ".join(str(v) for v in copy.host_vertices)
            fh.write(f"c {pid} {verts}\n")


# write_graph_file/read_graph_file re-exported for CLI convenience
__all__ = [
    "CopyFamily",
    "ForestResult",
    "ExtensionResult",
    "is_forest_of_copies",
    "find_extension",
    "read_family_file",
    "write_family_file",
    "read_graph_file",
    "write_graph_file",
]
