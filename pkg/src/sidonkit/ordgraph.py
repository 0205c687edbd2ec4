"""Ordered graphs, theta graphs, induced cycles, and local-structure checks.

Vertices are the integers 0..v-1 and the vertex order is the integer order.
A theta graph joins two endpoints by ell internally disjoint ascending paths
of length k, so it has (k-1)*ell + 2 vertices and k*ell edges.  How internal
vertices of different paths interleave is a free choice; the constructor
exposes it as a parameter ("level-major" by default, "path-major" as the
alternative) while the copy finder accepts every interleaving.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .certs import Certificate
from .errors import FormatError


class OrderedGraph:
    """Immutable graph on vertices 0..vertex_count-1 with unordered edges."""

    __slots__ = ("vertex_count", "edges", "_adj")

    def __init__(self, vertex_count: int, edges=()):
        if not isinstance(vertex_count, int) or vertex_count < 0:
            raise ValueError("vertex_count must be a nonnegative integer")
        normalized = set()
        for edge in edges:
            u, v = edge
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge {edge!r} out of range for {vertex_count} vertices")
            normalized.add((min(u, v), max(u, v)))
        self.vertex_count = vertex_count
        self.edges = frozenset(normalized)
        self._adj = None

    @property
    def adjacency(self) -> tuple[frozenset, ...]:
        if self._adj is None:
            adj = [set() for _ in range(self.vertex_count)]
            for u, v in self.edges:
                adj[u].add(v)
                adj[v].add(u)
            self._adj = tuple(frozenset(s) for s in adj)
        return self._adj

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def subgraph(self, vertices) -> "OrderedGraph":
        """Induced subgraph relabeled to 0..len(vertices)-1 preserving order."""
        vs = sorted(vertices)
        index = {v: i for i, v in enumerate(vs)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return OrderedGraph(len(vs), edges)

    def __eq__(self, other):
        return (
            isinstance(other, OrderedGraph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return f"OrderedGraph(v={self.vertex_count}, e={len(self.edges)})"


@dataclass(frozen=True)
class ThetaSpec:
    """Parameters of a theta graph: path length k, path count ell, interleaving."""

    k: int
    ell: int
    interleaving: str = "level-major"

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 2:
            raise ValueError(f"path length k must be an integer >= 2, got {self.k!r}")
        if not isinstance(self.ell, int) or self.ell < 2:
            raise ValueError(f"path count ell must be an integer >= 2, got {self.ell!r}")
        if self.interleaving not in ("level-major", "path-major"):
            raise ValueError(f"unknown interleaving {self.interleaving!r}")


def theta_paths(spec: ThetaSpec) -> tuple[tuple[int, ...], ...]:
    """The ell ascending paths of the theta graph, as full vertex sequences."""
    k, ell = spec.k, spec.ell
    top = (k - 1) * ell + 1

    def internal(i: int, j: int) -> int:
        # i in 1..k-1 is the position along the path, j in 1..ell the path.
        if spec.interleaving == "level-major":
            return 1 + (i - 1) * ell + (j - 1)
        return 1 + (j - 1) * (k - 1) + (i - 1)

    paths = []
    for j in range(1, ell + 1):
        paths.append((0, *(internal(i, j) for i in range(1, k)), top))
    return tuple(paths)


def make_theta(spec: ThetaSpec) -> OrderedGraph:
    """Build the theta graph for the given spec; endpoint 0 and endpoint (k-1)*ell+1."""
    vertex_count = (spec.k - 1) * spec.ell + 2
    edges = []
    for path in theta_paths(spec):
        edges.extend(zip(path, path[1:]))
    return OrderedGraph(vertex_count, edges)


def induced_cycles_upto(G: OrderedGraph, s: int) -> list[tuple[int, ...]]:
    """All induced cycles of length 3..s, canonically rotated.

    Canonical form: smallest vertex first, then the smaller of its two cycle
    neighbors.  DFS grows chordless paths from each root (the cycle minimum)
    and prunes as soon as a chord appears or the length bound is exceeded.
    """
    if s < 3:
        raise ValueError(f"cycle length bound must be >= 3, got {s}")
    adj = G.adjacency
    found: set[tuple[int, ...]] = set()

    for root in range(G.vertex_count):
        stack = [[root, v] for v in sorted(adj[root]) if v > root]
        while stack:
            path = stack.pop()
            last = path[-1]
            middle = path[1:-1]
            for w in adj[last]:
                if w <= root or w in path:
                    continue
                if any(w in adj[u] for u in middle):
                    continue  # chord to an interior vertex
                if w in adj[root]:
                    if len(path) >= 2:
                        cycle = path + [w]
                        rest = cycle[1:]
                        if rest[0] > rest[-1]:
                            rest = rest[::-1]
                        found.add((root, *rest))
                elif len(path) + 1 <= s - 1:
                    stack.append(path + [w])
    return sorted(found, key=lambda c: (len(c), c))


def girth(G: OrderedGraph) -> int | None:
    """Length of a shortest cycle via BFS from every vertex; None if acyclic."""
    adj = G.adjacency
    best: int | None = None
    for start in range(G.vertex_count):
        depth = {start: 0}
        parent = {start: -1}
        queue = [start]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for v in adj[u]:
                if v not in depth:
                    depth[v] = depth[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    length = depth[u] + depth[v] + 1
                    if best is None or length < best:
                        best = length
    return best


@dataclass(frozen=True)
class Copy:
    """Order-preserving induced embedding of a pattern graph into a host.

    host_vertices[i] is the host image of pattern vertex i; strict increase
    makes the map order-preserving by construction.
    """

    pattern: OrderedGraph
    host_vertices: tuple[int, ...]

    def __post_init__(self):
        if len(self.host_vertices) != self.pattern.vertex_count:
            raise ValueError("host_vertices length must match the pattern vertex count")
        for a, b in zip(self.host_vertices, self.host_vertices[1:]):
            if a >= b:
                raise ValueError("host_vertices must be strictly increasing")

    def host_edges(self) -> frozenset[tuple[int, int]]:
        hv = self.host_vertices
        return frozenset((hv[u], hv[v]) for u, v in self.pattern.edges)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.host_vertices)


def validate_copy(host: OrderedGraph, copy: Copy) -> None:
    """Raise unless the copy is an induced ordered embedding into host."""
    hv = copy.host_vertices
    for v in hv:
        if not 0 <= v < host.vertex_count:
            raise ValueError(f"copy vertex {v} outside host")
    for i in range(len(hv)):
        for j in range(i + 1, len(hv)):
            if copy.pattern.has_edge(i, j) != host.has_edge(hv[i], hv[j]):
                raise ValueError(
                    f"copy at {hv} is not induced: pattern/host disagree on ({hv[i]}, {hv[j]})"
                )


@dataclass(frozen=True)
class ThetaCopy:
    """An induced theta copy in a host: endpoints plus its ascending path system.

    Two copies differing only by path labels are identified by storing paths
    as a sorted tuple.
    """

    bottom: int
    top: int
    paths: tuple[tuple[int, ...], ...]

    def vertices(self) -> tuple[int, ...]:
        vs = {self.bottom, self.top}
        for path in self.paths:
            vs.update(path[1:-1])
        return tuple(sorted(vs))

    def edge_set(self) -> frozenset[tuple[int, int]]:
        edges = set()
        for path in self.paths:
            for a, b in zip(path, path[1:]):
                edges.add((min(a, b), max(a, b)))
        return frozenset(edges)


def _ascending_paths(G: OrderedGraph, u: int, w: int, k: int) -> list[tuple[int, ...]]:
    """All ascending paths u -> w with exactly k edges and interior below w."""
    adj = G.adjacency
    out: list[tuple[int, ...]] = []

    def grow(path: list[int], steps_left: int):
        last = path[-1]
        if steps_left == 1:
            if w in adj[last]:
                out.append((*path, w))
            return
        for nxt in sorted(adj[last]):
            if last < nxt < w:
                path.append(nxt)
                grow(path, steps_left - 1)
                path.pop()

    if u < w:
        grow([u], k)
    return out


def find_theta_copies(H: OrderedGraph, k: int, ell: int) -> list[ThetaCopy]:
    """All induced theta copies with path length k and path count ell.

    A copy is a pair of endpoints joined by ell internally disjoint ascending
    paths of k edges whose union is induced in the host (no extra adjacency
    among the chosen vertices).  Every interleaving of internal vertices is
    accepted.
    """
    if k < 2 or ell < 2:
        raise ValueError("theta parameters require k >= 2 and ell >= 2")
    copies = []
    for u in range(H.vertex_count):
        for w in range(u + 2, H.vertex_count):
            paths = _ascending_paths(H, u, w, k)
            if len(paths) < ell:
                continue
            for combo in combinations(paths, ell):
                interiors = [set(p[1:-1]) for p in combo]
                union_interior: set[int] = set()
                ok = True
                for interior in interiors:
                    if union_interior & interior:
                        ok = False
                        break
                    union_interior |= interior
                if not ok:
                    continue
                vertices = sorted({u, w} | union_interior)
                expected = set()
                for path in combo:
                    for a, b in zip(path, path[1:]):
                        expected.add((min(a, b), max(a, b)))
                actual = {
                    (a, b)
                    for a, b in combinations(vertices, 2)
                    if H.has_edge(a, b)
                }
                if actual == expected:
                    copies.append(ThetaCopy(u, w, tuple(sorted(combo))))
    copies.sort(key=lambda c: (c.bottom, c.top, c.paths))
    return copies


def check_local_structure(G: OrderedGraph, k: int, ell: int, s: int) -> Certificate:
    """Verify the short-cycle structure required of encoding source graphs.

    Passes iff every induced cycle of length at most s has length exactly 2k,
    each such cycle lies in exactly one theta copy with parameters (k, ell),
    and the graph contains no theta with ell + 1 paths.  The certificate also
    reports that freeness separately, plus the offending cycle on failure.
    """
    if k < 2 or ell < 2:
        raise ValueError("theta parameters require k >= 2 and ell >= 2")
    if s < 2 * k:
        raise ValueError(f"cycle bound s must be at least 2k = {2 * k}, got {s}")

    cycles = induced_cycles_upto(G, s)
    copies = find_theta_copies(G, k, ell)
    copy_edge_sets = [c.edge_set() for c in copies]
    wider = find_theta_copies(G, k, ell + 1)

    bad_length = None
    for cycle in cycles:
        if len(cycle) != 2 * k:
            bad_length = cycle
            break

    containment = []
    bad_uniqueness = None
    for cycle in cycles:
        if len(cycle) != 2 * k:
            continue
        cycle_edges = {
            (min(a, b), max(a, b))
            for a, b in zip(cycle, cycle[1:] + (cycle[0],))
        }
        holders = [i for i, es in enumerate(copy_edge_sets) if cycle_edges <= es]
        containment.append({"cycle": list(cycle), "copy_count": len(holders)})
        if len(holders) != 1 and bad_uniqueness is None:
            bad_uniqueness = {"cycle": list(cycle), "copy_count": len(holders)}

    lengths_ok = bad_length is None
    uniqueness_ok = bad_uniqueness is None
    wider_free = not wider
    details = {
        "cycles_found": len(cycles),
        "theta_copies": len(copies),
        "lengths_ok": lengths_ok,
        "uniqueness_ok": uniqueness_ok,
        "wider_theta_free": wider_free,
        "wider_theta_copies": len(wider),
        "containment": containment,
    }
    if bad_length is not None:
        details["bad_cycle"] = list(bad_length)
    if bad_uniqueness is not None:
        details["bad_uniqueness"] = bad_uniqueness
    return Certificate(
        check="theta-local-structure",
        params={
            "k": k,
            "ell": ell,
            "s": s,
            "vertex_count": G.vertex_count,
            "edge_count": G.edge_count,
        },
        passed=lengths_ok and uniqueness_ok and wider_free,
        details=details,
    )


def read_graph_file(path) -> OrderedGraph:
    """Read 'v N' then 'e U V' lines; '#' comments and blanks are ignored."""
    vertex_count = None
    edges = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "v":
                if vertex_count is not None:
                    raise FormatError(f"{path}:{lineno}: duplicate vertex-count line")
                if len(parts) != 2:
                    raise FormatError(f"{path}:{lineno}: expected 'v <count>'")
                vertex_count = _parse_nonneg(parts[1], path, lineno)
            elif parts[0] == "e":
                if vertex_count is None:
                    raise FormatError(f"{path}:{lineno}: edge before vertex-count line")
                if len(parts) != 3:
                    raise FormatError(f"{path}:{lineno}: expected 'e <u> <v>'")
                u = _parse_nonneg(parts[1], path, lineno)
                v = _parse_nonneg(parts[2], path, lineno)
                edges.append((u, v))
            else:
                raise FormatError(f"{path}:{lineno}: unknown record {parts[0]!r}")
    if vertex_count is None:
        raise FormatError(f"{path}: missing 'v <count>' line")
    if len(set((min(u, v), max(u, v)) for u, v in edges)) != len(edges):
        raise FormatError(f"{path}: duplicate edge")
    try:
        return OrderedGraph(vertex_count, edges)
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from None


def _parse_nonneg(token: str, path, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise FormatError(f"{path}:{lineno}: expected an integer, got {token!r}") from None
    if value < 0:
        raise FormatError(f"{path}:{lineno}: expected a nonnegative integer, got {value}")
    return value


def write_graph_file(path, G: OrderedGraph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"v {G.vertex_count}\n")
        for u, v in G.sorted_edges():
            fh.write(f"e {u} {v}\n")
