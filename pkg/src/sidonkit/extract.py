"""Extracting large B_k-subsets via a derandomized k-class edge partition.

Any finite subset Y of an encoded set corresponds to a finite edge set E' of
the source graph.  Assigning the touched vertices greedily to k classes (each
vertex in turn to the class minimizing same-class edges toward its already
assigned neighbors) leaves at most floor(|E'|/k) monochromatic edges, so the
cross edges P satisfy |P| >= (k-1)/k * |E'|.  Splitting P into edges whose
classes increase along the vertex order and edges whose classes decrease, the
larger side has no ascending path of k edges, and the corresponding elements
of Y form a B_k-set of size at least (k-1)/(2k) * |Y|.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .certs import Certificate
from .encoder import Encoding
from .repset import FiniteSet, rho_profile


@dataclass
class PartitionWitness:
    """Result of the k-class partition: class map and the edge split."""

    k: int
    classes: dict[int, int]
    same_class_edges: list[tuple[int, int]]
    cross_edges: list[tuple[int, int]]
    up_edges: list[tuple[int, int]]
    down_edges: list[tuple[int, int]]
    chosen_side: str
    mode: str
    seed: int | None = None

    @property
    def chosen_edges(self) -> list[tuple[int, int]]:
        return self.up_edges if self.chosen_side == "up" else self.down_edges


def _normalize_edges(edges) -> list[tuple[int, int]]:
    out = []
    for edge in edges:
        a, b = edge
        if a == b:
            raise ValueError(f"self-loop at vertex {a}")
        out.append((min(a, b), max(a, b)))
    if len(set(out)) != len(out):
        raise ValueError("duplicate edge in input")
    return sorted(out)


def partition_edges(
    edges, k: int, mode: str = "greedy", seed: int | None = None
) -> PartitionWitness:
    """Partition the touched vertices into k classes and split the cross edges.

    The default greedy mode processes vertices in increasing label order and
    assigns each to the class with the fewest already-assigned neighbors
    (ties to the lowest class index); it guarantees at most floor(|E'|/k)
    same-class edges.  The "random" mode assigns classes uniformly from the
    given seed and carries no guarantee; it exists for comparison only.
    """
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"class count k must be an integer >= 2, got {k!r}")
    if mode not in ("greedy", "random"):
        raise ValueError(f"unknown mode {mode!r}")
    edge_list = _normalize_edges(edges)
    vertices = sorted({v for e in edge_list for v in e})
    neighbors: dict[int, list[int]] = {v: [] for v in vertices}
    for a, b in edge_list:
        neighbors[a].append(b)
        neighbors[b].append(a)

    classes: dict[int, int] = {}
    if mode == "random":
        rng = random.Random(seed)
        for v in vertices:
            classes[v] = rng.randrange(1, k + 1)
    else:
        for v in vertices:
            tally = [0] * (k + 1)
            for u in neighbors[v]:
                if u in classes:
                    tally[classes[u]] += 1
            classes[v] = min(range(1, k + 1), key=lambda q: (tally[q], q))

    same = [e for e in edge_list if classes[e[0]] == classes[e[1]]]
    cross = [e for e in edge_list if classes[e[0]] != classes[e[1]]]
    up = [e for e in cross if classes[e[0]] < classes[e[1]]]
    down = [e for e in cross if classes[e[0]] > classes[e[1]]]
    if mode == "greedy" and len(same) * k > len(edge_list):
        raise ArithmeticError(
            f"partition tripwire: {len(same)} same-class edges exceed |E'|/k"
        )
    chosen_side = "up" if len(up) >= len(down) else "down"
    return PartitionWitness(
        k=k,
        classes=classes,
        same_class_edges=same,
        cross_edges=cross,
        up_edges=up,
        down_edges=down,
        chosen_side=chosen_side,
        mode=mode,
        seed=seed,
    )


def verify_no_ascending_path(edges, k: int):
    """True iff no ascending path has k edges; otherwise return one such path.

    An ascending path visits strictly increasing vertex labels.  Longest such
    paths are computed by dynamic programming over the label order.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"path length k must be an integer >= 1, got {k!r}")
    edge_list = _normalize_edges(edges)
    vertices = sorted({v for e in edge_list for v in e})
    below: dict[int, list[int]] = {v: [] for v in vertices}
    for a, b in edge_list:
        below[b].append(a)

    longest: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    for v in vertices:
        best, best_u = 0, None
        for u in sorted(below[v]):
            if longest[u] + 1 > best:
                best, best_u = longest[u] + 1, u
        longest[v] = best
        parent[v] = best_u

    offenders = [v for v in vertices if longest[v] >= k]
    if not offenders:
        return True, None
    end = min(offenders)
    path = [end]
    while len(path) <= k:
        prev = parent[path[-1]]
        if prev is None:
            break
        path.append(prev)
    path.reverse()
    return False, tuple(path[-(k + 1):])


@dataclass
class ExtractionResult:
    subset: FiniteSet
    witness: PartitionWitness
    certificate: Certificate


def extract_Bk(Y: FiniteSet, encoding: Encoding, k: int | None = None) -> ExtractionResult:
    """Extract a verified B_k-subset of Y of size at least (k-1)/(2k) * |Y|.

    Y must consist of encoded elements.  The certificate reports the size
    bound, the absence of ascending k-paths on the chosen edge side, and an
    independent recount showing the extracted subset has all k-term sums
    distinct.
    """
    if k is None:
        k = encoding.k
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")
    if not Y.issubset(encoding.elements):
        raise ValueError("Y is not a subset of the encoding's element set")

    value_edges = []
    edge_to_element = {}
    for y in Y:
        u, v = encoding.edge_of[y]
        edge = (encoding.values[u], encoding.values[v])
        value_edges.append(edge)
        edge_to_element[edge] = y
    witness = partition_edges(value_edges, k) if value_edges else PartitionWitness(
        k=k,
        classes={},
        same_class_edges=[],
        cross_edges=[],
        up_edges=[],
        down_edges=[],
        chosen_side="up",
        mode="greedy",
    )

    subset = FiniteSet(sorted(edge_to_element[e] for e in witness.chosen_edges))
    bound_ok = 2 * k * len(subset) >= (k - 1) * len(Y)
    no_path, offending = verify_no_ascending_path(witness.chosen_edges, k)
    profile = rho_profile(subset, k)
    sidon_ok = profile.max_value <= 1

    certificate = Certificate(
        check="bk-extraction",
        params={"k": k, "source_size": len(Y), "subset_size": len(subset)},
        passed=bound_ok and no_path and sidon_ok,
        details={
            "bound_ok": bound_ok,
            "no_ascending_path": no_path,
            "offending_path": list(offending) if offending else None,
            "max_tuple_count": profile.max_value,
            "all_sums_distinct": sidon_ok,
            "chosen_side": witness.chosen_side,
            "cross_edges": len(witness.cross_edges),
            "up_edges": len(witness.up_edges),
            "down_edges": len(witness.down_edges),
            "subset": list(subset.elements),
        },
    )
    return ExtractionResult(subset=subset, witness=witness, certificate=certificate)
