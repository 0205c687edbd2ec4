"""Encoding ordered graphs as integer sets via powers of m = 2k + 1.

Vertex i of the source graph is relabeled m**(i+1); the encoded set consists
of the edge differences b - a (a < b).  Ascending paths then telescope: the
k consecutive differences along any ascending path of length k sum to the
endpoint difference, so the ell paths of a theta copy produce one integer
with exactly ell different k-term representations.

The coincidence analyzer reverses this: given two equal k-term (or shorter)
sums it reconstructs, step by verified step, either that the tuples are
identical or that they are the two path difference sequences of one uniquely
determined theta copy.  Every reconstruction step is asserted, so a source
graph violating the required local structure is detected rather than
silently mis-analyzed.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import StructuralViolation
from .ordgraph import OrderedGraph, ThetaCopy, find_theta_copies
from .repset import FiniteSet

COINCIDENCE_NONE = "none"            # the two sums differ
COINCIDENCE_IDENTICAL = "identical"  # equal sums, equal tuples
COINCIDENCE_THETA = "theta"          # equal sums from two paths of one theta copy


@dataclass(frozen=True)
class DigitLemmaResult:
    """Outcome of the base-m digit check on a small-coefficient polynomial."""

    value: int
    is_zero: bool
    blocking_index: int | None


def digit_lemma_check(coefficients, m: int) -> DigitLemmaResult:
    """Evaluate sum(a_i * m**i) for |a_i| < m and report the zero test.

    With all coefficients strictly below m in absolute value the sum is zero
    exactly when every coefficient is zero; blocking_index is the least index
    carrying a nonzero coefficient (the digit that cannot cancel).  The
    equivalence is asserted as a tripwire.
    """
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"base m must be an integer >= 2, got {m!r}")
    coeffs = list(coefficients)
    for i, a in enumerate(coeffs):
        if abs(a) >= m:
            raise ValueError(f"coefficient a_{i} = {a} violates |a| < m = {m}")
    value = sum(a * m**i for i, a in enumerate(coeffs))
    blocking_index = next((i for i, a in enumerate(coeffs) if a != 0), None)
    if (value == 0) != (blocking_index is None):
        raise ArithmeticError(
            "digit lemma tripwire: zero value with a nonzero coefficient"
        )
    return DigitLemmaResult(value=value, is_zero=value == 0, blocking_index=blocking_index)


def edge_of_value(x: int, m: int) -> tuple[int, int] | None:
    """The unique exponent pair (p, q), p < q, with x = m**q - m**p, if any.

    Factor x = m**p * y with m not dividing y; the pair exists iff y + 1 is a
    power of m.  Uniqueness follows from that factorization.
    """
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"base m must be an integer >= 2, got {m!r}")
    if not isinstance(x, int) or x < 1:
        raise ValueError(f"value must be a positive integer, got {x!r}")
    p = 0
    rest = x
    while rest % m == 0:
        rest //= m
        p += 1
    rest += 1
    q = p
    while rest > 1:
        if rest % m != 0:
            return None
        rest //= m
        q += 1
    if q == p:
        return None  # x = 0 cannot happen; y = 0 would mean x had no m-free part
    return (p, q)


@dataclass(frozen=True, eq=False)
class Encoding:
    """A graph relabeled onto powers of m, with its encoded difference set.

    exponents[i] is the exponent assigned to vertex i (consecutive from 1),
    values[i] = m**exponents[i], and edge_of maps each encoded element back
    to its unique source edge.
    """

    source: OrderedGraph
    k: int
    m: int
    exponents: tuple[int, ...]
    values: tuple[int, ...]
    elements: FiniteSet
    edge_of: dict[int, tuple[int, int]] = field(repr=False)

    def exponent_pair(self, x: int) -> tuple[int, int]:
        u, v = self.edge_of[x]
        return (self.exponents[u], self.exponents[v])


def encode(G: OrderedGraph, k: int, m: int | None = None) -> Encoding:
    """Encode G on the labels m**1, m**2, ... with m = 2k + 1 by default.

    Larger odd bases are accepted for experiments; every argument only needs
    m > 2k.  Distinct edges always produce distinct differences (two-power
    differences are unique), asserted as a tripwire.
    """
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")
    if G.edge_count < 1:
        raise ValueError("the source graph must have at least one edge")
    if m is None:
        m = 2 * k + 1
    elif not isinstance(m, int) or m < 2 * k + 1 or m % 2 == 0:
        raise ValueError(f"base m must be an odd integer >= {2 * k + 1}, got {m!r}")

    exponents = tuple(i + 1 for i in range(G.vertex_count))
    values = tuple(m**e for e in exponents)
    edge_of: dict[int, tuple[int, int]] = {}
    for u, v in G.sorted_edges():
        x = values[v] - values[u]
        if x in edge_of:
            raise ArithmeticError(
                f"difference collision tripwire: {x} from edges {edge_of[x]} and {(u, v)}"
            )
        edge_of[x] = (u, v)
    return Encoding(
        source=G,
        k=k,
        m=m,
        exponents=exponents,
        values=values,
        elements=FiniteSet(sorted(edge_of)),
        edge_of=edge_of,
    )


@dataclass(frozen=True)
class DigitProfile:
    """Signed endpoint counts per exponent arising from a sum of encoded terms.

    coefficient(n) counts terms whose edge tops out at m**n minus terms whose
    edge bottoms out there; only nonzero entries are stored.
    """

    m: int
    coefficients: dict[int, int]

    def coefficient(self, n: int) -> int:
        return self.coefficients.get(n, 0)

    def value(self) -> int:
        return sum(c * self.m**n for n, c in self.coefficients.items())


def digit_profile(encoding: Encoding, terms) -> DigitProfile:
    """Digit profile of a multiset of encoded elements; checks the value identity."""
    terms = list(terms)
    coeffs: dict[int, int] = {}
    for x in terms:
        if x not in encoding.edge_of:
            raise ValueError(f"term {x} is not an element of the encoding")
        p, q = encoding.exponent_pair(x)
        coeffs[q] = coeffs.get(q, 0) + 1
        coeffs[p] = coeffs.get(p, 0) - 1
    coeffs = {n: c for n, c in coeffs.items() if c != 0}
    bound = len(terms)
    for n, c in coeffs.items():
        if abs(c) > bound:
            raise ArithmeticError(f"digit bound tripwire: |f({n})| = {abs(c)} > {bound}")
    profile = DigitProfile(m=encoding.m, coefficients=coeffs)
    if profile.value() != sum(terms):
        raise ArithmeticError("digit profile tripwire: profile value != term sum")
    return profile


@dataclass(frozen=True)
class CoincidenceVerdict:
    kind: str
    copy: ThetaCopy | None = None
    path_x: int | None = None
    path_y: int | None = None


_copies_cache: dict[tuple[OrderedGraph, int, int], tuple[ThetaCopy, ...]] = {}


def theta_copies_of(encoding: Encoding, ell: int) -> tuple[ThetaCopy, ...]:
    """Theta copies of the encoding's source graph, cached per (graph, k, ell)."""
    key = (encoding.source, encoding.k, ell)
    if key not in _copies_cache:
        _copies_cache[key] = tuple(find_theta_copies(encoding.source, encoding.k, ell))
    return _copies_cache[key]


def _validate_tuple(encoding: Encoding, terms, name: str) -> tuple[int, ...]:
    terms = tuple(terms)
    if not terms:
        raise ValueError(f"{name} must be a nonempty tuple of encoded elements")
    for a, b in zip(terms, terms[1:]):
        if a > b:
            raise ValueError(f"{name} must be nondecreasing")
    for x in terms:
        if x not in encoding.edge_of:
            raise ValueError(f"{name} contains {x}, not an element of the encoding")
    return terms


def _cycle_of(edges: set[tuple[int, int]]) -> list[int]:
    """Walk the edge set as a single cycle; raise StructuralViolation otherwise."""
    degree: dict[int, list[int]] = {}
    for u, v in edges:
        degree.setdefault(u, []).append(v)
        degree.setdefault(v, []).append(u)
    for vertex, nbrs in degree.items():
        if len(nbrs) == 1:
            raise StructuralViolation(
                f"coincidence edge graph has a dangling edge at vertex {vertex}"
            )
        if len(nbrs) > 2:
            raise StructuralViolation(
                f"coincidence edge graph branches at vertex {vertex}"
            )
    start = min(degree)
    ring = [start, min(degree[start])]
    while True:
        prev, cur = ring[-2], ring[-1]
        a, b = degree[cur]
        nxt = b if a == prev else a
        if nxt == start:
            break
        ring.append(nxt)
    if len(ring) != len(degree):
        raise StructuralViolation(
            "coincidence edge graph is not a single cycle (disconnected rings)"
        )
    return ring


def analyze_coincidence(
    encoding: Encoding, xs, ys, ell: int
) -> CoincidenceVerdict:
    """Classify a pair of nondecreasing term tuples with |xs| + |ys| <= 2k.

    Returns "none" when the sums differ, "identical" when the tuples agree,
    and otherwise reconstructs the unique theta copy whose two ascending
    paths produced the coincidence, verifying along the way that the digit
    profiles match, the combined edges form a single 2k-cycle splitting into
    two ascending runs, exactly one theta copy contains that cycle, the terms
    are the consecutive path differences, and all 2k terms are distinct.
    Raises StructuralViolation when the source graph fails any of this.
    """
    if not isinstance(ell, int) or ell < 2:
        raise ValueError(f"ell must be an integer >= 2, got {ell!r}")
    xs = _validate_tuple(encoding, xs, "xs")
    ys = _validate_tuple(encoding, ys, "ys")
    k, m = encoding.k, encoding.m
    if len(xs) + len(ys) > 2 * k:
        raise ValueError(
            f"tuple sizes {len(xs)} + {len(ys)} exceed 2k = {2 * k}; refusing to analyze"
        )
    if sum(xs) != sum(ys):
        return CoincidenceVerdict(kind=COINCIDENCE_NONE)

    shared = Counter(xs) & Counter(ys)
    rx = tuple(sorted((Counter(xs) - shared).elements()))
    ry = tuple(sorted((Counter(ys) - shared).elements()))
    if not rx and not ry:
        return CoincidenceVerdict(kind=COINCIDENCE_IDENTICAL)
    if not rx or not ry:
        # Positive terms cannot sum to zero; equal sums force both sides empty.
        raise ArithmeticError("stripping tripwire: one side cancelled completely")

    f = digit_profile(encoding, rx)
    g = digit_profile(encoding, ry)
    indices = set(f.coefficients) | set(g.coefficients)
    top = max(indices)
    diff = [f.coefficient(n) - g.coefficient(n) for n in range(top + 1)]
    for n, d in enumerate(diff):
        if abs(d) >= m:
            raise ArithmeticError(
                f"digit bound tripwire: |f({n}) - g({n})| = {abs(d)} >= m = {m}"
            )
    check = digit_lemma_check(diff, m)
    if not check.is_zero or f.coefficients != g.coefficients:
        raise StructuralViolation(
            "digit profiles of the two sides differ despite equal sums"
        )

    x_edges = {encoding.edge_of[x] for x in rx}
    y_edges = {encoding.edge_of[y] for y in ry}
    if len(x_edges) != len(rx) or len(y_edges) != len(ry):
        raise StructuralViolation("repeated term within one side of the coincidence")
    ring = _cycle_of(x_edges | y_edges)
    if len(ring) < 2 * k:
        raise StructuralViolation(
            f"coincidence cycle has length {len(ring)} < 2k = {2 * k}"
        )
    if len(ring) != len(rx) + len(ry) or len(rx) != len(ry) or len(rx) != k:
        raise StructuralViolation(
            "coincidence cycle does not split the terms into two k-edge sides"
        )
    if rx != tuple(xs) or ry != tuple(ys):
        # A shared term plus a 2k-cycle cannot happen: the stripped sides
        # would close a shorter cycle, caught above.  Reaching here means the
        # ring used every term, so nothing was stripped.
        raise StructuralViolation("shared terms alongside a full-length cycle")

    bottom, top_vertex = min(ring), max(ring)
    pos_bottom = ring.index(bottom)
    ring = ring[pos_bottom:] + ring[:pos_bottom]
    pos_top = ring.index(top_vertex)
    arc_one = ring[: pos_top + 1]
    arc_two = [ring[0]] + list(reversed(ring[pos_top:]))
    for arc in (arc_one, arc_two):
        if any(a >= b for a, b in zip(arc, arc[1:])):
            raise StructuralViolation(
                "coincidence cycle does not split into two ascending runs"
            )

    def arc_edges(arc):
        return {(min(a, b), max(a, b)) for a, b in zip(arc, arc[1:])}

    if arc_edges(arc_one) == x_edges and arc_edges(arc_two) == y_edges:
        x_arc, y_arc = arc_one, arc_two
    elif arc_edges(arc_one) == y_edges and arc_edges(arc_two) == x_edges:
        x_arc, y_arc = arc_two, arc_one
    else:
        raise StructuralViolation(
            "the two sides of the coincidence are not the two arcs of the cycle"
        )

    cycle_edges = x_edges | y_edges
    holders = [
        copy for copy in theta_copies_of(encoding, ell)
        if cycle_edges <= copy.edge_set()
    ]
    if not holders:
        raise StructuralViolation("coincidence cycle lies in no theta copy")
    if len(holders) > 1:
        raise StructuralViolation("coincidence cycle lies in multiple theta copies")
    copy = holders[0]

    path_x = path_y = None
    for idx, path in enumerate(copy.paths):
        pedges = {(min(a, b), max(a, b)) for a, b in zip(path, path[1:])}
        if pedges == x_edges:
            path_x = idx
        elif pedges == y_edges:
            path_y = idx
    if path_x is None or path_y is None or path_x == path_y:
        raise StructuralViolation("cycle arcs do not match two distinct copy paths")

    values = encoding.values
    for terms, idx in ((xs, path_x), (ys, path_y)):
        path = copy.paths[idx]
        diffs = tuple(values[b] - values[a] for a, b in zip(path, path[1:]))
        if any(d1 >= d2 for d1, d2 in zip(diffs, diffs[1:])):
            raise ArithmeticError("monotone differences tripwire along an ascending path")
        if terms != diffs:
            raise StructuralViolation(
                "terms do not match the consecutive differences of the copy path"
            )
    if len(set(xs) | set(ys)) != 2 * k:
        raise StructuralViolation("the 2k coincidence terms are not all distinct")

    return CoincidenceVerdict(
        kind=COINCIDENCE_THETA, copy=copy, path_x=path_x, path_y=path_y
    )


@dataclass(frozen=True)
class SweepSummary:
    k: int
    ell: int
    tuples_enumerated: int
    pairs_checked: int
    identical: int
    theta: int


def coincidence_sweep(encoding: Encoding, ell: int) -> SweepSummary:
    """Exhaustively classify every equal-sum tuple pair with combined size <= 2k.

    Enumerates all nondecreasing tuples of sizes 1..2k-1 over the encoded
    set, buckets them by sum, and runs the analyzer on each pair (including a
    tuple against itself).  Any structural violation propagates.
    """
    k = encoding.k
    elems = encoding.elements.elements
    buckets: dict[int, list[tuple[int, ...]]] = {}
    total = 0

    def enumerate_tuples(size: int):
        def descend(start: int, remaining: int, acc: int, prefix: list[int]):
            nonlocal total
            if remaining == 0:
                buckets.setdefault(acc, []).append(tuple(prefix))
                total += 1
                return
            for idx in range(start, len(elems)):
                prefix.append(elems[idx])
                descend(idx, remaining - 1, acc + elems[idx], prefix)
                prefix.pop()

        descend(0, size, 0, [])

    for size in range(1, 2 * k):
        enumerate_tuples(size)

    pairs = identical = theta = 0
    for total_sum in sorted(buckets):
        group = buckets[total_sum]
        for i in range(len(group)):
            for j in range(i, len(group)):
                if len(group[i]) + len(group[j]) > 2 * k:
                    continue
                pairs += 1
                verdict = analyze_coincidence(encoding, group[i], group[j], ell)
                if verdict.kind == COINCIDENCE_IDENTICAL:
                    identical += 1
                elif verdict.kind == COINCIDENCE_THETA:
                    theta += 1
                else:
                    raise ArithmeticError("equal-sum bucket produced a 'none' verdict")
    return SweepSummary(
        k=k,
        ell=ell,
        tuples_enumerated=total,
        pairs_checked=pairs,
        identical=identical,
        theta=theta,
    )
