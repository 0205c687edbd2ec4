"""Independent reference implementations used for differential testing.

Nothing here shares code paths with the package: counting goes through
dynamic programming or itertools instead of the package's recursive
enumeration, forests through explicit permutation search, acyclicity through
union-find, and cycle existence through closed-walk counts.
"""

from itertools import combinations_with_replacement, permutations, product


def tuple_list(elements, k):
    """All nondecreasing k-tuples over the sorted elements, via itertools."""
    return list(combinations_with_replacement(sorted(elements), k))


def count_table_dp(elements, k):
    """Target -> count of nondecreasing k-tuples, by DP over element multiplicities.

    Processes one element at a time, choosing how many copies it contributes;
    no tuples are ever materialized.
    """
    table = {0: {0: 1}}  # terms used -> sum -> ways
    for x in sorted(elements):
        new = {}
        for used, sums in table.items():
            for total, ways in sums.items():
                copies = 0
                while used + copies <= k:
                    bucket = new.setdefault(used + copies, {})
                    key = total + copies * x
                    bucket[key] = bucket.get(key, 0) + ways
                    copies += 1
        table = new
    return dict(table.get(k, {}))


def arrow_decision(elements, k, ell, r):
    """Exhaustive labeled-coloring arrow decision with cwr-based counting."""
    elems = sorted(elements)
    for assignment in product(range(1, r + 1), repeat=len(elems)):
        satisfied = False
        for q in range(1, r + 1):
            members = [x for x, c in zip(elems, assignment) if c == q]
            counts = {}
            for t in combinations_with_replacement(members, k):
                s = sum(t)
                counts[s] = counts.get(s, 0) + 1
            if counts and max(counts.values()) == ell:
                satisfied = True
                break
        if not satisfied:
            return False, assignment
    return True, None


class UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        """Merge; return False when a and b were already connected."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def edges_form_forest(edges):
    uf = UnionFind()
    return all(uf.union(a, b) for a, b in edges)


def forest_by_permutations(vertex_sets, edge_sets):
    """Forest-of-copies decision by trying every insertion order."""
    n = len(vertex_sets)
    for order in permutations(range(n)):
        union_v, union_e = set(), set()
        ok = True
        for m in order:
            meet = vertex_sets[m] & union_v
            if len(meet) > 2:
                ok = False
            elif len(meet) == 2:
                pair = tuple(sorted(meet))
                ok = pair in edge_sets[m] and pair in union_e
            if not ok:
                break
            union_v |= vertex_sets[m]
            union_e |= edge_sets[m]
        if ok:
            return True
    return False


def closed_walk_counts(graph, max_len):
    """trace(A**L) for L = 1..max_len, by pure-Python matrix powers."""
    n = graph.vertex_count
    adj = [[0] * n for _ in range(n)]
    for u, v in graph.edges:
        adj[u][v] = adj[v][u] = 1
    power = [row[:] for row in adj]
    traces = []
    for _ in range(max_len):
        traces.append(sum(power[i][i] for i in range(n)))
        power = [
            [sum(power[i][t] * adj[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
    return traces


def odd_girth_by_walks(graph, max_len):
    """Shortest odd cycle length, if any, up to max_len.

    A closed walk of odd length L exists iff an odd cycle of length <= L
    does, and the shortest odd closed walk is a cycle.
    """
    traces = closed_walk_counts(graph, max_len)
    for length in range(3, max_len + 1, 2):
        if traces[length - 1] > 0:
            return length
    return None
