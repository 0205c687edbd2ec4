"""Pure-Python lane of the exhaustive coloring search kernels.

Both kernels walk colorings in lexicographic order (element index ascending,
color 1..r ascending) looking for a counterexample coloring, and return
(found, coloring, examined, pruned).  The compiled lane in _kernels_cy must
reproduce these counters bit for bit; any change here must be mirrored there.

set_search: a counterexample is a full coloring in which no color class
contains a target with exactly ell k-term sums as its maximum count.  Groups
are the support bitmasks of all k-tuples sharing one target sum.  When
pruning is enabled (sound only if no target exceeds ell over the whole set),
a class that acquires all tuples of an ell-sized group keeps that witness
under every completion, so the branch is cut.

edge_search: a counterexample is a full edge coloring leaving no copy
monochromatic; a branch is cut as soon as some copy mask falls entirely
inside one color class.
"""

from __future__ import annotations

BACKEND_NAME = "python"


def set_search(n, r, groups, witness_unions, ell, prune_enabled, fixed_colors):
    """Search set colorings for a class-count counterexample.

    groups: tuple of tuples of element bitmasks, one group per target sum.
    witness_unions: OR of the masks of each group that has exactly ell
    tuples; used only when prune_enabled.
    fixed_colors: colors imposed on the first elements (symmetry breaking
    and worker prefixes); its first entry must be 1.
    """
    colors = [0] * n
    class_masks = [0] * (r + 1)
    examined = 0
    pruned = 0
    found = None

    def class_satisfied(q):
        # True iff the maximum in-class tuple count over all targets == ell.
        mask = class_masks[q]
        best = 0
        for masks in groups:
            count = 0
            for m in masks:
                if m & mask == m:
                    count += 1
            if count > ell:
                return False
            if count > best:
                best = count
        return best == ell

    def prune_hit(q):
        mask = class_masks[q]
        for union in witness_unions:
            if union & mask == union:
                return True
        return False

    def descend(i):
        nonlocal examined, pruned, found
        if i == n:
            examined += 1
            for q in range(1, r + 1):
                if class_satisfied(q):
                    return False
            found = list(colors)
            return True
        if i < len(fixed_colors):
            palette = (fixed_colors[i],)
        else:
            palette = range(1, r + 1)
        bit = 1 << i
        for q in palette:
            colors[i] = q
            class_masks[q] |= bit
            if prune_enabled and prune_hit(q):
                pruned += 1
            elif descend(i + 1):
                class_masks[q] &= ~bit
                return True
            class_masks[q] &= ~bit
            colors[i] = 0
        return False

    hit = descend(0)
    return (hit, found if hit else None, examined, pruned)


def edge_search(n, r, copy_masks, fixed_colors):
    """Search edge colorings for one leaving every copy bichromatic.

    Because a branch dies the moment any copy goes monochromatic, every leaf
    reached is a counterexample; the search stops at the first one.
    """
    colors = [0] * n
    class_masks = [0] * (r + 1)
    examined = 0
    pruned = 0
    found = None

    def mono_hit(q):
        mask = class_masks[q]
        for cm in copy_masks:
            if cm & mask == cm:
                return True
        return False

    def descend(i):
        nonlocal examined, pruned, found
        if i == n:
            examined += 1
            found = list(colors)
            return True
        if i < len(fixed_colors):
            palette = (fixed_colors[i],)
        else:
            palette = range(1, r + 1)
        bit = 1 << i
        for q in palette:
            colors[i] = q
            class_masks[q] |= bit
            if mono_hit(q):
                pruned += 1
            elif descend(i + 1):
                class_masks[q] &= ~bit
                return True
            class_masks[q] &= ~bit
            colors[i] = 0
        return False

    hit = descend(0)
    return (hit, found if hit else None, examined, pruned)
