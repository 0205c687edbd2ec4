# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled lane of the coloring search kernels.

Mirrors _kernels_py exactly: same traversal order, same prune rules, same
examined/pruned accounting.  Element and edge masks are packed into 64-bit
words, so callers must keep item counts at 62 or below (the selector in
kernels.py enforces this).
"""

from libc.stdlib cimport calloc, free

BACKEND_NAME = "compiled"


cdef struct SetCtx:
    int n
    int r
    int ell
    int n_groups
    int n_witness
    int n_fixed
    bint prune_enabled
    unsigned long long *masks        # flattened group masks
    long *offsets                    # n_groups + 1 entries into masks
    unsigned long long *witness
    int *fixed
    int *colors
    unsigned long long *class_masks  # r + 1 entries, index 0 unused
    long long examined
    long long pruned


cdef bint _class_satisfied(SetCtx *ctx, int q) noexcept:
    cdef unsigned long long mask = ctx.class_masks[q]
    cdef unsigned long long m
    cdef long gi, mi
    cdef int count, best = 0
    for gi in range(ctx.n_groups):
        count = 0
        for mi in range(ctx.offsets[gi], ctx.offsets[gi + 1]):
            m = ctx.masks[mi]
            if m & mask == m:
                count += 1
        if count > ctx.ell:
            return False
        if count > best:
            best = count
    return best == ctx.ell


cdef bint _prune_hit(SetCtx *ctx, int q) noexcept:
    cdef unsigned long long mask = ctx.class_masks[q]
    cdef unsigned long long u
    cdef int wi
    for wi in range(ctx.n_witness):
        u = ctx.witness[wi]
        if u & mask == u:
            return True
    return False


cdef bint _set_descend(SetCtx *ctx, int i) except? False:
    cdef int q, q_lo, q_hi
    cdef unsigned long long bit
    if i == ctx.n:
        ctx.examined += 1
        for q in range(1, ctx.r + 1):
            if _class_satisfied(ctx, q):
                return False
        return True
    if i < ctx.n_fixed:
        q_lo = ctx.fixed[i]
        q_hi = ctx.fixed[i]
    else:
        q_lo = 1
        q_hi = ctx.r
    bit = (<unsigned long long> 1) << i
    for q in range(q_lo, q_hi + 1):
        ctx.colors[i] = q
        ctx.class_masks[q] |= bit
        if ctx.prune_enabled and _prune_hit(ctx, q):
            ctx.pruned += 1
        elif _set_descend(ctx, i + 1):
            ctx.class_masks[q] &= ~bit
            return True
        ctx.class_masks[q] &= ~bit
        ctx.colors[i] = 0
    return False


def set_search(n, r, groups, witness_unions, ell, prune_enabled, fixed_colors):
    cdef SetCtx ctx
    cdef long total_masks = 0
    cdef long gi, mi, pos
    cdef int i
    for group in groups:
        total_masks += len(group)

    ctx.n = n
    ctx.r = r
    ctx.ell = ell
    ctx.n_groups = len(groups)
    ctx.n_witness = len(witness_unions)
    ctx.n_fixed = len(fixed_colors)
    ctx.prune_enabled = 1 if prune_enabled else 0
    ctx.examined = 0
    ctx.pruned = 0

    ctx.masks = <unsigned long long *> calloc(max(total_masks, 1), sizeof(unsigned long long))
    ctx.offsets = <long *> calloc(ctx.n_groups + 1, sizeof(long))
    ctx.witness = <unsigned long long *> calloc(max(ctx.n_witness, 1), sizeof(unsigned long long))
    ctx.fixed = <int *> calloc(max(ctx.n_fixed, 1), sizeof(int))
    ctx.colors = <int *> calloc(max(n, 1), sizeof(int))
    ctx.class_masks = <unsigned long long *> calloc(r + 1, sizeof(unsigned long long))
    if (ctx.masks == NULL or ctx.offsets == NULL or ctx.witness == NULL
            or ctx.fixed == NULL or ctx.colors == NULL or ctx.class_masks == NULL):
        _free_set(&ctx)
        raise MemoryError()

    try:
        pos = 0
        for gi in range(ctx.n_groups):
            ctx.offsets[gi] = pos
            for m in groups[gi]:
                ctx.masks[pos] = <unsigned long long> m
                pos += 1
        ctx.offsets[ctx.n_groups] = pos
        for mi in range(ctx.n_witness):
            ctx.witness[mi] = <unsigned long long> witness_unions[mi]
        for i in range(ctx.n_fixed):
            ctx.fixed[i] = fixed_colors[i]

        hit = bool(_set_descend(&ctx, 0))
        coloring = [ctx.colors[i] for i in range(n)] if hit else None
        return (hit, coloring, int(ctx.examined), int(ctx.pruned))
    finally:
        _free_set(&ctx)


cdef void _free_set(SetCtx *ctx) noexcept:
    if ctx.masks != NULL:
        free(ctx.masks)
    if ctx.offsets != NULL:
        free(ctx.offsets)
    if ctx.witness != NULL:
        free(ctx.witness)
    if ctx.fixed != NULL:
        free(ctx.fixed)
    if ctx.colors != NULL:
        free(ctx.colors)
    if ctx.class_masks != NULL:
        free(ctx.class_masks)
    ctx.masks = NULL
    ctx.offsets = NULL
    ctx.witness = NULL
    ctx.fixed = NULL
    ctx.colors = NULL
    ctx.class_masks = NULL


cdef struct EdgeCtx:
    int n
    int r
    int n_copies
    int n_fixed
    unsigned long long *copies
    int *fixed
    int *colors
    unsigned long long *class_masks
    long long examined
    long long pruned


cdef bint _mono_hit(EdgeCtx *ctx, int q) noexcept:
    cdef unsigned long long mask = ctx.class_masks[q]
    cdef unsigned long long cm
    cdef int ci
    for ci in range(ctx.n_copies):
        cm = ctx.copies[ci]
        if cm & mask == cm:
            return True
    return False


cdef bint _edge_descend(EdgeCtx *ctx, int i) except? False:
    cdef int q, q_lo, q_hi
    cdef unsigned long long bit
    if i == ctx.n:
        ctx.examined += 1
        return True
    if i < ctx.n_fixed:
        q_lo = ctx.fixed[i]
        q_hi = ctx.fixed[i]
    else:
        q_lo = 1
        q_hi = ctx.r
    bit = (<unsigned long long> 1) << i
    for q in range(q_lo, q_hi + 1):
        ctx.colors[i] = q
        ctx.class_masks[q] |= bit
        if _mono_hit(ctx, q):
            ctx.pruned += 1
        elif _edge_descend(ctx, i + 1):
            ctx.class_masks[q] &= ~bit
            return True
        ctx.class_masks[q] &= ~bit
        ctx.colors[i] = 0
    return False


def edge_search(n, r, copy_masks, fixed_colors):
    cdef EdgeCtx ctx
    cdef int i
    ctx.n = n
    ctx.r = r
    ctx.n_copies = len(copy_masks)
    ctx.n_fixed = len(fixed_colors)
    ctx.examined = 0
    ctx.pruned = 0
    ctx.copies = <unsigned long long *> calloc(max(ctx.n_copies, 1), sizeof(unsigned long long))
    ctx.fixed = <int *> calloc(max(ctx.n_fixed, 1), sizeof(int))
    ctx.colors = <int *> calloc(max(n, 1), sizeof(int))
    ctx.class_masks = <unsigned long long *> calloc(r + 1, sizeof(unsigned long long))
    if ctx.copies == NULL or ctx.fixed == NULL or ctx.colors == NULL or ctx.class_masks == NULL:
        _free_edge(&ctx)
        raise MemoryError()
    try:
        for i in range(ctx.n_copies):
            ctx.copies[i] = <unsigned long long> copy_masks[i]
        for i in range(ctx.n_fixed):
            ctx.fixed[i] = fixed_colors[i]
        hit = bool(_edge_descend(&ctx, 0))
        coloring = [ctx.colors[i] for i in range(n)] if hit else None
        return (hit, coloring, int(ctx.examined), int(ctx.pruned))
    finally:
        _free_edge(&ctx)


cdef void _free_edge(EdgeCtx *ctx) noexcept:
    if ctx.copies != NULL:
        free(ctx.copies)
    if ctx.fixed != NULL:
        free(ctx.fixed)
    if ctx.colors != NULL:
        free(ctx.colors)
    if ctx.class_masks != NULL:
        free(ctx.class_masks)
    ctx.copies = NULL
    ctx.fixed = NULL
    ctx.colors = NULL
    ctx.class_masks = NULL
