"""Vectorised numpy fallback: the batch advances one input position at a time.

Each function reproduces the key layout of its numba twin exactly.
"""

import numpy as np

BIG = np.iinfo(np.int64).max


def plac_keys(words, S):
    B, n = words.shape
    R = min(n, S)
    grid = np.full((B, R, n + 1), BIG, dtype=np.int64)
    idx = np.arange(B)
    for t in range(n):
        val = words[:, t].copy()
        live = val > 0
        for r in range(R):
            if not live.any():
                break
            row = grid[:, r, :]
            j = np.argmax(row > val[:, None], axis=1)
            bumped = row[idx, j]
            row[idx[live], j[live]] = val[live]
            val = bumped
            live &= bumped != BIG
    out = grid[:, :, :n]
    out = np.where(out == BIG, 0, out)
    return out.reshape(B, R * n)


def hypo_keys(words, S):
    B, n = words.shape
    ent = np.full((B, n + 1), BIG, dtype=np.int64)
    brk = np.zeros((B, n + 1), dtype=np.int64)
    size = np.zeros(B, dtype=np.int64)
    cols = np.arange(n + 1)
    for t in range(n):
        a = words[:, t]
        live = a > 0
        p = np.sum(ent <= a[:, None], axis=1)
        shift = (cols[None, :] > p[:, None]) & live[:, None]
        ent[:, 1:] = np.where(shift[:, 1:], ent[:, :-1], ent[:, 1:])
        brk[:, 1:] = np.where(shift[:, 1:], brk[:, :-1], brk[:, 1:])
        rows = np.nonzero(live)[0]
        ent[rows, p[rows]] = a[rows]
        brk[rows, p[rows]] = (p[rows] < size[rows]).astype(np.int64)
        glued = rows[p[rows] > 0]
        brk[glued, p[glued] - 1] = 0
        size += live
    ent = np.where(ent == BIG, 0, ent)
    return np.concatenate([ent[:, :n], brk[:, :n]], axis=1)


def _bst_keys(words, dup_left, right_to_left):
    B, n = words.shape
    idx = np.arange(B)
    label = np.full((B, n), BIG, dtype=np.int64)
    left = np.full((B, n), -1, dtype=np.int64)
    right = np.full((B, n), -1, dtype=np.int64)
    depth = np.zeros((B, n), dtype=np.int64)
    size = np.zeros(B, dtype=np.int64)
    positions = range(n - 1, -1, -1) if right_to_left else range(n)
    for t in positions:
        a = words[:, t]
        live = a > 0
        first = live & (size == 0)
        label[idx[live], size[live]] = a[live]
        depth[idx[first], 0] = 1
        active = live & ~first
        cur = np.zeros(B, dtype=np.int64)
        while active.any():
            lab = label[idx, cur]
            go_left = a <= lab if dup_left else a < lab
            nxt = np.where(go_left, left[idx, cur], right[idx, cur])
            attach = active & (nxt < 0)
            rows = idx[attach]
            gl = go_left[attach]
            left[rows[gl], cur[attach][gl]] = size[rows[gl]]
            right[rows[~gl], cur[attach][~gl]] = size[rows[~gl]]
            depth[rows, size[rows]] = depth[rows, cur[attach]] + 1
            active &= ~attach
            cur = np.where(active, nxt, cur)
        size += live
    # in-order: by label, ties by insertion time (reversed when duplicates go left)
    time = np.broadcast_to(np.arange(n), (B, n))
    tie = -time if dup_left else time
    order = np.lexsort((tie, label), axis=-1)
    lab = np.take_along_axis(label, order, axis=1)
    dep = np.take_along_axis(depth, order, axis=1)
    lab = np.where(lab == BIG, 0, lab)
    return np.concatenate([lab, dep], axis=1)


def sylv_keys(words, S):
    return _bst_keys(words, True, True)


def sylvsharp_keys(words, S):
    return _bst_keys(words, False, False)


def baxt_keys(words, S):
    return np.concatenate([_bst_keys(words, False, False), _bst_keys(words, True, True)], axis=1)


def taig_keys(words, S):
    B, n = words.shape
    idx = np.arange(B)
    left = np.zeros((B, S + 1), dtype=np.int64)
    right = np.zeros((B, S + 1), dtype=np.int64)
    mult = np.zeros((B, S + 1), dtype=np.int64)
    depth = np.zeros((B, S + 1), dtype=np.int64)
    root = np.zeros(B, dtype=np.int64)
    for t in range(n - 1, -1, -1):
        a = words[:, t]
        live = a > 0
        first = live & (root == 0)
        root = np.where(first, a, root)
        depth[idx[first], a[first]] = 1
        active = live & ~first & (mult[idx, a] == 0)
        cur = root.copy()
        while active.any():
            go_left = a < cur
            nxt = np.where(go_left, left[idx, cur], right[idx, cur])
            attach = active & (nxt == 0)
            rows = idx[attach]
            gl = go_left[attach]
            left[rows[gl], cur[attach][gl]] = a[rows[gl]]
            right[rows[~gl], cur[attach][~gl]] = a[rows[~gl]]
            depth[rows, a[rows]] = depth[rows, cur[attach]] + 1
            active &= ~attach
            cur = np.where(active, nxt, cur)
        mult[idx[live], a[live]] += 1
    return np.stack([mult[:, 1:], depth[:, 1:]], axis=2).reshape(B, 2 * S)


def stal_keys(words, S):
    B, n = words.shape
    idx = np.arange(B)
    # a column is created when its symbol is first met reading right to left and is
    # put at the left end, so columns run left to right by decreasing creation step
    created = np.full((B, S + 1), -1, dtype=np.int64)
    cnt = np.zeros((B, S + 1), dtype=np.int64)
    for step, t in enumerate(range(n - 1, -1, -1)):
        a = words[:, t]
        live = a > 0
        new = live & (cnt[idx, a] == 0)
        created[idx[new], a[new]] = step
        cnt[idx[live], a[live]] += 1
    created[:, 0] = -1
    order = np.argsort(-created[:, 1:], axis=1, kind="stable") + 1
    present = np.take_along_axis(created, order, axis=1) >= 0
    syms = np.where(present, order, 0)
    counts = np.where(present, np.take_along_axis(cnt, order, axis=1), 0)
    return np.stack([syms, counts], axis=2).reshape(B, 2 * S)


def _ps_keys(words, D, strict):
    B, n = words.shape
    idx = np.arange(B)
    grid = np.zeros((B, n, max(D, 1)), dtype=np.int64)  # columns stored bottom-up
    height = np.zeros((B, n), dtype=np.int64)
    top = np.full((B, n + 1), BIG, dtype=np.int64)
    for t in range(n):
        a = words[:, t]
        live = a > 0
        hit = top > a[:, None] if strict else top >= a[:, None]
        c = np.argmax(hit, axis=1)
        rows, cc = idx[live], c[live]
        grid[rows, cc, height[rows, cc]] = a[rows]
        height[rows, cc] += 1
        top[rows, cc] = a[rows]
    i = np.arange(max(D, 1))
    src = height[:, :, None] - 1 - i[None, None, :]
    vals = np.take_along_axis(grid, np.clip(src, 0, None), axis=2)
    out = np.where(src >= 0, vals, 0)[:, :, :D]
    return out.reshape(B, n * D)


def lps_keys(words, S):
    return _ps_keys(words, min(words.shape[1], S), True)


def rps_keys(words, S):
    return _ps_keys(words, words.shape[1], False)
