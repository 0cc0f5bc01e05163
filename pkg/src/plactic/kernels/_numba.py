"""Scalar insertion kernels compiled with numba.

Every kernel takes a zero-padded ``int64[B, n]`` batch of words and the largest
symbol ``S`` and writes one canonical key row per word. The layouts are shared
with the numpy backend (see ``layout.py``) and must stay byte-identical to it.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def plac_keys(words, S):
    B, n = words.shape
    R = min(n, S)
    out = np.zeros((B, R * n), dtype=np.int64)
    rows = np.zeros((R, n), dtype=np.int64)
    lens = np.zeros(R, dtype=np.int64)
    for b in range(B):
        lens[:] = 0
        for t in range(n):
            a = words[b, t]
            if a == 0:
                continue
            for r in range(R):
                m = lens[r]
                j = 0
                while j < m and rows[r, j] <= a:
                    j += 1
                if j == m:
                    rows[r, m] = a
                    lens[r] = m + 1
                    break
                z = rows[r, j]
                rows[r, j] = a
                a = z
        for r in range(R):
            for j in range(lens[r]):
                out[b, r * n + j] = rows[r, j]
    return out


@njit(cache=True)
def hypo_keys(words, S):
    B, n = words.shape
    out = np.zeros((B, 2 * n), dtype=np.int64)
    ent = np.zeros(n, dtype=np.int64)
    brk = np.zeros(n, dtype=np.int64)
    for b in range(B):
        size = 0
        for t in range(n):
            a = words[b, t]
            if a == 0:
                continue
            p = 0
            while p < size and ent[p] <= a:
                p += 1
            for i in range(size, p, -1):
                ent[i] = ent[i - 1]
                brk[i] = brk[i - 1]
            ent[p] = a
            brk[p] = 1 if p < size else 0
            if p > 0:
                brk[p - 1] = 0
            size += 1
        for i in range(size):
            out[b, i] = ent[i]
            out[b, n + i] = brk[i]
    return out


@njit(cache=True)
def _bst_into(words, out, col, dup_left, right_to_left):
    B, n = words.shape
    label = np.zeros(n, dtype=np.int64)
    left = np.zeros(n, dtype=np.int64)
    right = np.zeros(n, dtype=np.int64)
    depth = np.zeros(n, dtype=np.int64)
    order = np.zeros(n, dtype=np.int64)
    for b in range(B):
        size = 0
        for s in range(n):
            t = n - 1 - s if right_to_left else s
            a = words[b, t]
            if a == 0:
                continue
            label[size] = a
            left[size] = -1
            right[size] = -1
            if size == 0:
                depth[0] = 1
            else:
                cur = 0
                while True:
                    go_left = a <= label[cur] if dup_left else a < label[cur]
                    nxt = left[cur] if go_left else right[cur]
                    if nxt < 0:
                        if go_left:
                            left[cur] = size
                        else:
                            right[cur] = size
                        depth[size] = depth[cur] + 1
                        break
                    cur = nxt
            size += 1
        # in-order: by label, equal labels ordered by insertion time
        # (later first when duplicates go left, earlier first when they go right)
        for i in range(size):
            order[i] = i
        for i in range(1, size):
            k = order[i]
            j = i - 1
            while j >= 0:
                o = order[j]
                if label[o] > label[k] or (label[o] == label[k] and (o < k) == dup_left):
                    order[j + 1] = o
                    j -= 1
                else:
                    break
            order[j + 1] = k
        for i in range(size):
            out[b, col + i] = label[order[i]]
            out[b, col + n + i] = depth[order[i]]


@njit(cache=True)
def sylv_keys(words, S):
    B, n = words.shape
    out = np.zeros((B, 2 * n), dtype=np.int64)
    _bst_into(words, out, 0, True, True)
    return out


@njit(cache=True)
def sylvsharp_keys(words, S):
    B, n = words.shape
    out = np.zeros((B, 2 * n), dtype=np.int64)
    _bst_into(words, out, 0, False, False)
    return out


@njit(cache=True)
def baxt_keys(words, S):
    B, n = words.shape
    out = np.zeros((B, 4 * n), dtype=np.int64)
    _bst_into(words, out, 0, False, False)
    _bst_into(words, out, 2 * n, True, True)
    return out


@njit(cache=True)
def taig_keys(words, S):
    B, n = words.shape
    out = np.zeros((B, 2 * S), dtype=np.int64)
    left = np.zeros(S + 1, dtype=np.int64)
    right = np.zeros(S + 1, dtype=np.int64)
    mult = np.zeros(S + 1, dtype=np.int64)
    depth = np.zeros(S + 1, dtype=np.int64)
    for b in range(B):
        left[:] = 0
        right[:] = 0
        mult[:] = 0
        depth[:] = 0
        root = 0
        for s in range(n):
            a = words[b, n - 1 - s]
            if a == 0:
                continue
            if root == 0:
                root = a
                mult[a] = 1
                depth[a] = 1
                continue
            cur = root
            while cur != a:
                nxt = left[cur] if a < cur else right[cur]
                if nxt == 0:
                    if a < cur:
                        left[cur] = a
                    else:
                        right[cur] = a
                    depth[a] = depth[cur] + 1
                    break
                cur = nxt
            mult[a] += 1
        for a in range(1, S + 1):
            out[b, 2 * (a - 1)] = mult[a]
            out[b, 2 * (a - 1) + 1] = depth[a]
    return out


@njit(cache=True)
def stal_keys(words, S):
    B, n = words.shape
    out = np.zeros((B, 2 * S), dtype=np.int64)
    cols = np.zeros(S, dtype=np.int64)
    cnt = np.zeros(S + 1, dtype=np.int64)
    for b in range(B):
        cnt[:] = 0
        ncols = 0
        for s in range(n):
            a = words[b, n - 1 - s]
            if a == 0:
                continue
            if cnt[a] == 0:
                for i in range(ncols, 0, -1):
                    cols[i] = cols[i - 1]
                cols[0] = a
                ncols += 1
            cnt[a] += 1
        for i in range(ncols):
            out[b, 2 * i] = cols[i]
            out[b, 2 * i + 1] = cnt[cols[i]]
    return out


@njit(cache=True)
def _ps_keys(words, D, strict):
    B, n = words.shape
    out = np.zeros((B, n * D), dtype=np.int64)
    grid = np.zeros((n, D), dtype=np.int64)  # each column stored bottom-up
    height = np.zeros(n, dtype=np.int64)
    for b in range(B):
        height[:] = 0
        ncols = 0
        for t in range(n):
            a = words[b, t]
            if a == 0:
                continue
            c = 0
            while c < ncols:
                top = grid[c, height[c] - 1]
                if top > a or (not strict and top == a):
                    break
                c += 1
            if c == ncols:
                ncols += 1
            grid[c, height[c]] = a
            height[c] += 1
        for c in range(ncols):
            h = height[c]
            for i in range(h):
                out[b, c * D + i] = grid[c, h - 1 - i]
    return out


@njit(cache=True)
def lps_keys(words, S):
    n = words.shape[1]
    return _ps_keys(words, min(n, S), True)


@njit(cache=True)
def rps_keys(words, S):
    n = words.shape[1]
    return _ps_keys(words, n, False)
