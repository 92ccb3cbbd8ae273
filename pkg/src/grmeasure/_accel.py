"""GF(p) inner loops: numba kernels with a pure-numpy fallback.

The numba path is used when numba imports and ``GRMEASURE_DISABLE_NUMBA`` is
unset (or "0").  Both paths are always importable so the benchmark can run
them side by side; the public entry points at the bottom pick one.

All arrays are int64 residues in ``[0, p)``; ``inv`` is the table of modular
inverses with ``inv[0] == 0``.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("GRMEASURE_DISABLE_NUMBA", "").strip() not in ("", "0")

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not _DISABLED

MODE_MONO = 0
MODE_EPI = 1
MODE_ISO = 2

_CHUNK = 4096


def _jit(fn):
    if not HAVE_NUMBA:
        return fn
    return numba.njit(cache=True)(fn)


# ---------------------------------------------------------------------------
# numba kernels (plain loops)
# ---------------------------------------------------------------------------


def _rref_loops(a, p, inv):
    m, n = a.shape
    r = a.copy()
    piv = np.empty(min(m, n), dtype=np.int64)
    row = 0
    for col in range(n):
        if row == m:
            break
        sel = -1
        for i in range(row, m):
            if r[i, col] != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != row:
            for j in range(n):
                t = r[row, j]
                r[row, j] = r[sel, j]
                r[sel, j] = t
        s = inv[r[row, col]]
        for j in range(col, n):
            r[row, j] = (r[row, j] * s) % p
        for i in range(m):
            if i != row:
                f = r[i, col]
                if f != 0:
                    for j in range(col, n):
                        r[i, j] = (r[i, j] - f * r[row, j]) % p
        piv[row] = col
        row += 1
    return r, piv[:row]


def _rank_flat(buf, nr, nc, p, inv):
    # in-place elimination of an nr x nc row-major block stored in buf
    rank = 0
    for col in range(nc):
        if rank == nr:
            break
        sel = -1
        for i in range(rank, nr):
            if buf[i * nc + col] != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != rank:
            for j in range(nc):
                t = buf[rank * nc + j]
                buf[rank * nc + j] = buf[sel * nc + j]
                buf[sel * nc + j] = t
        s = inv[buf[rank * nc + col]]
        for j in range(col, nc):
            buf[rank * nc + j] = (buf[rank * nc + j] * s) % p
        for i in range(rank + 1, nr):
            f = buf[i * nc + col]
            if f != 0:
                for j in range(col, nc):
                    buf[i * nc + j] = (buf[i * nc + j] - f * buf[rank * nc + j]) % p
        rank += 1
    return rank


_rank_flat_nb = _jit(_rank_flat)


def _combination_loops(basis, offs, rows, cols, p, inv, mode, first_only):
    d = basis.shape[0]
    nv = rows.shape[0]
    total = 1
    for _ in range(d):
        total *= p
    mask = np.zeros(1 if first_only else total, dtype=np.uint8)
    biggest = 1
    for v in range(nv):
        if rows[v] * cols[v] > biggest:
            biggest = rows[v] * cols[v]
    buf = np.zeros(biggest, dtype=np.int64)
    c = np.zeros(d, dtype=np.int64)
    for idx in range(total):
        t = idx
        for j in range(d):
            c[j] = t % p
            t //= p
        ok = True
        for v in range(nv):
            nr = rows[v]
            nc = cols[v]
            if mode == 2 and nr != nc:
                ok = False
                break
            need = nc if mode != 1 else nr
            if need == 0:
                continue
            base = offs[v]
            for e in range(nr * nc):
                s = 0
                for j in range(d):
                    if c[j] != 0:
                        s += c[j] * basis[j, base + e]
                buf[e] = s % p
            if _rank_flat_nb(buf, nr, nc, p, inv) != need:
                ok = False
                break
        if ok:
            if first_only:
                return idx, mask
            mask[idx] = 1
    return -1, mask


def _alg_mul(x, y, T, p, out):
    d = x.shape[0]
    for k in range(d):
        out[k] = 0
    for i in range(d):
        if x[i] == 0:
            continue
        for j in range(d):
            if y[j] == 0:
                continue
            f = x[i] * y[j]
            for k in range(d):
                out[k] += f * T[i, j, k]
    for k in range(d):
        out[k] %= p


_alg_mul_nb = _jit(_alg_mul)


def _scan_end_loops(T, ident, p, nsq, want_idem, want_nil):
    d = T.shape[0]
    total = 1
    for _ in range(d):
        total *= p
    c = np.zeros(d, dtype=np.int64)
    sq = np.zeros(d, dtype=np.int64)
    cur = np.zeros(d, dtype=np.int64)
    idem = -1
    nil = -1
    for idx in range(1, total):
        t = idx
        for j in range(d):
            c[j] = t % p
            t //= p
        if want_idem and idem < 0:
            _alg_mul_nb(c, c, T, p, sq)
            same = True
            is_one = True
            for k in range(d):
                if sq[k] != c[k]:
                    same = False
                if c[k] != ident[k]:
                    is_one = False
            if same and not is_one:
                idem = idx
        if want_nil and nil < 0:
            for k in range(d):
                cur[k] = c[k]
            for _ in range(nsq):
                _alg_mul_nb(cur, cur, T, p, sq)
                for k in range(d):
                    cur[k] = sq[k]
            zero = True
            for k in range(d):
                if cur[k] != 0:
                    zero = False
                    break
            if zero:
                nil = idx
        if (idem >= 0 or not want_idem) and (nil >= 0 or not want_nil):
            break
    return idem, nil


_rref_nb = _jit(_rref_loops)
_combination_nb = _jit(_combination_loops)
_scan_end_nb = _jit(_scan_end_loops)


# ---------------------------------------------------------------------------
# numpy fallback (vectorised row operations / batched chunks)
# ---------------------------------------------------------------------------


def _rref_np(a, p, inv):
    r = a.copy()
    m, n = r.shape
    pivots = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.flatnonzero(r[row:, col])
        if nz.size == 0:
            continue
        sel = row + int(nz[0])
        if sel != row:
            r[[row, sel]] = r[[sel, row]]
        r[row] = (r[row] * inv[r[row, col]]) % p
        f = r[:, col].copy()
        f[row] = 0
        r -= np.outer(f, r[row])
        r %= p
        pivots.append(col)
        row += 1
    return r, np.array(pivots, dtype=np.int64)


def _digits_np(idx, p, d):
    powers = p ** np.arange(d, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % p


def _batched_rank_np(x, p, inv):
    """Ranks of a stack of matrices x with shape (N, r, c) over GF(p)."""
    x = x.copy()
    N, nr, nc = x.shape
    rank = np.zeros(N, dtype=np.int64)
    rows_idx = np.arange(nr)
    batch = np.arange(N)
    for col in range(nc):
        live = rank < nr
        if not live.any():
            break
        cand = (x[:, :, col] != 0) & (rows_idx[None, :] >= rank[:, None])
        has = cand.any(axis=1) & live
        if not has.any():
            continue
        b = batch[has]
        rk = rank[has]
        piv = cand[has].argmax(axis=1)
        top = x[b, rk].copy()
        x[b, rk] = x[b, piv]
        x[b, piv] = top
        scale = inv[x[b, rk, col]]
        x[b, rk] = (x[b, rk] * scale[:, None]) % p
        below = rows_idx[None, :] > rk[:, None]
        f = np.where(below, x[b, :, col], 0)
        x[b] = (x[b] - f[:, :, None] * x[b, rk][:, None, :]) % p
        rank[has] += 1
    return rank


def _combination_np(basis, offs, rows, cols, p, inv, mode, first_only):
    d = basis.shape[0]
    total = p**d
    mask = np.zeros(1 if first_only else total, dtype=np.uint8)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        coeffs = _digits_np(idx, p, d)
        flat = (coeffs @ basis) % p
        ok = np.ones(idx.size, dtype=bool)
        for v in range(rows.size):
            nr, nc = int(rows[v]), int(cols[v])
            if mode == MODE_ISO and nr != nc:
                ok[:] = False
                break
            need = nc if mode != MODE_EPI else nr
            if need == 0:
                continue
            blk = flat[:, offs[v] : offs[v] + nr * nc].reshape(-1, nr, nc)
            ok &= _batched_rank_np(blk, p, inv) == need
        if first_only:
            hits = np.flatnonzero(ok)
            if hits.size:
                return int(idx[hits[0]]), mask
        else:
            mask[idx[ok]] = 1
    return -1, mask


def _alg_mul_np(x, y, T, p):
    return np.einsum("ni,nj,ijk->nk", x, y, T, optimize=True) % p


def _scan_end_np(T, ident, p, nsq, want_idem, want_nil):
    d = T.shape[0]
    total = p**d
    idem = -1
    nil = -1
    for start in range(1, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        c = _digits_np(idx, p, d)
        if want_idem and idem < 0:
            sq = _alg_mul_np(c, c, T, p)
            hit = np.all(sq == c, axis=1) & ~np.all(c == ident[None, :], axis=1)
            if hit.any():
                idem = int(idx[np.argmax(hit)])
        if want_nil and nil < 0:
            cur = c
            for _ in range(nsq):
                cur = _alg_mul_np(cur, cur, T, p)
            hit = ~cur.any(axis=1)
            if hit.any():
                nil = int(idx[np.argmax(hit)])
        if (idem >= 0 or not want_idem) and (nil >= 0 or not want_nil):
            break
    return idem, nil


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

if USE_NUMBA:
    _rref_impl = _rref_nb
    _combination_impl = _combination_nb
    _scan_end_impl = _scan_end_nb
else:
    _rref_impl = _rref_np
    _combination_impl = _combination_np
    _scan_end_impl = _scan_end_np


def rref(a: np.ndarray, p: int, inv: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Reduced row echelon form of ``a`` (same shape) and its pivot columns."""
    a = np.ascontiguousarray(a, dtype=np.int64)
    if a.size == 0:
        return a.copy(), np.zeros(0, dtype=np.int64)
    return _rref_impl(a, p, inv)


def combination_search(
    basis: np.ndarray,
    offs: np.ndarray,
    rows: np.ndarray,
    cols: np.ndarray,
    p: int,
    inv: np.ndarray,
    mode: int,
    first_only: bool,
) -> tuple[int, np.ndarray]:
    """Scan all ``p**d`` combinations of ``d`` packed morphism bases.

    ``basis`` has one row per basis morphism, each row holding the row-major
    blocks of every vertex back to back (block ``v`` starts at ``offs[v]`` and
    has shape ``rows[v] x cols[v]``).  Combination ``idx`` has coefficient
    ``(idx // p**j) % p`` on basis element ``j``.  A combination qualifies when
    every block is injective (``MODE_MONO``), surjective (``MODE_EPI``) or
    invertible (``MODE_ISO``).

    With ``first_only`` returns ``(first qualifying index or -1, unused)``;
    otherwise ``(-1, mask)`` with ``mask[idx] == 1`` for every qualifying index.
    """
    return _combination_impl(
        np.ascontiguousarray(basis, dtype=np.int64),
        np.ascontiguousarray(offs, dtype=np.int64),
        np.ascontiguousarray(rows, dtype=np.int64),
        np.ascontiguousarray(cols, dtype=np.int64),
        p,
        inv,
        mode,
        first_only,
    )


def scan_end(
    T: np.ndarray, ident: np.ndarray, p: int, want_idem: bool, want_nil: bool
) -> tuple[int, int]:
    """Search an algebra given by structure constants for special elements.

    Returns the first combination index of an idempotent other than 0 and 1,
    and of a nonzero nilpotent element (``-1`` when none exists / not asked).
    """
    d = T.shape[0]
    nsq = 0
    while (1 << nsq) < d + 1:
        nsq += 1
    return _scan_end_impl(
        np.ascontiguousarray(T, dtype=np.int64),
        np.ascontiguousarray(ident, dtype=np.int64),
        p,
        nsq,
        want_idem,
        want_nil,
    )


def digits(idx: int, p: int, d: int) -> np.ndarray:
    """Base-``p`` digits of a combination index, least significant first."""
    out = np.zeros(d, dtype=np.int64)
    for j in range(d):
        out[j] = idx % p
        idx //= p
    return out


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"
