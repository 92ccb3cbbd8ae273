"""Numba kernels against the numpy fallbacks on the workloads the package actually runs.

    python benchmarks/bench_kernels.py [--repeat N]

Each row times one kernel on one input with both backends (after a warm-up
call so JIT compilation is excluded) and checks that the answers agree.
"""

from __future__ import annotations

import argparse
from timeit import default_timer as timer

import numpy as np

from grmeasure import _accel
from grmeasure.families import kronecker_preprojective, kronecker_regular
from grmeasure.ffla import inverse_table
from grmeasure.quiverrep import direct_sum, end_algebra, hom_basis, pack_basis


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = timer()
        out = fn()
        times.append(timer() - t0)
    return min(times), out


def combination_cases():
    R = kronecker_regular(2, "x", 2)
    RR = direct_sum(R, R).rep
    yield "iso End(R[2]^3) (GF2)", direct_sum(RR, R).rep, direct_sum(RR, R).rep, _accel.MODE_ISO
    P2, P4 = kronecker_preprojective(2, 2), kronecker_preprojective(2, 4)
    yield "mono P_2 -> P_4+P_4 (GF2)", P2, direct_sum(P4, P4).rep, _accel.MODE_MONO
    S = kronecker_regular(3, "x", 2)
    yield "iso End(R[2]^2) (GF3)", direct_sum(S, S).rep, direct_sum(S, S).rep, _accel.MODE_ISO


def end_cases():
    R = kronecker_regular(2, "x", 3)
    yield "End R_x[3]^2 (GF2)", direct_sum(R, R).rep
    R2 = kronecker_regular(2, "x", 2)
    yield "End R_x[2]^3 (GF2)", direct_sum(direct_sum(R2, R2).rep, R2).rep


def rref_case(rng):
    return rng.integers(0, 7, size=(60, 80)).astype(np.int64)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not _accel.HAVE_NUMBA:
        print("numba is not installed; nothing to compare")
        return
    rows = []
    for name, M, N, mode in combination_cases():
        packed = pack_basis(hom_basis(M, N))
        inv = inverse_table(M.p)
        t_nb, r_nb = best_of(lambda: _accel._combination_nb(*packed, M.p, inv, mode, False), args.repeat)
        t_np, r_np = best_of(lambda: _accel._combination_np(*packed, M.p, inv, mode, False), args.repeat)
        same = np.array_equal(np.asarray(r_nb[1], dtype=bool), np.asarray(r_np[1], dtype=bool))
        rows.append((f"combination: {name} [{M.p}^{packed[0].shape[0]} maps]", t_nb, t_np, same))
    for name, M in end_cases():
        E = end_algebra(M)
        d = E.dim
        nsq = max(1, int(np.ceil(np.log2(d + 1))))
        ident = E.identity_coords()
        t_nb, r_nb = best_of(lambda: _accel._scan_end_nb(E.mult_table, ident, M.p, nsq, True, True), args.repeat)
        t_np, r_np = best_of(lambda: _accel._scan_end_np(E.mult_table, ident, M.p, nsq, True, True), args.repeat)
        rows.append((f"scan_end: {name} [dim {d}]", t_nb, t_np, tuple(r_nb) == tuple(r_np)))
    rng = np.random.default_rng(0)
    a = rref_case(rng)
    inv = inverse_table(7)
    t_nb, r_nb = best_of(lambda: _accel._rref_nb(a.copy(), 7, inv), args.repeat)
    t_np, r_np = best_of(lambda: _accel._rref_np(a.copy(), 7, inv), args.repeat)
    rows.append(("rref: 60x80 over GF(7)", t_nb, t_np, np.array_equal(r_nb[0], r_np[0])))

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  {'numba':>10}  {'numpy':>10}  {'speedup':>8}  agree")
    for name, t_nb, t_np, same in rows:
        print(f"{name:<{width}}  {t_nb * 1e3:>8.2f}ms  {t_np * 1e3:>8.2f}ms  {t_np / t_nb:>7.1f}x  {same}")


if __name__ == "__main__":
    main()
