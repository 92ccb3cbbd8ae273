from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from grmeasure import Representation
from grmeasure.cli.checks import kronecker_registry
from grmeasure.families import (
    KRONECKER2,
    four_subspace_tube_module,
    kronecker_preinjective,
    kronecker_preprojective,
    kronecker_regular,
)
from grmeasure.grcore import (
    GRMeasure,
    all_gr_filtrations,
    gr_filtration,
    gr_measure,
    gr_submodules,
    is_gr_inclusion,
    is_piling,
    is_piling_oracle,
    measure_to_rational,
)
from grmeasure.quiverrep import direct_sum, is_indecomposable, is_iso, projective_at, simple_at
from grmeasure.sublattice import Subrep, all_subreps, sub_as_rep
from oracles import Lattice, PlainRep, rational_to_set

K = KRONECKER2


def R(p, f, t):
    return kronecker_regular(p, f, t)


def sink_line(M, row):
    from grmeasure.ffla import Subspace

    return Subrep(M, {"a": Subspace.zero(M.dims["a"], M.p), "b": Subspace.from_rows([row], M.dims["b"], M.p)})


def test_known_measures():
    assert gr_measure(simple_at(K, "a", 2)) == GRMeasure([1])
    assert gr_measure(projective_at(K, "a", 2)) == GRMeasure([1, 3])
    assert gr_measure(R(2, "x", 2)) == GRMeasure([1, 2, 4])
    assert gr_measure(kronecker_preprojective(2, 3)) == GRMeasure([1, 3, 5])


def test_gr_submodules_of_projective():
    subs = gr_submodules(projective_at(K, "a", 2))
    assert len(subs) == 3
    assert all(is_iso(sub_as_rep(U)[0], simple_at(K, "b", 2)) is not None for U in subs)


def test_gr_submodule_of_tube_module_is_unique():
    subs = gr_submodules(R(2, "x", 2))
    assert len(subs) == 1
    assert is_iso(sub_as_rep(subs[0])[0], R(2, "x", 1)) is not None


def test_four_subspace_module():
    M = four_subspace_tube_module(3)
    subs = gr_submodules(M)
    assert len(subs) == 4 and all(U.length == 5 for U in subs)
    assert gr_measure(M) == GRMeasure([1, 2, 5, 6])


def test_filtrations():
    assert gr_filtration(simple_at(K, "b", 3)).lengths == (1,)
    F = gr_filtration(R(2, "x", 2))
    assert F.lengths == (1, 2, 4)
    assert F.measure == GRMeasure([1, 2, 4])
    assert F.validate()
    M1 = R(2, "x", 1)
    chains = list(all_gr_filtrations(R(2, "x", 3)))
    assert chains
    for F in chains:
        assert any(is_iso(sub_as_rep(U)[0], M1) is not None for U in F.chain)


def test_is_gr_inclusion():
    R1, R2 = R(2, "x", 1), R(2, "x", 2)
    assert is_gr_inclusion(sink_line(R1, [1]))
    assert not is_gr_inclusion(sink_line(R2, [1, 0]))
    assert not is_gr_inclusion(sink_line(R2, [0, 1]))
    assert not is_gr_inclusion(Subrep.full(R1))


def test_piling_examples():
    R2 = R(2, "x", 2)
    F = gr_filtration(R2)
    for U in F.chain:
        assert is_piling(U) and is_piling_oracle(U)
    for U in all_subreps(R2):
        if U.length == 1:
            assert is_piling(U)
    assert gr_measure(R2).starts_with(gr_measure(sub_as_rep(F.chain[1])[0]))


ORACLE_CASES = [
    kronecker_preprojective(2, 2),
    kronecker_preprojective(2, 3),
    kronecker_preinjective(2, 2),
    kronecker_preinjective(2, 3),
    R(2, "x", 1),
    R(2, "x+1", 2),
    R(2, "inf", 2),
    R(2, "x^2+x+1", 1),
    R(3, "x", 2),
    R(3, "x^2+1", 1),
    four_subspace_tube_module(3),
    direct_sum(kronecker_preprojective(2, 2), R(2, "x", 1)).rep,
    direct_sum(simple_at(K, "b", 2), simple_at(K, "b", 2)).rep,
]


@pytest.mark.parametrize("idx", range(len(ORACLE_CASES)))
def test_measure_against_bruteforce(idx):
    M = ORACLE_CASES[idx]
    L = Lattice(PlainRep.of(M))
    expected = rational_to_set(L.mu(L.full))
    assert list(gr_measure(M, engine="lattice")) == expected
    if M.quiver == K and M.p == 2 and M.length <= 6:
        assert list(gr_measure(M, kronecker_registry(2, max(M.length - 1, 1)), engine="classes")) == expected


@pytest.mark.parametrize("idx", range(len(ORACLE_CASES)))
def test_gr_submodule_count_against_bruteforce(idx):
    M = ORACLE_CASES[idx]
    L = Lattice(PlainRep.of(M))
    if not L.is_indecomposable(L.full):
        return
    expected = sorted(tuple(L.dims_of(U)[v] for v in M.quiver.vertices) for U in L.gr_submodules())
    ours = sorted(tuple(U.dims[v] for v in M.quiver.vertices) for U in gr_submodules(M, engine="lattice"))
    assert ours == expected
    if M.quiver == K and M.p == 2:
        reg = kronecker_registry(2, max(M.length - 1, 1))
        via = sorted(tuple(U.dims[v] for v in M.quiver.vertices) for U in gr_submodules(M, reg, engine="classes"))
        assert via == expected


def test_registry_classes_against_bruteforce():
    reg = kronecker_registry(2, 5)
    for j, e in enumerate(reg):
        L = Lattice(PlainRep.of(e.rep))
        assert list(gr_measure(e.rep, reg, engine="classes")) == rational_to_set(L.mu(L.full)), e.label


def _kron(p, da, db, seed):
    rng = np.random.default_rng(seed)
    return Representation(
        K, p, {"a": da, "b": db}, {"alpha": rng.integers(0, p, (db, da)), "beta": rng.integers(0, p, (db, da))}
    )


small_reps = st.one_of(
    st.tuples(st.just(2), st.integers(0, 3), st.integers(1, 3), st.integers(0, 2**31)),
    st.tuples(st.just(3), st.integers(0, 2), st.integers(1, 2), st.integers(0, 2**31)),
).map(lambda t: _kron(*t))


@given(small_reps)
def test_random_measure_against_bruteforce(M):
    L = Lattice(PlainRep.of(M))
    assert measure_to_rational(gr_measure(M, engine="lattice")) == L.mu(L.full)


@given(small_reps)
def test_measure_is_monotone(M):
    mu = gr_measure(M, engine="lattice")
    for U in all_subreps(M):
        if not U.is_zero():
            assert gr_measure(sub_as_rep(U)[0], engine="lattice") <= mu


@given(small_reps)
def test_filtration_measure_is_lengths(M):
    if not is_indecomposable(M):
        return
    F = gr_filtration(M, engine="lattice")
    assert F.validate()
    assert F.measure == gr_measure(M, engine="lattice")
    for U in gr_submodules(M, engine="lattice") if M.length > 1 else []:
        assert gr_measure(sub_as_rep(U)[0], engine="lattice").with_top(M.length) == F.measure
