from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from grmeasure import Quiver, Representation
from grmeasure.errors import DimensionMismatchError
from grmeasure.families import KRONECKER2, kronecker_preprojective, kronecker_regular, subspace_quiver
from grmeasure.ffla import Subspace
from grmeasure.quiverrep import (
    Morphism,
    direct_sum,
    end_algebra,
    find_idempotent,
    hom_basis,
    hom_dim,
    injective_at,
    is_brick,
    is_epi,
    is_indecomposable,
    is_iso,
    is_local,
    is_mono,
    loewy_length,
    projective_at,
    quotient,
    radical,
    simple_at,
    validate,
)
from oracles import PlainRep, hom_dim_bruteforce

K = KRONECKER2


def kron(p, dims, alpha, beta):
    return Representation(K, p, {"a": dims[0], "b": dims[1]}, {"alpha": alpha, "beta": beta})


def test_quiver_rejects_cycles():
    with pytest.raises(ValueError):
        Quiver(("x", "y"), (("f", "x", "y"), ("g", "y", "x")))


def test_shape_mismatch_rejected():
    with pytest.raises(DimensionMismatchError):
        Representation(K, 2, {"a": 1, "b": 2}, {"alpha": np.zeros((1, 1), dtype=np.int64)})


def test_direct_sum_with_zero():
    S = simple_at(K, "a", 2)
    Z = Representation(K, 2, {"a": 0, "b": 0})
    assert direct_sum(S, Z).rep == S


def test_direct_sum_of_simples():
    D = direct_sum(simple_at(K, "a", 2), simple_at(K, "b", 2)).rep
    assert D.dims == {"a": 1, "b": 1}
    assert all(D.maps[a].is_zero() for a in ("alpha", "beta"))


def test_direct_sum_end_dimension():
    P = kronecker_preprojective(2, 2)
    assert is_brick(P)
    D = direct_sum(P, P).rep
    assert D.length == 6
    assert end_algebra(D).dim == 4 * end_algebra(P).dim


def test_hom_between_unrelated_simples():
    Q = Quiver(("x", "y", "z"), (("f", "x", "y"),))
    assert hom_dim(simple_at(Q, "x", 3), simple_at(Q, "z", 3)) == 0


def test_hom_contains_identity():
    M = kronecker_regular(3, "x", 2)
    basis = hom_basis(M, M)
    assert len(basis) >= 1
    assert is_iso(M, M) is not None


@pytest.mark.parametrize(
    "M,N",
    [
        (kronecker_preprojective(2, 2), kronecker_preprojective(2, 3)),
        (kronecker_regular(2, "x", 1), kronecker_regular(2, "x", 2)),
        (kronecker_regular(2, "x", 2), kronecker_regular(2, "x", 2)),
        (simple_at(K, "b", 3), kronecker_regular(3, "x", 1)),
    ],
)
def test_hom_dim_against_bruteforce(M, N):
    assert hom_dim(M, N) == hom_dim_bruteforce(PlainRep.of(M), PlainRep.of(N))


def test_mono_epi():
    M = kronecker_regular(2, "x", 1)
    ident = Morphism.identity(M)
    assert is_mono(ident) and is_epi(ident)
    z = Morphism.zero(M, M)
    assert not is_mono(z) and not is_epi(z)
    Q = Quiver(("v",), ())
    L = Representation(Q, 2, {"v": 1})
    V = Representation(Q, 2, {"v": 2})
    inc = Morphism(L, V, {"v": [[1], [0]]})
    assert is_mono(inc) and not is_epi(inc)


def test_is_iso_cases():
    M = kronecker_preprojective(3, 3)
    assert is_iso(M, M) is not None
    assert is_iso(M, kronecker_preprojective(3, 2)) is None
    R0 = kron(2, (1, 1), [[1]], [[0]])
    R1 = kron(2, (1, 1), [[1]], [[1]])
    assert is_iso(R0, R1) is None


def test_iso_found_after_base_change():
    M = kronecker_preprojective(3, 3)
    g_b = np.array([[2, 0, 1], [0, 1, 0], [1, 0, 0]])
    h_a = np.array([[1, 1], [0, 1]])
    maps = {a: (g_b @ np.array(M.maps[a].tolist()) @ h_a) % 3 for a in ("alpha", "beta")}
    N = Representation(K, 3, M.dims, maps)
    f = is_iso(M, N)
    assert f is not None and f.commutes()


def test_end_of_simple():
    E = end_algebra(simple_at(K, "a", 5))
    assert E.dim == 1
    assert E.mult_table.reshape(-1).tolist() == [1]


def test_end_of_uniserial_regular():
    M = kronecker_regular(2, "x", 2)
    E = end_algebra(M)
    assert E.dim == 2
    assert np.array_equal(E.mult_table, E.mult_table.transpose(1, 0, 2))
    assert is_indecomposable(M) and not is_brick(M)


def test_simples_are_bricks():
    for v in K.vertices:
        S = simple_at(K, v, 2)
        assert is_indecomposable(S) and is_brick(S)


def test_semisimple_square_splits():
    S = simple_at(K, "b", 2)
    D = direct_sum(S, S).rep
    assert not is_indecomposable(D)
    e = find_idempotent(D)
    assert e is not None
    assert (e @ e).flat().tolist() == e.flat().tolist()


def test_radical_and_loewy():
    D = direct_sum(simple_at(K, "a", 2), simple_at(K, "b", 2)).rep
    assert all(U.is_zero() for U in radical(D).values())
    assert loewy_length(D) == 1
    P = projective_at(K, "a", 2)
    assert P.dims == {"a": 1, "b": 2}
    rad = radical(P)
    assert rad["a"].dim == 0 and rad["b"].dim == 2
    assert loewy_length(P) == 2 and is_local(P)
    S = simple_at(K, "b", 3)
    assert loewy_length(S) == 1 and is_local(S)


def test_projectives_and_injectives():
    assert projective_at(K, "b", 2) == simple_at(K, "b", 2)
    P = projective_at(K, "a", 2)
    assert P.length == 3 and P.dims == {"a": 1, "b": 2}
    assert injective_at(subspace_quiver(4), "c", 2).length == 5


def test_quotients():
    P = projective_at(K, "a", 2)
    Z = {v: Subspace.zero(P.dims[v], 2) for v in K.vertices}
    F = {v: Subspace.full(P.dims[v], 2) for v in K.vertices}
    assert is_iso(quotient(P, Z)[0], P) is not None
    assert quotient(P, F)[0].length == 0
    line = {"a": Subspace.zero(1, 2), "b": Subspace.from_rows([[1, 0]], 2, 2)}
    Qt, proj = quotient(P, line)
    assert Qt.dims == {"a": 1, "b": 1}
    assert validate(Qt) and proj.commutes() and is_epi(proj)


reps = st.tuples(st.sampled_from([2, 3]), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2**31)).map(
    lambda t: _random_kron(*t)
)


def _random_kron(p, da, db, seed):
    rng = np.random.default_rng(seed)
    return kron(p, (da, db), rng.integers(0, p, size=(db, da)), rng.integers(0, p, size=(db, da)))


@given(reps, reps, reps)
def test_hom_additivity(M, N, X):
    if N.p != M.p:
        N = Representation(K, M.p, N.dims, {a: np.array(N.maps[a].tolist()).reshape(N.dims["b"], N.dims["a"]) % M.p for a in ("alpha", "beta")})
    if X.p != M.p:
        X = Representation(K, M.p, X.dims, {a: np.array(X.maps[a].tolist()).reshape(X.dims["b"], X.dims["a"]) % M.p for a in ("alpha", "beta")})
    assert hom_dim(direct_sum(M, N).rep, X) == hom_dim(M, X) + hom_dim(N, X)


@given(reps)
def test_hom_basis_commutes(M):
    for f in hom_basis(M, M):
        assert f.commutes()
