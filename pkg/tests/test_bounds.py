from __future__ import annotations

import pytest

from grmeasure.cli.checks import kronecker_registry
from grmeasure.errors import InsufficientBoundError, InvalidParameterError
from grmeasure.families import KRONECKER2, kronecker_preprojective, kronecker_regular
from grmeasure.grcore import (
    Verdict,
    algebra_bounds,
    check_gr_bound,
    complement_length_check,
    gr_filtration,
    gr_submodules,
    is_irreducible_bounded,
    sing_additivity_check,
    submodule_interval_check,
)
from grmeasure.grcore.bounds import sing_set
from grmeasure.quiverrep import Morphism, hom_basis, is_iso, projective_at, simple_at
from grmeasure.sublattice import Subrep, all_subreps, sub_as_rep, sub_sum

K = KRONECKER2
R1, R2 = kronecker_regular(2, "x", 1), kronecker_regular(2, "x", 2)


def test_kronecker_bounds():
    b = algebra_bounds(K, 2)
    assert (b.p_bound, b.q_bound, b.pq) == (3, 3, 9)


def test_simple_in_projective():
    U = gr_submodules(projective_at(K, "a", 2))[0]
    assert check_gr_bound(U, algebra_bounds(K, 2))


def test_interval():
    U = submodule_interval_check(R2, 1)
    assert U.length == 2 and is_iso(sub_as_rep(U)[0], R1) is not None
    P3 = kronecker_preprojective(2, 3)
    V = submodule_interval_check(P3, 3)
    assert 4 <= V.length <= 27
    with pytest.raises(InvalidParameterError):
        submodule_interval_check(P3, 5)


def test_sing_trivial_and_small():
    # Hom(S_b, R_x[1]) is one-dimensional: only 0 is singular
    S = gr_filtration(R1).chain[0]
    basis, sing = sing_set(S)
    assert len(basis) == 1 and sing.tolist() == [[0]]
    assert sing_additivity_check(S)
    assert sing_additivity_check(gr_filtration(R2).chain[1])


def test_sing_exhaustive_over_hom():
    """Recheck closure by listing every pair of singular maps."""
    U = gr_filtration(R2).chain[1]
    basis, sing = sing_set(U)
    p = 2
    members = {tuple(int(x) for x in row) for row in sing}
    for a in members:
        for b in members:
            assert tuple((x + y) % p for x, y in zip(a, b)) in members


def test_irreducibility_verdicts():
    reg = kronecker_registry(2, 4)
    S_in_R1 = sub_as_rep(gr_filtration(R1).chain[0])[1]
    assert is_irreducible_bounded(S_in_R1, reg, 2) is Verdict.INCONCLUSIVE
    S_in_R2 = sub_as_rep(gr_filtration(R2).chain[0])[1]
    assert is_irreducible_bounded(S_in_R2, reg, 2) is Verdict.REDUCIBLE
    R1_in_R2 = sub_as_rep(gr_filtration(R2).chain[1])[1]
    assert is_irreducible_bounded(R1_in_R2, reg, 4) is Verdict.INCONCLUSIVE
    assert is_irreducible_bounded(Morphism.zero(R1, R2), reg, 2) is Verdict.REDUCIBLE
    with pytest.raises(InsufficientBoundError):
        is_irreducible_bounded(S_in_R1, reg, 6)


def test_simple_into_regular_factors_through_projective():
    """The REDUCIBLE verdict at length 3 is backed by an explicit factorization."""
    reg = kronecker_registry(2, 4)
    S_in_R1 = sub_as_rep(gr_filtration(R1).chain[0])[1]
    assert is_irreducible_bounded(S_in_R1, reg, 3) is Verdict.REDUCIBLE
    S, P = simple_at(K, "b", 2), projective_at(K, "a", 2)
    found = any(
        (g @ f).flat().tolist() == S_in_R1.flat().tolist()
        for f in _all_maps(S, P)
        for g in _all_maps(P, R1)
    )
    assert found


def _all_maps(X, Y):
    import itertools

    basis = hom_basis(X, Y)
    for coeffs in itertools.product(range(X.p), repeat=len(basis)):
        f = Morphism.zero(X, Y)
        for c, b in zip(coeffs, basis):
            f = f + b.scale(c)
        yield f


@pytest.mark.parametrize("M", [R2, projective_at(K, "a", 2), kronecker_preprojective(2, 3)])
def test_complement_lengths(M):
    for U in gr_submodules(M):
        assert complement_length_check(U)
        for V in all_subreps(M):
            if sub_sum(U, V) == Subrep.full(M):
                assert V.length > M.length - U.length


def test_complement_whole_module():
    U = gr_submodules(R2)[0]
    assert Subrep.full(R2).length > R2.length - U.length


def test_self_extension_with_reducible_inclusion():
    """Quiver a -> b with two arrows b -> c: M = (1,1,1) sits in an indecomposable M[2], and the inclusion factors."""
    import numpy as np

    from grmeasure import Quiver, Representation
    from grmeasure.grcore import register_indecomposables
    from grmeasure.quiverrep import is_indecomposable, quotient

    Q = Quiver(("a", "b", "c"), (("f", "a", "b"), ("g", "b", "c"), ("h", "b", "c")))
    M = Representation(Q, 2, {"a": 1, "b": 1, "c": 1}, {"f": [[1]], "g": [[1]], "h": [[0]]})
    eye = np.eye(2, dtype=np.int64)
    M2 = Representation(Q, 2, {"a": 2, "b": 2, "c": 2}, {"f": eye, "g": eye, "h": [[0, 1], [0, 0]]})
    assert is_indecomposable(M) and is_indecomposable(M2)
    subs = [
        U
        for U in all_subreps(M2)
        if U.length == 3 and is_iso(sub_as_rep(U)[0], M) is not None and is_iso(quotient(M2, U)[0], M) is not None
    ]
    assert len(subs) == 1
    inc = sub_as_rep(subs[0])[1]
    reg = register_indecomposables(Q, 2, 5)
    assert is_irreducible_bounded(inc, reg, 4) is Verdict.INCONCLUSIVE
    assert is_irreducible_bounded(inc, reg, 5) is Verdict.REDUCIBLE
