from __future__ import annotations

from fractions import Fraction

import pytest

from grmeasure.errors import InconsistentInputError, InvalidParameterError
from grmeasure.families import (
    TubeHandle,
    four_subspace_tube_module,
    kronecker_regular,
    m_filtration,
    pruefer_measure,
    unique_m_filtration_certificate,
)
from grmeasure.families.polys import tube_parameters
from grmeasure.grcore import GRMeasure, all_gr_filtrations, gr_measure, gr_submodules
from grmeasure.quiverrep import direct_sum, is_indecomposable, is_iso
from grmeasure.sublattice import Subrep, maximal_subreps, sub_as_rep
from oracles import Lattice, PlainRep


def test_m_filtration_trivial():
    M = kronecker_regular(2, "x", 1)
    chain = m_filtration(M, M)
    assert len(chain) == 1 and chain[0] == Subrep.full(M)


def test_m_filtration_of_tube_module():
    M1, M3 = kronecker_regular(2, "x", 1), kronecker_regular(2, "x", 3)
    chain = m_filtration(M3, M1)
    assert [U.length for U in chain] == [2, 4, 6]
    assert unique_m_filtration_certificate(chain)


def test_m_filtration_of_square():
    M = kronecker_regular(2, "x", 1)
    chain = m_filtration(direct_sum(M, M).rep, M)
    assert chain is not None and len(chain) == 2
    assert not unique_m_filtration_certificate(chain)


def test_m_filtration_bad_length():
    with pytest.raises(InvalidParameterError):
        m_filtration(kronecker_regular(2, "x", 3), kronecker_regular(2, "x^2+x+1", 1))


def test_pruefer_values():
    assert pruefer_measure(GRMeasure([1, 2]), 2) == Fraction(5, 6)
    assert pruefer_measure(GRMeasure([1, 2, 4]), 4) == Fraction(49, 60)
    assert pruefer_measure(GRMeasure([1]), 1) == 1
    with pytest.raises(InconsistentInputError):
        pruefer_measure(GRMeasure([1, 2]), 3)


def test_pruefer_is_limit_of_tube_measures():
    """The rational values of mu(M[t]) increase to the closed form."""
    h = TubeHandle.of(2, "x")
    limit = pruefer_measure(gr_measure(h.module(1)), 2)
    vals = [gr_measure(h.module(t)).to_rational() for t in (1, 2, 3, 4)]
    assert all(x < y for x, y in zip(vals, vals[1:]))
    assert all(v < limit for v in vals)
    assert limit - vals[-1] == Fraction(1, 3 * 4**4)


def test_four_subspace_module():
    with pytest.raises(InvalidParameterError):
        four_subspace_tube_module(2)
    M = four_subspace_tube_module(3)
    assert M.length == 6 and is_indecomposable(M)
    subs = gr_submodules(M)
    assert len(subs) == 4 and all(U.length == 5 for U in subs)
    assert sorted(U.key for U in subs) == sorted(U.key for U in maximal_subreps(M))
    for U in maximal_subreps(M):
        assert is_indecomposable(sub_as_rep(U)[0])


@pytest.mark.parametrize("p", [2, 3])
def test_unique_gr_submodule_in_small_tubes(p):
    for par in tube_parameters(p, 2):
        h = TubeHandle(p, par)
        for t in (2, 3):
            if h.boundary_length * t > 8:
                continue
            subs = gr_submodules(h.module(t))
            assert len(subs) == 1
            assert is_iso(sub_as_rep(subs[0])[0], h.module(t - 1)) is not None


def test_unique_gr_submodule_bruteforce():
    M = kronecker_regular(2, "x+1", 3)
    L = Lattice(PlainRep.of(M))
    assert len(L.gr_submodules()) == 1


def test_filtrations_pass_through_boundary():
    h = TubeHandle.of(3, "inf")
    M1 = h.module(1)
    for t in (1, 2, 3):
        for F in all_gr_filtrations(h.module(t)):
            assert any(is_iso(sub_as_rep(U)[0], M1) is not None for U in F.chain)
