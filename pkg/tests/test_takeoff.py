from __future__ import annotations

import pytest

from grmeasure.cli.checks import kronecker_registry
from grmeasure.errors import InsufficientBoundError, InvalidParameterError
from grmeasure.families import KRONECKER2, kronecker_preinjective, kronecker_preprojective
from grmeasure.grcore import GRMeasure, takeoff_prefix
from grmeasure.grcore.takeoff import is_injective_class, successor_bound
from grmeasure.quiverrep import is_iso, simple_at
from oracles import Lattice, PlainRep, rational_to_set

K = KRONECKER2


@pytest.fixture(scope="module")
def reg10():
    return kronecker_registry(2, 10)


def test_certified_prefix(reg10):
    I1, I2, I3 = takeoff_prefix(reg10, 3, bound="ar")
    assert I1.measure == GRMeasure([1])
    assert len(I1.classes) == 2
    assert I2.measure == GRMeasure([1, 3])
    assert len(I2.classes) == 1 and is_iso(reg10[I2.classes[0]].rep, kronecker_preprojective(2, 2)) is not None
    assert I3.measure == GRMeasure([1, 3, 5])
    assert len(I3.classes) == 1 and is_iso(reg10[I3.classes[0]].rep, kronecker_preprojective(2, 3)) is not None
    assert all(any(is_iso(reg10[j].rep, simple_at(K, v, 2)) is not None for j in I1.classes) for v in K.vertices)


def test_pq_margin_needs_longer_registry(reg10):
    with pytest.raises(InsufficientBoundError) as info:
        takeoff_prefix(reg10, 3, bound="pq")
    assert info.value.required == 27


def test_short_registry_fails():
    with pytest.raises(InsufficientBoundError):
        takeoff_prefix(kronecker_registry(2, 5), 3, bound="ar")


def test_bad_arguments(reg10):
    with pytest.raises(InvalidParameterError):
        takeoff_prefix(reg10, 0)
    with pytest.raises(InvalidParameterError):
        successor_bound(reg10, 0, mode="nope")


def test_successor_bounds(reg10):
    for j, e in enumerate(reg10):
        if is_iso(e.rep, kronecker_preinjective(2, 1)) is not None or is_iso(e.rep, kronecker_preinjective(2, 2)) is not None:
            assert is_injective_class(reg10, j)
            assert successor_bound(reg10, j, "ar") == 0
    j = reg10.find(kronecker_preprojective(2, 2))
    # tau^{-1} P_2 = P_4 of length 7, middle term P_3 + P_3 of length 10
    assert successor_bound(reg10, j, "ar") == 3 + 7
    assert successor_bound(reg10, j, "pq") == 27


def test_prefix_against_bruteforce_measures():
    """The three smallest measures among all classes of length <= 6 by the brute-force oracle."""
    reg = kronecker_registry(2, 6)
    seen = set()
    for e in reg:
        L = Lattice(PlainRep.of(e.rep))
        seen.add(tuple(rational_to_set(L.mu(L.full))))
    smallest = sorted((GRMeasure(s) for s in seen))[:3]
    assert smallest == [GRMeasure([1]), GRMeasure([1, 3]), GRMeasure([1, 3, 5])]
