import pytest
from hypothesis import given
from hypothesis import strategies as st

from hhcalc.errors import MalformedDatum
from hhcalc.gradedvec import ZERO, GradedDims, GradedInterval
from hhcalc.hkr import PolyvectorTable, hh_cohomology_from_polyvectors, polyvectors_trivial_canonical
from hhcalc.hodge import HodgeDiamond
from hhcalc.orbifold import FixedLocusDatum, element_contribution, orbifold_hh

K3_TABLE = polyvectors_trivial_canonical(HodgeDiamond.from_matrix([[1, 0, 1], [0, 20, 0], [1, 0, 1]]))
HC_K3 = GradedDims({0: 1, 2: 22, 4: 1})
HC_ENRIQUES = GradedDims({0: 1, 2: 10, 4: 1})


def test_identity_element_gives_polyvector_hkr():
    datum = FixedLocusDatum("1", 0, K3_TABLE.a)
    assert element_contribution(datum) == hh_cohomology_from_polyvectors(K3_TABLE) == HC_K3


def test_empty_fixed_locus():
    assert element_contribution(FixedLocusDatum("sigma", 0)) == ZERO


def test_isolated_fixed_point_on_surface():
    assert element_contribution(FixedLocusDatum("g", 2, {(0, 0): 1})) == GradedDims({2: 1})


def test_trivial_group_on_k3():
    datum = FixedLocusDatum("1", 0, K3_TABLE.a, GradedInterval.exact(HC_K3))
    assert orbifold_hh([datum]) == GradedInterval.exact(HC_K3)


def test_free_involution_gives_enriques():
    ident = FixedLocusDatum("1", 0, K3_TABLE.a, GradedInterval.exact(HC_ENRIQUES))
    sigma = FixedLocusDatum("sigma", 0)
    assert orbifold_hh([ident, sigma]) == GradedInterval.exact(HC_ENRIQUES)


def test_unconstrained_invariants_add():
    a = FixedLocusDatum("1", 0, {(0, 0): 1, (1, 1): 3})
    b = FixedLocusDatum("g", 1, {(0, 0): 2})
    result = orbifold_hh([a, b])
    assert result.lo == ZERO
    assert result.hi == GradedDims({0: 1, 2: 3}) + GradedDims({1: 2})


def test_invariant_exceeding_contribution_rejected():
    with pytest.raises(MalformedDatum):
        FixedLocusDatum("g", 1, {(0, 0): 1}, GradedInterval.exact(GradedDims({1: 2})))
    with pytest.raises(MalformedDatum):
        FixedLocusDatum("g", 0, {}, GradedInterval.exact(GradedDims({0: 1})))


def test_bad_data():
    with pytest.raises(MalformedDatum):
        FixedLocusDatum("g", -1)
    with pytest.raises(MalformedDatum):
        FixedLocusDatum("g", 0, {(0, 0): -2})
    with pytest.raises(MalformedDatum):
        orbifold_hh([FixedLocusDatum("g", 0), FixedLocusDatum("g", 1)])


tables = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(0, 5), max_size=6)


@st.composite
def data_lists(draw):
    out = []
    for k in range(draw(st.integers(0, 4))):
        datum = FixedLocusDatum(f"g{k}", draw(st.integers(0, 3)), draw(tables))
        hi = element_contribution(datum)
        hi = GradedDims({i: draw(st.integers(0, m)) for i, m in hi.items()})
        lo = GradedDims({i: draw(st.integers(0, m)) for i, m in hi.items()})
        out.append(FixedLocusDatum(datum.label, datum.codim, datum.table, GradedInterval(lo, hi)))
    return out


@given(data_lists(), st.randoms())
def test_orbifold_properties(data, rnd):
    result = orbifold_hh(data)
    shuffled = data[:]
    rnd.shuffle(shuffled)
    assert orbifold_hh(shuffled) == result
    for d in data:
        assert d.invariant.hi <= element_contribution(d)


@given(tables)
def test_identity_contribution_equals_polyvector_hkr(table):
    size = 1 + max((max(p, q) for p, q in table), default=0)
    assert element_contribution(FixedLocusDatum("1", 0, table)) == hh_cohomology_from_polyvectors(
        PolyvectorTable(size - 1, table)
    )
