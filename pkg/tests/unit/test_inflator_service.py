# tests/unit/test_inflator_service.py
"""
Unit Tests fuer Inflator (models/inflator.py), OperatorLattice und InflatorService

Testet:
- Validierung (NotInflationary, NotMonotone) und Klassifikations-Flags
- make_inflator(), compose(), power(), lattice_ops(), infty()
- benannte Inflatoren O_b, u_a, ι_a
- totalizer() / equalizer() gegen brute_extremum()
- enumerate_inflators() mit Familien und Schranke
- tot_class(), tot_poset(), pseudocomplement(), order_predicates(), prime_gaps(), is_essential()

Auf chain3 (0 < m < 1) gibt es genau fünf Inflatoren; Wertetabellen als
Indextupel: (0,1,2) Identität, (0,2,2) = O_m, (1,1,2) = u_m, (1,2,2) = ι_m, (2,2,2) Top.
"""
from __future__ import annotations

import pytest

from config import RunConfig
from models.errors import (
    BadParameter,
    EmptyFamily,
    EnumerationBoundExceeded,
    HostMismatch,
    MemberNotInFamily,
    NotInflationary,
    NotMonotone,
)
from models.inflator import Inflator
from models.operator_lattice import NucleusLattice, OperatorLattice
from services import InflatorService

# Mark this whole module as unit tests
pytestmark = pytest.mark.unit


# ============================================================================
# FIXTURES
# ============================================================================

@pytest.fixture
def o_m(chain3):
    return Inflator(chain3, (0, 2, 2))


@pytest.fixture
def u_m(chain3):
    return Inflator(chain3, (1, 1, 2))


@pytest.fixture
def iota_m(chain3):
    return Inflator(chain3, (1, 2, 2))


@pytest.fixture
def nuclei_chain3(inflator_service, chain3):
    return inflator_service.enumerate_inflators(chain3, 'nucleus')


@pytest.fixture
def u_family_m3(inflator_service, m3):
    return OperatorLattice(m3, 'all', tuple(inflator_service.u_a(m3, x) for x in m3.labels))


# ============================================================================
# MODEL
# ============================================================================

class TestInflatorModel:
    """Tests fuer Validierung und Flags"""

    def test_not_inflationary(self, inflator_service, chain3):
        with pytest.raises(NotInflationary) as exc:
            inflator_service.make_inflator(chain3, {'0': '0', 'm': '0', '1': '1'})
        assert exc.value.witness == 'm'

    def test_not_monotone(self, inflator_service, boolean2):
        with pytest.raises(NotMonotone):
            inflator_service.make_inflator(boolean2, {'0': 'a', 'a': 'a', 'b': 'b', '1': '1'})

    def test_table_must_be_total(self, inflator_service, chain3):
        with pytest.raises(BadParameter):
            inflator_service.make_inflator(chain3, {'0': 'm', 'm': 'm'})

    def test_flags(self, iota_m, u_m):
        assert iota_m.flags() == {'stable': True, 'prenucleus': True, 'idempotent': False, 'nucleus': False}
        assert u_m.is_nucleus

    def test_totalizer_on_boolean2_is_not_stable(self, inflator_service, boolean2):
        assert not inflator_service.o_b(boolean2, 'a').is_stable

    def test_unknown_flag(self, u_m):
        with pytest.raises(BadParameter):
            u_m.has_flag('shiny')

    def test_fixed_points_and_image(self, u_m):
        assert u_m.fixed_points() == (1, 2)
        assert u_m.image() == (1, 2)

    def test_le(self, o_m, iota_m, u_m):
        assert o_m.le(iota_m)
        assert u_m.le(iota_m)
        assert not o_m.le(u_m)

    def test_table_and_to_dict(self, u_m, chain3):
        assert u_m.table() == {'0': 'm', 'm': 'm', '1': '1'}
        assert u_m.to_dict()['lattice'] == chain3.digest


# ============================================================================
# MONOID
# ============================================================================

class TestMonoid:
    """Tests fuer compose(), power(), lattice_ops(), infty()"""

    def test_compose_is_d_after_k(self, inflator_service, u_m, o_m):
        assert inflator_service.compose(u_m, o_m).values == (1, 2, 2)
        assert inflator_service.compose(o_m, u_m).is_top

    def test_compose_rejects_other_host(self, inflator_service, chain3, chain2):
        with pytest.raises(HostMismatch):
            inflator_service.compose(Inflator.identity(chain3), Inflator.identity(chain2))

    def test_power_zero_is_identity(self, inflator_service, iota_m):
        assert inflator_service.power(iota_m, 0).is_identity
        assert inflator_service.power(iota_m, 2).is_top

    def test_pointwise_meet_and_join(self, inflator_service, o_m, u_m):
        assert inflator_service.meet(o_m, u_m).is_identity
        assert inflator_service.join(o_m, u_m).values == (1, 2, 2)

    def test_join_reports_directedness(self, inflator_service, chain3, o_m, u_m):
        report = {}
        assert inflator_service.lattice_ops([o_m, u_m], 'join', report=report).values == (1, 2, 2)
        assert report == {'directed': False, 'stable_lost': False}

        report = {}
        inflator_service.lattice_ops([Inflator.identity(chain3), o_m], 'join', report=report)
        assert report['directed']

    def test_meet_leaves_report_empty(self, inflator_service, o_m, u_m):
        report = {}
        inflator_service.lattice_ops([o_m, u_m], 'meet', report=report)
        assert report == {}

    def test_empty_family(self, inflator_service):
        with pytest.raises(EmptyFamily):
            inflator_service.lattice_ops([], 'meet')

    def test_infty_counts_steps(self, inflator_service, iota_m, u_m):
        closed, steps = inflator_service.infty(iota_m)
        assert closed.is_top
        assert steps == 2
        assert inflator_service.infty(u_m) == (u_m, 1)


# ============================================================================
# BENANNTE INFLATOREN, TOTALISATOR, EQUALIZER
# ============================================================================

class TestNamedInflators:
    """Tests fuer o_b(), u_a(), iota(), totalizer(), equalizer()"""

    def test_named_on_chain3(self, inflator_service, chain3, o_m, u_m, iota_m):
        assert inflator_service.o_b(chain3, 'm') == o_m
        assert inflator_service.u_a(chain3, 'm') == u_m
        assert inflator_service.iota(chain3, 'm') == iota_m

    def test_named_needs_parameter(self, inflator_service, chain3):
        with pytest.raises(BadParameter):
            inflator_service.named(chain3, 'o_b')

    def test_totalizer_closed_form(self, inflator_service, chain3, u_m, o_m):
        assert inflator_service.totalizer(u_m) == o_m
        assert inflator_service.totalizer(Inflator.identity(chain3)).is_top
        assert inflator_service.totalizer(Inflator.top(chain3)).is_identity

    def test_equalizer_closed_form(self, inflator_service, iota_m, u_m):
        assert inflator_service.equalizer(iota_m) == u_m
        assert inflator_service.equalizer(u_m) == u_m

    @pytest.mark.parametrize('lattice_name', ['chain3', 'boolean2'])
    def test_closed_forms_match_oracle(self, inflator_service, lattice_name, request):
        lattice = request.getfixturevalue(lattice_name)
        for d in inflator_service.enumerate_inflators(lattice, 'all'):
            assert inflator_service.brute_extremum(d, 'totalizer') == inflator_service.totalizer(d)
            assert inflator_service.brute_extremum(d, 'equalizer') == inflator_service.equalizer(d)

    def test_partial_totalizer_in_nuclei(self, inflator_service, u_m, o_m):
        assert inflator_service.partial_totalizer(u_m, 'nucleus') == o_m

    def test_partial_totalizer_rejects_family(self, inflator_service, u_m):
        with pytest.raises(BadParameter):
            inflator_service.partial_totalizer(u_m, 'all')


# ============================================================================
# AUFZÄHLUNG
# ============================================================================

class TestEnumeration:
    """Tests fuer enumerate_inflators()"""

    def test_family_sizes_on_chain3(self, inflator_service, chain3):
        sizes = {family: inflator_service.enumerate_inflators(chain3, family).size
                 for family in ('all', 'stable', 'prenucleus', 'idempotent', 'nucleus')}
        assert sizes == {'all': 5, 'stable': 5, 'prenucleus': 5, 'idempotent': 4, 'nucleus': 4}

    def test_boolean2_has_nine_inflators(self, inflator_service, boolean2):
        assert inflator_service.enumerate_inflators(boolean2, 'all').size == 9

    def test_canonical_order(self, inflator_service, chain3):
        I = inflator_service.enumerate_inflators(chain3, 'all')
        assert [d.values for d in I] == [(0, 1, 2), (0, 2, 2), (1, 1, 2), (1, 2, 2), (2, 2, 2)]

    def test_nucleus_family_is_nucleus_lattice(self, nuclei_chain3):
        assert isinstance(nuclei_chain3, NucleusLattice)
        assert nuclei_chain3.frame_flag

    def test_bound(self, chain3):
        service = InflatorService(RunConfig(max_enumeration=3, second_level_bound=3, cache_dir=None))
        with pytest.raises(EnumerationBoundExceeded) as exc:
            service.enumerate_inflators(chain3, 'all')
        assert exc.value.details['bound'] == 'max_enumeration'

    def test_unknown_family(self, inflator_service, chain3):
        with pytest.raises(BadParameter):
            inflator_service.enumerate_inflators(chain3, 'weird')

    def test_estimate_size(self, inflator_service, chain3):
        assert inflator_service.estimate_size(chain3) == 6

    def test_member_not_in_family(self, nuclei_chain3, iota_m):
        with pytest.raises(MemberNotInFamily):
            nuclei_chain3.index_of(iota_m)


# ============================================================================
# TOTALISATOR-KLASSEN UND ORDNUNGSPRÄDIKATE
# ============================================================================

class TestFamilyStructure:
    """Tests fuer tot_class(), tot_poset(), pseudocomplement(), order_predicates(), prime_gaps(), is_essential()"""

    def test_tot_class(self, inflator_service, iota_m, u_m):
        assert inflator_service.tot_class(iota_m) == (u_m, iota_m)
        assert inflator_service.same_tot_class(u_m, iota_m)

    def test_tot_poset(self, inflator_service, chain3):
        tot = inflator_service.tot_poset(chain3)
        assert tot.size == 3
        assert tot.family_kind == 'totalizers'

    def test_pseudocomplement_in_nuclei(self, inflator_service, nuclei_chain3, o_m, u_m):
        assert inflator_service.pseudocomplement(nuclei_chain3, o_m) == (u_m, True)

    def test_order_predicates_of_point(self, inflator_service, nuclei_chain3, o_m):
        assert inflator_service.order_predicates(nuclei_chain3, o_m) == {
            'meet_prime': True,
            'meet_irreducible': True,
            'order_prime': True,
            'essential': None,
        }

    def test_order_predicates_of_bottom(self, inflator_service, nuclei_chain3, chain3):
        p = inflator_service.order_predicates(nuclei_chain3, Inflator.identity(chain3))
        assert not p['meet_prime']
        assert not p['meet_irreducible']

    def test_irreducible_atom_is_not_order_prime(self, inflator_service, u_family_m3, m3):
        # Familie {u_x} ist als Verband M3: u_b ∧ u_c = u_0 ≤ u_a
        u_a = inflator_service.u_a(m3, 'a')
        assert inflator_service.order_predicates(u_family_m3, u_a) == {
            'meet_prime': True,
            'meet_irreducible': True,
            'order_prime': False,
            'essential': None,
        }

    def test_prime_gaps_in_diamond_family(self, inflator_service, u_family_m3, m3):
        gaps = inflator_service.prime_gaps(u_family_m3)
        assert {d.values for d in gaps} == {inflator_service.u_a(m3, x).values for x in 'abc'}

    def test_prime_gaps_empty_for_distributive_families(self, inflator_service, nuclei_chain3, boolean2):
        assert inflator_service.prime_gaps(nuclei_chain3) == []
        assert inflator_service.prime_gaps(inflator_service.enumerate_inflators(boolean2, 'all')) == []

    def test_is_essential(self, inflator_service, nuclei_chain3, chain3, o_m):
        lo, hi = Inflator.identity(chain3), Inflator.top(chain3)
        assert not inflator_service.is_essential(nuclei_chain3, o_m, lo, hi)
        assert inflator_service.is_essential(nuclei_chain3, hi, lo, hi)
        assert inflator_service.is_essential(nuclei_chain3, lo, lo, lo)

    def test_closed_under_composition(self, inflator_service, chain3, u_m):
        I = inflator_service.enumerate_inflators(chain3, 'all')
        assert inflator_service.closed_under_composition(I, u_m)
