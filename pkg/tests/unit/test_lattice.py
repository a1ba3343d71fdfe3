# tests/unit/test_lattice.py
"""
Unit Tests fuer FiniteLattice (models/lattice.py) und LatticeService (services/lattice_service.py)

Testet:
- from_order() - bottom/top, Meet-/Join-Tabellen, NoBounds/NotALattice
- Abgeleitete Größen (covers, heights, atoms, Komplemente, Digest, to_dict)
- build_lattice() - Validierung mit Zeugen
- Standardfamilien (chain, boolean, m3, n5, product, interval, glued_sum, random)
- check_modular() / check_distributive() / check_tables()
"""
from __future__ import annotations

import numpy as np
import pytest

from config import RunConfig
from models.errors import BadParameter, NoBounds, NotALattice, NotAPoset, TooLarge
from models.lattice import FiniteLattice
from services import LatticeService

# Mark this whole module as unit tests
pytestmark = pytest.mark.unit


# ============================================================================
# MODEL
# ============================================================================

class TestFiniteLattice:
    """Tests fuer das Domain Model"""

    def test_chain_tables(self, chain3):
        assert chain3.labels == ('0', 'm', '1')
        assert chain3.bottom == 0 and chain3.top == 2
        assert chain3.meet[1, 2] == 1
        assert chain3.join[0, 1] == 1

    def test_tables_are_read_only(self, chain3):
        with pytest.raises(ValueError):
            chain3.meet[0, 0] = 2

    def test_from_order_without_bottom_raises(self):
        leq = np.array([[True, False], [False, True]])
        with pytest.raises(NoBounds):
            FiniteLattice.from_order(['a', 'b'], leq)

    def test_index_of_unknown_label_raises(self, chain3):
        with pytest.raises(BadParameter):
            chain3.index_of('q')

    def test_empty_meet_and_join(self, boolean2):
        assert boolean2.meet_all([]) == boolean2.top
        assert boolean2.join_all([]) == boolean2.bottom

    def test_n5_structure(self, n5):
        assert n5.heights == (0, 1, 1, 2, 3)
        assert n5.atoms == (1, 2)
        assert n5.coatoms == (2, 3)

    def test_complemented_and_boolean(self, chain3, m3, boolean2):
        assert not chain3.is_complemented
        assert m3.is_complemented and not m3.is_boolean
        assert boolean2.is_boolean

    def test_to_dict(self, chain3):
        assert chain3.to_dict() == {
            'name': 'chain3',
            'elements': ['0', 'm', '1'],
            'covers': [['0', 'm'], ['m', '1']],
        }

    def test_digest_ignores_labels(self, lattice_service, chain3):
        relabeled = lattice_service.build_lattice(['z', 'x', 'y'], [('x', 'y'), ('z', 'x')])
        assert relabeled.digest == chain3.digest

    def test_digest_separates_shapes(self, chain3, boolean2, m3, n5):
        digests = {chain3.digest, boolean2.digest, m3.digest, n5.digest}
        assert len(digests) == 4


# ============================================================================
# BUILD
# ============================================================================

class TestBuildLattice:
    """Tests fuer build_lattice()"""

    def test_duplicate_label(self, lattice_service):
        with pytest.raises(BadParameter) as exc:
            lattice_service.build_lattice(['0', '0'], [])
        assert exc.value.witness == '0'

    def test_unknown_label_in_covers(self, lattice_service):
        with pytest.raises(BadParameter):
            lattice_service.build_lattice(['0', '1'], [('0', '2')])

    def test_cycle(self, lattice_service):
        with pytest.raises(NotAPoset):
            lattice_service.build_lattice(['0', 'a', 'b', '1'],
                                          [('0', 'a'), ('a', 'b'), ('b', 'a'), ('b', '1')])

    def test_missing_bounds(self, lattice_service):
        with pytest.raises(NoBounds):
            lattice_service.build_lattice(['a', 'b'], [])

    def test_not_a_lattice(self, lattice_service):
        labels = ['0', 'a', 'b', 'c', 'd', '1']
        covers = [('0', 'a'), ('0', 'b'), ('a', 'c'), ('a', 'd'), ('b', 'c'), ('b', 'd'),
                  ('c', '1'), ('d', '1')]
        with pytest.raises(NotALattice):
            lattice_service.build_lattice(labels, covers)

    def test_too_large(self):
        service = LatticeService(RunConfig(max_lattice_size=4, cache_dir=None))
        with pytest.raises(TooLarge) as exc:
            service.chain(5)
        assert exc.value.details['bound'] == 'max_lattice_size'


# ============================================================================
# FAMILIEN
# ============================================================================

class TestFamilies:
    """Tests fuer generate() und die Standardfamilien"""

    def test_chain_labels(self, lattice_service):
        assert lattice_service.chain(4).labels == ('0', 'm1', 'm2', '1')
        assert lattice_service.chain(1).n == 1

    def test_generate_accepts_string_params(self, lattice_service, chain3):
        assert lattice_service.generate('chain', '3').same_structure(chain3)

    @pytest.mark.parametrize('params', [('0',), ('drei',)])
    def test_generate_bad_params(self, lattice_service, params):
        with pytest.raises(BadParameter):
            lattice_service.generate('chain', *params)

    def test_unknown_family(self, lattice_service):
        with pytest.raises(BadParameter, match="Unbekannte Familie"):
            lattice_service.generate('torus')

    def test_boolean_labels(self, lattice_service):
        assert lattice_service.boolean(3).labels == ('0', 'a', 'b', 'c', 'ab', 'ac', 'bc', '1')

    def test_product(self, chain2_x_chain3):
        assert chain2_x_chain3.n == 6
        assert chain2_x_chain3.name == 'chain2xchain3'
        assert chain2_x_chain3.is_distributive

    def test_interval_sublattice(self, lattice_service, boolean2):
        upper = lattice_service.interval_sublattice(boolean2, 'a', '1')
        assert upper.labels == ('a', '1')

    def test_interval_sublattice_requires_order(self, lattice_service, boolean2):
        with pytest.raises(BadParameter):
            lattice_service.interval_sublattice(boolean2, 'a', 'b')

    def test_glued_sum_renames_clashes(self, lattice_service, chain2):
        glued = lattice_service.glued_sum(chain2, chain2)
        assert glued.labels == ('0', '1', "1'")
        assert glued.same_structure(lattice_service.chain(3))

    @pytest.mark.parametrize('seed', range(10))
    def test_random_modular(self, lattice_service, seed):
        lattice = lattice_service.random_modular(seed, 8)
        assert lattice.n <= 8
        assert lattice.is_modular
        assert lattice_service.random_modular(seed, 8).same_structure(lattice)


# ============================================================================
# GESETZE
# ============================================================================

class TestLatticeLaws:
    """Tests fuer check_modular(), check_distributive(), check_tables()"""

    def test_n5_not_modular_with_witness(self, lattice_service, n5):
        assert lattice_service.check_modular(n5) == {
            'holds': False,
            'witness': {'a': 'x', 'b': 'z', 'c': 'y'},
        }

    def test_m3_modular_not_distributive(self, lattice_service, m3):
        assert lattice_service.check_modular(m3)['holds']
        verdict = lattice_service.check_distributive(m3)
        assert not verdict['holds']
        assert set(verdict['witness']) == {'a', 'b', 'c'}

    def test_chain_distributive(self, lattice_service, chain3):
        assert lattice_service.check_distributive(chain3) == {'holds': True, 'witness': None}

    def test_tables_consistent(self, lattice_service, n5, m3):
        assert lattice_service.check_tables(n5)
        assert lattice_service.check_tables(m3)

    def test_directed_suprema(self, lattice_service, boolean2):
        assert lattice_service.check_directed_suprema(boolean2) is None
