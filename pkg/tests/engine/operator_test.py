from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import assume, given, settings, strategies as st

from lrpoles._combinatorics import (CyclicType, PoleDecomposition, Tableau, tableau_of_cyclic,
                                    tableau_union)
from lrpoles._engine import (EmbeddingInstance, ModuleSpace, count_endo_orbits, direct_sum,
                             endo_orbit, endo_submodule, height_sequence_of, partition_of_operator,
                             realize_decomposition, realize_pole, tableau_of_embedding)
from lrpoles._engine.field import _get_prime, key, rank


# ---------------------------------------------------------------------------
# The ambient module
# ---------------------------------------------------------------------------

def test_basis_layout():
    m = ModuleSpace(5, (2, 1))
    assert m.dim == 3
    assert m.index(1, 0) == 2
    assert m.beta == (2, 1)
    with pytest.raises(ValueError, match="not a basis vector"):
        m.index(0, 2)


def test_blocks_must_be_positive():
    with pytest.raises(ValueError, match="positive"):
        ModuleSpace(3, (2, 0))


def test_operator_shifts_within_blocks():
    m = ModuleSpace(3, (3, 1))
    v = m.vector({(0, 0): 1, (1, 0): 2})
    assert m.apply(v).tolist() == [0, 1, 0, 0]
    assert m.apply(v, 3).tolist() == [0, 0, 0, 0]
    assert (m.power(1) @ v).tolist() == m.apply(v).tolist()


def test_vector_drops_powers_past_the_block():
    m = ModuleSpace(5, (2,))
    assert m.vector({(0, 1): 3, (0, 2): 1}).tolist() == [0, 3]
    assert m.vector({(0, 0): -1}).tolist() == [4, 0]


def test_ambient_type():
    m = ModuleSpace(2, (1, 3, 2))
    assert partition_of_operator(m) == (3, 2, 1)
    assert rank(m.kernel(1)) == 3


def test_quotient_must_be_invariant():
    m = ModuleSpace(3, (2,))
    with pytest.raises(ValueError, match="not T-invariant"):
        partition_of_operator(m, m.span([m.vector({(0, 0): 1})]))


def test_kernels():
    m = ModuleSpace(3, (3, 1))
    k = m.kernel(2)
    assert rank(k) == 3
    assert not m.apply(k, 2).any()
    assert m.apply(k, 1).any()
    assert m.kernel(2) is m.kernel(2)


# ---------------------------------------------------------------------------
# Embeddings and their tableaux
# ---------------------------------------------------------------------------

def test_zero_submodule():
    e = EmbeddingInstance(ModuleSpace(3, (2, 1)))
    assert tableau_of_embedding(e) == Tableau.empty((2, 1))


def test_generators_need_full_coordinates():
    with pytest.raises(ValueError, match="3 coordinates"):
        EmbeddingInstance(ModuleSpace(3, (2, 1)), ((1, 0),))


def test_generators_are_reduced_mod_p():
    e = EmbeddingInstance(ModuleSpace(3, (2, 1)), ((4, -1, 3),))
    assert e.generators == ((1, 2, 0),)


def test_explicit_embedding():
    e = EmbeddingInstance(ModuleSpace(3, (2, 1)), ((0, 1, 1),))
    assert tableau_of_embedding(e).chain == ((2,), (2, 1))
    assert height_sequence_of(e.ambient, e.vectors()[0]) == (0,)


@pytest.mark.parametrize("pole", [(1, 3, 4), (0, 1, 3), (2,), (0, 2, 3), (0, 1, 2, 3)])
def test_pole_realizations(pole):
    c = CyclicType(pole)
    e = realize_pole(c, 3)
    assert height_sequence_of(e.ambient, e.vectors()[0]) == pole
    assert tableau_of_embedding(e) == tableau_of_cyclic(c)


def test_extended_pole_realization():
    c = CyclicType((0, 1, 3), padding=(1,), nongap=0)
    e = realize_pole(c, 5)
    assert e.ambient.blocks == (4, 2, 1)
    assert tableau_of_embedding(e) == tableau_of_cyclic(c)


def test_decomposition_realization(worked):
    d = PoleDecomposition(((0, 1), (0, 2, 3), (2,)))
    e = realize_decomposition(d, 5)
    assert tableau_of_embedding(e) == worked


def test_direct_sum_checks_primes():
    a = realize_pole(CyclicType((0,)), 2)
    b = realize_pole(CyclicType((0,)), 3)
    with pytest.raises(ValueError, match="prime mismatch"):
        direct_sum(a, b)
    with pytest.raises(ValueError, match="needs a prime"):
        direct_sum()
    assert direct_sum(p=7).ambient.dim == 0


def test_direct_sum_pads_generators():
    a = realize_pole(CyclicType((1,)), 2)
    s = direct_sum(a, a)
    assert s.ambient.blocks == (2, 2)
    assert s.generators == ((0, 1, 0, 0), (0, 0, 0, 1))


poles = st.sets(st.integers(0, 4), min_size=1, max_size=3).map(lambda s: tuple(sorted(s)))


@settings(max_examples=30, deadline=None)
@given(poles, poles, st.sampled_from([2, 3, 5]))
def test_direct_sum_adds_tableaux(h, k, p):
    a, b = CyclicType(h), CyclicType(k)
    assume(a.ambient.weight + b.ambient.weight <= 10)
    s = direct_sum(realize_pole(a, p), realize_pole(b, p))
    assert tableau_of_embedding(s) == tableau_union(tableau_of_cyclic(a), tableau_of_cyclic(b))


# ---------------------------------------------------------------------------
# End(B)-submodules
# ---------------------------------------------------------------------------

def test_endo_submodule_of_a_pole():
    e = realize_pole(CyclicType((1, 3, 4)), 5)
    v = e.vectors()[0]
    sub = endo_submodule(e.ambient, v)
    assert sub.shape[0] == 4
    assert key(sub) == key(endo_orbit(e.ambient, v))


def test_endo_submodule_is_invariant():
    m = ModuleSpace(3, (3, 1))
    v = m.vector({(0, 1): 1, (1, 0): 1})
    sub = endo_submodule(m, v)
    assert rank(m.span([sub, m.apply(sub)])) == rank(sub)


@pytest.mark.parametrize("beta,p", [((2, 1), 2), ((2, 1), 3), ((3, 1), 2), ((2, 2), 2)])
def test_endo_orbit_count_is_field_free(beta, p):
    from lrpoles._combinatorics import count_endo_submodules
    assert count_endo_orbits(beta, p) == count_endo_submodules(beta)


# ---------------------------------------------------------------------------
# Threads
# ---------------------------------------------------------------------------

def test_first_use_of_fields_from_many_threads():
    poles = [(1, 3, 4), (0, 2, 3), (0, 1, 2, 3), (2,)]
    cases = [(h, p) for p in (11, 13, 17, 19) for h in poles] * 2

    def tableau(case):
        h, p = case
        return tableau_of_embedding(realize_pole(CyclicType(h), p))

    with ThreadPoolExecutor(8) as pool:
        got = list(pool.map(tableau, cases))
    assert got == [tableau_of_cyclic(CyclicType(h)) for h, _ in cases]


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------

def test_prime_resolution(monkeypatch):
    import lrpoles
    monkeypatch.delenv("LRPOLES_PRIME", raising=False)
    assert _get_prime() == 5
    monkeypatch.setenv("LRPOLES_PRIME", "3")
    assert _get_prime() == 3
    monkeypatch.setattr(lrpoles, "prime", 7)
    assert _get_prime() == 7
    assert _get_prime(2) == 2
