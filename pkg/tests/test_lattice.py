import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import SMALL, as_set, catalog, index_of, lattice, oracle
from kfsubnormal import all_subgroups, generate_group, parse_permutation
from kfsubnormal.lattice import LatticeError, NotContained


def test_s3_against_subset_enumeration():
    L = lattice("S3")
    expected = oracles.subgroups_by_subsets(oracle("S3").G)
    assert len(L) == len(expected) == 6
    assert {as_set(L, i) for i in range(len(L))} == expected


def test_s4_against_closures_of_triples():
    L = lattice("S4")
    expected = oracles.subgroups_by_generation(oracle("S4").G, 3)
    assert len(L) == len(expected) == 30
    assert {as_set(L, i) for i in range(len(L))} == expected


@pytest.mark.parametrize("name", ["D8", "Q8", "C2^3", "A4", "F7", "C3:C4", "D12"])
def test_small_groups_against_closures(name):
    L = lattice(name)
    assert {as_set(L, i) for i in range(len(L))} == set(oracle(name).subs)


@pytest.mark.parametrize("name,count", [("A5", 59), ("S5", 156), ("PSL(2,7)", 179), ("SL(2,3)", 15),
                                        ("Q8", 6), ("D8", 10), ("C2^4", 67), ("F7", 26)])
def test_known_subgroup_counts(name, count):
    assert len(lattice(name)) == count


def test_order_sorted_with_trivial_first_and_whole_last():
    L = lattice("S4")
    assert L.orders == sorted(L.orders)
    assert L.orders[L.bottom] == 1 and L.orders[L.top] == 24


def _names():
    return [e.name for e in catalog() if e.expected_order <= 200]


@pytest.mark.parametrize("name", _names())
def test_lattice_laws(name):
    L = lattice(name)
    n = len(L)
    J, M, C = L.join_table, L.meet_table, L.contain
    idx = range(n) if n <= 60 else range(0, n, max(1, n // 60))
    for a in idx:
        assert J[a, a] == a and M[a, a] == a
        for b in idx:
            assert J[a, M[a, b]] == a, "absorption"
            assert M[a, J[a, b]] == a, "absorption"
            assert J[a, b] == J[b, a] and M[a, b] == M[b, a]
            assert C[M[a, b], a] and C[a, J[a, b]]
            assert L.orders[J[a, b]] * L.orders[M[a, b]] >= L.orders[a] * L.orders[b]


@pytest.mark.parametrize("name", SMALL)
def test_join_meet_against_oracle(name):
    L, O = lattice(name), oracle(name)
    for a in range(len(L)):
        for b in range(a, len(L)):
            A, B = as_set(L, a), as_set(L, b)
            assert as_set(L, L.join(a, b)) == O.join(A, B)
            assert as_set(L, L.meet(a, b)) == A & B


@pytest.mark.parametrize("name", SMALL)
def test_normality_and_core_against_oracle(name):
    L, O = lattice(name), oracle(name)
    for k in range(len(L)):
        K = as_set(L, k)
        for h in L.subgroups_of(k):
            H = as_set(L, h)
            assert L.is_normal(h, k) == O.G.is_normal(H, K)
            core = frozenset.intersection(*[frozenset(O.G.conj(x, g) for x in H) for g in K])
            assert as_set(L, L.core(h, k)) == core


def test_core_examples():
    L = lattice("S3")
    P = lambda t: parse_permutation(t, 3)  # noqa: E731
    t = L.resolve([P("(1 2)")])
    assert L.core(t, L.whole).order == 1
    L4 = lattice("S4")
    syl2 = L4.sylow_subgroup(2)
    assert syl2.order == 8
    assert L4.core(syl2, L4.whole).order == 4  # V4
    assert L4.normal_closure(L4.resolve([parse_permutation("(1 2)", 4)]), L4.whole).order == 24


def test_maximal_subgroups():
    assert len(lattice("S3").maximal_subgroups()) == 4
    assert sorted(m.order for m in lattice("S4").maximal_subgroups()) == [6, 6, 6, 6, 8, 8, 8, 12]
    assert sorted({m.order for m in lattice("A5").maximal_subgroups()}) == [6, 10, 12]


@pytest.mark.parametrize("name", _names())
def test_sylow_counts_are_one_mod_p(name):
    L = lattice(name)
    n = L.orders[L.top]
    for p in [q for q in range(2, n + 1) if n % q == 0 and oracles.is_prime(q)]:
        syl = L.sylow_subgroups(p)
        assert len(syl) % p == 1
        assert n % len(syl) == 0
        pk = p
        while n % (pk * p) == 0:
            pk *= p
        assert all(s.order == pk for s in syl)


def test_sylow_counts_examples():
    assert len(lattice("S4").sylow_subgroups(2)) == 3
    assert len(lattice("S4").sylow_subgroups(3)) == 4
    assert len(lattice("A5").sylow_subgroups(5)) == 6
    assert len(lattice("PSL(2,7)").sylow_subgroups(7)) == 8


def test_centralizer_and_center():
    L = lattice("S4")
    V4 = next(i for i in L.normal_subgroups() if L.orders[i] == 4)
    assert L.centralizer(V4).index == V4
    assert lattice("S3").center().order == 1
    assert lattice("D8").center().order == 2
    assert lattice("Q8").center().order == 2
    assert lattice("C4xC2").center().order == 8


def test_derived_and_perfect_core():
    L = lattice("S4")
    assert L.derived_subgroup().order == 12
    assert L.perfect_core(L.top) == L.bottom
    A = lattice("C3xA5")
    assert A.orders[A.perfect_core(A.top)] == 60
    assert not A.is_solvable_subgroup(A.top)


@pytest.mark.parametrize("name", ["S4", "F7", "A4", "D12"])
def test_conjugation_closure(name):
    L = lattice(name)
    for h in range(len(L)):
        cl = L.conjugates(h)
        assert h in cl
        assert all(L.orders[c] == L.orders[h] for c in cl)
        assert len(cl) == L.orders[L.top] // L.orders[L.normalizer[h]]
        assert (len(cl) == 1) == bool(L.normal_flags[h])


def test_resolve_and_errors():
    L = lattice("S4")
    P = lambda t: parse_permutation(t, 4)  # noqa: E731
    h = L.resolve([P("(1 2)(3 4)"), P("(1 3)(2 4)")])
    assert h.order == 4 and L.normal_flags[h.index]
    k = L.resolve([P("(1 2)")])
    with pytest.raises(NotContained):
        L.is_normal(h, k)
    with pytest.raises(LatticeError):
        all_subgroups(generate_group([parse_permutation("(1 2 3 4 5)", 5), parse_permutation("(1 2)", 5)], 5), limit=50)


def test_exports():
    L = lattice("S3")
    d = json.loads(L.to_json())
    assert len(d["subgroups"]) == 6
    edges = L.hasse_edges()
    # S3: 1 < three C2 and one C3, each below S3
    assert len(edges) == 8
    assert L.to_dot().startswith("digraph")


st_idx = st.integers(min_value=0, max_value=29)


@settings(max_examples=200, deadline=None)
@given(st_idx, st_idx, st_idx)
def test_s4_modular_law_for_normal_subgroups(a, b, c):
    # Dedekind: if A <= C then A(B ∧ C) = AB ∧ C holds whenever B is normal
    L = lattice("S4")
    if not L.contains(a, c) or not L.normal_flags[b]:
        return
    assert L.join(a, L.meet(b, c)) == L.meet(L.join(a, b), c)


@settings(max_examples=200, deadline=None)
@given(st_idx, st_idx)
def test_s4_join_order_is_product_formula_when_normal(a, b):
    L = lattice("S4")
    if not L.normal_flags[b]:
        return
    assert L.join(a, b).order * L.meet(a, b).order == L.orders[a] * L.orders[b]
