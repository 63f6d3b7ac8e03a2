import pytest

import oracles
from conftest import as_set, lattice, oracle
from kfsubnormal import compose, pull_subgroup, push_subgroup, quotient
from kfsubnormal.quotients import NotNormal, coset_action


def _normal(L, order):
    return next(i for i in L.normal_subgroups() if L.orders[i] == order)


def test_s4_mod_v4_is_s3():
    L = lattice("S4")
    Q = quotient(L, _normal(L, 4))
    assert Q.order == 6
    assert not Q.quotient.is_abelian()
    A4 = _normal(L, 12)
    assert push_subgroup(Q, A4).order == 3


def test_quotient_by_non_normal_fails():
    L = lattice("S3")
    c2 = next(i for i in range(len(L)) if L.orders[i] == 2)
    with pytest.raises(NotNormal):
        quotient(L, c2)
    with pytest.raises(NotNormal):
        coset_action(L.group, L.elems[c2])


@pytest.mark.parametrize("name", ["S4", "F7", "D12", "A4xC2", "C3xA5"])
def test_homomorphism_property(name):
    L = lattice(name)
    G = L.group
    for n in L.normal_subgroups():
        Q = quotient(L, n)
        assert Q.order * L.orders[n] == G.order
        els = G.elements
        step = max(1, G.order // 25)
        for a in els[::step]:
            for b in els[::step]:
                assert Q.project(compose(a, b)) == compose(Q.project(a), Q.project(b))
        kernel = {i for i in range(G.order) if Q.projection[i] == Q.quotient.identity_index}
        assert kernel == set(L.elems[n].tolist())


@pytest.mark.parametrize("name", ["S4", "F7", "D8", "C3xA5"])
def test_correspondence(name):
    L = lattice(name)
    for n in L.normal_subgroups():
        Q = quotient(L, n)
        above = [h for h in range(len(L)) if L.contains(n, h)]
        assert len(above) == len(Q.lattice)
        images = set()
        for h in above:
            img = push_subgroup(Q, h)
            assert pull_subgroup(Q, img).index == h
            assert img.order * L.orders[n] == L.orders[h]
            assert Q.lattice.normal_flags[img.index] == L.normal_flags[h]
            images.add(img.index)
        assert len(images) == len(Q.lattice)


@pytest.mark.parametrize("name", ["S4", "F7", "D12"])
def test_quotient_isomorphism_type_matches_coset_oracle(name):
    L, O = lattice(name), oracle(name)
    for n in L.normal_subgroups():
        Q = quotient(L, n).quotient
        R = oracles.quotient(O.G, O.G.elements, as_set(L, n))
        assert Q.order == len(R.elements)
        assert sorted(Q.element_orders.tolist()) == sorted(R.order_of(x) for x in R.elements)
        assert Q.is_abelian() == all(R.mul(a, b) == R.mul(b, a) for a in R.elements for b in R.elements)
