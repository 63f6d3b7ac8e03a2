"""Quotient groups realized as permutation groups on right cosets."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .lattice import SubgroupLattice, SubgroupRef, _ix, _to_mask, all_subgroups
from .perm import Group, Permutation


class NotNormal(ValueError):
    pass


def coset_action(
    G: Group,
    kernel: np.ndarray,
    within: np.ndarray | None = None,
    gen_indices: list[int] | None = None,
) -> tuple[Group, np.ndarray]:
    """Act by right multiplication on the right cosets of ``kernel``.

    ``kernel`` and ``within`` are arrays of element indices of ``G``; the
    kernel must be normal in ``within`` (default: all of G).  Cosets are
    numbered in order of their minimal element index.  Returns the image
    group and the projection from element indices of ``within`` to element
    indices of the image (``-1`` outside ``within``).  ``gen_indices``
    should generate ``within``; their images generate the quotient.
    """
    T = G.table
    n = G.order
    if within is None:
        within = np.arange(n)
    within = np.sort(np.asarray(within))
    coset_of = np.full(n, -1, dtype=np.int64)
    reps = []
    for x in within:
        if coset_of[x] < 0:
            coset_of[T[kernel, x]] = len(reps)
            reps.append(int(x))
    reps = np.array(reps, dtype=np.int64)
    # image of element g: coset c -> coset of reps[c] * g
    imgs = coset_of[T[reps[:, None], within[None, :]]].T
    if (imgs < 0).any():
        raise NotNormal("kernel cosets are not permuted by right multiplication")
    perms = [Permutation(tuple(int(v) for v in row)) for row in imgs]
    if len(set(perms)) * len(kernel) != len(within):
        raise NotNormal("kernel is not normal")
    if gen_indices is None:
        gen_indices = [G.index[g] for g in G.generators] if len(within) == n else within.tolist()
    gens = [perms[int(np.searchsorted(within, g))] for g in gen_indices]
    Q = Group(len(reps), gens, perms)
    proj = np.full(n, -1, dtype=np.int64)
    proj[within] = Q.lookup(imgs)
    return Q, proj


@dataclass(eq=False)
class QuotientGroup:
    source: SubgroupLattice
    kernel: SubgroupRef
    quotient: Group
    projection: np.ndarray = field(repr=False)

    @cached_property
    def lattice(self) -> SubgroupLattice:
        return all_subgroups(self.quotient)

    @property
    def order(self) -> int:
        return self.quotient.order

    def project(self, p: Permutation) -> Permutation:
        return self.quotient.elements[self.projection[self.source.group.index[p]]]


def quotient(L: SubgroupLattice, N) -> QuotientGroup:
    """G/N acting on the right cosets of N, where G is the lattice's group."""
    n = _ix(N)
    if not L.normal_flags[n]:
        raise NotNormal(f"subgroup {n} is not normal")
    Q, proj = coset_action(L.group, L.elems[n], gen_indices=list(L.gens[L.top]))
    return QuotientGroup(L, L.ref(n), Q, proj)


def push_subgroup(Q: QuotientGroup, H) -> SubgroupRef:
    """The image HN/N as a subgroup of the quotient's lattice."""
    QL = Q.lattice
    flags = np.zeros(Q.quotient.order, dtype=bool)
    flags[Q.projection[Q.source.elems[_ix(H)]]] = True
    return QL.ref(QL.find_mask(_to_mask(flags)))


def pull_subgroup(Q: QuotientGroup, K) -> SubgroupRef:
    """The full preimage of a subgroup of the quotient."""
    L = Q.source
    inK = np.zeros(Q.quotient.order, dtype=bool)
    inK[Q.lattice.elems[_ix(K)]] = True
    return L.ref(L.find_mask(_to_mask(inK[Q.projection])))
