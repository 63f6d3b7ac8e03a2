"""Formations of finite groups: membership, residuals, radicals.

Two routes are provided and tested against each other:

* group-level predicates (``is_solvable``, ``is_supersolvable``, ...) work on
  a standalone :class:`Group` using element arithmetic and literal quotient
  groups;
* section predicates (``section_in``) decide whether K/N lies in a
  formation for subgroups N <= K of one lattice, using the correspondence
  between subgroups of K/N and subgroups of K containing N.  These drive the
  residual computations inside the embedding predicates.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .lattice import SubgroupLattice, SubgroupRef, _bits, _ix
from .perm import Group, Permutation, compose, exponent, factorize, generate_group, inverse, is_prime, is_squarefree, radical
from .quotients import coset_action


class FormationError(RuntimeError):
    """The intersection of qualifying normal subgroups does not itself qualify."""


class Formation(str, enum.Enum):
    N = "N"
    U = "U"
    S = "S"
    U1 = "U1"

    @property
    def subgroup_closed(self) -> bool:
        return True

    @property
    def solvable_formation(self) -> bool:
        return True

    @property
    def verified(self) -> bool:
        return True

    @classmethod
    def parse(cls, tag: str) -> "Formation | CustomFormation":
        if isinstance(tag, (Formation, CustomFormation)):
            return tag
        if tag in _CUSTOM:
            return _CUSTOM[tag]
        try:
            return cls(tag)
        except ValueError:
            raise ValueError(f"unknown formation {tag!r}; expected one of N, U, S, U1") from None


BUILTIN = (Formation.N, Formation.U, Formation.S, Formation.U1)


@dataclass(frozen=True)
class CustomFormation:
    """User-registered class of groups.

    Nothing checks that ``member`` really defines a formation; reports mark
    such classes as unverified.  Residual computations still post-check that
    the quotient by the intersection qualifies.
    """

    value: str
    member: Callable[[Group], bool]
    subgroup_closed: bool = False
    solvable_formation: bool = False
    verified: bool = False


_CUSTOM: dict[str, CustomFormation] = {}


def register_formation(tag: str, member: Callable[[Group], bool], *, subgroup_closed=False, solvable=False) -> CustomFormation:
    if tag in {f.value for f in BUILTIN}:
        raise ValueError(f"{tag!r} is a built-in formation")
    f = CustomFormation(tag, member, subgroup_closed, solvable)
    _CUSTOM[tag] = f
    return f


def unregister_formation(tag: str) -> None:
    _CUSTOM.pop(tag, None)


# -- group-level predicates ----------------------------------------------------


def _normal_closure_gens(G: Group, seeds: list[Permutation]) -> Group:
    H = generate_group(seeds, G.degree)
    while True:
        extra = []
        for s in H.generators:
            for g in G.generators:
                c = compose(compose(inverse(g), s), g)
                if c not in H and c not in extra:
                    extra.append(c)
        if not extra:
            return H
        H = generate_group(list(H.generators) + extra, G.degree)


def derived_subgroup(G: Group) -> Group:
    comms = []
    for a in G.generators:
        for b in G.generators:
            c = compose(compose(inverse(a), inverse(b)), compose(a, b))
            if not c.is_identity():
                comms.append(c)
    return _normal_closure_gens(G, comms)


def is_solvable(G: Group) -> bool:
    while G.order > 1:
        D = derived_subgroup(G)
        if D.order == G.order:
            return False
        G = D
    return True


def is_nilpotent(G: Group) -> bool:
    """Every Sylow subgroup is normal, i.e. each is the set of all p-elements."""
    orders = G.element_orders
    for p, e in factorize(G.order).items():
        p_elements = sum(1 for k in orders if _is_power_of(int(k), p))
        if p_elements != p**e:
            return False
    return True


def _is_power_of(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1


def _normal_prime_order_subgroup(G: Group) -> np.ndarray | None:
    T = G.table
    inv = G.inverses
    gens = [G.index[g] for g in G.generators]
    for x, k in enumerate(G.element_orders):
        if not is_prime(int(k)):
            continue
        cyc = [G.identity_index]
        cur = x
        while cur != G.identity_index:
            cyc.append(cur)
            cur = int(T[cur, x])
        members = set(cyc)
        if all(int(T[T[inv[g], x], g]) in members for g in gens):
            return np.array(sorted(cyc))
    return None


def is_supersolvable(G: Group) -> bool:
    """Recursion over quotients by normal subgroups of prime order."""
    while G.order > 1:
        N = _normal_prime_order_subgroup(G)
        if N is None:
            return False
        G, _ = coset_action(G, N)
    return True


def is_member(G: Group, F) -> bool:
    F = Formation.parse(F)
    if isinstance(F, CustomFormation):
        return bool(F.member(G))
    if F is Formation.N:
        return is_nilpotent(G)
    if F is Formation.S:
        return is_solvable(G)
    if F is Formation.U:
        return is_supersolvable(G)
    return is_supersolvable(G) and is_squarefree(exponent(G))


# -- section predicates inside one lattice -------------------------------------


def _section_supersolvable(L: SubgroupLattice, k: int, n: int) -> bool:
    memo = L.cache.setdefault("supersolvable_sections", {})
    key = (k, n)
    if key in memo:
        return memo[key]
    if k == n:
        memo[key] = True
        return True
    on = L.orders[n]
    result = False
    # normal subgroups of K strictly above N with prime index over N
    for m in _bits(L.sup[n] & L.sub[k]):
        if m == n:
            continue
        if is_prime(L.orders[m] // on) and L.contains(k, L.normalizer[m]):
            result = _section_supersolvable(L, k, m)
            break  # quotient-closure: any such M decides the question
    memo[key] = result
    return result


def _section_squarefree_exponent(L: SubgroupLattice, k: int, n: int) -> bool:
    m = radical(L.orders[k] // L.orders[n])
    inN = L.masks[n]
    return all((inN >> L.power(int(g), m)) & 1 for g in L.elems[k])


def section_in(L: SubgroupLattice, K, N, F) -> bool:
    """Whether K/N belongs to F, for N normal in K."""
    k, n = _ix(K), _ix(N)
    F = Formation.parse(F)
    if isinstance(F, CustomFormation):
        Q, _ = coset_action(L.group, L.elems[n], within=L.elems[k], gen_indices=list(L.gens[k]))
        return bool(F.member(Q))
    if F is Formation.S:
        return L.contains(L.perfect_core(k), n)
    if F is Formation.N:
        return L.contains(L.lower_central_limit(k), n)
    if not _section_supersolvable(L, k, n):
        return False
    return F is Formation.U or _section_squarefree_exponent(L, k, n)


def section_group(L: SubgroupLattice, K, N) -> Group:
    """K/N as a standalone permutation group on cosets."""
    k, n = _ix(K), _ix(N)
    Q, _ = coset_action(L.group, L.elems[n], within=L.elems[k], gen_indices=list(L.gens[k]))
    return Q


def residual(L: SubgroupLattice, F, K=None) -> SubgroupRef:
    """The F-residual of K (default: the whole group).

    Intersection of all normal subgroups of K whose quotient lies in F,
    post-checked to qualify itself.
    """
    F = Formation.parse(F)
    k = L.top if K is None else _ix(K)
    memo = L.cache.setdefault("residuals", {})
    key = (F.value, k)
    if key not in memo:
        acc = k
        for n in L.normal_subgroups(k):
            if section_in(L, k, n, F):
                acc = int(L.meet_table[acc, n])
        if not section_in(L, k, acc, F):
            raise FormationError(f"{F.value}: quotient by the intersection of qualifying normal subgroups is not in the class")
        memo[key] = acc
    return L.ref(memo[key])


def solvable_radical(L: SubgroupLattice, K=None) -> SubgroupRef:
    k = L.top if K is None else _ix(K)
    acc = L.bottom
    for n in L.normal_subgroups(k):
        if L.is_solvable_subgroup(n):
            acc = int(L.join_table[acc, n])
    if not L.is_solvable_subgroup(acc):
        raise FormationError("join of normal solvable subgroups is not solvable")
    return L.ref(acc)


def fitting_subgroup(L: SubgroupLattice, K=None) -> SubgroupRef:
    k = L.top if K is None else _ix(K)
    acc = L.bottom
    for n in L.normal_subgroups(k):
        if L.lower_central_limit(n) == L.bottom:
            acc = int(L.join_table[acc, n])
    if L.lower_central_limit(acc) != L.bottom:
        raise FormationError("join of normal nilpotent subgroups is not nilpotent")
    return L.ref(acc)


def is_simple(G: Group) -> bool:
    """Nontrivial with no normal subgroups besides 1 and G."""
    from .lattice import all_subgroups

    if G.order == 1:
        return False
    if is_prime(G.order):
        return True
    L = all_subgroups(G)
    return len(L.normal_subgroups()) == 2


def section_simple(L: SubgroupLattice, K, N) -> bool:
    """Whether K/N is simple, for N normal in K."""
    k, n = _ix(K), _ix(N)
    if k == n:
        return False
    return not any(m not in (k, n) and L.contains(k, L.normalizer[m]) for m in _bits(L.sup[n] & L.sub[k]))
