"""Subgroup embedding predicates: subnormal, modular, submodular, K-F-subnormal.

A chain predicate is decided for every subgroup at once.  For each subgroup
H we precompute ``links[H]``, the bitmask of subgroups K > H such that the
pair (H, K) is an admissible link.  For a target T, the set of subgroups
admitting a chain up to T is then found by one descending sweep over the
subgroups of T (a strict overgroup always has a larger lattice index).

Chains are taken strictly increasing.  Repeated terms can always be dropped
because every subgroup is normal (and modular) in itself.

Modularity follows Schmidt: M is modular in K when, for all subgroups X, Y,
Z of K,

* ``<X, M> ∧ Z = <X, M ∧ Z>`` whenever X <= Z, and
* ``<M, Y> ∧ Z = <M, Y ∧ Z>`` whenever M <= Z.

The subgroup lattice of K is the interval [1, K] of the ambient lattice with
the same joins and meets, so modularity in K is checked on that interval.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .formations import Formation, residual, section_in, section_simple
from .formations import is_simple as simplicity_check  # noqa: F401  (public re-export)
from .lattice import SubgroupLattice, SubgroupRef, _bits, _ix


class StepKind(str, enum.Enum):
    NORMAL = "normal"
    RESIDUAL = "residual"
    MODULAR = "modular"


class LemmaViolation(AssertionError):
    """A computed object contradicts a structural statement that should hold."""


@dataclass
class WitnessChain:
    steps: list[SubgroupRef]
    kinds: list[StepKind] = field(default_factory=list)
    formation: str | None = None

    def __len__(self):
        return len(self.kinds)

    def validate(self, L: SubgroupLattice) -> bool:
        """Re-check every link from scratch."""
        if len(self.kinds) != len(self.steps) - 1:
            return False
        for lo, hi, kind in zip(self.steps, self.steps[1:], self.kinds):
            if lo.index == hi.index or not L.contains(lo, hi):
                return False
            if kind is StepKind.NORMAL:
                ok = L.is_normal(lo, hi)
            elif kind is StepKind.RESIDUAL:
                ok = self.formation is not None and L.contains(residual(L, self.formation, hi), lo)
            else:
                ok = is_modular(L, lo, hi)
            if not ok:
                return False
        return True

    def to_dict(self, L: SubgroupLattice) -> dict:
        return {
            "formation": self.formation,
            "steps": [
                {"order": s.order, "generators": [p.cycle_string() for p in L.generators_of(s)]}
                for s in self.steps
            ],
            "kinds": [k.value for k in self.kinds],
        }


# -- single-pair predicates ------------------------------------------------------


def is_modular(L: SubgroupLattice, H, K=None) -> bool:
    """Whether H is a modular element of the subgroup lattice of K."""
    h = _ix(H)
    k = L.top if K is None else _ix(K)
    L._require(h, k)
    S = np.fromiter(_bits(L.sub[k]), dtype=np.int64)
    return _modular_in(L, h, S)


def _modular_in(L: SubgroupLattice, h: int, S: np.ndarray) -> bool:
    J, M, C = L.join_table, L.meet_table, L.contain
    sub_c = C[np.ix_(S, S)]
    jxh = J[S, h]
    # <X, H> ∧ Z == <X, H ∧ Z> for X <= Z
    lhs = M[jxh[:, None], S[None, :]]
    rhs = J[S[:, None], M[h, S][None, :]]
    if np.any((lhs != rhs) & sub_c):
        return False
    # <H, Y> ∧ Z == <H, Y ∧ Z> for H <= Z
    Z = S[C[h, S]]
    lhs = M[jxh[:, None], Z[None, :]]
    rhs = J[M[S[:, None], Z[None, :]], h]
    return not np.any(lhs != rhs)


def is_subnormal(L: SubgroupLattice, H, K=None) -> bool:
    return subnormal_series(L, H, K) is not None


def subnormal_series(L: SubgroupLattice, H, K=None) -> WitnessChain | None:
    """Descend from K by repeated normal closures of H; a chain iff it reaches H."""
    h = _ix(H)
    k = L.top if K is None else _ix(K)
    L._require(h, k)
    series = [k]
    while series[-1] != h:
        nxt = L.normal_closure(h, series[-1]).index
        if nxt == series[-1]:
            return None
        series.append(nxt)
    steps = [L.ref(i) for i in reversed(series)]
    return WitnessChain(steps, [StepKind.NORMAL] * (len(steps) - 1))


# -- link tables and reachability ------------------------------------------------


def normal_links(L: SubgroupLattice) -> list[int]:
    memo = L.cache.setdefault("links", {})
    if "normal" not in memo:
        memo["normal"] = [(L.sup[h] & L.sub[L.normalizer[h]]) & ~(1 << h) for h in range(len(L))]
    return memo["normal"]


def residual_links(L: SubgroupLattice, F) -> list[int]:
    F = Formation.parse(F)
    memo = L.cache.setdefault("links", {})
    key = ("residual", F.value)
    if key not in memo:
        by_res = [0] * len(L)
        for k in range(len(L)):
            by_res[residual(L, F, k).index] |= 1 << k
        links = []
        for h in range(len(L)):
            acc = 0
            for r in _bits(L.sub[h]):
                acc |= by_res[r]
            links.append(acc & L.sup[h] & ~(1 << h))
        memo[key] = links
    return memo[key]


def kf_links(L: SubgroupLattice, F) -> list[int]:
    F = Formation.parse(F)
    memo = L.cache.setdefault("links", {})
    key = ("kf", F.value)
    if key not in memo:
        memo[key] = [a | b for a, b in zip(normal_links(L), residual_links(L, F))]
    return memo[key]


def modular_links(L: SubgroupLattice) -> list[int]:
    memo = L.cache.setdefault("links", {})
    if "modular" not in memo:
        links = [0] * len(L)
        for k in range(len(L)):
            S = np.fromiter(_bits(L.sub[k]), dtype=np.int64)
            for h in S[:-1]:  # S is ascending and ends with k itself
                if _modular_in(L, int(h), S):
                    links[int(h)] |= 1 << k
        memo["modular"] = links
    return memo["modular"]


def reachable(L: SubgroupLattice, links: list[int], T=None) -> int:
    """Bitmask of subgroups of T joined to T by a chain of admissible links."""
    t = L.top if T is None else _ix(T)
    R = 1 << t
    for h in sorted(_bits(L.sub[t]), reverse=True):
        if h != t and links[h] & R:
            R |= 1 << h
    return R


def _reach_memo(L: SubgroupLattice, name: str, links: list[int], t: int) -> int:
    memo = L.cache.setdefault("reach:" + name, {})
    if t not in memo:
        memo[t] = reachable(L, links, t)
    return memo[t]


def submodular_set(L: SubgroupLattice, T=None) -> int:
    t = L.top if T is None else _ix(T)
    return _reach_memo(L, "modular", modular_links(L), t)


def kf_subnormal_set(L: SubgroupLattice, F, T=None) -> int:
    F = Formation.parse(F)
    t = L.top if T is None else _ix(T)
    return _reach_memo(L, "kf:" + F.value, kf_links(L, F), t)


def subnormal_set(L: SubgroupLattice, T=None) -> int:
    t = L.top if T is None else _ix(T)
    return _reach_memo(L, "normal", normal_links(L), t)


def _shortest_chain(L: SubgroupLattice, links: list[int], R: int, h: int, t: int) -> list[int]:
    prev = {h: None}
    queue = deque([h])
    while queue:
        x = queue.popleft()
        if x == t:
            break
        for y in _bits(links[x] & R):
            if y not in prev:
                prev[y] = x
                queue.append(y)
    path = [t]
    while path[-1] != h:
        path.append(prev[path[-1]])
    return path[::-1]


def is_submodular(L: SubgroupLattice, H, K=None) -> tuple[bool, WitnessChain | None]:
    h = _ix(H)
    k = L.top if K is None else _ix(K)
    L._require(h, k)
    R = submodular_set(L, k)
    if not (R >> h) & 1:
        return False, None
    path = _shortest_chain(L, modular_links(L), R, h, k)
    steps = [L.ref(i) for i in path]
    return True, WitnessChain(steps, [StepKind.MODULAR] * (len(steps) - 1))


def is_kf_subnormal(L: SubgroupLattice, H, K=None, F=Formation.U1) -> tuple[bool, WitnessChain | None]:
    F = Formation.parse(F)
    h = _ix(H)
    k = L.top if K is None else _ix(K)
    L._require(h, k)
    R = kf_subnormal_set(L, F, k)
    if not (R >> h) & 1:
        return False, None
    path = _shortest_chain(L, kf_links(L, F), R, h, k)
    nl = normal_links(L)
    kinds = [StepKind.NORMAL if (nl[a] >> b) & 1 else StepKind.RESIDUAL for a, b in zip(path, path[1:])]
    return True, WitnessChain([L.ref(i) for i in path], kinds, F.value)


# -- maximal K-F-subnormal overgroups --------------------------------------------


class StarBranch(str, enum.Enum):
    NORMAL_SIMPLE = "normal-simple-quotient"
    MAXIMAL_IN_F = "maximal-quotient-by-core-in-F"


def star_overgroup(L: SubgroupLattice, H, K=None, F=Formation.U1) -> tuple[SubgroupRef, StarBranch]:
    """A maximal proper K-F-subnormal subgroup of K containing H, and its type.

    Among several candidates the lowest lattice index is returned.  Raises
    :class:`LemmaViolation` if the candidate is neither normal in K with simple
    quotient nor maximal in K with K/core in F, or if H is not K-F-subnormal
    in it.
    """
    F = Formation.parse(F)
    h = _ix(H)
    k = L.top if K is None else _ix(K)
    L._require(h, k)
    if h == k:
        raise ValueError("star overgroup needs a proper subgroup")
    R = kf_subnormal_set(L, F, k)
    if not (R >> h) & 1:
        raise ValueError("subgroup is not K-F-subnormal")
    cand = R & L.sup[h] & ~(1 << k)
    star = next(c for c in _bits(cand) if (L.sup[c] & cand) == (1 << c))
    if not (kf_subnormal_set(L, F, star) >> h) & 1:
        raise LemmaViolation(f"subgroup {h} is not K-F-subnormal in its star overgroup {star}")
    return L.ref(star), star_branch(L, star, k, F)


def star_branch(L: SubgroupLattice, M, K, F) -> StarBranch:
    m, k = _ix(M), _ix(K)
    if L.is_normal(m, k) and section_simple(L, k, m):
        return StarBranch.NORMAL_SIMPLE
    if L.is_maximal(m, k) and section_in(L, k, L.core(m, k), F):
        return StarBranch.MAXIMAL_IN_F
    raise LemmaViolation(f"subgroup {m} fits neither branch in {k}")


def maximal_modular_subgroups(L: SubgroupLattice, K=None) -> list[SubgroupRef]:
    k = L.top if K is None else _ix(K)
    ml = modular_links(L)
    mod = [m for m in _bits(L.sub[k]) if m != k and (ml[m] >> k) & 1]
    mod_mask = sum(1 << m for m in mod)
    return [L.ref(m) for m in mod if (L.sup[m] & mod_mask) == (1 << m)]
