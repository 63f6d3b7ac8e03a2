"""Complete subgroup lattices of small permutation groups.

Subgroups are stored as Python-int bitmasks over the parent's element
indices and sorted by (order, sorted element indices).  Because a strict
subgroup always has smaller order, it always has a smaller index; the join
of ``a`` and ``b`` is therefore the lowest-indexed common upper bound and the
meet is the highest-indexed common lower bound.
"""
from __future__ import annotations

import json
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .perm import DEFAULT_ORDER_CAP, CapExceeded, Group, Permutation, factorize

DEFAULT_SUBGROUP_LIMIT = 20000


class LatticeError(RuntimeError):
    pass


class NotContained(ValueError):
    pass


class SubgroupRef(NamedTuple):
    index: int
    order: int


def _ix(x) -> int:
    return x.index if isinstance(x, SubgroupRef) else int(x)


def _to_mask(flags: np.ndarray) -> int:
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def _bits(x: int) -> Iterable[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class SubgroupLattice:
    def __init__(self, group: Group, limit: int = DEFAULT_SUBGROUP_LIMIT):
        self.group = group
        self.limit = limit
        n = group.order
        T = group.table
        e = group.identity_index
        self._n = n

        # cyclic subgroups, one generator each
        powers: list[np.ndarray] = []
        cyclic: dict[int, tuple[np.ndarray, tuple[int, ...]]] = {}
        for x in range(n):
            seq = [e]
            cur = x
            while cur != e:
                seq.append(cur)
                cur = int(T[cur, x])
            arr = np.array(seq, dtype=np.int64)
            powers.append(arr)
            flags = np.zeros(n, dtype=bool)
            flags[arr] = True
            m = _to_mask(flags)
            if m not in cyclic:
                cyclic[m] = (np.sort(arr), (x,) if x != e else ())
        self._powers = powers

        # close under joins with cyclic subgroups; every subgroup is such a join
        found = dict(cyclic)
        seeds = [(m, v[1][0]) for m, v in cyclic.items() if v[1]]
        queue = list(found)
        head = 0
        while head < len(queue):
            m = queue[head]
            head += 1
            elems, gens = found[m]
            for cm, c in seeds:
                if (m >> c) & 1:
                    continue
                new_gens = gens + (c,)
                flags = self._dimino(elems, new_gens)
                nm = _to_mask(flags)
                if nm not in found:
                    found[nm] = (np.flatnonzero(flags), new_gens)
                    queue.append(nm)
                    if len(found) > limit:
                        raise LatticeError(f"more than {limit} subgroups")

        items = sorted(found.items(), key=lambda kv: (len(kv[1][0]), tuple(kv[1][0].tolist())))
        self.masks: list[int] = [m for m, _ in items]
        self.elems: list[np.ndarray] = [v[0] for _, v in items]
        self.gens: list[tuple[int, ...]] = [v[1] for _, v in items]
        self.orders: list[int] = [len(v[0]) for _, v in items]
        self._by_mask = {m: i for i, m in enumerate(self.masks)}
        N = len(self.masks)
        self.top = N - 1
        self.bottom = 0

        cyc_of = np.empty(n, dtype=np.int64)
        for x in range(n):
            flags = np.zeros(n, dtype=bool)
            flags[powers[x]] = True
            cyc_of[x] = self._by_mask[_to_mask(flags)]
        self._cyc_of = cyc_of

        # containment as subgroup-index bitmasks
        sub = [1 << i for i in range(N)]
        masks, orders = self.masks, self.orders
        for i in range(N):
            mi, oi = masks[i], orders[i]
            acc = sub[i]
            for j in range(i):
                if oi % orders[j] == 0 and masks[j] & mi == masks[j]:
                    acc |= 1 << j
            sub[i] = acc
        sup = [0] * N
        for i in range(N):
            for j in _bits(sub[i]):
                sup[j] |= 1 << i
        self.sub = sub
        self.sup = sup

        join = np.empty((N, N), dtype=np.int32)
        meet = np.empty((N, N), dtype=np.int32)
        for a in range(N):
            sa, ua = sup[a], sub[a]
            for b in range(a, N):
                x = sa & sup[b]
                j = (x & -x).bit_length() - 1
                m = (ua & sub[b]).bit_length() - 1
                join[a, b] = join[b, a] = j
                meet[a, b] = meet[b, a] = m
        self.join_table = join
        self.meet_table = meet
        contain = np.zeros((N, N), dtype=bool)
        for i in range(N):
            for j in _bits(sub[i]):
                contain[j, i] = True
        self.contain = contain  # contain[a, b] <=> a <= b

        # normalizers via the conjugation map x -> g^-1 x g
        inv = group.inverses
        left = T[inv, :]
        self._conj_map = T[left, np.arange(n)[:, None]]  # [g, x] = x^g
        normalizer = []
        for i in range(N):
            inA = np.zeros(n, dtype=bool)
            inA[self.elems[i]] = True
            stab = inA[self._conj_map[:, self.elems[i]]].all(axis=1)
            normalizer.append(self._by_mask[_to_mask(stab)])
        self.normalizer = normalizer
        self.normal_flags = [normalizer[i] == self.top for i in range(N)]
        self._conj_cache: dict[tuple[int, int], int] = {}
        # memo tables owned by other modules (residuals, predicate links, ...)
        self.cache: dict[str, dict] = {}

    # -- construction helpers ------------------------------------------------

    def _dimino(self, elems: np.ndarray, gens: Sequence[int]) -> np.ndarray:
        """Flags of <S, gens> where ``elems`` lists the subgroup S."""
        T = self.group.table
        flags = np.zeros(self._n, dtype=bool)
        flags[elems] = True
        reps = [self.group.identity_index]
        k = 0
        while k < len(reps):
            r = reps[k]
            k += 1
            for g in gens:
                x = int(T[r, g])
                if not flags[x]:
                    flags[T[elems, x]] = True
                    reps.append(x)
        return flags

    # -- basic access ----------------------------------------------------------

    def __len__(self):
        return len(self.masks)

    def __repr__(self):
        return f"<SubgroupLattice order={self.group.order} subgroups={len(self)}>"

    def ref(self, i) -> SubgroupRef:
        i = _ix(i)
        return SubgroupRef(i, self.orders[i])

    @property
    def refs(self) -> list[SubgroupRef]:
        return [SubgroupRef(i, o) for i, o in enumerate(self.orders)]

    @property
    def trivial(self) -> SubgroupRef:
        return self.ref(0)

    @property
    def whole(self) -> SubgroupRef:
        return self.ref(self.top)

    def find_mask(self, mask: int) -> int | None:
        return self._by_mask.get(mask)

    def generated(self, element_indices: Iterable[int]) -> int:
        """Index of the subgroup generated by the given element indices."""
        idx = np.unique(np.fromiter(element_indices, dtype=np.int64))
        acc = self.bottom
        J = self.join_table
        for x in idx:
            acc = int(J[acc, self._cyc_of[x]])
        return acc

    def resolve(self, perms: Iterable[Permutation]) -> SubgroupRef:
        """The subgroup generated by ``perms``; raises if any is outside the group."""
        idx = []
        for p in perms:
            if p not in self.group.index:
                raise NotContained(f"{p} is not an element of the group")
            idx.append(self.group.index[p])
        return self.ref(self.generated(idx))

    def elements_of(self, H) -> list[Permutation]:
        E = self.group.elements
        return [E[i] for i in self.elems[_ix(H)]]

    def generators_of(self, H) -> list[Permutation]:
        E = self.group.elements
        return [E[i] for i in self.gens[_ix(H)]]

    def as_group(self, H) -> Group:
        return Group(self.group.degree, self.generators_of(H), self.elements_of(H))

    def contains(self, A, B) -> bool:
        """True iff A <= B."""
        return bool((self.sub[_ix(B)] >> _ix(A)) & 1)

    def subgroups_of(self, K) -> list[int]:
        return list(_bits(self.sub[_ix(K)]))

    def overgroups_of(self, H) -> list[int]:
        return list(_bits(self.sup[_ix(H)]))

    def power(self, x: int, k: int) -> int:
        p = self._powers[x]
        return int(p[k % len(p)])

    def _require(self, A, B):
        if not self.contains(A, B):
            raise NotContained(f"subgroup {_ix(A)} is not contained in subgroup {_ix(B)}")

    # -- lattice operations ----------------------------------------------------

    def join(self, A, B) -> SubgroupRef:
        return self.ref(int(self.join_table[_ix(A), _ix(B)]))

    def meet(self, A, B) -> SubgroupRef:
        return self.ref(int(self.meet_table[_ix(A), _ix(B)]))

    def is_normal(self, H, K) -> bool:
        """True iff H is normal in K."""
        self._require(H, K)
        return self.contains(K, self.normalizer[_ix(H)])

    def conjugate(self, H, g: int) -> int:
        """Index of H^g for the element with index ``g``."""
        h = _ix(H)
        key = (h, g)
        hit = self._conj_cache.get(key)
        if hit is None:
            flags = np.zeros(self._n, dtype=bool)
            flags[self._conj_map[g, self.elems[h]]] = True
            hit = self._by_mask[_to_mask(flags)]
            self._conj_cache[key] = hit
        return hit

    def conjugates(self, H, K=None) -> list[int]:
        """Orbit of H under conjugation by K (default: the whole group)."""
        gens = self.gens[self.top if K is None else _ix(K)]
        orbit = [_ix(H)]
        seen = set(orbit)
        k = 0
        while k < len(orbit):
            x = orbit[k]
            k += 1
            for g in gens:
                y = self.conjugate(x, g)
                if y not in seen:
                    seen.add(y)
                    orbit.append(y)
        return orbit

    def core(self, H, K) -> SubgroupRef:
        """Largest subgroup of H normal in K: the meet of all K-conjugates of H."""
        self._require(H, K)
        acc = _ix(H)
        for c in self.conjugates(H, K):
            acc = int(self.meet_table[acc, c])
        return self.ref(acc)

    def normal_closure(self, H, K) -> SubgroupRef:
        self._require(H, K)
        acc = _ix(H)
        for c in self.conjugates(H, K):
            acc = int(self.join_table[acc, c])
        return self.ref(acc)

    def normal_subgroups(self, K=None) -> list[int]:
        k = self.top if K is None else _ix(K)
        return [i for i in _bits(self.sub[k]) if self.contains(k, self.normalizer[i])]

    def maximal_subgroups(self, K=None) -> list[SubgroupRef]:
        k = self.top if K is None else _ix(K)
        sk = self.sub[k]
        out = []
        for m in _bits(sk):
            if m != k and (self.sup[m] & sk) == ((1 << m) | (1 << k)):
                out.append(self.ref(m))
        return out

    def is_maximal(self, M, K=None) -> bool:
        k = self.top if K is None else _ix(K)
        m = _ix(M)
        return m != k and self.contains(m, k) and (self.sup[m] & self.sub[k]) == ((1 << m) | (1 << k))

    def sylow_subgroups(self, p: int, K=None) -> list[SubgroupRef]:
        k = self.top if K is None else _ix(K)
        size = p ** factorize(self.orders[k]).get(p, 0)
        return [self.ref(i) for i in _bits(self.sub[k]) if self.orders[i] == size]

    def sylow_subgroup(self, p: int, K=None) -> SubgroupRef:
        return self.sylow_subgroups(p, K)[0]

    def centralizer(self, X, K=None) -> SubgroupRef:
        """Elements of K (default: the whole group) commuting with every element of X."""
        T = self.group.table
        xs = np.array(self.gens[_ix(X)], dtype=np.int64)
        ok = np.ones(self._n, dtype=bool)
        if len(xs):
            ok = (T[:, xs] == T[xs, :].T).all(axis=1)
        if K is not None:
            within = np.zeros(self._n, dtype=bool)
            within[self.elems[_ix(K)]] = True
            ok &= within
        return self.ref(self._by_mask[_to_mask(ok)])

    def center(self, K=None) -> SubgroupRef:
        k = self.top if K is None else _ix(K)
        return self.centralizer(k, k)

    def commutator(self, A, B) -> SubgroupRef:
        """The subgroup [A, B] generated by all a^-1 b^-1 a b."""
        T = self.group.table
        inv = self.group.inverses
        a = self.elems[_ix(A)]
        b = self.elems[_ix(B)]
        ab_inv = T[inv[a][:, None], inv[b][None, :]]
        comm = T[T[ab_inv, a[:, None]], b[None, :]]
        return self.ref(self.generated(comm.ravel()))

    def derived_subgroup(self, K=None) -> SubgroupRef:
        k = self.top if K is None else _ix(K)
        return self.commutator(k, k)

    def perfect_core(self, K) -> int:
        """Last term of the derived series of K."""
        k = _ix(K)
        memo = self.cache.setdefault("perfect_core", {})
        if k not in memo:
            chain = [k]
            while True:
                d = self.derived_subgroup(chain[-1]).index
                if d == chain[-1] or d in memo:
                    end = memo.get(d, d)
                    break
                chain.append(d)
            for c in chain:
                memo[c] = end
        return memo[k]

    def lower_central_limit(self, K) -> int:
        """Terminal term of the lower central series of K."""
        k = _ix(K)
        memo = self.cache.setdefault("lower_central", {})
        if k not in memo:
            cur = k
            while True:
                nxt = self.commutator(cur, k).index
                if nxt == cur:
                    break
                cur = nxt
            memo[k] = cur
        return memo[k]

    def is_solvable_subgroup(self, K) -> bool:
        return self.perfect_core(K) == self.bottom

    # -- export ----------------------------------------------------------------

    def hasse_edges(self) -> list[tuple[int, int]]:
        edges = []
        for k in range(len(self)):
            for m in self.maximal_subgroups(k):
                edges.append((m.index, k))
        return edges

    def to_dict(self) -> dict:
        return {
            "group_order": self.group.order,
            "subgroups": [
                {
                    "index": i,
                    "order": self.orders[i],
                    "normal": self.normal_flags[i],
                    "generators": [p.cycle_string() for p in self.generators_of(i)],
                }
                for i in range(len(self))
            ],
            "hasse_edges": [list(e) for e in self.hasse_edges()],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def to_dot(self) -> str:
        lines = ["digraph subgroups {", "  rankdir=BT;"]
        for i in range(len(self)):
            shape = "box" if self.normal_flags[i] else "ellipse"
            lines.append(f'  s{i} [label="{i}: |{self.orders[i]}|", shape={shape}];')
        for a, b in self.hasse_edges():
            lines.append(f"  s{a} -> s{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def all_subgroups(G: Group, limit: int = DEFAULT_SUBGROUP_LIMIT, cap: int = DEFAULT_ORDER_CAP) -> SubgroupLattice:
    if G.order > cap:
        raise CapExceeded(f"group order {G.order} exceeds cap {cap}")
    return SubgroupLattice(G, limit=limit)
