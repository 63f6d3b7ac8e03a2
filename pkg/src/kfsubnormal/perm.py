"""Permutations and permutation groups materialized by closure.

Composition convention: ``compose(p, q)`` (also ``p * q``) applies ``p``
first and then ``q``, so ``(p * q)(i) == q(p(i))``.  Every module in the
package relies on this order.
"""
from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Sequence

import numpy as np

DEFAULT_ORDER_CAP = 5000


class PermutationError(ValueError):
    pass


class CapExceeded(RuntimeError):
    """Raised when a closure grows beyond the configured order cap."""


@dataclass(frozen=True, order=True, slots=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise PermutationError(f"not a bijection on 0..{len(self.images) - 1}: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, 0-based, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        """Disjoint-cycle notation over 1-based points; ``""`` for the identity."""
        return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in self.cycles())

    def __repr__(self):
        return f"Permutation({self.cycle_string() or '()'}, degree={self.degree})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(cycle_text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation with 1-based points, e.g. ``"(1 2 3)(4 5)"``.

    Points inside a cycle may be separated by whitespace or commas.  Points
    never mentioned are fixed; the empty string is the identity.
    """
    if degree < 1:
        raise PermutationError("degree must be positive")
    text = cycle_text.strip()
    leftover = _CYCLE_RE.sub("", text)
    if leftover.strip():
        raise PermutationError(f"malformed cycle notation: {cycle_text!r}")
    images = list(range(degree))
    used: set[int] = set()
    for body in _CYCLE_RE.findall(text):
        tokens = body.replace(",", " ").split()
        if not tokens:
            continue
        try:
            points = [int(t) for t in tokens]
        except ValueError:
            raise PermutationError(f"non-integer point in {cycle_text!r}") from None
        for p in points:
            if not 1 <= p <= degree:
                raise PermutationError(f"point {p} out of range 1..{degree}")
            if p in used:
                raise PermutationError(f"point {p} repeated in {cycle_text!r}")
            used.add(p)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a - 1] = b - 1
    return Permutation(tuple(images))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p``, then ``q``."""
    if p.degree != q.degree:
        raise PermutationError(f"degree mismatch: {p.degree} vs {q.degree}")
    qi = q.images
    return Permutation(tuple(qi[x] for x in p.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, x in enumerate(p.images):
        inv[x] = i
    return Permutation(tuple(inv))


def element_order(p: Permutation) -> int:
    return reduce(math.lcm, (len(c) for c in p.cycles()), 1)


class Group:
    """A finite permutation group with its full element list.

    ``elements`` is sorted lexicographically by image sequence, so element
    indices are canonical.  Instances are treated as immutable; the
    multiplication table and friends are computed lazily and cached.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation], elements: Iterable[Permutation]):
        self.degree = degree
        self.elements: tuple[Permutation, ...] = tuple(sorted(set(elements)))
        self.index: dict[Permutation, int] = {p: i for i, p in enumerate(self.elements)}
        gens = []
        for g in sorted(set(generators)):
            if not g.is_identity():
                gens.append(g)
        self.generators: tuple[Permutation, ...] = tuple(gens)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self.index

    def __repr__(self):
        return f"<Group degree={self.degree} order={self.order}>"

    @cached_property
    def identity_index(self) -> int:
        return self.index[Permutation.identity(self.degree)]

    @cached_property
    def image_array(self) -> np.ndarray:
        return np.array([p.images for p in self.elements], dtype=np.int64).reshape(self.order, self.degree)

    @cached_property
    def _key_weights(self) -> np.ndarray:
        return self.degree ** np.arange(self.degree - 1, -1, -1, dtype=np.int64)

    @cached_property
    def _sorted_keys(self) -> np.ndarray:
        # mixed-radix keys are monotone in lexicographic order
        return self.image_array @ self._key_weights

    def lookup(self, rows: np.ndarray) -> np.ndarray:
        """Element indices for an array of image rows (last axis = degree)."""
        rows = np.asarray(rows)
        shape = rows.shape[:-1]
        flat = rows.reshape(-1, self.degree)
        if self.degree <= 15:
            keys = flat @ self._key_weights
            sorted_keys = self._sorted_keys
            pos = np.searchsorted(sorted_keys, keys)
            pos = np.minimum(pos, self.order - 1)
            if not np.array_equal(sorted_keys[pos], keys):
                raise KeyError("image row is not an element of the group")
            return pos.reshape(shape)
        idx = self.index
        out = np.fromiter((idx[Permutation(tuple(int(x) for x in r))] for r in flat), dtype=np.int64, count=len(flat))
        return out.reshape(shape)

    @cached_property
    def table(self) -> np.ndarray:
        """``table[a, b]`` is the index of ``elements[a] * elements[b]``."""
        E = self.image_array
        n = self.order
        out = np.empty((n, n), dtype=np.int32)
        for a in range(n):
            # row b of E[:, E[a]] is b(a(i)), i.e. a then b
            out[a] = self.lookup(E[:, E[a]])
        return out

    @cached_property
    def inverses(self) -> np.ndarray:
        t = self.table
        return np.argmax(t == self.identity_index, axis=1).astype(np.int32)

    @cached_property
    def element_orders(self) -> np.ndarray:
        return np.array([element_order(p) for p in self.elements], dtype=np.int64)

    def is_abelian(self) -> bool:
        return all(a * b == b * a for a in self.generators for b in self.generators)


def _closure(gens: Sequence[Permutation], degree: int, cap: int) -> set[Permutation]:
    ident = Permutation.identity(degree)
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise CapExceeded(f"group order exceeds cap {cap}")
                queue.append(y)
    return seen


def generate_group(gens: Iterable[Permutation], degree: int, cap: int = DEFAULT_ORDER_CAP) -> Group:
    gens = list(gens)
    for g in gens:
        if g.degree != degree:
            raise PermutationError(f"generator {g} has degree {g.degree}, expected {degree}")
    return Group(degree, gens, _closure(gens, degree, cap))


def exponent(G: Group) -> int:
    return reduce(math.lcm, (int(k) for k in G.element_orders), 1)


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n > 1 and factorize(n) == {n: 1}


def is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factorize(n).values())


def radical(n: int) -> int:
    return math.prod(factorize(n))


def prime_divisors(G: Group) -> list[int]:
    return sorted(factorize(G.order))
