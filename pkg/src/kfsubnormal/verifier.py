"""Exhaustive checks of the embedding theorems over catalog groups.

Every statement is evaluated per group and reported as a :class:`CheckResult`.
Quantifiers over single subgroups are always exhaustive.  Quantifiers over
pairs are exhaustive while the number of pairs fits ``pair_budget`` and
otherwise use a seeded sample whose seed is recorded in the detail.
"""
from __future__ import annotations

import enum
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import embeddings as emb
from .catalog import CatalogEntry, load_catalog
from .formations import BUILTIN, Formation, is_member, is_simple, residual, section_in, solvable_radical
from .lattice import DEFAULT_SUBGROUP_LIMIT, LatticeError, SubgroupLattice, _bits, all_subgroups
from .perm import DEFAULT_ORDER_CAP, CapExceeded, Group, factorize
from .quotients import QuotientGroup, pull_subgroup, push_subgroup, quotient

DEFAULT_PAIR_BUDGET = 4_000_000
DEFAULT_CHAIN_BUDGET = 400

STATEMENTS = (
    "thm1", "thm2", "cor1", "cor2",
    "lem1.1", "lem1.2", "lem1.3", "lem1.4", "lem2",
    "lem3.1", "lem3.2", "lem3.3", "lem3.4", "lem3.5",
    "lem4", "lem5",
    "prelim.monotone", "prelim.core",
    "example.f7",
)


class Status(str, enum.Enum):
    VERIFIED = "verified"
    COUNTEREXAMPLE = "counterexample"
    SKIPPED = "skipped"


@dataclass
class CheckResult:
    statement_id: str
    group_name: str
    status: Status
    detail: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "statement_id": self.statement_id,
            "group_name": self.group_name,
            "status": self.status.value,
            "detail": self.detail,
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 6)
        return d


@dataclass
class Report:
    run_meta: dict
    results: list[CheckResult]

    @property
    def counterexamples(self) -> list[CheckResult]:
        return [r for r in self.results if r.status is Status.COUNTEREXAMPLE]

    @property
    def exit_code(self) -> int:
        return 1 if self.counterexamples else 0

    def summary(self) -> dict:
        out = {s.value: 0 for s in Status}
        for r in self.results:
            out[r.status.value] += 1
        return out

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "run_meta": self.run_meta,
            "summary": self.summary(),
            "results": [r.to_dict(timing) for r in self.results],
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=1) + "\n"


def strip_timing(report_dict: dict) -> dict:
    out = dict(report_dict)
    out["results"] = [{k: v for k, v in r.items() if k != "elapsed"} for r in report_dict["results"]]
    return out


class GroupContext:
    """One group's lattice together with per-run settings and quotient caches."""

    def __init__(self, name: str, L: SubgroupLattice, seed: int = 0,
                 pair_budget: int = DEFAULT_PAIR_BUDGET, chain_budget: int = DEFAULT_CHAIN_BUDGET,
                 tags: Iterable[str] = ()):
        self.name = name
        self.L = L
        self.seed = seed
        self.pair_budget = pair_budget
        self.chain_budget = chain_budget
        self.tags = list(tags)
        self._quotients: dict[int, QuotientGroup] = {}

    @classmethod
    def build(cls, name: str, G: Group, **kw) -> GroupContext:
        limit = kw.pop("limit", DEFAULT_SUBGROUP_LIMIT)
        return cls(name, all_subgroups(G, limit=limit), **kw)

    @property
    def all(self) -> list[int]:
        return list(range(len(self.L)))

    def describe(self, i: int) -> dict:
        return {
            "index": i,
            "order": self.L.orders[i],
            "generators": [p.cycle_string() for p in self.L.generators_of(i)],
        }

    def quotient(self, n: int) -> QuotientGroup:
        if n not in self._quotients:
            self._quotients[n] = quotient(self.L, n)
        return self._quotients[n]

    def proper_normal(self) -> list[int]:
        """Normal subgroups N != 1 (N = 1 gives an isomorphic copy and is skipped)."""
        return [n for n in self.L.normal_subgroups() if n != self.L.bottom]

    def rng(self, statement: str) -> random.Random:
        return random.Random(f"{self.seed}:{self.name}:{statement}")

    def pairs(self, statement: str, xs: list, ys: list, detail: dict) -> Iterator[tuple]:
        total = len(xs) * len(ys)
        if total <= self.pair_budget:
            detail["pairs"] = total
            detail["sampled"] = False
            for x in xs:
                for y in ys:
                    yield x, y
            return
        rng = self.rng(statement)
        detail["pairs"] = self.pair_budget
        detail["sampled"] = True
        detail["seed"] = self.seed
        for _ in range(self.pair_budget):
            yield rng.choice(xs), rng.choice(ys)


def _ctx(x, name: str = "group") -> GroupContext:
    if isinstance(x, GroupContext):
        return x
    if isinstance(x, SubgroupLattice):
        return GroupContext(name, x)
    return GroupContext.build(name, x)


def _members(mask: int) -> list[int]:
    return list(_bits(mask))


def _run(ctx: GroupContext, statement_id: str, body: Callable[[dict], tuple | None]) -> CheckResult:
    """``body`` fills ``detail`` and returns None (verified) or (kind, payload)."""
    t0 = time.perf_counter()
    detail: dict = {}
    outcome = body(detail)
    status = Status.VERIFIED
    if outcome is not None:
        kind, payload = outcome
        if kind == "skip":
            status = Status.SKIPPED
            detail["reason"] = payload
        else:
            status = Status.COUNTEREXAMPLE
            detail["violation"] = payload
    return CheckResult(statement_id, ctx.name, status, detail, time.perf_counter() - t0)


def _fail(payload) -> tuple:
    return ("counterexample", payload)


def _require_theorem2_hypothesis(F) -> str | None:
    if not (F.subgroup_closed and F.solvable_formation):
        return f"formation {F.value} is not marked solvable and subgroup-closed"
    return None


# -- theorems and corollaries ------------------------------------------------------


def verify_theorem1(G) -> CheckResult:
    """Primary subgroups: submodular iff K-U1-subnormal.

    The trivial subgroup is included; both predicates hold for it.
    """
    ctx = _ctx(G)
    L = ctx.L

    def body(detail):
        sm = emb.submodular_set(L)
        kf = emb.kf_subnormal_set(L, Formation.U1)
        primary = [i for i in ctx.all if len(factorize(L.orders[i])) <= 1]
        detail["primary_subgroups"] = len(primary)
        detail["submodular_primary"] = sum((sm >> i) & 1 for i in primary)
        for i in primary:
            a, b = bool((sm >> i) & 1), bool((kf >> i) & 1)
            if a != b:
                return _fail({"subgroup": ctx.describe(i), "submodular": a, "kf_subnormal_U1": b})
        return None

    return _run(ctx, "thm1", body)


def verify_theorem2(G, F=Formation.N) -> CheckResult:
    """Solvable K-F-subnormal subgroups lie in the solvable radical."""
    ctx = _ctx(G)
    L = ctx.L
    F = Formation.parse(F)

    def body(detail):
        detail["formation"] = F.value
        bad = _require_theorem2_hypothesis(F)
        if bad:
            return ("skip", bad)
        rad = solvable_radical(L).index
        kf = emb.kf_subnormal_set(L, F)
        sol = [a for a in _members(kf) if L.is_solvable_subgroup(a)]
        detail["radical_order"] = L.orders[rad]
        detail["solvable_kf_subnormal"] = len(sol)
        if rad == L.top:
            detail["note"] = "vacuous: group is solvable, radical is the whole group"
        for a in sol:
            if not L.contains(a, rad):
                return _fail({"subgroup": ctx.describe(a), "radical_order": L.orders[rad]})
        return None

    return _run(ctx, f"thm2:{F.value}", body)


def verify_corollary1(G, F=Formation.N) -> CheckResult:
    """Joins of solvable K-F-subnormal subgroups with solvable subgroups are solvable."""
    ctx = _ctx(G)
    L = ctx.L
    F = Formation.parse(F)

    def body(detail):
        detail["formation"] = F.value
        bad = _require_theorem2_hypothesis(F)
        if bad:
            return ("skip", bad)
        solvable = [b for b in ctx.all if L.is_solvable_subgroup(b)]
        A = [a for a in _members(emb.kf_subnormal_set(L, F)) if L.is_solvable_subgroup(a)]
        detail["solvable_kf_subnormal"] = len(A)
        detail["solvable_subgroups"] = len(solvable)
        return _solvable_joins(ctx, f"cor1:{F.value}", A, solvable, detail)

    return _run(ctx, f"cor1:{F.value}", body)


def verify_corollary2(G) -> CheckResult:
    """Solvable submodular subgroups lie in the radical and have solvable joins."""
    ctx = _ctx(G)
    L = ctx.L

    def body(detail):
        rad = solvable_radical(L).index
        solvable = [b for b in ctx.all if L.is_solvable_subgroup(b)]
        A = [a for a in _members(emb.submodular_set(L)) if L.is_solvable_subgroup(a)]
        detail["solvable_submodular"] = len(A)
        detail["radical_order"] = L.orders[rad]
        for a in A:
            if not L.contains(a, rad):
                return _fail({"A": ctx.describe(a), "radical_order": L.orders[rad]})
        return _solvable_joins(ctx, "cor2", A, solvable, detail)

    return _run(ctx, "cor2", body)


def _solvable_joins(ctx: GroupContext, name: str, A: list[int], B: list[int], detail: dict):
    L = ctx.L
    for a, b in ctx.pairs(name, A, B, detail):
        j = int(L.join_table[a, b])
        if not L.is_solvable_subgroup(j):
            return _fail({"A": ctx.describe(a), "B": ctx.describe(b), "join_order": L.orders[j]})
    return None


def verify_corollaries(G, F=Formation.N) -> list[CheckResult]:
    ctx = _ctx(G)
    return [verify_corollary1(ctx, F), verify_corollary2(ctx)]


# -- lemma suite -----------------------------------------------------------------


def _transitivity(ctx: GroupContext, name: str, reach: Callable[[int], int], chain: Callable[[int, int], emb.WitnessChain | None]):
    L = ctx.L

    def body(detail):
        top = reach(L.top)
        outer = _members(top)
        for m in outer:
            inner = reach(m)
            if inner & ~top:
                h = next(iter(_bits(inner & ~top)))
                return _fail({"H": ctx.describe(h), "L": ctx.describe(m)})
        # concatenated witness chains must re-validate link by link
        rng = ctx.rng(name)
        checked = 0
        pool = [(h, m) for m in outer for h in _members(reach(m)) if h != m and m != L.top]
        if len(pool) > ctx.chain_budget:
            pool = rng.sample(pool, ctx.chain_budget)
            detail["chain_sample_seed"] = ctx.seed
        for h, m in pool:
            c1, c2 = chain(h, m), chain(m, L.top)
            joined = emb.WitnessChain(c1.steps + c2.steps[1:], c1.kinds + c2.kinds, c1.formation)
            if not joined.validate(L):
                return _fail({"H": ctx.describe(h), "L": ctx.describe(m), "reason": "concatenated chain invalid"})
            checked += 1
        detail["chains_concatenated"] = checked
        return None

    return body


def _intersection(ctx: GroupContext, name: str, reach: Callable[[int], int]):
    L = ctx.L

    def body(detail):
        H = _members(reach(L.top))
        for h, m in ctx.pairs(name, H, ctx.all, detail):
            x = int(L.meet_table[h, m])
            if not (reach(m) >> x) & 1:
                return _fail({"H": ctx.describe(h), "L": ctx.describe(m), "meet": ctx.describe(x)})
        return None

    return body


def _lift(ctx: GroupContext, reach_q: Callable[[SubgroupLattice], int], reach: int):
    """Preimages of good subgroups of G/N are good in G."""
    def body(detail):
        detail["normal_subgroups"] = len(ctx.proper_normal())
        for n in ctx.proper_normal():
            Q = ctx.quotient(n)
            for k in _members(reach_q(Q.lattice)):
                h = pull_subgroup(Q, k).index
                if not (reach >> h) & 1:
                    return _fail({"N": ctx.describe(n), "preimage": ctx.describe(h)})
        return None

    return body


def _push(ctx: GroupContext, reach_q: Callable[[SubgroupLattice], int], reach: int):
    """Images HN/N of good subgroups are good in G/N, and HN is good in G."""
    L = ctx.L

    def body(detail):
        detail["normal_subgroups"] = len(ctx.proper_normal())
        for n in ctx.proper_normal():
            Q = ctx.quotient(n)
            rq = reach_q(Q.lattice)
            for h in _members(reach):
                img = push_subgroup(Q, h).index
                if not (rq >> img) & 1:
                    return _fail({"N": ctx.describe(n), "H": ctx.describe(h), "image_order": Q.lattice.orders[img]})
                hn = int(L.join_table[h, n])
                if not (reach >> hn) & 1:
                    return _fail({"N": ctx.describe(n), "H": ctx.describe(h), "HN": ctx.describe(hn)})
        return None

    return body


def _kf_lemmas(ctx: GroupContext, F, selected: Callable[[str], bool]) -> list[CheckResult]:
    L = ctx.L
    out = []
    reach = lambda t: emb.kf_subnormal_set(L, F, t)  # noqa: E731
    chain = lambda h, t: emb.is_kf_subnormal(L, h, t, F)[1]  # noqa: E731
    reach_q = lambda QL: emb.kf_subnormal_set(QL, F)  # noqa: E731
    top = reach(L.top)
    v = F.value
    if selected("lem1.1"):
        out.append(_run(ctx, f"lem1.1:{v}", _transitivity(ctx, f"lem1.1:{v}", reach, chain)))
    if selected("lem1.2"):
        out.append(_run(ctx, f"lem1.2:{v}", _lift(ctx, reach_q, top)))
    if selected("lem1.3"):
        out.append(_run(ctx, f"lem1.3:{v}", _push(ctx, reach_q, top)))
    if selected("lem1.4"):
        if F.subgroup_closed:
            out.append(_run(ctx, f"lem1.4:{v}", _intersection(ctx, f"lem1.4:{v}", reach)))
        else:
            out.append(_run(ctx, f"lem1.4:{v}", lambda d: ("skip", "formation is not subgroup-closed")))
    if selected("lem2"):
        out.append(_run(ctx, f"lem2:{v}", _star_body(ctx, F)))
    return out


def _star_body(ctx: GroupContext, F):
    L = ctx.L

    def body(detail):
        if not F.subgroup_closed:
            return ("skip", "formation is not subgroup-closed")
        counts = {b.value: 0 for b in emb.StarBranch}
        for h in _members(emb.kf_subnormal_set(L, F)):
            if h == L.top:
                continue
            try:
                star, branch = emb.star_overgroup(L, h, L.top, F)
            except emb.LemmaViolation as exc:
                return _fail({"H": ctx.describe(h), "reason": str(exc)})
            counts[branch.value] += 1
        detail["branches"] = counts
        return None

    return body


def _sm_lemmas(ctx: GroupContext, selected: Callable[[str], bool]) -> list[CheckResult]:
    L = ctx.L
    out = []
    reach = lambda t: emb.submodular_set(L, t)  # noqa: E731
    chain = lambda h, t: emb.is_submodular(L, h, t)[1]  # noqa: E731
    top = reach(L.top)
    if selected("lem3.1"):
        out.append(_run(ctx, "lem3.1", _transitivity(ctx, "lem3.1", reach, chain)))
    if selected("lem3.2"):
        out.append(_run(ctx, "lem3.2", _intersection(ctx, "lem3.2", reach)))
    if selected("lem3.3"):
        out.append(_run(ctx, "lem3.3", _lift(ctx, emb.submodular_set, top)))
    if selected("lem3.4"):
        out.append(_run(ctx, "lem3.4", _push(ctx, emb.submodular_set, top)))
    if selected("lem3.5"):
        def lem35(detail):
            sn = [h for h in ctx.all if emb.is_subnormal(L, h)]
            detail["subnormal"] = len(sn)
            for h in sn:
                if not (top >> h) & 1:
                    return _fail({"H": ctx.describe(h)})
            return None
        out.append(_run(ctx, "lem3.5", lem35))
    return out


def _lemma4(ctx: GroupContext):
    L = ctx.L

    def body(detail):
        mm = emb.maximal_modular_subgroups(L)
        kinds = {"normal-simple": 0, "nonabelian-pq": 0}
        for m in mm:
            m = m.index
            if L.normal_flags[m]:
                Q = ctx.quotient(m).quotient
                if is_simple(Q):
                    kinds["normal-simple"] += 1
                    continue
            c = L.core(m, L.top).index
            Q = ctx.quotient(c).quotient
            f = factorize(Q.order)
            if sum(f.values()) == 2 and len(f) == 2 and not Q.is_abelian():
                kinds["nonabelian-pq"] += 1
                continue
            return _fail({"M": ctx.describe(m), "core_order": L.orders[c], "quotient_order": Q.order})
        detail["maximal_modular"] = len(mm)
        detail["kinds"] = kinds
        if not mm:
            detail["note"] = "vacuous: trivial group"
        return None

    return body


def _lemma5(ctx: GroupContext):
    L = ctx.L

    def body(detail):
        sm = emb.submodular_set(L)
        kf = emb.kf_subnormal_set(L, Formation.U1)
        detail["submodular"] = sm.bit_count()
        detail["kf_subnormal_U1"] = kf.bit_count()
        if sm & ~kf:
            h = next(iter(_bits(sm & ~kf)))
            return _fail({"H": ctx.describe(h)})
        converse = _members(kf & ~sm)
        # the implication is strict in general; record where it is
        detail["converse_fails_at_orders"] = sorted({L.orders[h] for h in converse})
        return None

    return body


def _monotone(ctx: GroupContext, formations):
    L = ctx.L

    def body(detail):
        for k in ctx.all:
            rs = residual(L, Formation.S, k).index
            ru = residual(L, Formation.U, k).index
            rn = residual(L, Formation.N, k).index
            if not (L.contains(rs, ru) and L.contains(ru, rn)):
                return _fail({"K": ctx.describe(k), "residual_orders": [L.orders[rs], L.orders[ru], L.orders[rn]]})
        G = L.group
        member = {F.value: is_member(G, F) for F in formations}
        for F in formations:
            triv = residual(L, F).index == L.bottom
            if triv != member[F.value]:
                return _fail({"formation": F.value, "residual_trivial": triv, "member": member[F.value]})
        if "U1" in member and "U" in member and member["U1"] and not member["U"]:
            return _fail({"containment": "U1 <= U"})
        if "U" in member and "S" in member and member["U"] and not member["S"]:
            return _fail({"containment": "U <= S"})
        if "N" in member and "S" in member and member["N"] and not member["S"]:
            return _fail({"containment": "N <= S"})
        detail["membership"] = member
        detail["residual_orders"] = {F.value: residual(L, F).order for F in formations}
        return None

    return body


def _core_equivalence(ctx: GroupContext, F):
    L = ctx.L

    def body(detail):
        detail["formation"] = F.value
        pairs = [(x, y) for y in ctx.all for x in _bits(L.sub[y])]
        if len(pairs) > ctx.pair_budget:
            pairs = ctx.rng(f"prelim.core:{F.value}").sample(pairs, ctx.pair_budget)
            detail["sampled"] = True
            detail["seed"] = ctx.seed
        else:
            detail["sampled"] = False
        detail["pairs"] = len(pairs)
        for x, y in pairs:
            lhs = L.contains(residual(L, F, y), x)
            rhs = section_in(L, y, L.core(x, y), F)
            if lhs != rhs:
                return _fail({"X": ctx.describe(x), "Y": ctx.describe(y), "residual_le_X": lhs, "quotient_by_core_in_F": rhs})
        return None

    return body


def _example_f7(ctx: GroupContext):
    L = ctx.L

    def body(detail):
        targets = [i for i in ctx.all if L.orders[i] == 6 and L.is_maximal(i)]
        if L.group.order != 42 or not targets:
            return ("skip", "not the order-42 Frobenius group")
        rows = []
        for i in targets:
            sm, _ = emb.is_submodular(L, i)
            kf, chain = emb.is_kf_subnormal(L, i, L.top, Formation.U1)
            rows.append({
                "subgroup": ctx.describe(i),
                "submodular": sm,
                "kf_subnormal_U1": kf,
                "chain": chain.to_dict(L) if chain else None,
            })
            one_residual_step = bool(chain) and chain.kinds == [emb.StepKind.RESIDUAL]
            if sm or not kf or not one_residual_step:
                return _fail(rows[-1])
        detail["order_6_subgroups"] = rows
        return None

    return body


def verify_lemma_suite(G, formations=BUILTIN, selection: Iterable[str] | None = None) -> list[CheckResult]:
    ctx = _ctx(G)
    formations = [Formation.parse(f) for f in formations]
    selected = _selector(selection)
    out: list[CheckResult] = []
    for F in formations:
        out += _kf_lemmas(ctx, F, selected)
    out += _sm_lemmas(ctx, selected)
    if selected("lem4"):
        out.append(_run(ctx, "lem4", _lemma4(ctx)))
    if selected("lem5"):
        out.append(_run(ctx, "lem5", _lemma5(ctx)))
    return out


def _selector(selection: Iterable[str] | None) -> Callable[[str], bool]:
    if selection is None:
        return lambda sid: True
    sel = [s.strip() for s in selection if s.strip()]
    return lambda sid: any(sid == s or sid.startswith(s + ".") or sid.startswith(s + ":") for s in sel)


def verify_group(ctx: GroupContext, formations=BUILTIN, selection: Iterable[str] | None = None) -> list[CheckResult]:
    formations = [Formation.parse(f) for f in formations]
    selected = _selector(selection)
    out: list[CheckResult] = []
    if selected("thm1"):
        out.append(verify_theorem1(ctx))
    for F in formations:
        if selected("thm2"):
            out.append(verify_theorem2(ctx, F))
        if selected("cor1"):
            out.append(verify_corollary1(ctx, F))
    if selected("cor2"):
        out.append(verify_corollary2(ctx))
    out += verify_lemma_suite(ctx, formations, selection)
    if selected("prelim.monotone"):
        monotone_fs = [F for F in formations if isinstance(F, Formation)]
        out.append(_run(ctx, "prelim.monotone", _monotone(ctx, monotone_fs)))
    if selected("prelim.core"):
        for F in formations:
            out.append(_run(ctx, f"prelim.core:{F.value}", _core_equivalence(ctx, F)))
    if selected("example.f7") and "fixture" in ctx.tags:
        out.append(_run(ctx, "example.f7", _example_f7(ctx)))
    return out


@dataclass
class RunConfig:
    seed: int = 0
    cap: int = DEFAULT_ORDER_CAP
    subgroup_limit: int = DEFAULT_SUBGROUP_LIMIT
    pair_budget: int = DEFAULT_PAIR_BUDGET
    chain_budget: int = DEFAULT_CHAIN_BUDGET
    formations: tuple[str, ...] = tuple(f.value for f in BUILTIN)
    selection: tuple[str, ...] | None = None


def verify_entry(entry: CatalogEntry, config: RunConfig) -> list[CheckResult]:
    t0 = time.perf_counter()
    try:
        G = entry.to_group(cap=config.cap)
        L = all_subgroups(G, limit=config.subgroup_limit, cap=config.cap)
    except (CapExceeded, LatticeError) as exc:
        return [CheckResult("*", entry.name, Status.SKIPPED, {"reason": str(exc)}, time.perf_counter() - t0)]
    ctx = GroupContext(entry.name, L, seed=config.seed, pair_budget=config.pair_budget,
                       chain_budget=config.chain_budget, tags=entry.tags)
    return verify_group(ctx, config.formations, config.selection)


def _verify_entry_star(args):
    return verify_entry(*args)


def run_entries(entries: list[CatalogEntry], config: RunConfig | None = None, jobs: int = 1,
                progress: Callable[[CatalogEntry, list[CheckResult]], None] | None = None) -> Report:
    config = config or RunConfig()
    results: list[CheckResult] = []
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map preserves catalog order
            for entry, res in zip(entries, pool.map(_verify_entry_star, [(e, config) for e in entries])):
                results += res
                if progress:
                    progress(entry, res)
    else:
        for entry in entries:
            res = verify_entry(entry, config)
            results += res
            if progress:
                progress(entry, res)
    formations = [Formation.parse(f) for f in config.formations]
    meta = {
        "seed": config.seed,
        "caps": {
            "order": config.cap,
            "subgroups": config.subgroup_limit,
            "pair_budget": config.pair_budget,
            "chain_budget": config.chain_budget,
        },
        "registry": {f.value: {"verified": f.verified, "subgroup_closed": f.subgroup_closed,
                               "solvable": f.solvable_formation} for f in formations},
        "selection": list(config.selection) if config.selection else None,
        "groups": [e.name for e in entries],
    }
    return Report(meta, results)


def run_corpus(catalog_path, selection: Iterable[str] | None = None, formations: Iterable[str] | None = None,
               jobs: int = 1, **config) -> Report:
    entries = load_catalog(catalog_path, validate=True, cap=config.get("cap", DEFAULT_ORDER_CAP))
    cfg = RunConfig(**config)
    if formations is not None:
        cfg.formations = tuple(Formation.parse(f).value for f in formations)
    if selection is not None:
        cfg.selection = tuple(selection)
    return run_entries(entries, cfg, jobs=jobs)
