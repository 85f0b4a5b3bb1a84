"""Enumeration of finite lattices and residuated binars up to isomorphism, and
counterexample search over them.

Residuated multiplications on a lattice are produced by a constrained cell
enumerator (see :mod:`resbinar.kernels`):

* distributive lattices: a monotone map ``t`` on pairs of join-irreducibles,
  extended by ``x*y = join{t(a, b) : a <= x, b <= y}``;
* other lattices: the table on non-bottom cells, with monotonicity and
  ``x*(y v z) = x*y v x*z`` (and its mirror) imposed as each cell is fixed.

Tables related by a lattice automorphism are pruned to the lexicographically
least member of their orbit.
"""

from __future__ import annotations

import itertools
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import kernels
from ._accel import thread_count
from .algebra import ResiduatedBinar
from .lattice import FiniteLattice, LatticeFlags, complements_of, lattice_predicates
from .laws import (ALL_LAWS, BIT, ED_IMPLICATIONS, NONTRIVIAL, RULES, UNITAL, Rule, check_tag,
                   sort_tags)

MAX_SIZE = 8
_CAP = 1 << 17  # rows per enumeration chunk before it is split further
_BATCH = 1 << 15  # tables per analysis call

PROPS = ALL_LAWS + ("associative", "commutative", "unital", "integral")
P_ASSOC, P_COMM, P_UNITAL, P_INTEGRAL = (kernels.P_ASSOC, kernels.P_COMM,
                                         kernels.P_UNITAL, kernels.P_INTEGRAL)


class ConfigError(ValueError):
    pass


class TimeBudgetExceeded(RuntimeError):
    def __init__(self, partial: "SearchReport"):
        done = ",".join(map(str, partial.certified)) or "none"
        super().__init__(f"time budget exhausted; sizes certified: {done}")
        self.partial = partial


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchConfig:
    max_size: int = 4
    min_size: int = 1
    distributive_lattice: bool = False
    associative: bool = False
    commutative: bool = False
    unital: bool = False
    integral: bool = False
    complemented: bool = False
    boolean: bool = False
    satisfies: frozenset = frozenset()
    fails: frozenset = frozenset()
    limit: int | None = None
    time_budget: float | None = None

    def __post_init__(self):
        sat = frozenset(check_tag(t) for t in self.satisfies)
        fail = frozenset(check_tag(t) for t in self.fails)
        object.__setattr__(self, "satisfies", sat)
        object.__setattr__(self, "fails", fail)
        both = sat & fail
        if both:
            raise ConfigError(f"laws both required and excluded: {','.join(sort_tags(both))}")
        if not 1 <= self.max_size <= MAX_SIZE:
            raise ConfigError(f"max_size must be in 1..{MAX_SIZE}")
        if not 1 <= self.min_size <= self.max_size:
            raise ConfigError("min_size must be in 1..max_size")
        if self.limit is not None and self.limit < 1:
            raise ConfigError("limit must be positive")
        if self.time_budget is not None and self.time_budget < 0:
            raise ConfigError("time budget must be non-negative")
        # integral needs a unit, and so does any law mentioning e
        if self.integral or (sat | fail) & set(UNITAL):
            object.__setattr__(self, "unital", True)
        if self.boolean:
            object.__setattr__(self, "distributive_lattice", True)
            object.__setattr__(self, "complemented", True)

    def lattice_ok(self, flags: LatticeFlags) -> bool:
        return ((flags.distributive or not self.distributive_lattice)
                and (flags.complemented or not self.complemented)
                and (flags.boolean or not self.boolean))

    def plan(self) -> tuple[np.ndarray, int, int]:
        """Property order (cheap checks first, exclusions before requirements)
        and the required / excluded bitmasks."""
        order = []
        must_hold = 0
        for flag, pid in ((self.unital, P_UNITAL), (self.integral, P_INTEGRAL),
                          (self.commutative, P_COMM)):
            if flag:
                order.append(pid)
                must_hold |= 1 << pid
        for tag in sort_tags(self.fails):
            order.append(BIT[tag])
        for tag in sort_tags(self.satisfies):
            order.append(BIT[tag])
            must_hold |= 1 << BIT[tag]
        if self.associative:
            order.append(P_ASSOC)
            must_hold |= 1 << P_ASSOC
        must_fail = sum(1 << BIT[t] for t in self.fails)
        return np.array(order, dtype=np.int64), must_hold, must_fail

    def describe(self) -> str:
        parts = [f"size<={self.max_size}"]
        for name in ("distributive_lattice", "associative", "commutative", "unital",
                     "integral", "complemented", "boolean"):
            if getattr(self, name):
                parts.append(name.replace("_lattice", ""))
        if self.satisfies:
            parts.append("satisfies=" + ",".join(sort_tags(self.satisfies)))
        if self.fails:
            parts.append("fails=" + ",".join(sort_tags(self.fails)))
        return " ".join(parts)


FULL_ORDER = np.array(
    [P_UNITAL, P_INTEGRAL, P_COMM] + list(range(len(ALL_LAWS))) + [P_ASSOC], dtype=np.int64
)


# ---------------------------------------------------------------------------
# canonical keys
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _all_perms(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)


def _lexmin_row(keys: np.ndarray) -> int:
    cand = np.arange(len(keys))
    for col in range(keys.shape[1]):
        vals = keys[cand, col]
        cand = cand[vals == vals.min()]
        if len(cand) == 1:
            break
    return int(cand[0])


def canonical_form(leq: np.ndarray, mult: np.ndarray | None = None) -> tuple[bytes, np.ndarray]:
    """Least relabelling of ``(leq, mult)`` over all ``n!`` permutations.

    Returns the key and ``q`` such that new element ``i`` is old element ``q[i]``.
    """
    leq = np.asarray(leq, dtype=bool)
    n = leq.shape[0]
    if n > MAX_SIZE:
        raise ValueError(f"canonical keys are limited to {MAX_SIZE} elements")
    Q = _all_perms(n)
    rows, cols = Q[:, :, None], Q[:, None, :]
    parts = [leq[rows, cols].reshape(len(Q), -1).astype(np.uint8)]
    if mult is not None:
        P = np.argsort(Q, axis=1)  # old -> new
        moved = np.asarray(mult, dtype=np.intp)[rows, cols].reshape(len(Q), -1)
        parts.append(np.take_along_axis(P, moved, axis=1).astype(np.uint8))
    keys = np.concatenate(parts, axis=1)
    k = _lexmin_row(keys)
    return bytes([n]) + keys[k].tobytes(), Q[k].copy()


def canonical_key(obj) -> bytes:
    """Isomorphism-invariant key of a lattice or residuated binar."""
    if isinstance(obj, ResiduatedBinar):
        return canonical_form(obj.lattice.leq, obj.mult)[0]
    return canonical_form(obj.leq)[0]


def automorphisms(lat: FiniteLattice) -> tuple[np.ndarray, np.ndarray]:
    """Non-identity order automorphisms ``p`` (old -> new) and their inverses."""
    n = lat.n
    if n > MAX_SIZE:
        raise ValueError(f"automorphism search is limited to {MAX_SIZE} elements")
    P = _all_perms(n)
    leq = lat.leq
    ok = (leq[P[:, :, None], P[:, None, :]] == leq[None]).reshape(len(P), -1).all(axis=1)
    ok[0] = False  # identity comes first
    perms = P[ok].astype(np.int64)
    invs = np.argsort(perms, axis=1).astype(np.int64)
    return perms, invs


# ---------------------------------------------------------------------------
# lattices up to isomorphism
# ---------------------------------------------------------------------------


def lattice_names(n: int) -> list[str]:
    if n == 1:
        return ["bot"]
    middle = [chr(ord("a") + i) for i in range(n - 2)]
    return ["bot"] + middle + ["top"]


def _natural_posets(m: int):
    """Strict down-sets (bitmasks) of naturally labelled posets on ``m`` points."""
    level = [()]
    for k in range(m):
        nxt = []
        for downs in level:
            for s in range(1 << k):
                if all(downs[i] & ~s == 0 for i in range(k) if s >> i & 1):
                    nxt.append(downs + (s,))
        level = nxt
    return level


def _bounded_leq(downs: tuple, n: int) -> np.ndarray:
    """Order on ``bot, middle..., top`` from the middle's strict down-sets."""
    leq = np.zeros((n, n), dtype=bool)
    leq[0, :] = True
    leq[:, n - 1] = True
    for k, s in enumerate(downs):
        leq[k + 1, k + 1] = True
        for i in range(len(downs)):
            if s >> i & 1:
                leq[i + 1, k + 1] = True
    return leq


def _has_joins(leq: np.ndarray) -> bool:
    n = leq.shape[0]
    for x in range(1, n - 1):
        for y in range(x + 1, n - 1):
            ub = leq[x] & leq[y]
            cands = np.flatnonzero(ub)
            if not any(leq[c, cands].all() for c in cands):
                return False
    return True


def _from_canonical(leq: np.ndarray) -> tuple[bytes, FiniteLattice]:
    key, q = canonical_form(leq)
    canon = leq[q[:, None], q[None, :]]
    order = sorted(range(len(q)), key=lambda i: (int(canon[:, i].sum()), i))
    o = np.array(order)
    return key, FiniteLattice.from_leq(canon[o[:, None], o[None, :]], lattice_names(len(q)))


@lru_cache(maxsize=None)
def _lattices(n: int) -> tuple[FiniteLattice, ...]:
    if n <= 2:
        leq = np.ones((n, n), dtype=bool) if n == 1 else np.array([[1, 1], [0, 1]], dtype=bool)
        return (FiniteLattice.from_leq(leq, lattice_names(n)),)
    m = n - 2
    seen = {}
    perms = _all_perms(m)
    weights = (1 << np.arange(m * m, dtype=np.int64)).reshape(m, m)
    for downs in _natural_posets(m):
        leq = _bounded_leq(downs, n)
        if not _has_joins(leq):
            continue
        mid = leq[1:-1, 1:-1]
        relab = mid[perms[:, :, None], perms[:, None, :]]
        key = int((relab * weights).reshape(len(perms), -1).sum(axis=1).min())
        seen.setdefault(key, leq)
    keyed = sorted((_from_canonical(leq) for leq in seen.values()), key=lambda kl: kl[0])
    return tuple(lat for _, lat in keyed)


def enumerate_lattices(n: int, distributive_only: bool = False) -> list[FiniteLattice]:
    """One lattice per isomorphism class of size ``n``, in canonical-key order.

    Elements are labelled ``bot, a, b, ..., top`` along a linear extension.
    """
    if not 1 <= n <= MAX_SIZE:
        raise ValueError(f"lattice size must be in 1..{MAX_SIZE}")
    lats = _lattices(n)
    if distributive_only:
        return [L for L in lats if lattice_predicates(L).distributive]
    return list(lats)


# ---------------------------------------------------------------------------
# per-lattice enumeration plans
# ---------------------------------------------------------------------------


def _pairs_csr(lists):
    ptr = np.zeros(len(lists) + 1, dtype=np.int64)
    a, b = [], []
    for i, items in enumerate(lists):
        ptr[i + 1] = ptr[i] + len(items)
        for u, v in items:
            a.append(u)
            b.append(v)
    return ptr, np.array(a, dtype=np.int64), np.array(b, dtype=np.int64)


def _idx_csr(lists):
    ptr = np.zeros(len(lists) + 1, dtype=np.int64)
    flat = []
    for i, items in enumerate(lists):
        ptr[i + 1] = ptr[i] + len(items)
        flat.extend(items)
    return ptr, np.array(flat, dtype=np.int64)


@dataclass(frozen=True, eq=False)
class LatticePlan:
    lattice: FiniteLattice
    mode: str  # "ji" or "table"
    cells: tuple
    lb: tuple
    pairs: tuple
    ext: tuple
    perms: np.ndarray
    invs: np.ndarray
    leq: np.ndarray = field(repr=False)
    join: np.ndarray = field(repr=False)


def make_plan(lat: FiniteLattice) -> LatticePlan:
    leq = np.ascontiguousarray(lat.leq, dtype=np.bool_)
    n = lat.n
    lin = lat.linear_extension()
    flags = lattice_predicates(lat)
    if flags.distributive:
        mode = "ji"
        J = [x for x in lin if x in lat.join_irreducibles]
        cells = [(a, b) for a in J for b in J]
        pos = {c: k for k, c in enumerate(cells)}
        jcov = {a: [c for c in J if c != a and leq[c, a]
                    and not any(d not in (a, c) and leq[c, d] and leq[d, a] for d in J)]
                for a in J}
        lb = [[pos[(c, b)] for c in jcov[a]] + [pos[(a, c)] for c in jcov[b]] for a, b in cells]
        pairs = [[] for _ in cells]
        ext = [[pos[(a, b)] for a, b in cells if leq[a, x] and leq[b, y]]
               for x in range(n) for y in range(n)]
    else:
        mode = "table"
        L = [x for x in lin if x != lat.bot]
        cells = [(x, y) for x in L for y in L]
        pos = {c: k for k, c in enumerate(cells)}
        lb, pairs = [], []
        for x, y in cells:
            k = pos[(x, y)]
            lows, prs = [], []
            for side in (0, 1):
                fixed, moving = (x, y) if side == 0 else (y, x)

                def cell(v):
                    return pos[(fixed, v)] if side == 0 else pos[(v, fixed)]

                earlier = [v for v in L if v != moving and cell(v) < k]
                lows += [cell(v) for v in earlier if leq[v, moving]]
                for i, u in enumerate(earlier):
                    for v in earlier[i + 1:]:
                        if lat.join[u, v] == moving:
                            prs.append((cell(u), cell(v)))
            lb.append(lows)
            pairs.append(prs)
        ext = [[pos[(x, y)]] if x != lat.bot and y != lat.bot else []
               for x in range(n) for y in range(n)]
    perms, invs = automorphisms(lat)
    return LatticePlan(lat, mode, tuple(cells), _idx_csr(lb), _pairs_csr(pairs),
                       _idx_csr(ext), perms, invs, leq,
                       np.ascontiguousarray(lat.join, dtype=np.uint8))


def _enumerate_prefix(plan: LatticePlan, prefix: tuple) -> list[np.ndarray]:
    lat = plan.lattice
    lb_ptr, lb_idx = plan.lb
    pr_ptr, pr_a, pr_b = plan.pairs
    vals, count = kernels.enumerate_cells(
        lat.n, plan.leq, plan.join, lb_ptr, lb_idx, pr_ptr, pr_a, pr_b,
        np.array(prefix, dtype=np.int64), _CAP)
    if count < 0:
        out = []
        for v in range(lat.n):
            out += _enumerate_prefix(plan, prefix + (v,))
        return out
    return [vals[:count]]


def _chunk_tables(plan: LatticePlan, prefix: tuple) -> np.ndarray:
    lat = plan.lattice
    ext_ptr, ext_idx = plan.ext
    parts = []
    for vals in _enumerate_prefix(plan, prefix):
        if not len(vals):
            continue
        tables = kernels.extend_tables(np.ascontiguousarray(vals), ext_ptr, ext_idx,
                                       plan.join, lat.n, lat.bot)
        if len(plan.perms):
            tables = tables[kernels.orbit_min_mask(tables, plan.perms, plan.invs)]
        parts.append(tables)
    if not parts:
        return np.zeros((0, lat.n, lat.n), dtype=np.uint8)
    return np.concatenate(parts)


def _pmap(fn, items):
    items = list(items)
    workers = min(thread_count(), len(items))
    if workers <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items))


_cache_lock = threading.Lock()
_table_cache: dict = {}
_CACHE_LIMIT = 1 << 22  # cached tables per lattice


def _lattice_cache_key(lat: FiniteLattice):
    return (lat.names, lat.leq.tobytes())


def representative_tables(lat: FiniteLattice) -> np.ndarray:
    """All residuated multiplications on ``lat``, one per automorphism orbit,
    as a read-only ``(B, n, n)`` array in deterministic order."""
    key = _lattice_cache_key(lat)
    with _cache_lock:
        hit = _table_cache.get(key)
    if hit is not None:
        return hit
    plan = make_plan(lat)
    units = [(v,) for v in range(lat.n)] if plan.cells else [()]
    tables = np.concatenate(_pmap(lambda u: _chunk_tables(plan, u), units))
    tables.setflags(write=False)
    if len(tables) <= _CACHE_LIMIT:
        with _cache_lock:
            _table_cache.setdefault(key, tables)
    return tables


@dataclass(frozen=True, eq=False)
class Batch:
    """Analysed tables on one lattice.  ``bits`` uses property ids: law bits
    in ``ALL_LAWS`` order, then associative, commutative, unital, integral."""

    lattice: FiniteLattice
    tables: np.ndarray
    ldiv: np.ndarray
    rdiv: np.ndarray
    units: np.ndarray
    bits: np.ndarray
    index: np.ndarray  # position among the lattice's representative tables

    def __len__(self):
        return len(self.tables)

    def has(self, prop) -> np.ndarray:
        pid = prop if isinstance(prop, int) else PROPS.index(prop)
        return (self.bits >> np.uint32(pid)) & np.uint32(1) == 1

    def algebra(self, i: int, name: str = "") -> ResiduatedBinar:
        u = int(self.units[i])
        return ResiduatedBinar._trusted(self.lattice, self.tables[i], self.ldiv[i],
                                        self.rdiv[i], None if u < 0 else u, name)


def _analyze(lat, tables, order, must_hold, must_fail, offset=0) -> Batch:
    leq = np.ascontiguousarray(lat.leq, dtype=np.bool_)
    join = np.ascontiguousarray(lat.join, dtype=np.uint8)
    meet = np.ascontiguousarray(lat.meet, dtype=np.uint8)
    tables = np.ascontiguousarray(tables)
    ldiv, rdiv, ok = kernels.residuals(leq, join, lat.bot, tables)
    if not ok.all():
        bad = int(np.flatnonzero(~ok)[0])
        raise AssertionError(f"generated table {bad} on {lat!r} is not residuated")
    bits, units, acc = kernels.analyze(leq, meet, join, lat.top, tables, ldiv, rdiv,
                                       order, must_hold, must_fail)
    keep = np.flatnonzero(acc)
    return Batch(lat, tables[keep], ldiv[keep], rdiv[keep], units[keep], bits[keep],
                 keep + offset)


def analyze_lattice(lat: FiniteLattice, cfg: SearchConfig | None = None) -> Batch:
    """Representatives on ``lat`` with their property bits; filtered by ``cfg``."""
    tables = representative_tables(lat)
    if cfg is None:
        order, must_hold, must_fail = FULL_ORDER, 0, 0
    else:
        order, must_hold, must_fail = cfg.plan()
    spans = [(s, tables[s:s + _BATCH]) for s in range(0, len(tables), _BATCH)] or [(0, tables)]
    parts = _pmap(lambda sp: _analyze(lat, sp[1], order, must_hold, must_fail, sp[0]), spans)
    cat = lambda attr: np.concatenate([getattr(p, attr) for p in parts])
    return Batch(lat, cat("tables"), cat("ldiv"), cat("rdiv"), cat("units"),
                 cat("bits"), cat("index"))


def enumerate_binars(lat: FiniteLattice, cfg: SearchConfig | None = None):
    """Residuated binars on ``lat`` up to automorphism, meeting ``cfg``."""
    if cfg is not None and not cfg.lattice_ok(lattice_predicates(lat)):
        return
    batch = analyze_lattice(lat, cfg)
    for i in range(len(batch)):
        yield batch.algebra(i, f"n{lat.n}.{int(batch.index[i])}")


def iter_batches(max_size: int, distributive_only: bool = False, min_size: int = 1):
    """Fully analysed batches for every lattice of each size in range."""
    for n in range(min_size, max_size + 1):
        for li, lat in enumerate(enumerate_lattices(n, distributive_only)):
            yield n, li, analyze_lattice(lat)


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------


@dataclass
class SearchReport:
    config: SearchConfig
    models: list = field(default_factory=list)
    examined: dict = field(default_factory=dict)  # size -> algebras examined
    matched: dict = field(default_factory=dict)  # size -> algebras matching
    certified: tuple = ()  # sizes exhausted completely
    complete: bool = False

    @property
    def exhausted_none(self) -> bool:
        return self.complete and not self.models

    def verdict(self) -> str:
        if self.models:
            return f"found {len(self.models)}"
        if self.complete:
            return "exhausted, none found"
        return "incomplete"

    def summary(self) -> str:
        sizes = " ".join(f"n={n}:{self.matched.get(n, 0)}/{self.examined[n]}"
                         for n in sorted(self.examined))
        return f"{self.verdict()} [{sizes}]"


def search(cfg: SearchConfig) -> SearchReport:
    """Models meeting ``cfg``, sizes ascending; see :class:`SearchReport`."""
    start = time.monotonic()
    deadline = None if cfg.time_budget is None else start + cfg.time_budget
    report = SearchReport(cfg)
    found = []
    certified = []

    def out_of_time():
        return deadline is not None and time.monotonic() >= deadline

    for n in range(cfg.min_size, cfg.max_size + 1):
        if out_of_time():
            raise TimeBudgetExceeded(_finish(report, found, certified, False))
        report.examined[n] = 0
        report.matched[n] = 0
        for li, lat in enumerate(enumerate_lattices(n)):
            if not cfg.lattice_ok(lattice_predicates(lat)):
                continue
            if out_of_time():
                raise TimeBudgetExceeded(_finish(report, found, certified, False))
            batch = analyze_lattice(lat, cfg)
            report.examined[n] += len(representative_tables(lat))
            report.matched[n] += len(batch)
            for i in range(len(batch)):
                if cfg.limit is not None and len(found) >= cfg.limit:
                    break
                found.append(batch.algebra(i, f"n{n}.L{li}.{int(batch.index[i])}"))
            if cfg.limit is not None and len(found) >= cfg.limit:
                return _finish(report, found, certified, False)
        certified.append(n)
    return _finish(report, found, certified, True)


def _finish(report: SearchReport, found, certified, complete) -> SearchReport:
    report.models = sorted(found, key=lambda a: (a.n, canonical_key(a)))
    report.certified = tuple(certified)
    report.complete = complete
    return report


# ---------------------------------------------------------------------------
# rule and lemma verifications
# ---------------------------------------------------------------------------


@dataclass
class RuleVerdict:
    rule: Rule
    report: SearchReport

    @property
    def holds(self) -> bool:
        return self.report.exhausted_none

    def line(self) -> str:
        return f"{str(self.rule):<22} {self.report.summary()}"


def verify_theorem32(max_size: int = 4, rules=RULES, distributive: bool = True,
                     time_budget: float | None = None) -> list[RuleVerdict]:
    """Search for a model of each rule's premises failing its conclusion."""
    if max_size > 6:
        raise ConfigError("rule verification is limited to size 6")
    out = []
    for rule in rules:
        cfg = SearchConfig(max_size=max_size, distributive_lattice=distributive,
                           satisfies=rule.premises, fails=frozenset([rule.conclusion]),
                           limit=1, time_budget=time_budget)
        out.append(RuleVerdict(rule, search(cfg)))
    return out


def explore_open_problem(max_size: int = 4, time_budget: float | None = None):
    """The rules over all lattices, distributive or not.  Evidence only."""
    return verify_theorem32(max_size, RULES, distributive=False, time_budget=time_budget)


def falsifiability_rules() -> list[Rule]:
    """Each rule with a proper subset of its premises; all should be refutable."""
    out = []
    for r in RULES:
        prem = sorted(r.premises, key=NONTRIVIAL.index)
        for k in range(len(prem)):
            for sub in itertools.combinations(prem, k):
                out.append(Rule(frozenset(sub), r.conclusion))
    seen, uniq = set(), []
    for r in out:
        if (r.premises, r.conclusion) not in seen:
            seen.add((r.premises, r.conclusion))
            uniq.append(r)
    return uniq


@dataclass
class LemmaCheck:
    name: str
    in_scope: int = 0
    violations: int = 0
    witness: str | None = None

    def record(self, ok: bool, where: str):
        self.in_scope += 1
        if not ok:
            self.violations += 1
            if self.witness is None:
                self.witness = where

    def line(self) -> str:
        tail = f" first={self.witness}" if self.witness else ""
        return f"{self.name}: {self.in_scope} in scope, {self.violations} violations{tail}"


_SIX = [BIT[t] for t in NONTRIVIAL]
_DIST4 = [BIT[t] for t in ("fm", "mf", "ml", "rm")]


def verify_section4(max_size: int = 4) -> list[LemmaCheck]:
    """Exhaustive checks of the unital lemmas over every lattice up to ``max_size``.

    (a) complemented and integral implies mult = meet;
    (b) a complemented unit plus one of fm, mf, ml, rm implies integrality;
    (c) Boolean reduct plus any nontrivial law implies unit = top and mult = meet;
    (d) on Boolean reducts the six nontrivial laws are all true or all false;
    (e) under ed, rm and jr each imply lp, and ml and lj each imply rp.
    """
    if max_size > 6:
        raise ConfigError("lemma verification is limited to size 6")
    a = LemmaCheck("complemented+integral => mult=meet")
    b = LemmaCheck("complemented unit+(fm|mf|ml|rm) => integral")
    c = LemmaCheck("boolean+nontrivial law => e=top, mult=meet")
    d = LemmaCheck("boolean: six laws equivalent")
    e_ = LemmaCheck("ed: rm|jr => lp, ml|lj => rp")
    ed_pairs = [(BIT[p], BIT[c]) for p, c in ED_IMPLICATIONS]
    unital = SearchConfig(max_size=max_size, unital=True)
    order, must_hold, must_fail = unital.plan()
    order = np.concatenate([order, FULL_ORDER[1:]])
    for n in range(1, max_size + 1):
        for li, lat in enumerate(enumerate_lattices(n)):
            flags = lattice_predicates(lat)
            batch = _analyze(lat, representative_tables(lat), order, must_hold, must_fail)
            is_meet = (batch.tables == lat.meet[None]).reshape(len(batch), -1).all(axis=1)
            for i in range(len(batch)):
                e = int(batch.units[i])
                bits = int(batch.bits[i])
                where = f"n{n}.L{li}.{int(batch.index[i])}"
                integral = e == lat.top
                if flags.complemented and integral:
                    a.record(bool(is_meet[i]), where)
                if complements_of(lat, e) and any(bits >> p & 1 for p in _DIST4):
                    b.record(integral, where)
                if flags.boolean:
                    six = [bits >> p & 1 for p in _SIX]
                    if any(six):
                        c.record(integral and bool(is_meet[i]), where)
                    d.record(len(set(six)) == 1, where)
                if bits >> BIT["ed"] & 1:
                    e_.record(all(bits >> c_ & 1 for p_, c_ in ed_pairs if bits >> p_ & 1), where)
    return [a, b, c, d, e_]
