"""Prime-filter frames of residuated binars with distributive lattice reducts.

Three readings of the ternary relation are available:

``literal``
    ``R(F, G, H)`` iff every element of ``F`` is a product ``g*h`` with
    ``g`` in ``G`` and ``h`` in ``H``.
``upset``
    ``R(F, G, H)`` iff ``F`` is contained in the up-closure of ``G*H``.
``contains``
    ``R(F, G, H)`` iff ``G*H`` is contained in ``F``.

``literal`` and ``upset`` order points by inclusion.  ``contains`` orders them
by reverse inclusion, which is the order under which it is antitone in the
first coordinate and isotone in the other two.  :func:`calibrate` picks the
reading under which the frame conditions track the algebraic laws.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import kernels
from .algebra import ResiduatedBinar
from .lattice import FiniteLattice, is_distributive
from .laws import BIT, check_law

VARIANTS = ("literal", "upset", "contains")
CONDITIONS = ("jr", "ml", "lj")
DEFAULT_VARIANT = "contains"
_SCAN_LIMIT = 16


class NotDistributive(ValueError):
    pass


class MonotonicityViolation(ValueError):
    def __init__(self, variant: str, witness):
        super().__init__(f"relation of variant {variant!r} is not monotone at {witness}")
        self.variant = variant
        self.witness = witness


def _members(mask: int, n: int) -> list[int]:
    return [i for i in range(n) if mask >> i & 1]


def _is_prime_filter(lat: FiniteLattice, mask: int) -> bool:
    n = lat.n
    full = (1 << n) - 1
    if mask == 0 or mask == full:
        return False
    els = _members(mask, n)
    for x in els:
        if lat.upset_mask(x) & ~mask:
            return False
        for y in els:
            if not mask >> int(lat.meet[x, y]) & 1:
                return False
    for x in range(n):
        for y in range(n):
            if mask >> int(lat.join[x, y]) & 1 and not (mask >> x & 1 or mask >> y & 1):
                return False
    return True


def prime_filters(lat: FiniteLattice) -> list[int]:
    """Prime filters as element bitmasks, in increasing mask order.

    Computed as the principal filters of join-irreducibles and, for lattices of
    at most 16 elements, cross-checked against a scan of all subsets.
    """
    if not is_distributive(lat):
        raise NotDistributive("frames are defined for distributive lattice reducts only")
    principal = sorted(lat.upset_mask(j) for j in lat.join_irreducibles)
    if lat.n <= _SCAN_LIMIT:
        scanned = [m for m in range(1 << lat.n) if _is_prime_filter(lat, m)]
        if scanned != principal:  # pragma: no cover - would contradict Birkhoff duality
            raise AssertionError("prime filters disagree with join-irreducible filters")
    return principal


def frame_order(points: list[int], variant: str) -> np.ndarray:
    """``order[i, j]``: point ``i`` is below point ``j`` in the frame."""
    P = len(points)
    inc = np.array([[points[i] & ~points[j] == 0 for j in range(P)] for i in range(P)],
                   dtype=bool).reshape(P, P)
    return inc.T.copy() if variant == "contains" else inc


def _check_variant(variant: str) -> str:
    if variant not in VARIANTS:
        raise ValueError(f"unknown frame variant {variant!r}; expected one of {VARIANTS}")
    return variant


@dataclass(frozen=True, eq=False)
class Frame:
    points: tuple[int, ...]
    order: np.ndarray  # order[i, j]: i <= j
    R: np.ndarray  # R[f, g, h]
    variant: str
    n: int  # size of the underlying lattice

    @property
    def triples(self) -> list[tuple[int, int, int]]:
        return [tuple(map(int, t)) for t in np.argwhere(self.R)]

    def point_elements(self, i: int) -> list[int]:
        return _members(self.points[i], self.n)


def complex_product(alg: ResiduatedBinar, g: int, h: int) -> int:
    n = alg.n
    out = 0
    for x in _members(g, n):
        for y in _members(h, n):
            out |= 1 << int(alg.mult[x, y])
    return out


def relation(alg: ResiduatedBinar, points, variant: str) -> np.ndarray:
    lat = alg.lattice
    P = len(points)
    R = np.zeros((P, P, P), dtype=bool)
    for g, h in itertools.product(range(P), repeat=2):
        prod = complex_product(alg, points[g], points[h])
        if variant == "upset":
            up = 0
            for s in _members(prod, lat.n):
                up |= lat.upset_mask(s)
            prod = up
        for f in range(P):
            if variant == "contains":
                R[f, g, h] = prod & ~points[f] == 0
            else:
                R[f, g, h] = points[f] & ~prod == 0
    return R


def monotonicity_witness(R: np.ndarray, order: np.ndarray):
    """First ``(f, g, h, f2, g2, h2)`` breaking antitone/isotone/isotone, or ``None``."""
    P = R.shape[0]
    for f, g, h in itertools.product(range(P), repeat=3):
        if not R[f, g, h]:
            continue
        for f2, g2, h2 in itertools.product(range(P), repeat=3):
            if order[f2, f] and order[g, g2] and order[h, h2] and not R[f2, g2, h2]:
                return (f, g, h, f2, g2, h2)
    return None


def build_frame(alg: ResiduatedBinar, variant: str = DEFAULT_VARIANT) -> Frame:
    _check_variant(variant)
    points = prime_filters(alg.lattice)
    order = frame_order(points, variant)
    R = relation(alg, points, variant)
    bad = monotonicity_witness(R, order)
    if bad is not None:
        raise MonotonicityViolation(variant, bad)
    order.setflags(write=False)
    R.setflags(write=False)
    return Frame(tuple(points), order, R, variant, alg.n)


@dataclass(frozen=True)
class ConditionResult:
    holds: bool
    witness: tuple | None = None  # (x, y, p, q, j) point indices

    def __bool__(self):
        return self.holds


def frame_condition(fr: Frame, which: str) -> ConditionResult:
    """Check one of the first-order conditions for ``jr``, ``ml`` or ``lj``."""
    if which not in CONDITIONS:
        raise ValueError(f"no frame condition for {which!r}")
    R, le = fr.R, fr.order
    P = len(fr.points)
    rng = range(P)
    for x, y, p, q, j in itertools.product(rng, repeat=5):
        if which == "jr":
            pre = R[x, j, p] and R[y, j, q]
            ok = lambda z: le[x, z] and le[y, z] and (R[z, j, p] or R[z, j, q])
        elif which == "ml":
            pre = R[p, x, j] and R[q, y, j]
            ok = lambda z: le[z, x] and le[z, y] and (R[p, z, j] or R[q, z, j])
        else:
            pre = R[x, p, j] and R[y, q, j]
            ok = lambda z: le[x, z] and le[y, z] and (R[z, p, j] or R[z, q, j])
        if pre and not any(ok(z) for z in rng):
            return ConditionResult(False, (x, y, p, q, j))
    return ConditionResult(True)


@dataclass(frozen=True)
class Correspondence:
    law: str
    algebra: bool
    frame: bool

    @property
    def agree(self) -> bool:
        return self.algebra == self.frame


def correspondence_check(alg: ResiduatedBinar, variant: str = DEFAULT_VARIANT) -> list[Correspondence]:
    fr = build_frame(alg, variant)
    return [
        Correspondence(law, bool(check_law(law, alg)), bool(frame_condition(fr, law)))
        for law in CONDITIONS
    ]


@dataclass(frozen=True)
class Calibration:
    chosen: str | None
    disagreements: dict  # variant -> count
    examined: int

    def __str__(self) -> str:
        counts = ", ".join(f"{v}={c}" for v, c in self.disagreements.items())
        return (f"variant={self.chosen or 'none'} over {self.examined} algebras "
                f"(disagreements: {counts})")


def calibrate_counts(disagreements: dict, examined: int) -> Calibration:
    """Lock in the first variant (in ``VARIANTS`` order) with zero disagreements."""
    chosen = next((v for v in VARIANTS if disagreements.get(v, 1) == 0), None)
    return Calibration(chosen, dict(disagreements), examined)


def calibrate(algebras) -> Calibration:
    """Compare all variants on the given algebras using the reference checker."""
    counts = {v: 0 for v in VARIANTS}
    total = 0
    for alg in algebras:
        total += 1
        for v in VARIANTS:
            try:
                rep = correspondence_check(alg, v)
            except MonotonicityViolation:
                counts[v] += 1
                continue
            if not all(c.agree for c in rep):
                counts[v] += 1
    return calibrate_counts(counts, total)


# -- batch sweeps over enumerated algebras ------------------------------------

_VARIANT_ID = {"literal": kernels.V_LITERAL, "upset": kernels.V_UPSET,
               "contains": kernels.V_CONTAINS}
_COND_BIT = {"jr": 1, "ml": 2, "lj": 4}


@dataclass
class SweepReport:
    variant: str
    examined: int = 0
    disagreements: int = 0
    monotonicity_failures: int = 0
    rule_checked: int = 0  # frames satisfying the jr and ml conditions
    rule_failures: int = 0  # ... whose frame fails the lj condition
    first: str | None = None

    @property
    def clean(self) -> bool:
        return not (self.disagreements or self.monotonicity_failures or self.rule_failures)

    def line(self) -> str:
        tail = f" first={self.first}" if self.first else ""
        return (f"{self.variant}: {self.examined} algebras, {self.disagreements} disagreements, "
                f"{self.monotonicity_failures} non-monotone, frame rule jr+ml=>lj "
                f"{self.rule_failures}/{self.rule_checked} failures{tail}")


def frame_sweep(max_size: int, variant: str = DEFAULT_VARIANT) -> SweepReport:
    """Compare law truth and frame-condition truth on every distributive algebra."""
    from .search import analyze_lattice, enumerate_lattices

    _check_variant(variant)
    rep = SweepReport(variant)
    for n in range(1, max_size + 1):
        for li, lat in enumerate(enumerate_lattices(n, distributive_only=True)):
            pts = prime_filters(lat)
            points = np.array(pts, dtype=np.uint64)
            upmask = np.array([lat.upset_mask(x) for x in range(n)], dtype=np.uint64)
            le = np.ascontiguousarray(frame_order(pts, variant))
            batch = analyze_lattice(lat)
            conds, mono = kernels.frame_conditions(points, upmask, le, batch.tables,
                                                   _VARIANT_ID[variant])
            law = np.zeros(len(batch), dtype=np.uint8)
            for tag, bit in _COND_BIT.items():
                law |= np.where(batch.has(BIT[tag]), np.uint8(bit), np.uint8(0))
            bad = conds != law
            rule_pre = (conds & 3) == 3
            rule_bad = rule_pre & (conds & 4 == 0)
            rep.examined += len(batch)
            rep.disagreements += int(bad.sum())
            rep.monotonicity_failures += int((~mono).sum())
            rep.rule_checked += int(rule_pre.sum())
            rep.rule_failures += int(rule_bad.sum())
            if rep.first is None and (bad.any() or not mono.all() or rule_bad.any()):
                i = int(np.flatnonzero(bad | ~mono | rule_bad)[0])
                rep.first = f"n{n}.L{li}.{int(batch.index[i])}"
    return rep


def calibrate_sweep(max_size: int = 4) -> Calibration:
    """Run every variant over all distributive algebras up to ``max_size``."""
    counts, examined = {}, 0
    for v in VARIANTS:
        r = frame_sweep(max_size, v)
        counts[v] = r.disagreements + r.monotonicity_failures
        examined = r.examined
    return calibrate_counts(counts, examined)
