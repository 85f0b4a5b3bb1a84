"""Finite lattices given by their Hasse diagrams."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

MAX_ELEMENTS = 32


class LatticeError(ValueError):
    pass


class DuplicateLabel(LatticeError):
    pass


class CyclicCovers(LatticeError):
    pass


class NotALattice(LatticeError):
    def __init__(self, message: str, pair: tuple[str, str] | None = None):
        super().__init__(message)
        self.pair = pair


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


def transitive_closure(rel: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a boolean relation (Warshall)."""
    r = np.array(rel, dtype=bool)
    np.fill_diagonal(r, True)
    for k in range(r.shape[0]):
        r |= r[:, k : k + 1] & r[k : k + 1, :]
    return r


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    """A finite lattice on elements ``0..n-1``.

    ``leq[i, j]`` is ``i <= j``; ``meet`` and ``join`` are ``uint8`` tables.
    Instances are immutable and are normally made with :func:`build_lattice`
    or :meth:`from_leq`.
    """

    names: tuple[str, ...]
    leq: np.ndarray
    meet: np.ndarray
    join: np.ndarray
    bot: int
    top: int
    join_irreducibles: tuple[int, ...]
    _index: dict = field(repr=False, compare=False, default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown element {name!r}") from None

    @property
    def covers(self) -> list[tuple[int, int]]:
        """Hasse edges ``(lower, upper)``."""
        lt = self.leq & ~np.eye(self.n, dtype=bool)
        out = []
        for i in range(self.n):
            for j in range(self.n):
                if lt[i, j] and not np.any(lt[i, :] & lt[:, j]):
                    out.append((i, j))
        return out

    def lower_covers(self, x: int) -> list[int]:
        return [i for i, j in self.covers if j == x]

    def downset_mask(self, x: int) -> int:
        return sum(1 << i for i in range(self.n) if self.leq[i, x])

    def upset_mask(self, x: int) -> int:
        return sum(1 << i for i in range(self.n) if self.leq[x, i])

    def join_of(self, elements) -> int:
        acc = self.bot
        for x in elements:
            acc = int(self.join[acc, x])
        return acc

    def meet_of(self, elements) -> int:
        acc = self.top
        for x in elements:
            acc = int(self.meet[acc, x])
        return acc

    def linear_extension(self) -> list[int]:
        """Elements sorted so that ``x <= y`` implies ``x`` comes first."""
        sizes = self.leq.sum(axis=0)  # size of each downset
        return sorted(range(self.n), key=lambda x: (int(sizes[x]), x))

    def same_as(self, other: "FiniteLattice") -> bool:
        return self.names == other.names and np.array_equal(self.leq, other.leq)

    @classmethod
    def from_leq(cls, leq, names: Sequence[str] | None = None) -> "FiniteLattice":
        leq = np.asarray(leq, dtype=bool)
        n = leq.shape[0]
        if names is None:
            names = [str(i) for i in range(n)]
        names = tuple(str(s) for s in names)
        if len(set(names)) != len(names):
            raise DuplicateLabel("element labels must be distinct")
        if not 1 <= n <= MAX_ELEMENTS:
            raise LatticeError(f"element count must be in 1..{MAX_ELEMENTS}, got {n}")
        if not np.all(np.diag(leq)):
            raise LatticeError("order is not reflexive")
        anti = leq & leq.T & ~np.eye(n, dtype=bool)
        if anti.any():
            i, j = map(int, np.argwhere(anti)[0])
            raise CyclicCovers(f"{names[i]} and {names[j]} lie on a cycle")
        if not np.array_equal(transitive_closure(leq), leq):
            raise LatticeError("order is not transitive")
        meet = np.zeros((n, n), dtype=np.uint8)
        join = np.zeros((n, n), dtype=np.uint8)
        for x in range(n):
            for y in range(x, n):
                join[x, y] = join[y, x] = _bound(leq, x, y, names, upper=True)
                meet[x, y] = meet[y, x] = _bound(leq, x, y, names, upper=False)
        bot = int(np.flatnonzero(leq.all(axis=1))[0]) if leq.all(axis=1).any() else None
        top = int(np.flatnonzero(leq.all(axis=0))[0]) if leq.all(axis=0).any() else None
        if bot is None or top is None:  # unreachable once all bounds exist
            raise NotALattice("no global bottom or top")
        lt = leq & ~np.eye(n, dtype=bool)
        ji = []
        for x in range(n):
            if x == bot:
                continue
            below = np.flatnonzero(lt[:, x])
            covers = [i for i in below if not np.any(lt[i, :] & lt[:, x])]
            if len(covers) == 1:
                ji.append(x)
        lat = cls(
            names=names,
            leq=_frozen(leq),
            meet=_frozen(meet),
            join=_frozen(join),
            bot=bot,
            top=top,
            join_irreducibles=tuple(ji),
            _index={s: i for i, s in enumerate(names)},
        )
        for x in range(n):
            below = [j for j in ji if leq[j, x]]
            if lat.join_of(below) != x:  # pragma: no cover - finite lattices always satisfy this
                raise LatticeError(f"{names[x]} is not a join of join-irreducibles")
        return lat

    def __repr__(self) -> str:
        return f"FiniteLattice(n={self.n}, names={list(self.names)})"


def _bound(leq: np.ndarray, x: int, y: int, names, upper: bool) -> int:
    if upper:
        cands = np.flatnonzero(leq[x, :] & leq[y, :])
        best = [c for c in cands if leq[c, cands].all()]
        kind = "join"
    else:
        cands = np.flatnonzero(leq[:, x] & leq[:, y])
        best = [c for c in cands if leq[cands, c].all()]
        kind = "meet"
    if len(best) != 1:
        raise NotALattice(
            f"{names[x]} and {names[y]} have no unique {kind}", (names[x], names[y])
        )
    return int(best[0])


def build_lattice(names: Sequence[str], covers: Sequence[tuple[str, str]]) -> FiniteLattice:
    """Build a lattice from element labels and Hasse edges ``(lower, upper)``."""
    names = [str(s) for s in names]
    if len(set(names)) != len(names):
        dup = next(s for s in names if names.count(s) > 1)
        raise DuplicateLabel(f"duplicate element label {dup!r}")
    idx = {s: i for i, s in enumerate(names)}
    n = len(names)
    rel = np.zeros((n, n), dtype=bool)
    for lo, hi in covers:
        if lo not in idx or hi not in idx:
            raise LatticeError(f"cover ({lo}, {hi}) names an unknown element")
        if lo == hi:
            raise CyclicCovers(f"self-loop on {lo}")
        rel[idx[lo], idx[hi]] = True
    return FiniteLattice.from_leq(transitive_closure(rel), names)


def chain(n: int) -> FiniteLattice:
    names = [str(i) for i in range(n)]
    return build_lattice(names, [(names[i], names[i + 1]) for i in range(n - 1)])


class LatticeFlags(NamedTuple):
    distributive: bool
    complemented: bool
    boolean: bool


def is_distributive(lat: FiniteLattice) -> bool:
    m, j = lat.meet, lat.join
    x = np.arange(lat.n)[:, None, None]
    y = np.arange(lat.n)[None, :, None]
    z = np.arange(lat.n)[None, None, :]
    lhs = m[x, j[y, z]]
    rhs = j[m[x, y], m[x, z]]
    return bool(np.array_equal(lhs, rhs))


def complements_of(lat: FiniteLattice, x: int) -> list[int]:
    """All ``x'`` with ``x ^ x' = bot`` and ``x v x' = top``."""
    return [
        c
        for c in range(lat.n)
        if lat.meet[x, c] == lat.bot and lat.join[x, c] == lat.top
    ]


def lattice_predicates(lat: FiniteLattice) -> LatticeFlags:
    dist = is_distributive(lat)
    comp = all(complements_of(lat, x) for x in range(lat.n))
    return LatticeFlags(dist, comp, dist and comp)
