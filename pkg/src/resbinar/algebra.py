"""Residuated binars over finite lattices, plus the algebra file format."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .lattice import FiniteLattice, build_lattice, complements_of, lattice_predicates


class AlgebraError(ValueError):
    pass


class NotResiduated(AlgebraError):
    """The multiplication has no residual at ``(x, z)`` on ``side``."""

    def __init__(self, x: int, z: int, side: str, names=None):
        self.x, self.z, self.side = x, z, side
        label = (lambda i: names[i]) if names else str
        op = "\\" if side == "left" else "/"
        super().__init__(
            f"multiplication is not residuated: no {side} residual for "
            f"x={label(x)}, z={label(z)} (operation {op})"
        )


class UnitMismatch(AlgebraError):
    pass


class ResidualMismatch(AlgebraError):
    pass


class NoUnit(AlgebraError):
    pass


def _table(a, n: int) -> np.ndarray:
    t = np.asarray(a, dtype=np.int64)
    if t.shape != (n, n):
        raise AlgebraError(f"table must be {n}x{n}, got shape {t.shape}")
    if t.min(initial=0) < 0 or t.max(initial=0) >= n:
        raise AlgebraError("table entry out of range")
    return t.astype(np.uint8)


def _residual_candidates(lat: FiniteLattice, mult: np.ndarray):
    n = lat.n
    ldiv = np.full((n, n), lat.bot, dtype=np.uint8)
    rdiv = np.full((n, n), lat.bot, dtype=np.uint8)
    below = lat.leq[mult]  # below[x, y, z] = mult(x, y) <= z
    for x in range(n):
        for z in range(n):
            ldiv[x, z] = lat.join_of(np.flatnonzero(below[x, :, z]))
            rdiv[z, x] = lat.join_of(np.flatnonzero(below[:, x, z]))
    return ldiv, rdiv


def preserves_joins(lat: FiniteLattice, mult: np.ndarray) -> tuple[int, int, int, str] | None:
    """First ``(x, y, z, side)`` where join preservation or bot-annihilation fails.

    This is the independent route to residuation on a finite lattice.
    """
    mult = np.asarray(mult)
    n, j = lat.n, lat.join
    for x in range(n):
        if mult[x, lat.bot] != lat.bot:
            return (x, lat.bot, lat.bot, "left")
        if mult[lat.bot, x] != lat.bot:
            return (lat.bot, x, lat.bot, "right")
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if mult[x, j[y, z]] != j[mult[x, y], mult[x, z]]:
                    return (x, y, z, "left")
                if mult[j[y, z], x] != j[mult[y, x], mult[z, x]]:
                    return (x, y, z, "right")
    return None


def derive_residuals(lat: FiniteLattice, mult) -> tuple[np.ndarray, np.ndarray]:
    """Left and right residual tables of ``mult``.

    ``ldiv[x, z]`` is ``x\\z`` and ``rdiv[z, y]`` is ``z/y``.  Raises
    :class:`NotResiduated` with the first failing witness.
    """
    n = lat.n
    mult = _table(mult, n)
    ldiv, rdiv = _residual_candidates(lat, mult)
    failure = None
    for x in range(n):
        for z in range(n):
            if not lat.leq[mult[x, ldiv[x, z]], z]:
                failure = (x, z, "left")
                break
            if not lat.leq[mult[rdiv[z, x], x], z]:
                failure = (x, z, "right")
                break
        if failure:
            break
    other = preserves_joins(lat, mult)
    if (failure is None) != (other is None):  # pragma: no cover - consistency guard
        raise AssertionError(
            f"residual derivation and join-preservation disagree: {failure} vs {other}"
        )
    if failure:
        raise NotResiduated(*failure, names=lat.names)
    return ldiv, rdiv


def find_unit(mult: np.ndarray) -> int | None:
    n = mult.shape[0]
    ident = np.arange(n)
    for e in range(n):
        if np.array_equal(mult[e], ident) and np.array_equal(mult[:, e], ident):
            return e
    return None


@dataclass(frozen=True, eq=False)
class ResiduatedBinar:
    """A lattice with a residuated multiplication.

    Residuals are always derived from ``mult``; the unit is detected.
    """

    lattice: FiniteLattice
    mult: np.ndarray
    ldiv: np.ndarray
    rdiv: np.ndarray
    unit: int | None = None
    name: str = ""

    @classmethod
    def from_table(
        cls,
        lattice: FiniteLattice,
        mult,
        name: str = "",
        unit: int | None = None,
    ) -> "ResiduatedBinar":
        mult = _table(mult, lattice.n)
        ldiv, rdiv = derive_residuals(lattice, mult)
        found = find_unit(mult)
        if unit is not None and unit != found:
            raise UnitMismatch(
                f"declared unit {lattice.names[unit]!r} is not a multiplicative identity"
            )
        return cls._trusted(lattice, mult, ldiv, rdiv, found, name)

    @classmethod
    def _trusted(cls, lattice, mult, ldiv, rdiv, unit, name=""):
        tables = []
        for t in (mult, ldiv, rdiv):
            t = np.array(t, dtype=np.uint8)
            t.setflags(write=False)
            tables.append(t)
        return cls(lattice, *tables, unit=None if unit is None else int(unit), name=name)

    @property
    def n(self) -> int:
        return self.lattice.n

    @property
    def names(self) -> tuple[str, ...]:
        return self.lattice.names

    def table_equal(self, other: "ResiduatedBinar") -> bool:
        return self.lattice.same_as(other.lattice) and np.array_equal(self.mult, other.mult)

    def __repr__(self) -> str:
        label = self.name or "ResiduatedBinar"
        return f"<{label} n={self.n} unit={self.unit}>"


@dataclass(frozen=True)
class StructureFlags:
    lattice_distributive: bool
    lattice_complemented: bool
    boolean_reduct: bool
    associative: bool
    commutative: bool
    unital: bool
    integral: bool


def is_associative(mult: np.ndarray) -> bool:
    n = mult.shape[0]
    x = np.arange(n)[:, None, None]
    y = np.arange(n)[None, :, None]
    z = np.arange(n)[None, None, :]
    return bool(np.array_equal(mult[mult[x, y], z], mult[x, mult[y, z]]))


def algebra_predicates(alg: ResiduatedBinar) -> StructureFlags:
    lat = lattice_predicates(alg.lattice)
    unital = alg.unit is not None
    return StructureFlags(
        lattice_distributive=lat.distributive,
        lattice_complemented=lat.complemented,
        boolean_reduct=lat.boolean,
        associative=is_associative(alg.mult),
        commutative=bool(np.array_equal(alg.mult, alg.mult.T)),
        unital=unital,
        integral=unital and alg.unit == alg.lattice.top,
    )


def opposite_algebra(alg: ResiduatedBinar) -> ResiduatedBinar:
    """Same lattice, multiplication with arguments swapped."""
    name = alg.name[:-3] if alg.name.endswith("^op") else (alg.name + "^op" if alg.name else "")
    return ResiduatedBinar._trusted(
        alg.lattice, alg.mult.T, alg.rdiv.T, alg.ldiv.T, alg.unit, name
    )


def unit_complements(alg: ResiduatedBinar) -> list[int]:
    if alg.unit is None:
        raise NoUnit("algebra is not unital")
    return complements_of(alg.lattice, alg.unit)


# -- file format -------------------------------------------------------------


def algebra_to_dict(alg: ResiduatedBinar, residuals: bool = False) -> dict:
    names = list(alg.names)
    out = {
        "name": alg.name,
        "elements": names,
        "covers": [[names[a], names[b]] for a, b in alg.lattice.covers],
        "mult": [[names[v] for v in row] for row in alg.mult],
    }
    if alg.unit is not None:
        out["unit"] = names[alg.unit]
    if residuals:
        out["ldiv"] = [[names[v] for v in row] for row in alg.ldiv]
        out["rdiv"] = [[names[v] for v in row] for row in alg.rdiv]
    return out


def algebra_from_dict(data: dict) -> ResiduatedBinar:
    try:
        names = [str(s) for s in data["elements"]]
        covers = [tuple(c) for c in data["covers"]]
        rows = data["mult"]
    except KeyError as exc:
        raise AlgebraError(f"algebra file lacks field {exc.args[0]!r}") from None
    lat = build_lattice(names, covers)
    mult = _named_table(lat, rows, "mult")
    unit = data.get("unit")
    alg = ResiduatedBinar.from_table(
        lat, mult, name=str(data.get("name", "")), unit=None if unit is None else lat.index(unit)
    )
    for key in ("ldiv", "rdiv"):
        if key in data:
            given = _named_table(lat, data[key], key)
            if not np.array_equal(given, getattr(alg, key)):
                raise ResidualMismatch(f"{key} table does not match the derived residual")
    return alg


def _named_table(lat: FiniteLattice, rows: Sequence[Sequence[str]], what: str) -> np.ndarray:
    n = lat.n
    if len(rows) != n or any(len(r) != n for r in rows):
        raise AlgebraError(f"{what} must be an {n}x{n} array of element names")
    try:
        return np.array([[lat.index(str(v)) for v in row] for row in rows], dtype=np.uint8)
    except KeyError as exc:
        raise AlgebraError(f"{what}: {exc.args[0]}") from None


def dumps_algebra(alg: ResiduatedBinar, residuals: bool = False) -> str:
    d = algebra_to_dict(alg, residuals)
    lines = ["{"]
    items = list(d.items())
    for k, (key, value) in enumerate(items):
        comma = "," if k < len(items) - 1 else ""
        if key in ("mult", "ldiv", "rdiv"):
            rows = ",\n".join("    " + json.dumps(r, ensure_ascii=False) for r in value)
            lines.append(f'  "{key}": [\n{rows}\n  ]{comma}')
        else:
            lines.append(f'  "{key}": {json.dumps(value, ensure_ascii=False)}{comma}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def loads_algebra(text: str) -> ResiduatedBinar:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraError(f"malformed algebra file: {exc}") from None
    return algebra_from_dict(data)


def load_algebra(path) -> ResiduatedBinar:
    return loads_algebra(Path(path).read_text(encoding="utf-8"))


def save_algebra(alg: ResiduatedBinar, path, residuals: bool = False) -> None:
    Path(path).write_text(dumps_algebra(alg, residuals), encoding="utf-8")
