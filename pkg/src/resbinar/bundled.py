"""The seven reference models A1..A7 shipped with the package."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

import numpy as np

from .algebra import ResiduatedBinar, load_algebra, loads_algebra

MODEL_IDS = ("A1", "A2", "A3", "A4", "A5", "A6", "A7")

_DIAMOND = (("bot", "a", "b", "top"),
            (("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")))
_FIVE_TOP = (("bot", "a", "b", "c", "top"),
             (("bot", "a"), ("bot", "b"), ("a", "c"), ("b", "c"), ("c", "top")))
_FIVE_BOT = (("bot", "a", "b", "c", "top"),
             (("bot", "c"), ("c", "a"), ("c", "b"), ("a", "top"), ("b", "top")))
_A7_LATTICE = (("bot", "a", "b", "e", "top"),
               (("bot", "a"), ("bot", "b"), ("a", "e"), ("b", "e"), ("e", "top")))

# Multiplication tables exactly as printed, rows/columns in element order.
REFERENCE = {
    "A1": (_DIAMOND, """
        bot bot bot bot
        bot bot bot bot
        bot bot top top
        bot bot top top"""),
    "A2": (_DIAMOND, """
        bot bot bot bot
        bot bot bot bot
        bot a   b   top
        bot a   b   top"""),
    "A3": (_DIAMOND, """
        bot bot bot bot
        bot bot a   a
        bot bot b   b
        bot bot top top"""),
    "A4": (_FIVE_TOP, """
        bot bot bot bot bot
        bot top bot top top
        bot b   bot b   b
        bot top bot top top
        bot top bot top top"""),
    "A5": (_FIVE_TOP, """
        bot bot bot bot bot
        bot top b   top top
        bot bot bot bot bot
        bot top b   top top
        bot top b   top top"""),
    "A6": (_FIVE_BOT, """
        bot bot bot bot bot
        bot a   bot bot a
        bot bot b   bot b
        bot bot bot bot bot
        bot a   b   bot top"""),
    "A7": (_A7_LATTICE, """
        bot bot bot bot bot
        bot a   bot a   e
        bot bot b   b   top
        bot a   b   e   top
        bot a   top top top"""),
}


def reference_table(model_id: str) -> tuple[tuple, tuple, list[list[str]]]:
    """``(elements, covers, mult rows)`` for a model, as printed."""
    (names, covers), text = REFERENCE[model_id]
    rows = [line.split() for line in text.strip().splitlines()]
    return names, covers, rows


def bundle_text(model_id: str) -> str:
    return resources.files(__package__).joinpath(f"models/{model_id}.alg").read_text("utf-8")


def load_bundled(model_id: str, directory: str | Path | None = None) -> ResiduatedBinar:
    model_id = normalize_id(model_id)
    if directory is not None:
        return load_algebra(Path(directory) / f"{model_id}.alg")
    return loads_algebra(bundle_text(model_id))


def load_all(directory=None) -> dict[str, ResiduatedBinar]:
    return {m: load_bundled(m, directory) for m in MODEL_IDS}


def normalize_id(name: str) -> str:
    stem = Path(str(name)).name
    if stem.endswith(".alg"):
        stem = stem[:-4]
    stem = stem.upper()
    if stem not in MODEL_IDS:
        raise KeyError(f"no bundled model {name!r}")
    return stem


def matches_reference(alg: ResiduatedBinar, model_id: str) -> str | None:
    """``None`` if ``alg`` equals the printed table cell for cell, else a reason."""
    names, covers, rows = reference_table(model_id)
    if tuple(alg.names) != tuple(names):
        return f"elements {list(alg.names)} differ from {list(names)}"
    ref_cov = sorted((names.index(a), names.index(b)) for a, b in covers)
    if sorted(alg.lattice.covers) != ref_cov:
        return "lattice covers differ"
    expected = np.array([[names.index(v) for v in row] for row in rows])
    diff = np.argwhere(alg.mult != expected)
    if len(diff):
        i, j = map(int, diff[0])
        return (f"mult[{names[i]}][{names[j]}] is {names[alg.mult[i, j]]}, "
                f"expected {names[expected[i, j]]}")
    return None
