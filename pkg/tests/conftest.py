import pytest

from resbinar.bundled import MODEL_IDS, load_bundled
from resbinar.lattice import build_lattice


@pytest.fixture(scope="session")
def models():
    return {m: load_bundled(m) for m in MODEL_IDS}


@pytest.fixture(scope="session")
def diamond():
    return build_lattice(["bot", "a", "b", "top"],
                         [("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")])


@pytest.fixture(scope="session")
def fig4():
    # bot < a, b < e < top
    return build_lattice(["bot", "a", "b", "e", "top"],
                         [("bot", "a"), ("bot", "b"), ("a", "e"), ("b", "e"), ("e", "top")])


@pytest.fixture(scope="session")
def m3():
    return build_lattice(["bot", "a", "b", "c", "top"],
                         [("bot", "a"), ("bot", "b"), ("bot", "c"),
                          ("a", "top"), ("b", "top"), ("c", "top")])
