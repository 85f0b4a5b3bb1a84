"""Terms and statements over {^, v, *, \\, /, e, bot, top}.

Surface syntax::

    x*(y v z) = x*y v x*z
    e <= x\\y v y\\x

Precedence tiers, tightest first: ``*``; then ``\\`` and ``/``; then ``^`` and
``v``.  Operators within a tier are left-associative.  ``·``, ``∧``, ``∨``,
``⊥``, ``⊤`` and ``≤`` are accepted as aliases.  ``v`` is an operator, so it
cannot be used as a variable name.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Union

import numpy as np

from .algebra import NoUnit, ResiduatedBinar

OPS = ("meet", "join", "prod", "ldiv", "rdiv")
SYMBOL = {"meet": "^", "join": "v", "prod": "*", "ldiv": "\\", "rdiv": "/"}
TIER = {"meet": 1, "join": 1, "ldiv": 2, "rdiv": 2, "prod": 3}
CONSTANTS = ("e", "bot", "top")


@dataclass(frozen=True)
class Var:
    name: str

    def __post_init__(self):
        if not self.name:
            raise ValueError("variable name must be nonempty")


@dataclass(frozen=True)
class Const:
    name: str  # one of CONSTANTS

    def __post_init__(self):
        if self.name not in CONSTANTS:
            raise ValueError(f"unknown constant {self.name!r}")


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Term"
    right: "Term"

    def __post_init__(self):
        if self.op not in OPS:
            raise ValueError(f"unknown operation {self.op!r}")


Term = Union[Var, Const, Binary]


@dataclass(frozen=True)
class Statement:
    kind: str  # "equation" or "inequation"
    lhs: Term
    rhs: Term

    def __post_init__(self):
        if self.kind not in ("equation", "inequation"):
            raise ValueError(f"unknown statement kind {self.kind!r}")

    def __str__(self) -> str:
        return format_term(self)


def meet(a, b):
    return Binary("meet", a, b)


def join(a, b):
    return Binary("join", a, b)


def prod(a, b):
    return Binary("prod", a, b)


def ldiv(a, b):
    return Binary("ldiv", a, b)


def rdiv(a, b):
    return Binary("rdiv", a, b)


# -- parsing -----------------------------------------------------------------


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class TermSyntaxError(ParseError):
    pass


class AdjacentOperators(ParseError):
    pass


class UnbalancedParens(ParseError):
    pass


_ALIASES = {"·": "*", "∧": "^", "∨": "v", "≤": "<=", "⊥": "bot", "⊤": "top"}
_TOKEN = re.compile(
    r"\s*(?:(<=|[=*\\/^()·∧∨≤⊥⊤])|([A-Za-z_][A-Za-z0-9_']*)|(\S))"
)
_BINOPS = {"*": "prod", "\\": "ldiv", "/": "rdiv", "^": "meet", "v": "join"}


def _tokens(src: str) -> list[tuple[str, str, int]]:
    out = []
    for m in _TOKEN.finditer(src):
        sym, ident, bad = m.groups()
        if bad is not None:
            raise TermSyntaxError(f"unexpected character {bad!r}", m.start(3))
        if sym is not None:
            sym = _ALIASES.get(sym, sym)
            if sym in ("bot", "top"):
                out.append(("ident", sym, m.start(1)))
                continue
            kind = "op" if sym in _BINOPS else sym
            out.append((kind, sym, m.start(1)))
        elif ident is not None:
            kind = "op" if ident == "v" else "ident"
            out.append((kind, ident, m.start(2)))
    out.append(("end", "", len(src)))
    return out


class _Parser:
    def __init__(self, src: str):
        self.toks = _tokens(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expr(self, min_tier: int = 1) -> Term:
        left = self.atom()
        while True:
            kind, sym, pos = self.peek()
            if kind != "op":
                return left
            op = _BINOPS[sym]
            tier = TIER[op]
            if tier < min_tier:
                return left
            self.take()
            right = self.expr(tier + 1)
            left = Binary(op, left, right)

    def atom(self) -> Term:
        kind, sym, pos = self.take()
        if kind == "ident":
            if sym in CONSTANTS:
                return Const(sym)
            return Var(sym)
        if kind == "(":
            inner = self.expr()
            k, s, p = self.take()
            if k != ")":
                raise UnbalancedParens("expected ')'", p)
            return inner
        if kind == "op":
            raise AdjacentOperators(f"operator {sym!r} has no left operand", pos)
        if kind == ")":
            raise UnbalancedParens("unexpected ')'", pos)
        if kind == "end":
            raise TermSyntaxError("unexpected end of input", pos)
        raise TermSyntaxError(f"unexpected {sym!r}", pos)


def parse(src: str) -> Term | Statement:
    """Parse a term, or a statement when the text contains ``=`` or ``<=``."""
    p = _Parser(src)
    lhs = p.expr()
    kind, sym, pos = p.peek()
    if kind in ("=", "<="):
        p.take()
        rhs = p.expr()
        result: Term | Statement = Statement(
            "equation" if kind == "=" else "inequation", lhs, rhs
        )
        kind, sym, pos = p.peek()
    else:
        result = lhs
    if kind == ")":
        raise UnbalancedParens("unmatched ')'", pos)
    if kind != "end":
        raise TermSyntaxError(f"unexpected {sym!r}", pos)
    return result


def parse_statement(src: str) -> Statement:
    s = parse(src)
    if not isinstance(s, Statement):
        raise TermSyntaxError("expected '=' or '<='", len(src))
    return s


# -- printing ----------------------------------------------------------------


def format_term(t: Term | Statement) -> str:
    if isinstance(t, Statement):
        rel = "=" if t.kind == "equation" else "<="
        return f"{format_term(t.lhs)} {rel} {format_term(t.rhs)}"
    if isinstance(t, (Var, Const)):
        return t.name
    tier = TIER[t.op]
    left = format_term(t.left)
    right = format_term(t.right)
    if isinstance(t.left, Binary):
        lt = TIER[t.left.op]
        # mixed operators of one tier are bracketed for readability
        if lt < tier or (lt == tier and t.left.op != t.op):
            left = f"({left})"
    if isinstance(t.right, Binary) and TIER[t.right.op] <= tier:
        right = f"({right})"
    sym = SYMBOL[t.op]
    if tier == 1:
        return f"{left} {sym} {right}"
    return f"{left}{sym}{right}"


# -- opposites ---------------------------------------------------------------

_OPPOSITE_OP = {"prod": "prod", "meet": "meet", "join": "join", "ldiv": "rdiv", "rdiv": "ldiv"}


def opposite_term(t: Term) -> Term:
    if isinstance(t, (Var, Const)):
        return t
    return Binary(_OPPOSITE_OP[t.op], opposite_term(t.right), opposite_term(t.left))


def opposite_statement(s: Statement) -> Statement:
    return Statement(s.kind, opposite_term(s.lhs), opposite_term(s.rhs))


def as_equation(s: Statement) -> Statement:
    """``s <= t`` rewritten as ``s v t = t``; equations pass through."""
    if s.kind == "equation":
        return s
    return Statement("equation", join(s.lhs, s.rhs), s.rhs)


# -- evaluation --------------------------------------------------------------


class UnboundVariable(KeyError):
    pass


def variables(t: Term | Statement) -> list[str]:
    """Variable names in order of first appearance (lhs before rhs)."""
    seen: dict[str, None] = {}

    def walk(u):
        if isinstance(u, Var):
            seen.setdefault(u.name)
        elif isinstance(u, Binary):
            walk(u.left)
            walk(u.right)

    if isinstance(t, Statement):
        walk(t.lhs)
        walk(t.rhs)
    else:
        walk(t)
    return list(seen)


def mentions_unit(t: Term | Statement) -> bool:
    if isinstance(t, Statement):
        return mentions_unit(t.lhs) or mentions_unit(t.rhs)
    if isinstance(t, Const):
        return t.name == "e"
    if isinstance(t, Binary):
        return mentions_unit(t.left) or mentions_unit(t.right)
    return False


def _tables(alg: ResiduatedBinar) -> dict:
    lat = alg.lattice
    return {"meet": lat.meet, "join": lat.join, "prod": alg.mult,
            "ldiv": alg.ldiv, "rdiv": alg.rdiv}


def _constant(alg: ResiduatedBinar, name: str) -> int:
    if name == "bot":
        return alg.lattice.bot
    if name == "top":
        return alg.lattice.top
    if alg.unit is None:
        raise NoUnit("term mentions e but the algebra has no unit")
    return alg.unit


def evaluate(t: Term, alg: ResiduatedBinar, env: dict) -> int:
    """Value of ``t`` under ``env`` (variable name -> element index)."""
    if isinstance(t, Var):
        try:
            return int(env[t.name])
        except KeyError:
            raise UnboundVariable(t.name) from None
    if isinstance(t, Const):
        return _constant(alg, t.name)
    table = _tables(alg)[t.op]
    return int(table[evaluate(t.left, alg, env), evaluate(t.right, alg, env)])


def evaluate_grid(t: Term, alg: ResiduatedBinar, order: list[str]) -> np.ndarray:
    """Values of ``t`` on every assignment, as an array with one axis per variable."""
    k = len(order)
    n = alg.n
    axes = {}
    for i, v in enumerate(order):
        shape = [1] * k
        shape[i] = n
        axes[v] = np.arange(n, dtype=np.intp).reshape(shape)
    tables = _tables(alg)

    def go(u):
        if isinstance(u, Var):
            try:
                return axes[u.name]
            except KeyError:
                raise UnboundVariable(u.name) from None
        if isinstance(u, Const):
            return np.full([1] * k, _constant(alg, u.name), dtype=np.intp)
        return tables[u.op][go(u.left), go(u.right)]

    return np.broadcast_to(go(t), (n,) * k)


@dataclass(frozen=True)
class CheckResult:
    holds: bool
    witness: dict | None = None  # variable name -> element index
    lhs_value: int | None = None
    rhs_value: int | None = None

    def __bool__(self) -> bool:
        return self.holds

    def describe(self, alg: ResiduatedBinar) -> str:
        if self.holds:
            return "Holds"
        names = alg.names
        parts = " ".join(f"{k}={names[v]}" for k, v in self.witness.items())
        return (f"Fails: {parts} (lhs={names[self.lhs_value]}, "
                f"rhs={names[self.rhs_value]})")


def check_statement(s: Statement, alg: ResiduatedBinar) -> CheckResult:
    """Exhaustive check; the witness is the first failure in lexicographic order."""
    if isinstance(s, str):
        s = parse_statement(s)
    order = variables(s)
    lhs = evaluate_grid(s.lhs, alg, order)
    rhs = evaluate_grid(s.rhs, alg, order)
    if s.kind == "equation":
        ok = lhs == rhs
    else:
        ok = alg.lattice.leq[lhs, rhs]
    flat = np.asarray(ok).ravel()
    if flat.all():
        return CheckResult(True)
    idx = int(np.argmin(flat))
    point = np.unravel_index(idx, (alg.n,) * len(order))
    witness = {v: int(p) for v, p in zip(order, point)}
    return CheckResult(False, witness, int(lhs.ravel()[idx]), int(rhs.ravel()[idx]))


def check_statement_naive(s: Statement, alg: ResiduatedBinar) -> CheckResult:
    """Reference checker: scalar recursion, no tables cached, plain loops."""
    order = variables(s)
    leq = alg.lattice.leq
    for point in itertools.product(range(alg.n), repeat=len(order)):
        env = dict(zip(order, point))
        a = evaluate(s.lhs, alg, env)
        b = evaluate(s.rhs, alg, env)
        ok = a == b if s.kind == "equation" else bool(leq[a, b])
        if not ok:
            return CheckResult(False, env, a, b)
    return CheckResult(True)


def holds_batch(s: Statement, lattice, mult, ldiv, rdiv, units=None, chunk: int = 2048) -> np.ndarray:
    """Truth of ``s`` on each algebra of a batch sharing one lattice.

    ``mult``, ``ldiv`` and ``rdiv`` have shape ``(B, n, n)``; ``units`` gives
    the unit of each algebra and is needed only when ``s`` mentions ``e``.
    """
    if isinstance(s, str):
        s = parse_statement(s)
    order = variables(s)
    k, n, B = len(order), lattice.n, len(mult)
    if mentions_unit(s):
        if units is None or (np.asarray(units) < 0).any():
            raise NoUnit("statement mentions e but some algebra has no unit")
    axes = {}
    for i, v in enumerate(order):
        shape = [1] * (k + 1)
        shape[i + 1] = n
        axes[v] = np.arange(n, dtype=np.intp).reshape(shape)
    out = np.empty(B, dtype=bool)
    for start in range(0, B, chunk):
        sl = slice(start, start + chunk)
        nb = len(mult[sl])
        bidx = np.arange(nb).reshape([nb] + [1] * k)
        batch = {"prod": mult[sl], "ldiv": ldiv[sl], "rdiv": rdiv[sl]}
        lat_tabs = {"meet": lattice.meet, "join": lattice.join}

        def go(u):
            if isinstance(u, Var):
                return axes[u.name]
            if isinstance(u, Const):
                if u.name == "e":
                    return np.asarray(units[sl], dtype=np.intp).reshape([nb] + [1] * k)
                val = lattice.bot if u.name == "bot" else lattice.top
                return np.full([1] * (k + 1), val, dtype=np.intp)
            a, b = go(u.left), go(u.right)
            if u.op in lat_tabs:
                return lat_tabs[u.op][a, b]
            return batch[u.op][bidx, a, b]

        lhs, rhs = go(s.lhs), go(s.rhs)
        ok = lhs == rhs if s.kind == "equation" else lattice.leq[lhs, rhs]
        ok = np.broadcast_to(ok, (nb,) + (n,) * k)
        out[sl] = ok.reshape(nb, -1).all(axis=1)
    return out


def random_term(rng, depth: int, names=("x", "y", "z"), constants=CONSTANTS) -> Term:
    """A random term of depth at most ``depth`` (used by tests)."""
    if depth == 0 or rng.random() < 0.25:
        if rng.random() < 0.2:
            return Const(constants[rng.integers(len(constants))])
        return Var(names[rng.integers(len(names))])
    op = OPS[rng.integers(len(OPS))]
    return Binary(op, random_term(rng, depth - 1, names, constants),
                  random_term(rng, depth - 1, names, constants))


def subterms(t: Term) -> Iterator[Term]:
    yield t
    if isinstance(t, Binary):
        yield from subterms(t.left)
        yield from subterms(t.right)
