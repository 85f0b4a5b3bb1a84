"""The named distributive laws, their mirror pairing and implication rules."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .algebra import NoUnit, ResiduatedBinar
from .terms import CheckResult, Statement, check_statement, parse_statement

ALWAYS_VALID = ("fj", "jf", "lm", "mr", "rj", "jl")
NONTRIVIAL = ("fm", "mf", "lj", "jr", "ml", "rm")
UNITAL = ("lp", "rp", "ed")
ALL_LAWS = ALWAYS_VALID + NONTRIVIAL + UNITAL

# bit position of each law in profile masks and kernel outputs
BIT = {tag: i for i, tag in enumerate(ALL_LAWS)}

DISPLAY = {
    "fj": "(·∨)", "jf": "(∨·)", "lm": "(\\∧)", "mr": "(∧/)", "rj": "(/∨)", "jl": "(∨\\)",
    "fm": "(·∧)", "mf": "(∧·)", "lj": "(\\∨)", "jr": "(∨/)", "ml": "(∧\\)", "rm": "(/∧)",
    "lp": "(lp)", "rp": "(rp)", "ed": "(ed)",
}

SOURCE = {
    "fj": "x*(y v z) = x*y v x*z",
    "jf": "(x v y)*z = x*z v y*z",
    "lm": "x\\(y ^ z) = x\\y ^ x\\z",
    "mr": "(x ^ y)/z = x/z ^ y/z",
    "rj": "x/(y v z) = x/y ^ x/z",
    "jl": "(x v y)\\z = x\\z ^ y\\z",
    "fm": "x*(y^z) = x*y ^ x*z",
    "mf": "(x ^ y)*z = x*z ^ y*z",
    "lj": "x\\(y v z) = x\\y v x\\z",
    "jr": "(x v y)/z = x/z v y/z",
    "ml": "(x ^ y)\\z = x\\z v y\\z",
    "rm": "x/(y ^ z) = x/y v x/z",
    "lp": "e <= x\\y v y\\x",
    "rp": "e <= x/y v y/x",
    "ed": "(x v y)^e = (x^e) v (y^e)",
}

MIRROR = {
    "fj": "jf", "jf": "fj", "lm": "mr", "mr": "lm", "rj": "jl", "jl": "rj",
    "fm": "mf", "mf": "fm", "lj": "jr", "jr": "lj", "ml": "rm", "rm": "ml",
    "lp": "rp", "rp": "lp", "ed": "ed",
}

COMPANION_SOURCE = {
    "fm": "x*z ^ y*w <= (x v y)*(z ^ w)",
    "mf": "x*z ^ y*w <= (x ^ y)*(z v w)",
    "lj": "(x v y)\\(z v w) <= x\\z v y\\w",
    "jr": "(z v w)/(x v y) <= z/x v w/y",
    "ml": "(x ^ y)\\(z ^ w) <= x\\z v y\\w",
    "rm": "(z ^ w)/(x ^ y) <= z/x v w/y",
}


class UnknownLaw(KeyError):
    pass


class UnsupportedLaw(ValueError):
    pass


class AlwaysValidLawFailed(AssertionError):
    pass


@dataclass(frozen=True)
class Rule:
    premises: frozenset
    conclusion: str

    def __str__(self) -> str:
        prem = ",".join(sorted(self.premises, key=ALL_LAWS.index))
        return f"{{{prem}}} => {self.conclusion}"


def _rule(a: str, b: str, c: str) -> Rule:
    return Rule(frozenset((a, b)), c)


RULES: tuple[Rule, ...] = (
    _rule("jr", "ml", "lj"),
    _rule("lj", "rm", "jr"),
    _rule("fm", "jr", "rm"),
    _rule("mf", "lj", "ml"),
    _rule("ml", "fm", "mf"),
    _rule("rm", "mf", "fm"),
)


def check_tag(tag: str) -> str:
    if tag not in BIT:
        raise UnknownLaw(f"unknown law {tag!r}; expected one of {', '.join(ALL_LAWS)}")
    return tag


@lru_cache(maxsize=None)
def law_statement(tag: str) -> Statement:
    return parse_statement(SOURCE[check_tag(tag)])


@lru_cache(maxsize=None)
def lemma22_equivalent(tag: str) -> Statement:
    """The four-variable inequality equivalent to a nontrivial law."""
    check_tag(tag)
    if tag not in COMPANION_SOURCE:
        raise UnsupportedLaw(f"{tag} has no four-variable companion")
    return parse_statement(COMPANION_SOURCE[tag])


def mirror(laws: Iterable[str]) -> frozenset:
    return frozenset(MIRROR[t] for t in laws)


def closure(laws: Iterable[str], rules: Iterable[Rule] = RULES) -> frozenset:
    """Least superset of ``laws`` closed under ``rules``."""
    rules = tuple(rules)
    out = set(laws)
    for tag in out:
        check_tag(tag)
    changed = True
    while changed:
        changed = False
        for r in rules:
            if r.premises <= out and r.conclusion not in out:
                out.add(r.conclusion)
                changed = True
    return frozenset(out)


def is_closed(laws: Iterable[str], rules: Iterable[Rule] = RULES) -> bool:
    s = frozenset(laws)
    return closure(s, rules) == s


def to_mask(laws: Iterable[str]) -> int:
    m = 0
    for t in laws:
        m |= 1 << BIT[check_tag(t)]
    return m


def from_mask(mask: int, universe: Iterable[str] = ALL_LAWS) -> frozenset:
    return frozenset(t for t in universe if mask >> BIT[t] & 1)


def sort_tags(tags: Iterable[str]) -> list[str]:
    return sorted(tags, key=ALL_LAWS.index)


def parse_tags(text: str | None) -> frozenset:
    if not text:
        return frozenset()
    return frozenset(check_tag(t.strip()) for t in text.split(",") if t.strip())


@dataclass(frozen=True)
class LawProfile:
    """Nontrivial laws an algebra satisfies; unital laws are ``None`` when not applicable."""

    laws: frozenset
    lp: bool | None = None
    rp: bool | None = None
    ed: bool | None = None

    @property
    def mask(self) -> int:
        return to_mask(self.laws)

    def __str__(self) -> str:
        body = ",".join(sort_tags(self.laws)) or "-"
        extra = [f"{k}={'yes' if v else 'no'}" for k, v in
                 (("lp", self.lp), ("rp", self.rp), ("ed", self.ed)) if v is not None]
        return "{" + body + "}" + (" " + " ".join(extra) if extra else "")


def check_law(tag: str, alg: ResiduatedBinar) -> CheckResult:
    return check_statement(law_statement(tag), alg)


def law_profile(alg: ResiduatedBinar) -> LawProfile:
    for tag in ALWAYS_VALID:
        res = check_law(tag, alg)
        if not res:
            raise AlwaysValidLawFailed(
                f"{tag} fails on {alg!r} at {res.witness}; the algebra is corrupt"
            )
    laws = frozenset(t for t in NONTRIVIAL if check_law(t, alg))
    if alg.unit is None:
        return LawProfile(laws)
    return LawProfile(laws, *(bool(check_law(t, alg)) for t in UNITAL))


@dataclass(frozen=True)
class UnitalReport:
    lp: bool
    rp: bool
    ed: bool
    # (premise, conclusion) -> "vacuous" | "true" | "violated"; only filled when ed holds
    implications: dict

    @property
    def respected(self) -> bool:
        return all(v != "violated" for v in self.implications.values())


ED_IMPLICATIONS = (("rm", "lp"), ("jr", "lp"), ("ml", "rp"), ("lj", "rp"))


def unital_checks(alg: ResiduatedBinar) -> UnitalReport:
    if alg.unit is None:
        raise NoUnit("unital checks need a multiplicative identity")
    truth = {t: bool(check_law(t, alg)) for t in ("lp", "rp", "ed", "rm", "jr", "ml", "lj")}
    implications = {}
    if truth["ed"]:
        for prem, concl in ED_IMPLICATIONS:
            if not truth[prem]:
                implications[(prem, concl)] = "vacuous"
            else:
                implications[(prem, concl)] = "true" if truth[concl] else "violated"
    return UnitalReport(truth["lp"], truth["rp"], truth["ed"], implications)
