"""
Exact half-integer weights and roots of B_m in the epsilon basis.

Weights are always carried in the rho-shifted convention: the label of the
generalized Verma module with highest weight ``lam - delta`` is ``lam``.
Coordinates are stored doubled, so every value is a plain Python int.

>>> lam = parse_weight("[3/2,-1/2|3,2,1]")
>>> str(reflect(lam, Root.sum(1, 2)))
'[1/2,-3/2|3,2,1]'
>>> pairing(lam, Root.short(1))
HalfInt(3)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterator, Sequence

__all__ = [
    "HalfInt", "Weight", "Root", "ParabolicContext", "WeightParseError",
    "pairing", "reflect", "delta", "grading_eval", "is_p_dominant_integral_shifted",
    "dominant_rep", "is_singular", "positive_roots", "simple_roots", "parse_weight",
    "format_twice",
]


@total_ordering
@dataclass(frozen=True, slots=True)
class HalfInt:
    """An element of (1/2)Z, stored as twice its value."""

    twice: int

    @classmethod
    def of(cls, value: int | str | HalfInt) -> HalfInt:
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, int):
            return cls(2 * value)
        return cls(_parse_twice(value))

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def is_positive_integer(self) -> bool:
        return self.twice % 2 == 0 and self.twice > 0

    def __add__(self, other: HalfInt) -> HalfInt:
        return HalfInt(self.twice + other.twice)

    def __sub__(self, other: HalfInt) -> HalfInt:
        return HalfInt(self.twice - other.twice)

    def __neg__(self) -> HalfInt:
        return HalfInt(-self.twice)

    def __abs__(self) -> HalfInt:
        return HalfInt(abs(self.twice))

    def __lt__(self, other: HalfInt) -> bool:
        return self.twice < other.twice

    def __int__(self) -> int:
        if self.twice % 2:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def __str__(self) -> str:
        return format_twice(self.twice)

    def __repr__(self) -> str:
        return f"HalfInt({self})"


def format_twice(t: int) -> str:
    """Render a doubled value as ``p/2`` or a plain integer."""
    return f"{t}/2" if t % 2 else str(t // 2)


_TOKEN = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class WeightParseError(ValueError):
    pass


def _parse_twice(token: str) -> int:
    m = _TOKEN.match(token)
    if m is None:
        raise WeightParseError(f"malformed coordinate {token!r}")
    num = int(m.group(1))
    if m.group(2) is None:
        return 2 * num
    den = int(m.group(2))
    if den == 1:
        return 2 * num
    if den != 2:
        raise WeightParseError(f"{token!r} is not a half-integer")
    return num


@dataclass(frozen=True, slots=True)
class Weight:
    """A weight ``[a_1,...,a_k | b_1,...,b_r]``; ``twice`` holds doubled coordinates."""

    twice: tuple[int, ...]
    split: int

    def __post_init__(self):
        if not 0 <= self.split <= len(self.twice):
            raise ValueError(f"split {self.split} out of range for rank {len(self.twice)}")

    @classmethod
    def from_values(cls, values: Sequence[int | str | HalfInt], split: int) -> Weight:
        return cls(tuple(HalfInt.of(v).twice for v in values), split)

    @property
    def rank(self) -> int:
        return len(self.twice)

    @property
    def coords(self) -> tuple[HalfInt, ...]:
        return tuple(HalfInt(t) for t in self.twice)

    @property
    def first(self) -> tuple[int, ...]:
        return self.twice[: self.split]

    @property
    def second(self) -> tuple[int, ...]:
        return self.twice[self.split:]

    def with_twice(self, twice: tuple[int, ...]) -> Weight:
        return Weight(twice, self.split)

    def __sub__(self, other: Weight) -> Weight:
        return Weight(tuple(a - b for a, b in zip(self.twice, other.twice, strict=True)), self.split)

    def __str__(self) -> str:
        a = ",".join(format_twice(t) for t in self.first)
        b = ",".join(format_twice(t) for t in self.second)
        return f"[{a}|{b}]" if self.split else f"[{b}]"

    def __repr__(self) -> str:
        return f"Weight({self})"


def parse_weight(text: str) -> Weight:
    """Inverse of ``str(Weight)``. A missing ``|`` means an empty first block."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise WeightParseError(f"weight must be bracketed: {text!r}")
    body = s[1:-1]
    parts = body.split("|")
    if len(parts) > 2:
        raise WeightParseError(f"more than one block separator in {text!r}")
    if len(parts) == 1:
        parts = ["", parts[0]]
    blocks = [[_parse_twice(tok) for tok in p.split(",")] if p.strip() else [] for p in parts]
    return Weight(tuple(blocks[0] + blocks[1]), len(blocks[0]))


@dataclass(frozen=True, slots=True, order=True)
class Root:
    """Positive root of B_m: ``diff`` e_i - e_j, ``sum`` e_i + e_j, ``short`` e_i (1-based, i < j)."""

    kind: str
    i: int
    j: int = 0

    @classmethod
    def diff(cls, i: int, j: int) -> Root:
        if not i < j:
            raise ValueError("need i < j")
        return cls("diff", i, j)

    @classmethod
    def sum(cls, i: int, j: int) -> Root:
        if not i < j:
            raise ValueError("need i < j")
        return cls("sum", i, j)

    @classmethod
    def short(cls, i: int) -> Root:
        return cls("short", i)

    def vector(self, m: int) -> tuple[int, ...]:
        v = [0] * m
        v[self.i - 1] = 1
        if self.kind == "diff":
            v[self.j - 1] = -1
        elif self.kind == "sum":
            v[self.j - 1] = 1
        return tuple(v)

    def __str__(self) -> str:
        if self.kind == "short":
            return f"e{self.i}"
        sign = "-" if self.kind == "diff" else "+"
        return f"e{self.i}{sign}e{self.j}"


def positive_roots(m: int) -> Iterator[Root]:
    """All m**2 positive roots, in a fixed order."""
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            yield Root("diff", i, j)
            yield Root("sum", i, j)
        yield Root("short", i)


def simple_roots(m: int) -> list[Root]:
    """alpha_1..alpha_{m-1} = e_i - e_{i+1}, alpha_m = e_m."""
    return [Root("diff", i, i + 1) for i in range(1, m)] + [Root("short", m)]


@dataclass(frozen=True, slots=True)
class ParabolicContext:
    """so(n + 2k) with the k-th simple root crossed."""

    k: int
    n: int

    def __post_init__(self):
        if self.n < 3 or self.n % 2 == 0:
            raise ValueError(f"n must be odd and >= 3, got {self.n}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")

    @property
    def m(self) -> int:
        return self.k + (self.n - 1) // 2

    @property
    def levi_simple_roots(self) -> list[Root]:
        """Delta minus Sigma."""
        return [a for idx, a in enumerate(simple_roots(self.m), 1) if idx != self.k]


def _pairing_twice(t: Sequence[int], beta: Root) -> int:
    i = beta.i - 1
    if beta.kind == "diff":
        return t[i] - t[beta.j - 1]
    if beta.kind == "sum":
        return t[i] + t[beta.j - 1]
    return 2 * t[i]


def pairing(lam: Weight, beta: Root) -> HalfInt:
    """lam(H_beta) = 2(lam, beta)/(beta, beta)."""
    return HalfInt(_pairing_twice(lam.twice, beta))


def _reflect_twice(t: tuple[int, ...], beta: Root) -> tuple[int, ...]:
    out = list(t)
    i = beta.i - 1
    if beta.kind == "diff":
        j = beta.j - 1
        out[i], out[j] = t[j], t[i]
    elif beta.kind == "sum":
        j = beta.j - 1
        out[i], out[j] = -t[j], -t[i]
    else:
        out[i] = -t[i]
    return tuple(out)


def reflect(lam: Weight, beta: Root) -> Weight:
    """s_beta(lam) = lam - lam(H_beta) beta."""
    return lam.with_twice(_reflect_twice(lam.twice, beta))


def delta(ctx: ParabolicContext) -> Weight:
    m = ctx.m
    return Weight(tuple(2 * (m - i) - 1 for i in range(m)), ctx.k)


def grading_eval(lam: Weight) -> HalfInt:
    """Value on the grading element: sum of the first-block coordinates."""
    return HalfInt(sum(lam.first))


def is_p_dominant_integral_shifted(lam: Weight, ctx: ParabolicContext) -> bool:
    """Membership in P_p^{++} + delta for the pair fixed by ``ctx``."""
    if lam.rank != ctx.m:
        raise ValueError(f"rank {lam.rank} does not match context rank {ctx.m}")
    a, b = lam.twice[: ctx.k], lam.twice[ctx.k:]
    if any(x <= y for x, y in zip(a, a[1:])):
        return False
    if any(x <= y for x, y in zip(b, b[1:])) or (b and b[-1] <= 0):
        return False
    if len({x % 2 for x in a}) > 1 or len({x % 2 for x in b}) > 1:
        return False
    return True


def dominant_rep(lam: Weight) -> Weight:
    """The g-dominant weight on the W-orbit of ``lam``."""
    return lam.with_twice(tuple(sorted((abs(t) for t in lam.twice), reverse=True)))


def is_singular(lam: Weight) -> bool:
    absvals = [abs(t) for t in lam.twice]
    return 0 in absvals or len(set(absvals)) < len(absvals)
