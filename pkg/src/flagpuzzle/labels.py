"""Multinumbers, single-number strings, flag shapes and the Bruhat order."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence, Union


@dataclass(frozen=True)
class Leaf:
    digit: int

    def __str__(self):
        return str(self.digit)


@dataclass(frozen=True)
class Node:
    left: "Multinumber"
    right: "Multinumber"

    def __str__(self):
        return print_multinumber(self)


Multinumber = Union[Leaf, Node]


class ParseError(ValueError):
    pass


def parse_multinumber(text: str, d: int | None = None) -> Multinumber:
    """Parse '2(10)', '((32)1)0', ... into a binary tree.

    The grammar is M := A B, with A, B a digit or a parenthesised M;
    a bare digit is a leaf.
    """
    s = text.strip()
    if not s:
        raise ParseError("empty multinumber")
    pos = 0

    def atom() -> Multinumber:
        nonlocal pos
        if pos >= len(s):
            raise ParseError(f"unexpected end of {text!r}")
        ch = s[pos]
        if ch.isdigit():
            pos += 1
            dig = int(ch)
            if d is not None and dig > d:
                raise ParseError(f"digit {dig} exceeds d={d}")
            return Leaf(dig)
        if ch == "(":
            pos += 1
            m = pair()
            if pos >= len(s) or s[pos] != ")":
                raise ParseError(f"unbalanced parentheses in {text!r}")
            pos += 1
            return m
        raise ParseError(f"unexpected {ch!r} in {text!r}")

    def pair() -> Multinumber:
        a = atom()
        b = atom()
        return Node(a, b)

    if len(s) == 1:
        m = atom()
    else:
        m = pair()
    if pos != len(s):
        raise ParseError(f"trailing input in {text!r}")
    if s[0] == "(" and _outer_wrapped(s):
        raise ParseError(f"top level must not be parenthesised: {text!r}")
    return m


def _outer_wrapped(s: str) -> bool:
    depth = 0
    for i, ch in enumerate(s):
        depth += ch == "("
        depth -= ch == ")"
        if depth == 0:
            return i == len(s) - 1
    return False


def print_multinumber(m: Multinumber) -> str:
    if isinstance(m, Leaf):
        return str(m.digit)

    def child(c):
        return str(c.digit) if isinstance(c, Leaf) else f"({print_multinumber(c)})"
    return child(m.left) + child(m.right)


def card(m: Multinumber) -> int:
    """|X|: the number of digit leaves."""
    if isinstance(m, Leaf):
        return 1
    return card(m.left) + card(m.right)


def maxdigit(m: Multinumber) -> int:
    if isinstance(m, Leaf):
        return m.digit
    return max(maxdigit(m.left), maxdigit(m.right))


def leaves(m: Multinumber) -> list[int]:
    if isinstance(m, Leaf):
        return [m.digit]
    return leaves(m.left) + leaves(m.right)


def is_single(m: Multinumber) -> bool:
    return isinstance(m, Leaf)


# strings -------------------------------------------------------------------------

String = tuple  # tuple of digits


def as_string(s: Union[str, Sequence[int]]) -> tuple[int, ...]:
    if isinstance(s, str):
        return tuple(int(c) for c in s)
    return tuple(int(c) for c in s)


def string_str(s: Sequence[int]) -> str:
    return "".join(str(c) for c in s)


def inversions(s: Sequence[int]) -> int:
    """#{i<j : s_i > s_j}."""
    s = as_string(s)
    return sum(1 for i in range(len(s)) for j in range(i + 1, len(s)) if s[i] > s[j])


def content(s: Sequence[int], d: int | None = None) -> tuple[int, ...]:
    s = as_string(s)
    top = max(s, default=0) if d is None else d
    return tuple(s.count(i) for i in range(top + 1))


def bruhat_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Bruhat order on strings of equal content (dominance of the prefix counts)."""
    a, b = as_string(a), as_string(b)
    if sorted(a) != sorted(b):
        raise ValueError("content mismatch")
    top = max(a, default=0)
    for c in range(1, top + 1):
        ca = cb = 0
        for x, y in zip(a, b):
            ca += x >= c
            cb += y >= c
            if ca > cb:
                return False
    return True


def permutation_of(s: Sequence[int]) -> tuple[int, ...]:
    """Minimal lift sigma (1-indexed) with sigma(i) = position of the i-th letter of the sorted string.

    Row i of the sorted string omega carries digit omega_i; sigma sends it to the
    column where the same occurrence of that digit sits in s.
    """
    s = as_string(s)
    positions: dict[int, list[int]] = {}
    for pos, c in enumerate(s, start=1):
        positions.setdefault(c, []).append(pos)
    out = []
    for c in sorted(positions):
        out.extend(positions[c])
    return tuple(out)


def refine(coarse: Sequence[int], splitting: dict[int, Sequence[tuple[int, int]]]) -> tuple[int, ...]:
    """Refine a coarse string keeping its inversion number.

    `splitting[c]` lists (fine digit, multiplicity) pairs for coarse digit c, in
    increasing order of fine digit; within the positions of c the fine digits
    are placed weakly increasing from left to right.
    """
    coarse = as_string(coarse)
    out = list(coarse)
    for c in set(coarse):
        parts = splitting.get(c, [(c, coarse.count(c))])
        fine = []
        for digit, mult in parts:
            fine.extend([digit] * mult)
        pos = [i for i, x in enumerate(coarse) if x == c]
        if len(fine) != len(pos):
            raise ValueError(f"splitting of {c} has size {len(fine)}, expected {len(pos)}")
        if fine != sorted(fine):
            raise ValueError("fine digits must be listed in increasing order")
        for i, f in zip(pos, fine):
            out[i] = f
    return tuple(out)


@dataclass(frozen=True)
class FlagShape:
    """Content (p_0, ..., p_d) of a d-step flag manifold."""
    p: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.p) - 1

    @property
    def n(self) -> int:
        return sum(self.p)

    @property
    def partial_sums(self) -> tuple[int, ...]:
        out, t = [0], 0
        for x in self.p:
            t += x
            out.append(t)
        return tuple(out)

    @property
    def dim(self) -> int:
        """D = sum_{i<j} p_i p_j."""
        return sum(self.p[i] * self.p[j] for i in range(len(self.p)) for j in range(i + 1, len(self.p)))

    @property
    def omega(self) -> tuple[int, ...]:
        return tuple(i for i, m in enumerate(self.p) for _ in range(m))

    @property
    def top(self) -> tuple[int, ...]:
        return tuple(reversed(self.omega))

    @cached_property
    def strings(self) -> tuple[tuple[int, ...], ...]:
        """All strings of this content, sorted by (length, lexicographic)."""
        return tuple(sorted(set(_multiset_perms(self.omega)), key=lambda s: (inversions(s), s)))

    def __contains__(self, s) -> bool:
        s = as_string(s)
        return len(s) == self.n and content(s, self.d) == self.p

    @classmethod
    def of(cls, s: Sequence[int], d: int | None = None) -> "FlagShape":
        return cls(content(s, d))

    @classmethod
    def parse(cls, text: str) -> "FlagShape":
        return cls(tuple(int(x) for x in text.split(",")))

    def __str__(self):
        return ",".join(map(str, self.p))


def _multiset_perms(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    items = sorted(items)
    n = len(items)
    if n == 0:
        yield ()
        return
    counts: dict[int, int] = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    cur: list[int] = []

    def rec():
        if len(cur) == n:
            yield tuple(cur)
            return
        for x in sorted(counts):
            if counts[x]:
                counts[x] -= 1
                cur.append(x)
                yield from rec()
                cur.pop()
                counts[x] += 1
    yield from rec()


def shapes(d: int, n_max: int, n_min: int = 1, allow_zero: bool = False) -> list[FlagShape]:
    """All contents with d+1 parts and total in [n_min, n_max]."""
    lo = 0 if allow_zero else 1
    out = []

    def rec(prefix):
        if len(prefix) == d + 1:
            if n_min <= sum(prefix) <= n_max:
                out.append(FlagShape(tuple(prefix)))
            return
        for x in range(lo, n_max - sum(prefix) + 1):
            rec(prefix + [x])
    rec([])
    return out
