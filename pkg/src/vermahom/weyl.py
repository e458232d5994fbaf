"""Weyl group elements with exact action, words, length and Bruhat order.

An element is represented by its integer matrix acting on fundamental-weight
coordinates; equality and hashing go through the matrix, so words are
non-canonical witnesses.  The canonical reduced word policy is
smallest-descent-first: repeatedly peel the smallest simple index ``i`` with
``l(s_i u) < l(u)`` from the left.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, EnumerationBound, ValidationError
from .rootsystem import Root, RootSystem, Weight, weyl_group_order

DEFAULT_GROUP_BOUND = 3_628_800  # 10!
DEFAULT_WORD_LENGTH_BOUND = 16


@dataclass(frozen=True)
class WeylElem:
    """A Weyl group element; ``matrix`` acts on fundamental-weight coordinates."""

    rs: RootSystem = field(repr=False)
    matrix: tuple[tuple[int, ...], ...]

    def __mul__(self, other: "WeylElem") -> "WeylElem":
        return multiply(self, other)

    def act(self, mu: Weight) -> Weight:
        if len(mu.coords) != self.rs.rank:
            raise DomainError("weight rank does not match the root system")
        return Weight(tuple(
            sum((row[j] * mu.coords[j] for j in range(self.rs.rank)), Fraction(0))
            for row in self.matrix
        ))

    def act_on_root(self, beta: Root) -> Root:
        wc = self.rs._require(beta)
        image = tuple(
            sum(row[j] * wc[j] for j in range(self.rs.rank)) for row in self.matrix
        )
        root = self.rs._by_weight.get(image)
        if root is None:
            raise DomainError("matrix does not permute the roots")
        return root

    def inverse(self) -> "WeylElem":
        return inverse(self)

    def length(self) -> int:
        return length(self)

    @property
    def is_identity(self) -> bool:
        return self.matrix == _identity_matrix(self.rs.rank)

    def __str__(self) -> str:
        return format_word(canonical_reduced_word(self))

    def __repr__(self) -> str:
        return f"WeylElem({self.rs.spec}, {self})"


@lru_cache(maxsize=None)
def _identity_matrix(rank: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank))


def identity(rs: RootSystem) -> WeylElem:
    return WeylElem(rs, _identity_matrix(rs.rank))


def simple_reflection(rs: RootSystem, i: int) -> WeylElem:
    """The reflection in the ``i``-th simple root (1-based, Bourbaki order)."""
    if not 1 <= i <= rs.rank:
        raise DomainError(f"simple root index {i} out of range 1..{rs.rank}")
    return reflection(rs, rs.simple_roots[i - 1])


def reflection(rs: RootSystem, beta: Root) -> WeylElem:
    """The reflection in an arbitrary root ``beta``."""
    wc = rs._require(beta)
    vec = rs._coroot[beta]
    rows = []
    for j in range(rs.rank):
        row = []
        for k in range(rs.rank):
            entry = (1 if j == k else 0) - wc[j] * vec[k]
            if entry.denominator != 1:
                raise DomainError(f"{beta} does not define an integral reflection")
            row.append(int(entry))
        rows.append(tuple(row))
    return WeylElem(rs, tuple(rows))


def multiply(u: WeylElem, v: WeylElem) -> WeylElem:
    if u.rs is not v.rs:
        raise DomainError("cannot multiply elements of different root systems")
    n = u.rs.rank
    a, b = u.matrix, v.matrix
    product = tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )
    return WeylElem(u.rs, product)


@lru_cache(maxsize=None)
def inverse(u: WeylElem) -> WeylElem:
    n = u.rs.rank
    aug = [
        [Fraction(u.matrix[i][j]) for j in range(n)]
        + [Fraction(1 if i == j else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    matrix = tuple(
        tuple(int(aug[i][n + j]) for j in range(n)) for i in range(n)
    )
    return WeylElem(u.rs, matrix)


def act(u: WeylElem, mu: Weight) -> Weight:
    return u.act(mu)


@lru_cache(maxsize=None)
def length(u: WeylElem) -> int:
    """Number of positive roots sent to negative roots."""
    return sum(1 for beta in u.rs.positive_roots if not u.act_on_root(beta).is_positive)


def _left_descents(u: WeylElem, u_inv: WeylElem) -> list[int]:
    return [
        i + 1
        for i, alpha in enumerate(u.rs.simple_roots)
        if not u_inv.act_on_root(alpha).is_positive
    ]


@lru_cache(maxsize=None)
def canonical_reduced_word(u: WeylElem) -> tuple[int, ...]:
    """Deterministic reduced word: peel the smallest left descent repeatedly."""
    word = []
    cur, cur_inv = u, inverse(u)
    while True:
        descents = _left_descents(cur, cur_inv)
        if not descents:
            break
        i = descents[0]
        s = simple_reflection(cur.rs, i)
        word.append(i)
        cur = multiply(s, cur)
        cur_inv = multiply(cur_inv, s)
    if not cur.is_identity:
        raise DomainError("element is not a product of simple reflections")
    return tuple(word)


def from_word(rs: RootSystem, indices) -> WeylElem:
    """Product of simple reflections for a sequence of 1-based indices."""
    out = identity(rs)
    for i in indices:
        out = multiply(out, simple_reflection(rs, i))
    return out


def all_reduced_words(
    u: WeylElem, max_length: int = DEFAULT_WORD_LENGTH_BOUND
) -> frozenset[tuple[int, ...]]:
    """Every reduced word of ``u``, by recursion over left descents."""
    if length(u) > max_length:
        raise EnumerationBound(
            f"element has length {length(u)} > word enumeration bound {max_length}"
        )
    memo: dict[WeylElem, tuple[tuple[int, ...], ...]] = {}

    def rec(w: WeylElem) -> tuple[tuple[int, ...], ...]:
        if w.is_identity:
            return ((),)
        cached = memo.get(w)
        if cached is not None:
            return cached
        out = []
        w_inv = inverse(w)
        for i in _left_descents(w, w_inv):
            rest = multiply(simple_reflection(w.rs, i), w)
            out.extend((i,) + t for t in rec(rest))
        memo[w] = tuple(out)
        return memo[w]

    return frozenset(rec(u))


@lru_cache(maxsize=None)
def longest_element(rs: RootSystem) -> WeylElem:
    """The longest element, built greedily by right ascents."""
    u = identity(rs)
    while True:
        for i, alpha in enumerate(rs.simple_roots):
            if u.act_on_root(alpha).is_positive:
                u = multiply(u, simple_reflection(rs, i + 1))
                break
        else:
            return u


@lru_cache(maxsize=None)
def bruhat_leq(u: WeylElem, v: WeylElem) -> bool:
    """Bruhat order via the subword property (descent recursion)."""
    if u.rs is not v.rs:
        raise DomainError("cannot compare elements of different root systems")
    if u.is_identity:
        return True
    if length(u) > length(v):
        return False
    i = _left_descents(v, inverse(v))[0]
    s = simple_reflection(v.rs, i)
    sv = multiply(s, v)
    su = multiply(s, u)
    if length(su) < length(u):
        return bruhat_leq(su, sv)
    return bruhat_leq(u, sv)


@lru_cache(maxsize=None)
def enumerate_group(
    rs: RootSystem, bound: int = DEFAULT_GROUP_BOUND
) -> tuple[WeylElem, ...]:
    """All group elements, breadth-first from the identity; duplicate-free."""
    order = weyl_group_order(rs.spec)
    if order > bound:
        raise EnumerationBound(f"group of order {order} exceeds bound {bound}")
    gens = [simple_reflection(rs, i) for i in range(1, rs.rank + 1)]
    seen = {identity(rs)}
    out = [identity(rs)]
    frontier = [identity(rs)]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                ws = multiply(w, s)
                if ws not in seen:
                    seen.add(ws)
                    out.append(ws)
                    nxt.append(ws)
        frontier = nxt
    return tuple(out)


def group_order(rs: RootSystem) -> int:
    return weyl_group_order(rs.spec)


def parse_word(text: str, rank: int) -> tuple[int, ...]:
    """Parse ``"s1 s2 s1"``, ``"121"`` or ``"e"`` into simple-reflection indices."""
    body = text.strip()
    if body in ("", "e"):
        return ()
    tokens = body.split()
    indices: list[int] = []
    if len(tokens) == 1 and tokens[0].isdigit():
        indices = [int(ch) for ch in tokens[0]]
    else:
        for tok in tokens:
            t = tok[1:] if tok.startswith("s") else tok
            if not t.isdigit():
                raise ValidationError(f"cannot parse word {text!r}")
            indices.append(int(t))
    for i in indices:
        if not 1 <= i <= rank:
            raise ValidationError(f"word {text!r} uses index {i} outside 1..{rank}")
    return tuple(indices)


def format_word(indices) -> str:
    if not indices:
        return "e"
    return " ".join(f"s{i}" for i in indices)
