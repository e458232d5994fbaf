"""Integral-root machinery attached to a weight.

For a weight ``lam``, the roots pairing integrally with ``lam`` form a root
subsystem.  This module computes its positive part, simple system, reflection
subgroup data (membership, length, longest element), the stabilizer of the
weight, and the normalization that replaces an arbitrary group element by one
of the subgroup realizing the same induced positive system.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import DomainError, EnumerationBound
from .rootsystem import Root, RootSystem, Weight
from .weyl import (
    DEFAULT_GROUP_BOUND,
    DEFAULT_WORD_LENGTH_BOUND,
    WeylElem,
    enumerate_group,
    identity,
    inverse,
    multiply,
    reflection,
)


@dataclass(frozen=True)
class IntegralData:
    """The integral root subsystem of a weight, with its group data.

    ``simple_roots`` is the simple system of the positive part (its
    indecomposable elements), ordered lexicographically by root coordinates,
    which fixes the canonical reduced-word policy for subgroup elements.
    ``stabilizer_gens`` are the simple members pairing to zero with the
    weight; for a dominant weight their reflections generate the stabilizer.
    """

    rs: RootSystem = field(repr=False)
    weight: Weight
    positive_roots: tuple[Root, ...]
    simple_roots: tuple[Root, ...]
    longest_element: WeylElem
    stabilizer_gens: tuple[Root, ...]

    def root_set(self) -> frozenset[Root]:
        return frozenset(self.positive_roots) | frozenset(
            -r for r in self.positive_roots
        )


@lru_cache(maxsize=None)
def integral_data(rs: RootSystem, lam: Weight) -> IntegralData:
    """Compute the integral subsystem data of ``lam``."""
    if len(lam.coords) != rs.rank:
        raise DomainError("weight rank does not match the root system")
    pos = tuple(
        b for b in rs.positive_roots if rs.pairing(b, lam).denominator == 1
    )
    pos_set = {b.coords for b in pos}
    simples = tuple(sorted(
        p for p in pos
        if not any(
            tuple(pc - qc for pc, qc in zip(p.coords, q.coords)) in pos_set
            for q in pos
            if q != p
        )
    ))
    longest = identity(rs)
    while True:
        for beta in simples:
            if longest.act_on_root(beta).is_positive:
                longest = multiply(longest, reflection(rs, beta))
                break
        else:
            break
    gens = tuple(b for b in simples if rs.pairing(b, lam) == 0)
    return IntegralData(rs, lam, pos, simples, longest, gens)


def in_integral_group(w: WeylElem, data: IntegralData) -> bool:
    """Membership test: the element moves the weight within the root lattice.

    This lattice characterization coincides with membership in the reflection
    subgroup of the integral roots (the test suite sweeps the coincidence
    exhaustively at small rank).  The coarser weight-lattice condition would
    not: already in rank one, a weight with a half-integral coroot pairing is
    moved by the reflection through minus one fundamental weight, while its
    integral root system is empty.
    """
    return data.rs.in_root_lattice(w.act(data.weight) - data.weight)


def integral_length(w: WeylElem, data: IntegralData) -> int:
    """Inversion count over the integral positive roots."""
    if not in_integral_group(w, data):
        raise DomainError("element is not in the integral Weyl group of the weight")
    return sum(
        1 for beta in data.positive_roots if not w.act_on_root(beta).is_positive
    )


def canonical_integral_word(w: WeylElem, data: IntegralData) -> tuple[Root, ...]:
    """Canonical reduced word of a subgroup element over the integral simples.

    Peels the first descent in the fixed ordering of ``data.simple_roots``
    from the left; deterministic, and downstream consumers are insensitive to
    the choice (a tested invariant).
    """
    if not in_integral_group(w, data):
        raise DomainError("element is not in the integral Weyl group of the weight")
    word: list[Root] = []
    cur, cur_inv = w, inverse(w)
    while True:
        for beta in data.simple_roots:
            if not cur_inv.act_on_root(beta).is_positive:
                s = reflection(data.rs, beta)
                word.append(beta)
                cur = multiply(s, cur)
                cur_inv = multiply(cur_inv, s)
                break
        else:
            break
    if not cur.is_identity:
        raise DomainError(
            "element satisfies the lattice condition but is not a product of "
            "integral reflections"
        )
    return tuple(word)


def all_integral_words(
    w: WeylElem, data: IntegralData, max_length: int = DEFAULT_WORD_LENGTH_BOUND
) -> frozenset[tuple[Root, ...]]:
    """Every reduced word of ``w`` over the integral simple system."""
    if integral_length(w, data) > max_length:
        raise EnumerationBound(
            f"integral length exceeds word enumeration bound {max_length}"
        )
    memo: dict[WeylElem, tuple[tuple[Root, ...], ...]] = {}

    def rec(u: WeylElem) -> tuple[tuple[Root, ...], ...]:
        if u.is_identity:
            return ((),)
        cached = memo.get(u)
        if cached is not None:
            return cached
        u_inv = inverse(u)
        out = []
        for beta in data.simple_roots:
            if not u_inv.act_on_root(beta).is_positive:
                rest = multiply(reflection(data.rs, beta), u)
                out.extend((beta,) + t for t in rec(rest))
        memo[u] = tuple(out)
        return memo[u]

    return frozenset(rec(w))


@lru_cache(maxsize=None)
def integral_group_elements(
    data: IntegralData, bound: int = DEFAULT_GROUP_BOUND
) -> tuple[WeylElem, ...]:
    """All elements of the integral Weyl group, by closure over its simples."""
    gens = [reflection(data.rs, b) for b in data.simple_roots]
    return _closure(data.rs, gens, bound)


def _closure(rs: RootSystem, gens, bound: int) -> tuple[WeylElem, ...]:
    seen = {identity(rs)}
    out = [identity(rs)]
    frontier = [identity(rs)]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                ws = multiply(w, s)
                if ws not in seen:
                    if len(seen) >= bound:
                        raise EnumerationBound(
                            f"subgroup closure exceeds bound {bound}"
                        )
                    seen.add(ws)
                    out.append(ws)
                    nxt.append(ws)
        frontier = nxt
    return tuple(out)


@lru_cache(maxsize=None)
def stabilizer_elements(
    data: IntegralData, bound: int = DEFAULT_GROUP_BOUND
) -> frozenset[WeylElem]:
    """The subgroup fixing the weight.

    For a dominant weight this is the closure of the zero-pairing simple
    reflections; otherwise it falls back to filtering the full group.  The
    two paths agree on dominant weights (cross-checked in the test suite).
    """
    if data.rs.is_dominant(data.weight):
        gens = [reflection(data.rs, b) for b in data.stabilizer_gens]
        return frozenset(_closure(data.rs, gens, bound))
    return frozenset(
        w for w in enumerate_group(data.rs, bound) if w.act(data.weight) == data.weight
    )


def reduce_parameters(w: WeylElem, lam: Weight) -> WeylElem:
    """Replace ``w`` by a subgroup element inducing the same positive system.

    Returns the unique ``w'`` in the integral Weyl group of ``lam`` such that
    the image of the positive roots under ``w^{-1}``, intersected with the
    integral subsystem, equals the ``w'``-preimage of the integral positive
    part.  For ``w`` already in the subgroup this is ``w`` itself; for an
    empty integral subsystem it is the identity.
    """
    rs = w.rs
    data = integral_data(rs, lam)
    target = frozenset(data.positive_roots)
    if not target:
        return identity(rs)
    rootset = data.root_set()
    w_inv = inverse(w)
    current = {
        b for b in (w_inv.act_on_root(a) for a in rs.positive_roots) if b in rootset
    }
    u = identity(rs)
    while current != target:
        for beta in data.simple_roots:
            if -beta in current:
                s = reflection(rs, beta)
                current = {s.act_on_root(x) for x in current}
                u = multiply(s, u)
                break
        else:
            raise DomainError("induced set is not a positive system")
    return u


def dominant_representative(rs: RootSystem, lam: Weight) -> tuple[Weight, WeylElem]:
    """The dominant weight in the integral-group orbit, with a witness.

    Returns ``(dom, v)`` with ``v`` a product of integral simple reflections
    and ``v(lam) = dom`` dominant (no positive root pairs with it to a
    negative integer).  Deterministic: always reflects at the first violating
    integral simple root.
    """
    data = integral_data(rs, lam)
    cur = lam
    v = identity(rs)
    while True:
        for beta in data.simple_roots:
            if rs.pairing(beta, cur) < 0:  # integral by construction
                cur = rs.reflect(beta, cur)
                v = multiply(reflection(rs, beta), v)
                break
        else:
            return cur, v
