"""Strongly connected components via the starth-root identity.

The SCC equivalence of an edge relation R is star(R) met with its
converse; its starth root is R met with the closure of the reversed
relation.  Both routes are implemented and cross-checked on demand.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .rel_core import (
    Relation,
    compose,
    converse,
    equals,
    identity,
    is_subset,
    meet,
    star,
)


class NotAnEquivalenceError(ValueError):
    """Raised when a partition is requested for a non-equivalence."""


@dataclass(frozen=True)
class Partition:
    """Equivalence classes in canonical form.

    Each class is sorted; classes are ordered by their minimum element,
    which is the class representative.
    """

    size: int
    representative: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    @classmethod
    def from_classes(cls, size: int, groups: Iterable[Iterable[int]]) -> "Partition":
        normalized = sorted(tuple(sorted(g)) for g in groups)
        seen: set[int] = set()
        rep = [-1] * size
        for members in normalized:
            for x in members:
                if not (0 <= x < size) or x in seen:
                    raise ValueError(f"element {x} out of range or repeated")
                seen.add(x)
                rep[x] = members[0]
        if len(seen) != size:
            raise ValueError("classes do not cover the carrier")
        return cls(size, tuple(rep), tuple(normalized))


@dataclass(frozen=True)
class CondensationDag:
    """Quotient graph over SCC classes; edges join distinct classes."""

    partition: Partition
    edges: frozenset[tuple[int, int]]


def starth_root(r: Relation) -> Relation:
    """Pairs (u, v) with an edge u->v and a path back from v to u."""
    return meet(r, star(converse(r)))


def scc_equivalence(r: Relation, cross_check: bool = False) -> Relation:
    """The mutual-reachability equivalence of the edge relation r.

    Computed as meet(star(r), converse(star(r))); with cross_check the
    starth-root route star(starth_root(r)) is computed independently and
    asserted equal (the two agree for every relation).
    """
    result = meet(star(r), converse(star(r)))
    if cross_check:
        other = star(starth_root(r))
        if not equals(result, other):
            raise AssertionError(
                f"starth-root route disagrees with closure route on {r!r}"
            )
    return result


def is_equivalence(e: Relation) -> bool:
    return (
        is_subset(identity(e.size), e)
        and equals(converse(e), e)
        and is_subset(compose(e, e), e)
    )


def equivalence_classes(e: Relation) -> Partition:
    """Partition the carrier by the equivalence e."""
    n = e.size
    if not is_subset(identity(n), e):
        raise NotAnEquivalenceError("relation is not reflexive")
    if not equals(converse(e), e):
        raise NotAnEquivalenceError("relation is not symmetric")
    if not is_subset(compose(e, e), e):
        raise NotAnEquivalenceError("relation is not transitive")
    groups = []
    seen = 0
    for x in range(n):
        if seen >> x & 1:
            continue
        row = e.rows[x]  # the class of x, as a bitmask
        seen |= row
        members = []
        while row:
            low = row & -row
            members.append(low.bit_length() - 1)
            row ^= low
        groups.append(members)
    return Partition.from_classes(n, groups)


def condense(r: Relation, cross_check: bool = False) -> CondensationDag:
    """Quotient r by its SCC equivalence; the result is acyclic."""
    part = equivalence_classes(scc_equivalence(r, cross_check=cross_check))
    rep_to_class = {members[0]: idx for idx, members in enumerate(part.classes)}
    cls_of = [rep_to_class[part.representative[x]] for x in range(r.size)]
    edges = set()
    for a, b in r.pairs():
        ca, cb = cls_of[a], cls_of[b]
        if ca != cb:
            edges.add((ca, cb))
    dag = CondensationDag(part, frozenset(edges))
    if not condensation_is_acyclic(dag):
        raise AssertionError("condensation is not acyclic")
    return dag


def condensation_is_acyclic(dag: CondensationDag) -> bool:
    """Star of the quotient relation meets its converse inside identity."""
    k = len(dag.partition.classes)
    q = Relation.from_pairs(k, dag.edges)
    sq = star(q)
    return is_subset(meet(sq, converse(sq)), identity(k))
