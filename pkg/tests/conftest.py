"""Shared test helpers: brute-force oracles over pair sets, generators,
and the deliberately corrupted law used by the fault-detection tests.

The pair-set oracles work on plain Python sets of (i, j) tuples and
share no code with the packed-bit implementation they check.
"""

import random

import pytest

from relcalc.laws import Law, Shape
from relcalc.rel_core import Relation, converse, equals, meet, star


# ---------------------------------------------------------------------------
# Independent pair-set oracles


def pairs_of(r):
    return set(r.pairs())


def rel_of(n, pairs):
    return Relation.from_pairs(n, pairs)


def pairs_compose(a, b):
    return {(i, k) for (i, j) in a for (j2, k) in b if j == j2}


def pairs_converse(a):
    return {(j, i) for (i, j) in a}


def pairs_star(n, a):
    closed = {(i, i) for i in range(n)} | set(a)
    while True:
        step = pairs_compose(closed, closed)
        if step <= closed:
            return closed
        closed |= step


# ---------------------------------------------------------------------------
# Deterministic random relations


def random_relation(rng, n, p):
    rows = []
    for _ in range(n):
        row = 0
        for j in range(n):
            if rng.random() < p:
                row |= 1 << j
        rows.append(row)
    return Relation(n, tuple(rows))


def random_relations(seed, count, n, p=0.4):
    rng = random.Random(seed)
    return [random_relation(rng, n, p) for _ in range(count)]


def random_graph_edges(rng, n, p):
    return {(u, v) for u in range(n) for v in range(n) if rng.random() < p}


# ---------------------------------------------------------------------------
# Fault-injection fixture: the main theorem with the outer star dropped
# on the starth-root side.  Any nonempty cycle-free check catches it.


def _broken_main_theorem_statement(r):
    lhs = meet(star(r), converse(star(r)))
    rhs = meet(r, star(converse(r)))  # star deliberately omitted
    return equals(lhs, rhs)


@pytest.fixture
def broken_main_theorem():
    return Law(
        "broken-main-theorem", 1, Shape.EQUATION, _broken_main_theorem_statement
    )
