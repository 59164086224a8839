"""Machine-checkable catalogue of relation-algebra laws.

Every law is a closed quantified statement over relations of one carrier
size.  Small carriers are checked exhaustively (all tuples of relations,
in bit-pattern order of the flattened matrix); larger carriers are
checked by seeded randomized sampling.  Implications additionally get
constructive instances that force the antecedent, so that the evidence
is not dominated by vacuously true samples.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from enum import Enum
from itertools import product

from .rel_core import (
    Relation,
    compose,
    converse,
    equals,
    heyting,
    identity,
    is_subset,
    join,
    meet,
    star,
)

DEFAULT_BUDGET = 1 << 24
DEFAULT_DENSITIES = (0.1, 0.3, 0.5, 0.7, 0.9)


class Shape(Enum):
    EQUATION = "equation"
    INCLUSION = "inclusion"
    EQUIVALENCE = "equivalence"
    IMPLICATION = "implication"


class BudgetError(RuntimeError):
    """Raised when an exhaustive run would exceed the instance budget."""


class EnvironmentError_(ValueError):
    """Raised when an environment does not fit a law's arity or sizes."""


# A statement takes the environment relations (arity 0 laws take the
# carrier size instead) and returns whether this instance holds.
Statement = Callable[..., bool]
# A forcing generator builds an environment whose antecedent holds.
Forcer = Callable[[random.Random, int, Callable[[], float]], tuple[Relation, ...]]


@dataclass(frozen=True)
class Law:
    law_id: str
    arity: int
    shape: Shape
    statement: Statement
    antecedent: Statement | None = None
    force: Forcer | None = None


@dataclass(frozen=True)
class LawReport:
    law_id: str
    mode: str  # "exhaustive" | "randomized"
    size: int
    instances: int
    vacuous: int
    verdict: str  # "pass" | "fail"
    witness: tuple[Relation, ...] | None = None

    def summary_line(self) -> str:
        return (
            f"law={self.law_id} mode={self.mode} n={self.size} "
            f"instances={self.instances} vacuous={self.vacuous} "
            f"verdict={self.verdict}"
        )


@dataclass(frozen=True)
class CheckConfig:
    size: int
    samples: int
    seed: int
    densities: tuple[float, ...] = DEFAULT_DENSITIES

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError("carrier size must be >= 1")
        if self.samples < 1:
            raise ValueError("sample count must be >= 1")
        if not self.densities or not all(0 < p < 1 for p in self.densities):
            raise ValueError("densities must be a nonempty list of values in (0, 1)")


# ---------------------------------------------------------------------------
# Law statements


def _heyting_gc(r, s, t):
    return is_subset(meet(r, s), t) == is_subset(r, heyting(s, t))


def _converse_gc(r, s):
    return is_subset(converse(r), s) == is_subset(r, converse(s))


def _converse_compose(r, s):
    return equals(converse(compose(r, s)), compose(converse(s), converse(r)))


def _converse_identity(n):
    return equals(converse(identity(n)), identity(n))


def _modularity_left(r, s, t):
    lhs = meet(compose(r, s), t)
    rhs = compose(r, meet(s, compose(converse(r), t)))
    return is_subset(lhs, rhs)


def _modularity_right(r, s, t):
    lhs = meet(r, compose(s, t))
    rhs = compose(meet(compose(r, converse(t)), s), t)
    return is_subset(lhs, rhs)


def _star_unfold(r):
    sr = star(r)
    return is_subset(join(identity(r.size), compose(r, sr)), sr)


def _star_induction_ante(r, t):
    return is_subset(join(identity(r.size), compose(r, t)), t)


def _star_induction_cons(r, t):
    return is_subset(star(r), t)


def _star_reflexive(r):
    return is_subset(identity(r.size), star(r))


def _star_idempotent(r):
    sr = star(r)
    return equals(star(sr), sr)


def _star_transitive(r):
    sr = star(r)
    return equals(compose(sr, sr), sr)


def _star_converse(r):
    return equals(star(converse(r)), converse(star(r)))


def _star_monotonic_ante(r, s):
    return is_subset(r, s)


def _star_monotonic_cons(r, s):
    return is_subset(star(r), star(s))


def _easy_inclusion(r, s):
    ss = star(s)
    return is_subset(star(meet(r, ss)), meet(star(r), ss))


def _lemma_fused_ante(r, s, t):
    ts = star(t)
    return is_subset(meet(compose(r, heyting(s, ts)), s), ts)


def _lemma_fused_cons(r, s, t):
    return is_subset(meet(star(r), s), star(t))


def _shift_closed_ante(r, s, t=None):
    # shared antecedent of the arrow-elimination family: R~;S below S
    return is_subset(compose(converse(r), s), s)


def _lemma_elim_arrow_cons(r, s, t):
    ts = star(t)
    return is_subset(meet(compose(r, heyting(s, ts)), s), compose(r, ts))


def _lemma_main_step_ante(r, s, t):
    return equals(s, star(converse(r))) and equals(t, meet(r, s))


def _lemma_main_step_cons(r, s, t):
    ts = star(t)
    return is_subset(meet(compose(r, heyting(s, ts)), s), ts)


def _theorem_sub(r):
    rc = star(converse(r))
    return is_subset(meet(star(r), rc), star(meet(r, rc)))


def _cancellation(s, t):
    return is_subset(meet(heyting(s, t), s), t)


def _strengthened_inclusion_cons(r, s, t):
    ts = star(t)
    lhs = meet(compose(r, heyting(s, ts)), s)
    return is_subset(lhs, meet(compose(r, ts), s))


def _strengthened_equality_cons(r, s, t):
    ts = star(t)
    lhs = meet(compose(r, heyting(s, ts)), s)
    return equals(lhs, meet(compose(r, ts), s))


def _main_theorem(r):
    lhs = meet(star(r), converse(star(r)))
    rhs = star(meet(r, star(converse(r))))
    return equals(lhs, rhs)


def _implication(ante: Statement, cons: Statement) -> Statement:
    def check(*env):
        return not ante(*env) or cons(*env)

    return check


# ---------------------------------------------------------------------------
# Constructive antecedent generators for implication laws


def _random_relation(rng: random.Random, n: int, p: float) -> Relation:
    rows = []
    for _ in range(n):
        row = 0
        for j in range(n):
            if rng.random() < p:
                row |= 1 << j
        rows.append(row)
    return Relation(n, tuple(rows))


def _force_star_induction(rng, n, next_density):
    r = _random_relation(rng, n, next_density())
    x = _random_relation(rng, n, next_density())
    return (r, star(join(r, x)))


def _force_star_monotonic(rng, n, next_density):
    r = _random_relation(rng, n, next_density())
    x = _random_relation(rng, n, next_density())
    return (r, join(r, x))


def _force_shift_closed(rng, n, next_density):
    # the antecedent R~;S below S holds for S = star(converse(R))
    r = _random_relation(rng, n, next_density())
    t = _random_relation(rng, n, next_density())
    return (r, star(converse(r)), t)


def _force_starth_root(rng, n, next_density):
    r = _random_relation(rng, n, next_density())
    s = star(converse(r))
    return (r, s, meet(r, s))


# ---------------------------------------------------------------------------
# The catalogue

LAWS: dict[str, Law] = {
    law.law_id: law
    for law in [
        Law("heyting-gc", 3, Shape.EQUIVALENCE, _heyting_gc),
        Law("converse-gc", 2, Shape.EQUIVALENCE, _converse_gc),
        Law("converse-compose", 2, Shape.EQUATION, _converse_compose),
        Law("converse-identity", 0, Shape.EQUATION, _converse_identity),
        Law("modularity-left", 3, Shape.INCLUSION, _modularity_left),
        Law("modularity-right", 3, Shape.INCLUSION, _modularity_right),
        Law("star-unfold", 1, Shape.INCLUSION, _star_unfold),
        Law(
            "star-induction",
            2,
            Shape.IMPLICATION,
            _implication(_star_induction_ante, _star_induction_cons),
            antecedent=_star_induction_ante,
            force=_force_star_induction,
        ),
        Law("star-reflexive", 1, Shape.INCLUSION, _star_reflexive),
        Law("star-idempotent", 1, Shape.EQUATION, _star_idempotent),
        Law("star-transitive", 1, Shape.EQUATION, _star_transitive),
        Law("star-converse", 1, Shape.EQUATION, _star_converse),
        Law(
            "star-monotonic",
            2,
            Shape.IMPLICATION,
            _implication(_star_monotonic_ante, _star_monotonic_cons),
            antecedent=_star_monotonic_ante,
            force=_force_star_monotonic,
        ),
        Law("easy-inclusion", 2, Shape.INCLUSION, _easy_inclusion),
        Law(
            "lemma-fused",
            3,
            Shape.IMPLICATION,
            _implication(_lemma_fused_ante, _lemma_fused_cons),
            antecedent=_lemma_fused_ante,
            force=_force_starth_root,
        ),
        Law(
            "lemma-elim-arrow",
            3,
            Shape.IMPLICATION,
            _implication(_shift_closed_ante, _lemma_elim_arrow_cons),
            antecedent=_shift_closed_ante,
            force=_force_shift_closed,
        ),
        Law(
            "lemma-main-step",
            3,
            Shape.IMPLICATION,
            _implication(_lemma_main_step_ante, _lemma_main_step_cons),
            antecedent=_lemma_main_step_ante,
            force=_force_starth_root,
        ),
        Law("theorem-sub", 1, Shape.INCLUSION, _theorem_sub),
        Law("cancellation", 2, Shape.INCLUSION, _cancellation),
        Law(
            "strengthened-inclusion",
            3,
            Shape.IMPLICATION,
            _implication(_shift_closed_ante, _strengthened_inclusion_cons),
            antecedent=_shift_closed_ante,
            force=_force_shift_closed,
        ),
        Law(
            "strengthened-equality",
            3,
            Shape.IMPLICATION,
            _implication(_shift_closed_ante, _strengthened_equality_cons),
            antecedent=_shift_closed_ante,
            force=_force_shift_closed,
        ),
        Law("main-theorem", 1, Shape.EQUATION, _main_theorem),
    ]
}


def get_law(law_id: str) -> Law:
    try:
        return LAWS[law_id]
    except KeyError:
        raise KeyError(f"unknown law: {law_id!r}") from None


# ---------------------------------------------------------------------------
# Checking


def _validate_env(law: Law, env: Sequence[Relation], n: int | None) -> int:
    if len(env) != law.arity:
        raise EnvironmentError_(
            f"law {law.law_id} has arity {law.arity}, got {len(env)} relations"
        )
    if env:
        sizes = {r.size for r in env}
        if len(sizes) != 1:
            raise EnvironmentError_(f"mixed carrier sizes in environment: {sizes}")
        return env[0].size
    if n is None:
        raise EnvironmentError_(f"law {law.law_id} has arity 0; a carrier size is required")
    return n


def check_instance(law: Law, env: Sequence[Relation], n: int | None = None) -> bool:
    """Does the law hold for this environment?

    Implications are true vacuously when the antecedent fails; the
    harness, not this function, accounts for vacuity.
    """
    size = _validate_env(law, env, n)
    if law.arity == 0:
        return law.statement(size)
    return law.statement(*env)


def antecedent_holds(law: Law, env: Sequence[Relation]) -> bool:
    if law.antecedent is None:
        return True
    return law.antecedent(*env)


def _decode(n: int, code: int) -> Relation:
    mask = (1 << n) - 1
    return Relation(n, tuple((code >> (i * n)) & mask for i in range(n)))


def all_relations(n: int) -> list[Relation]:
    """Every relation on carrier n, in bit-pattern order of the matrix."""
    return [_decode(n, code) for code in range(1 << (n * n))]


def exhaustive_check(law: Law, n: int, budget: int = DEFAULT_BUDGET) -> LawReport:
    """Check the law on every tuple of relations on carrier n.

    Environments are enumerated in lexicographic bit-pattern order; the
    first failing tuple in that order is the reported witness.
    """
    total = (2 ** (n * n)) ** law.arity
    if total > budget:
        raise BudgetError(
            f"exhaustive check of {law.law_id} at n={n} requires {total} "
            f"instances, budget is {budget}"
        )
    rels = all_relations(n) if law.arity else []
    tested = 0
    vacuous = 0
    for env in product(rels, repeat=law.arity):
        tested += 1
        if law.antecedent is not None and not antecedent_holds(law, env):
            vacuous += 1
            continue
        if not check_instance(law, env, n=n):
            return LawReport(law.law_id, "exhaustive", n, tested, vacuous, "fail", env)
    return LawReport(law.law_id, "exhaustive", n, tested, vacuous, "pass")


def randomized_check(law: Law, config: CheckConfig) -> LawReport:
    """Seeded randomized check; deterministic given (law, config).

    For implication laws, odd-indexed instances are generated
    constructively so the antecedent holds; the vacuous count covers
    only the raw samples, so test quality is visible in the report.
    """
    rng = random.Random(config.seed)
    n = config.size
    counter = 0

    def next_density() -> float:
        nonlocal counter
        p = config.densities[counter % len(config.densities)]
        counter += 1
        return p

    vacuous = 0
    for idx in range(config.samples):
        forced = law.force is not None and idx % 2 == 1
        if forced:
            env = law.force(rng, n, next_density)
        else:
            env = tuple(
                _random_relation(rng, n, next_density()) for _ in range(law.arity)
            )
        if law.antecedent is not None and not antecedent_holds(law, env):
            if not forced:
                vacuous += 1
            continue
        if not check_instance(law, env, n=n):
            return LawReport(
                law.law_id, "randomized", n, idx + 1, vacuous, "fail", env
            )
    return LawReport(law.law_id, "randomized", n, config.samples, vacuous, "pass")
