"""Probabilistic dominance constraints over payoff symbols.

A constraint asserts p(left > right) for two payoff symbols. Constraints that
are exact with probability 1 ("certain") induce a strict partial order used by
the dominance oracle; everything below probability 1, and every lower-bound
constraint, is soft information reserved for the probability calculus and
never answers an order query.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import (
    InconsistentOrderError,
    MissingProbabilityError,
    SamplingExhaustedError,
    UnknownSymbolError,
    ValidationError,
)

BOUND_EXACT = "exact"
BOUND_LOWER = "lower"

# hard cap on rejection-sampling attempts, per draw
SAMPLING_ATTEMPT_CAP = 1_000_000
_SAMPLING_BATCH = 256


@dataclass(frozen=True)
class DominanceConstraint:
    """One assertion about payoff order: p(left > right) = probability.

    ``bound`` distinguishes a point probability ("exact") from an exclusive
    lower bound ("lower"). Only exact probability-1 constraints are certain.
    """

    left: str
    right: str
    probability: float
    bound: str = BOUND_EXACT
    group: Optional[str] = None

    def __post_init__(self):
        if not self.left or not self.right:
            raise ValidationError("constraint symbols must be non-empty ids")
        if self.left == self.right:
            raise ValidationError(
                f"constraint compares {self.left!r} with itself"
            )
        if not 0.0 <= self.probability <= 1.0:
            raise ValidationError(
                f"p({self.left} > {self.right}) = {self.probability!r} "
                "is outside [0, 1]"
            )
        if self.bound not in (BOUND_EXACT, BOUND_LOWER):
            raise ValidationError(f"unknown bound kind {self.bound!r}")

    @property
    def certain(self) -> bool:
        return self.bound == BOUND_EXACT and self.probability == 1.0


def _bfs_path(adjacency, start, goal):
    """Shortest directed path start -> goal as a node list, or None."""
    if start == goal:
        return [start]
    seen = {start}
    queue = deque([(start, None)])
    parents = {}
    while queue:
        node, _ = queue.popleft()
        for nxt in adjacency.get(node, ()):
            if nxt in seen:
                continue
            parents[nxt] = node
            if nxt == goal:
                path = [goal]
                while path[-1] != start:
                    path.append(parents[path[-1]])
                path.reverse()
                return path
            seen.add(nxt)
            queue.append((nxt, None))
    return None


class ConstraintSet:
    """An immutable collection of dominance constraints.

    The certain constraints must form a DAG; the induced strict partial order
    (their transitive closure) is what ``implies`` answers from. Instances
    never mutate: ``add_constraint`` returns a new set.

    If ``universe`` is given, every constraint must stay inside it and order
    queries on ids outside it raise ``UnknownSymbolError``. Without a
    universe the set is open: any id may be queried and unseen ids simply
    compare as unknown.
    """

    def __init__(
        self,
        constraints: Iterable[DominanceConstraint] = (),
        universe: Optional[Iterable[str]] = None,
    ):
        self._constraints: Tuple[DominanceConstraint, ...] = tuple(constraints)
        self._universe: Optional[FrozenSet[str]] = (
            frozenset(universe) if universe is not None else None
        )

        if self._universe is not None:
            for c in self._constraints:
                for sym in (c.left, c.right):
                    if sym not in self._universe:
                        raise ValidationError(
                            f"constraint p({c.left} > {c.right}) uses symbol "
                            f"{sym!r} outside the bound universe"
                        )

        # exact probabilities per ordered pair; conflicting duplicates are
        # ambiguous input and rejected outright
        self._exact: Dict[Tuple[str, str], float] = {}
        for c in self._constraints:
            if c.bound != BOUND_EXACT:
                continue
            pair = (c.left, c.right)
            stored = self._exact.get(pair)
            if stored is not None and stored != c.probability:
                raise ValidationError(
                    f"conflicting probabilities for {c.left} > {c.right}: "
                    f"{stored!r} and {c.probability!r}"
                )
            self._exact[pair] = c.probability

        # grow the certain digraph edge by edge so the first constraint that
        # closes a directed cycle is the one reported
        adjacency: Dict[str, set] = {}
        for c in self._constraints:
            if not c.certain:
                continue
            back = _bfs_path(adjacency, c.right, c.left)
            if back is not None:
                # back runs right -> ... -> left, so prepending left spells
                # out the full dominance cycle
                raise InconsistentOrderError([c.left] + back)
            adjacency.setdefault(c.left, set()).add(c.right)

        # full reachability over certain edges, frozen
        nodes = set(adjacency)
        for targets in adjacency.values():
            nodes.update(targets)
        if self._universe is not None:
            nodes.update(self._universe)
        reach: Dict[str, FrozenSet[str]] = {}
        for node in nodes:
            seen: set = set()
            queue = deque(adjacency.get(node, ()))
            while queue:
                nxt = queue.popleft()
                if nxt in seen:
                    continue
                seen.add(nxt)
                queue.extend(adjacency.get(nxt, ()))
            reach[node] = frozenset(seen)
        self._reach = reach

    @property
    def constraints(self) -> Tuple[DominanceConstraint, ...]:
        return self._constraints

    @property
    def universe(self) -> Optional[FrozenSet[str]]:
        return self._universe

    @property
    def symbols(self) -> FrozenSet[str]:
        """Every id the set knows about (universe, or mentioned symbols)."""
        if self._universe is not None:
            return self._universe
        return frozenset(self._reach)

    @property
    def certain_order(self) -> FrozenSet[Tuple[str, str]]:
        """The induced strict partial order as closed (greater, lesser) pairs."""
        return frozenset(
            (a, b) for a, descendants in self._reach.items() for b in descendants
        )

    def add_constraint(self, constraint: DominanceConstraint) -> "ConstraintSet":
        """A new set with one more constraint; self is left untouched."""
        return ConstraintSet(
            self._constraints + (constraint,),
            universe=self._universe,
        )

    def _check_known(self, *ids: str):
        if self._universe is None:
            return
        for sym in ids:
            if sym not in self._universe:
                raise UnknownSymbolError(f"unknown payoff symbol {sym!r}")

    def implies(self, left: str, right: str) -> Optional[bool]:
        """Does the certain order decide left > right?

        True when the closure contains left > right, False when it contains
        the reverse, None when neither. Sub-certain probabilities never
        contribute.
        """
        self._check_known(left, right)
        if left == right:
            return False
        if right in self._reach.get(left, ()):
            return True
        if left in self._reach.get(right, ()):
            return False
        return None

    def independent_chain_probability(
        self, chain: Sequence[Tuple[str, str]]
    ) -> float:
        """Product of p(a > b) over the chain, assuming independence.

        A pair decided by the certain closure contributes factor 1; otherwise
        the stored exact probability is used. An empty chain is vacuous (1.0).
        """
        product = 1.0
        for left, right in chain:
            self._check_known(left, right)
            if right in self._reach.get(left, ()):
                product *= 1.0
                continue
            try:
                product *= self._exact[(left, right)]
            except KeyError:
                raise MissingProbabilityError(
                    f"no stored probability for {left} > {right}"
                ) from None
        return product

    def sample_realization(self, seed) -> Dict[str, float]:
        """One numeric realization of the symbols consistent with the order.

        Uniform [0, 1] proposals are rejection-sampled until every certain
        constraint holds strictly; no epsilon adjustments, ties have measure
        zero. Deterministic for a given seed (numpy PCG64). Raises
        SamplingExhaustedError after ``SAMPLING_ATTEMPT_CAP`` proposals.
        """
        names = sorted(self.symbols)
        if not names:
            return {}
        index = {name: i for i, name in enumerate(names)}
        pairs = [
            (index[c.left], index[c.right])
            for c in self._constraints
            if c.certain
        ]
        rng = np.random.default_rng(seed)
        attempts = 0
        while attempts < SAMPLING_ATTEMPT_CAP:
            batch = min(_SAMPLING_BATCH, SAMPLING_ATTEMPT_CAP - attempts)
            draws = rng.random((batch, len(names)))
            keep = np.ones(batch, dtype=bool)
            for li, ri in pairs:
                keep &= draws[:, li] > draws[:, ri]
            hits = np.flatnonzero(keep)
            if hits.size:
                row = draws[hits[0]]
                return {name: float(row[index[name]]) for name in names}
            attempts += batch
        raise SamplingExhaustedError(
            f"no admissible draw within {SAMPLING_ATTEMPT_CAP} attempts"
        )

    def __eq__(self, other):
        if not isinstance(other, ConstraintSet):
            return NotImplemented
        return (
            self._constraints == other._constraints
            and self._universe == other._universe
        )

    def __repr__(self):
        scope = "open" if self._universe is None else f"{len(self._universe)} symbols"
        return f"ConstraintSet({len(self._constraints)} constraints, {scope})"
