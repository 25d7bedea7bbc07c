"""Sunflowers in set families (the Erdos-Rado lemma, made constructive)."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Hashable, Iterable

from .errors import InvalidArgument


@dataclass(frozen=True)
class Sunflower:
    """Sets F_1..F_p whose pairwise intersections all equal the core."""

    core: frozenset
    petals: tuple[frozenset, ...]

    def __post_init__(self):
        core = frozenset(self.core)
        petals = tuple(frozenset(x) for x in self.petals)
        object.__setattr__(self, "core", core)
        object.__setattr__(self, "petals", petals)
        if not petals:
            raise InvalidArgument("a sunflower needs at least one petal")
        for i, a in enumerate(petals):
            if not core < a:
                raise InvalidArgument("every petal must strictly contain the core")
            for b in petals[i + 1:]:
                if a & b != core:
                    raise InvalidArgument("two petals meet outside the core")

    def __len__(self) -> int:
        return len(self.petals)


def erdos_rado_bound(d: int, p: int) -> int:
    """Families larger than this always contain a p-petal sunflower."""
    return factorial(d) * (p - 1) ** d


def _search(family: list[frozenset], p: int, depth: int):
    """Return (core, petals) with p petals, or None.  Sets here are nonempty."""
    disjoint, used = [], set()
    for s in family:
        if used.isdisjoint(s):
            disjoint.append(s)
            used |= s
            if len(disjoint) == p:
                return frozenset(), disjoint
    if depth == 0 or len(family) < p:
        return None
    counts = Counter(x for s in family for x in s)
    # most frequent elements first; ties by a stable key
    for x, c in sorted(counts.items(), key=lambda kv: (-kv[1], repr(kv[0]))):
        if c < p:
            break
        sub = [s - {x} for s in family if x in s]
        found = _search([s for s in sub if s], p, depth - 1)
        if found is not None:
            core, petals = found
            return core | {x}, [s | {x} for s in petals]
    return None


def find_sunflower(family: Iterable[Iterable[Hashable]], d: int, p: int) -> Sunflower | None:
    """Find a sunflower with p petals drawn from the family.

    Guaranteed to succeed when the family has more than d!(p-1)^d sets.
    Empty sets can never be petals and are ignored.
    """
    if d < 1 or p < 1:
        raise InvalidArgument("d and p must be positive")
    sets = [frozenset(s) for s in family]
    if len(set(sets)) != len(sets):
        raise InvalidArgument("family contains duplicate sets")
    if any(len(s) > d for s in sets):
        raise InvalidArgument(f"family contains a set larger than d={d}")
    order = sorted((s for s in sets if s), key=lambda s: (len(s), sorted(map(repr, s))))
    found = _search(order, p, d)
    if found is None:
        return None
    core, petals = found
    return Sunflower(core, tuple(petals))
