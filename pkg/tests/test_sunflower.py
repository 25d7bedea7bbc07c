import itertools
import random

import pytest

from discokit import InvalidArgument, Sunflower, find_sunflower
from discokit.sunflower import erdos_rado_bound


def is_sunflower(family, core, petals, p):
    fam = {frozenset(s) for s in family}
    return (len(petals) == p and all(frozenset(x) in fam for x in petals)
            and len(set(petals)) == p
            and all(set(a) & set(b) == set(core) for a, b in itertools.combinations(petals, 2))
            and all(set(x) - set(core) for x in petals))


def test_disjoint_sets_give_an_empty_core():
    fam = [{1, 2}, {3}, {4, 5}]
    sf = find_sunflower(fam, 2, 3)
    assert sf.core == frozenset() and len(sf) == 3


def test_singletons():
    sf = find_sunflower([{1}, {2}, {3}], 1, 3)
    assert sf.core == frozenset() and sorted(map(sorted, sf.petals)) == [[1], [2], [3]]


def test_all_pairs_of_six():
    fam = [set(c) for c in itertools.combinations(range(1, 7), 2)]
    assert len(fam) > erdos_rado_bound(2, 3) == 8
    sf = find_sunflower(fam, 2, 3)
    assert is_sunflower(fam, sf.core, sf.petals, 3)


def test_argument_checks():
    with pytest.raises(InvalidArgument):
        find_sunflower([{1}], 0, 1)
    with pytest.raises(InvalidArgument):
        find_sunflower([{1}], 1, 0)
    with pytest.raises(InvalidArgument):
        find_sunflower([{1}, {1}], 1, 1)
    with pytest.raises(InvalidArgument):
        find_sunflower([{1, 2}], 1, 1)


def test_sunflower_verifies_itself():
    with pytest.raises(InvalidArgument):
        Sunflower({1}, ({1, 2}, {1, 2, 3}))
    with pytest.raises(InvalidArgument):
        Sunflower({1}, ({1},))
    with pytest.raises(InvalidArgument):
        Sunflower(set(), ())


def test_no_sunflower_in_an_intersecting_triangle_family():
    assert find_sunflower([{1, 2}, {2, 3}, {1, 3}], 2, 3) is None


def test_random_returns_are_valid_even_below_the_bound():
    rng = random.Random(21)
    for _ in range(300):
        d, p = rng.randint(1, 3), rng.randint(1, 4)
        universe = range(rng.randint(d, 9))
        fam = list({frozenset(rng.sample(universe, rng.randint(1, d))) for _ in range(rng.randint(0, 12))})
        sf = find_sunflower(fam, d, p)
        if sf is not None:
            assert is_sunflower(fam, sf.core, sf.petals, p)
