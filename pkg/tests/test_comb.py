import random

import pytest

from ruledcurves.comb import (
    CombError,
    WeightedComb,
    algebraic_realizability_verdict,
    chain_successors,
    find_closure,
    is_closed,
    mu_count,
    mu_exists,
    parse_comb,
    parse_weighted_comb,
    render_comb,
    render_weighted_comb,
)
from ruledcurves.lscheme import parse_scheme

CLOSED_EXAMPLE = (5, 6, 1, 4, 1, 6, 5, 2, 3, 2)
W1 = parse_weighted_comb(
    "g3 g6 g1 g4 g1 g6 g5 g2 g3 g6 g1 g4 g1 g6 (g3 g2)^3 g3 g6 g1 g4 g1 g6 g5 g2 | 1 2 0")
W2 = parse_weighted_comb("(g3 g2 g3 g2 g3 g2 g3 g6 g1 g4 g1 g6)^3 | 3 6 2")


def test_parse_render():
    assert parse_comb("g5 g6 g1 g4 g1 g6 g5 g2 g3 g2") == CLOSED_EXAMPLE
    assert parse_comb("(g3 g2)^3") == (3, 2, 3, 2, 3, 2)
    assert parse_comb("1") == ()
    assert render_comb(()) == "1"
    assert parse_comb(render_comb(CLOSED_EXAMPLE)) == CLOSED_EXAMPLE
    w = parse_weighted_comb("g5 g2 | 2 1 1")
    assert w == WeightedComb((5, 2), 2, 1, 1)
    assert parse_weighted_comb(render_weighted_comb(w)) == w
    with pytest.raises(CombError):
        parse_comb("g7")
    with pytest.raises(CombError):
        parse_weighted_comb("g1 g2")
    with pytest.raises(CombError):
        WeightedComb((1,), -1, 0, 0)


def test_closure_anchors():
    assert is_closed(CLOSED_EXAMPLE)
    assert is_closed(())
    assert not is_closed((1,))
    assert not is_closed((1, 3, 2, 4))  # typed chords would have to cross
    assert not is_closed((5, 6, 6))  # unbalanced


def test_closure_matching_properties():
    """Every returned matching satisfies the balance law for each chord
    and the parity law for each g1-g2 chord, rechecked independently."""
    rng = random.Random(101)
    checked = 0
    words = [CLOSED_EXAMPLE]
    for _ in range(400):
        words.append(tuple(rng.randint(1, 6) for _ in range(rng.randint(0, 10))))
    for word in words:
        matching = find_closure(word)
        if matching is None:
            continue
        checked += 1
        seen = set()
        for i, j in matching:
            assert {word[i], word[j]} in ({1, 2}, {3, 4}, {5, 6})
            seen.update((i, j))
            inside = [p for p in range(len(word)) if i < p < j]
            outside = [p for p in range(len(word)) if p < i or p > j]
            for region in (inside, outside):
                for low, high in ((1, 2), (3, 4), (5, 6)):
                    lows = sum(1 for p in region if word[p] == low)
                    highs = sum(1 for p in region if word[p] == high)
                    assert lows == highs
            if {word[i], word[j]} == {1, 2}:
                def parity(pos):
                    return sum(1 for p in range(pos) if word[p] in (1, 2, 3, 4)) % 2
                assert parity(i) != parity(j)
        # non-crossing: no two chords interleave
        for a, b in matching:
            for c, d in matching:
                if (a, b) < (c, d):
                    assert not (a < c < b < d or c < a < d < b)
        assert seen == set(range(len(word)))
    assert checked > 30


def test_chain_successors():
    assert chain_successors(WeightedComb((2,), 0, 0, 1)) == \
        [WeightedComb((6, 1, 6, 1, 6), 0, 0, 0)]
    assert chain_successors(WeightedComb((1, 1), 2, 0, 0)) == \
        [WeightedComb((3, 1), 1, 0, 0), WeightedComb((1, 3), 1, 0, 0)]
    assert chain_successors(WeightedComb((3,), 0, 1, 0)) == []
    # gamma move on g5 needs alpha >= 3
    assert chain_successors(WeightedComb((5,), 2, 0, 1)) == []
    assert chain_successors(WeightedComb((5,), 3, 0, 1)) == \
        [WeightedComb((3, 6, 3, 6, 3), 0, 0, 0)]
    # beta move
    assert chain_successors(WeightedComb((5,), 0, 1, 0)) == \
        [WeightedComb((4, 5, 4), 0, 0, 0)]


def test_priority_discipline():
    rng = random.Random(103)
    for _ in range(200):
        word = tuple(rng.randint(1, 6) for _ in range(rng.randint(0, 6)))
        w = WeightedComb(word, rng.randint(0, 3), rng.randint(0, 2), rng.randint(0, 2))
        for s in chain_successors(w):
            if w.gamma > 0:
                assert s.gamma == w.gamma - 1
                assert s.beta == w.beta
            elif w.alpha > 0:
                assert (s.alpha, s.beta, s.gamma) == (w.alpha - 1, w.beta, 0)
            else:
                assert (s.alpha, s.beta, s.gamma) == (0, w.beta - 1, 0)
            assert (s.gamma, s.alpha, s.beta) < (w.gamma, w.alpha, w.beta)


def test_chain_termination_bound():
    rng = random.Random(107)
    for _ in range(50):
        word = tuple(rng.randint(1, 6) for _ in range(rng.randint(0, 5)))
        w = WeightedComb(word, rng.randint(0, 3), rng.randint(0, 2), rng.randint(0, 2))
        depth = 0
        frontier = [w]
        while frontier and depth <= w.alpha + w.beta + w.gamma:
            frontier = [s for x in frontier for s in chain_successors(x)]
            depth += 1
        assert not frontier  # all chains end within alpha + beta + gamma steps


def test_mu_anchors():
    assert not mu_exists(W1)
    assert mu_count(W1) == 0
    assert not mu_exists(W2)
    assert mu_count(W2) == 0
    closed = WeightedComb(CLOSED_EXAMPLE, 0, 0, 0)
    assert mu_exists(closed)
    assert mu_count(closed) == 1


def test_mu_counts_position_choices():
    # two g1 positions, each a distinct one-step chain when closable
    w = WeightedComb((1, 2), 1, 0, 0)
    # g1 -> g3 gives (3, 2): not closed; so zero chains
    assert mu_count(w) == 0
    # a comb that closes after one move, two ways
    w2 = WeightedComb((1, 1, 2, 2), 2, 0, 0)
    succ = chain_successors(w2)
    assert len(succ) == 2
    total = mu_count(w2)
    assert total == sum(mu_count(s) for s in succ)


def test_mu_pruned_equals_unpruned():
    rng = random.Random(109)
    words = [tuple(rng.randint(1, 6) for _ in range(length))
             for length in range(0, 7) for _ in range(6)]
    for word in words:
        for alpha in range(0, 4):
            for beta in range(0, 3):
                for gamma in range(0, 3):
                    w = WeightedComb(word, alpha, beta, gamma)
                    assert mu_count(w, prune=True) == mu_count(w, prune=False), w


def test_realizability_verdict():
    # empty scheme: unit comb, realizable
    assert algebraic_realizability_verdict(parse_scheme("n=1 m=3;"))
    assert algebraic_realizability_verdict(parse_scheme("n=0 m=3;"))
    # the closed-comb example scheme is realizable
    assert algebraic_realizability_verdict(parse_scheme("n=1 m=3; >2 <1 >2 o2 <2"))
    # one wave on the first surface is not
    assert not algebraic_realizability_verdict(parse_scheme("n=1 m=3; >2 <2"))


def _all_matchings(positions):
    if not positions:
        yield ()
        return
    first, rest = positions[0], positions[1:]
    for k, second in enumerate(rest):
        for sub in _all_matchings(rest[:k] + rest[k + 1:]):
            yield ((first, second),) + sub


def _closed_by_brute_force(word):
    """Independent oracle: enumerate every perfect matching and filter
    by the three constraints checked one by one."""
    if len(word) % 2:
        return False

    def parity(pos):
        return sum(1 for p in range(pos) if word[p] in (1, 2, 3, 4)) % 2

    for matching in _all_matchings(tuple(range(len(word)))):
        if any({word[i], word[j]} not in ({1, 2}, {3, 4}, {5, 6})
               for i, j in matching):
            continue
        if any(a < c < b < d or c < a < d < b
               for a, b in matching for c, d in matching if (a, b) != (c, d)):
            continue
        if any({word[i], word[j]} == {1, 2} and parity(i) == parity(j)
               for i, j in matching):
            continue
        return True
    return False


def test_is_closed_against_brute_force():
    import itertools
    for length in range(0, 5):
        for word in itertools.product(range(1, 7), repeat=length):
            assert is_closed(word) == _closed_by_brute_force(word), word
    rng = random.Random(113)
    for _ in range(300):
        word = tuple(rng.randint(1, 6) for _ in range(rng.choice((6, 8))))
        assert is_closed(word) == _closed_by_brute_force(word), word
