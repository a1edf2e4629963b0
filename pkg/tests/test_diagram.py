"""Diagram enumeration, composition, and the two composition kernels."""

import math
import random
from itertools import combinations

import pytest

from tlcat._kernel_py import compose_links as compose_py
from tlcat.diagram import (
    Diagram,
    InterfaceMismatch,
    e_diagram,
    enumerate_diagrams,
    factor_through_lines,
    identity_diagram,
)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def motzkin(p: int) -> int:
    # number of partial non-crossing matchings of p points on a line
    m = [1, 1]
    for k in range(2, p + 1):
        m.append(m[k - 1] + sum(m[i] * m[k - 2 - i] for i in range(k - 1)))
    return m[p]


def brute_force_count(n: int, m: int, dilute: bool) -> int:
    """Independent oracle: enumerate all planar partial pairings directly."""
    total = n + m
    points = list(range(1, total + 1))

    def planar(pairs):
        for (a, b), (c, d) in combinations(pairs, 2):
            if a < c < b < d or c < a < d < b:
                return False
        return True

    def matchings(rest):
        if not rest:
            yield ()
            return
        a, tail = rest[0], rest[1:]
        if dilute:
            for sub in matchings(tail):
                yield sub
        for i, b in enumerate(tail):
            for sub in matchings(tail[:i] + tail[i + 1:]):
                yield ((a, b),) + sub

    count = 0
    for pairs in matchings(tuple(points)):
        if not dilute and 2 * len(pairs) != total:
            continue
        if planar(pairs):
            count += 1
    return count


def test_catalan_counts():
    for n in range(0, 7):
        assert len(enumerate_diagrams(n, n)) == catalan(n)


def test_hom_counts_match_brute_force():
    for n in range(0, 4):
        for m in range(0, 4):
            got = len(enumerate_diagrams(n, m))
            assert got == brute_force_count(n, m, dilute=False)


def test_dilute_counts_are_motzkin():
    for n in range(0, 4):
        for m in range(0, 4):
            got = len(enumerate_diagrams(n, m, dilute=True))
            assert got == motzkin(n + m)
            assert got == brute_force_count(n, m, dilute=True)


def test_parity_empty_hom():
    assert enumerate_diagrams(2, 3) == []
    assert enumerate_diagrams(0, 1) == []


def test_through_line_filter():
    for n in range(0, 7):
        for k in range(n % 2, n + 1, 2):
            diags = [d for d in enumerate_diagrams(n, n) if d.through == k]
            assert diags == enumerate_diagrams(n, n, through=k)


def test_identity_and_e_compose():
    one = identity_diagram(3)
    ed = e_diagram(1, 3)
    res = one.compose(ed)
    assert res.diagram == ed and res.loops == 0
    res = ed.compose(ed)
    assert res.diagram == ed and res.loops == 1


def test_interface_mismatch():
    with pytest.raises(InterfaceMismatch):
        identity_diagram(2).compose(identity_diagram(3))


def test_composition_associative():
    rng = random.Random(7)
    sizes = [0, 1, 2, 3, 4]
    for _ in range(120):
        a, b, c, d = (rng.choice(sizes) for _ in range(4))
        if (a + b) % 2 or (b + c) % 2 or (c + d) % 2:
            continue
        fs = enumerate_diagrams(b, a)
        gs = enumerate_diagrams(c, b)
        hs = enumerate_diagrams(d, c)
        if not (fs and gs and hs):
            continue
        f, g, h = rng.choice(fs), rng.choice(gs), rng.choice(hs)
        fg = f.compose(g)
        gh = g.compose(h)
        left = fg.diagram.compose(h)
        right = f.compose(gh.diagram)
        assert left.diagram == right.diagram
        assert fg.loops + left.loops == gh.loops + right.loops


def test_transpose_involution_and_antihomomorphism():
    rng = random.Random(3)
    for _ in range(60):
        n, m, p = rng.choice([1, 2, 3]), rng.choice([1, 3]), rng.choice([1, 3])
        if (n + m) % 2 or (m + p) % 2:
            continue
        cs = enumerate_diagrams(m, n)
        bs = enumerate_diagrams(p, m)
        if not cs or not bs:
            continue
        c, b = rng.choice(cs), rng.choice(bs)
        assert c.transpose().transpose() == c
        lhs = c.compose(b)
        rhs = b.transpose().compose(c.transpose())
        assert lhs.diagram.transpose() == rhs.diagram
        assert lhs.loops == rhs.loops


def test_text_round_trip():
    for n in range(0, 5):
        for m in range(0, 5):
            for dilute in (False, True):
                for d in enumerate_diagrams(n, m, dilute=dilute):
                    assert Diagram.from_text(d.to_text()) == d


def test_kernels_agree():
    try:
        from tlcat._kernel_cy import compose_links as compose_cy
    except ImportError:
        pytest.skip("compiled kernel not built")
    rng = random.Random(11)
    for dilute in (False, True):
        for _ in range(200):
            k, mid, n = rng.choice([0, 1, 2, 3]), rng.choice([1, 2, 3]), \
                rng.choice([0, 1, 2, 3])
            cs = enumerate_diagrams(mid, k, dilute=dilute)
            bs = enumerate_diagrams(n, mid, dilute=dilute)
            if not cs or not bs:
                continue
            c, b = rng.choice(cs), rng.choice(bs)
            assert compose_py(k, mid, n, c.link, b.link) == \
                compose_cy(k, mid, n, c.link, b.link)


def test_dilute_annihilation():
    vacant = Diagram.from_pairs(2, 2, [], dilute=True)
    full = identity_diagram(2, dilute=True)
    res = full.compose(vacant)
    assert res.annihilated and res.diagram is None


def test_factor_through_lines_reconstructs():
    from tlcat.diagram import _cup_block

    for n in (2, 3, 4):
        for d in enumerate_diagrams(n, n):
            a, k, b = factor_through_lines(d)
            assert k == d.through
            middle = _cup_block(k, (n - k) // 2)
            stage1 = middle.transpose().compose(b)
            stage2 = middle.compose(stage1.diagram)
            res = a.compose(stage2.diagram)
            assert res.diagram == d
            assert stage1.loops == stage2.loops == res.loops == 0
