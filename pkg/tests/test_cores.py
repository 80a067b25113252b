"""n-cores: the a and c bijections, covers, ribbons, translations."""

import pytest

from kschur.affine import from_word, transposition
from kschur.cores import (
    NCore,
    NonReducedWordError,
    NoActionError,
    a_map,
    act_s,
    addable_corners,
    c_inverse,
    c_map,
    core_of,
    core_to_word,
    cores_of_degree,
    hook,
    is_ncore,
    rect,
    rect_translation,
    ribbon_head,
    ribbon_tail,
    strong_covers_down,
    strong_covers_up,
    union,
    w_core,
)

from oracles import brute_covers_down


def test_is_ncore_examples():
    assert is_ncore((3,), 4)
    assert is_ncore((4, 1, 1), 4)
    assert is_ncore((2, 2), 4)  # hooks are {3,2,2,1}
    assert not is_ncore((4,), 4)  # hook of (1,1) is 4


def test_a_map_examples():
    assert a_map([0], 4).parts == (1,)
    assert a_map([2, 1, 3, 0], 4).parts == (3, 1, 1)
    with pytest.raises(NonReducedWordError):
        a_map([0, 0], 4)
    with pytest.raises(NonReducedWordError):
        a_map([1], 4)  # no addable corner of residue 1 on the empty core


def test_core_to_word_examples():
    assert core_to_word(NCore(4, ())) == ()
    assert core_to_word(NCore(4, (1,))) == (0,)
    word = core_to_word(NCore(4, (3, 1, 1)))
    assert len(word) == 4
    assert a_map(word, 4).parts == (3, 1, 1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_bijection_roundtrip(n):
    for d in range(0, 8):
        for core in cores_of_degree(n, d):
            word = core_to_word(core)
            assert len(word) == d == core.degree()
            assert a_map(word, n) == core
            # degree equals the Coxeter length of the Grassmannian element
            assert w_core(core).length() == d
            assert core_of(w_core(core)) == core


def test_degree_examples():
    assert NCore(4, (3, 1, 1)).degree() == 4
    assert NCore(4, (4, 1, 1)).degree() == 5
    assert NCore(4, ()).degree() == 0


def test_c_inverse_examples():
    assert c_inverse(NCore(4, (4, 1, 1))) == (3, 1, 1)
    assert c_map((3, 1, 1), 4).parts == (4, 1, 1)


def test_c_map_small_partitions_fixed():
    # |lam| < n: the core is the partition itself
    for n in (4, 5):
        for parts in [(1,), (2,), (2, 1), (1, 1, 1)]:
            if sum(parts) < n:
                assert c_map(parts, n).parts == parts


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_c_roundtrip(n):
    for d in range(0, 8):
        for core in cores_of_degree(n, d):
            bounded = c_inverse(core)
            assert all(p < n for p in bounded)
            assert sum(bounded) == d
            assert c_map(bounded, n) == core


def test_act_s_examples():
    assert act_s(NCore(4, (1,)), 3).parts == (1, 1)
    assert act_s(NCore(4, (2, 1)), 2).parts == (3, 1, 1)
    assert addable_corners(NCore(4, ()), 0) == [(1, 1)]
    with pytest.raises(NoActionError):
        act_s(NCore(4, ()), 1)


def test_act_s_degree_step():
    for n in (3, 4):
        for d in range(0, 6):
            for core in cores_of_degree(n, d):
                for i in range(n):
                    if addable_corners(core, i):
                        assert act_s(core, i).degree() == d + 1


def test_strong_covers_examples():
    downs = {m.parts for m, _, _ in strong_covers_down(NCore(4, (4, 1, 1)))}
    assert (3, 1, 1) in downs
    assert [m.parts for m, _, _ in strong_covers_down(NCore(4, (1,)))] == [()]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_strong_covers_match_brute_force(n):
    for d in range(0, 7):
        for core in cores_of_degree(n, d):
            got = sorted(m.parts for m, _, _ in strong_covers_down(core))
            want = sorted(m.parts for m in brute_covers_down(core))
            assert got == want


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_cover_ribbons_are_congruent_copies(n):
    # Lemma: the skew of a strong cover is made of copies of one ribbon,
    # heads sharing one residue (s-1) and tails another (r) for tau_{r,s}
    for d in range(0, 8):
        for core in cores_of_degree(n, d):
            for mu, ribbons, (i, j) in strong_covers_down(core):
                sizes = {len(comp) for comp in ribbons}
                assert len(sizes) == 1
                heads = {(jj - ii) % n for comp in ribbons for ii, jj in [ribbon_head(comp)]}
                tails = {(jj - ii) % n for comp in ribbons for ii, jj in [ribbon_tail(comp)]}
                assert heads == {(j - 1) % n}
                assert tails == {i % n}
                assert sizes == {(j - i)}


def test_covers_up_down_duality():
    for n in (3, 4):
        for d in range(0, 6):
            for core in cores_of_degree(n, d):
                ups = {g.parts for g, _, _ in strong_covers_up(core)}
                for g in ups:
                    assert core.parts in {
                        m.parts for m, _, _ in strong_covers_down(NCore(n, g))
                    }


def test_rect_translation_examples():
    assert rect_translation(NCore(4, (3, 1, 1)), 3).parts == (6, 3, 1, 1)
    for n in (3, 4, 5):
        assert rect_translation(NCore(n, ()), n - 1).parts == (n - 1,)


def test_rect_translation_top_row_form():
    # R(n-1, core) = (core_1 + n - 1, core)
    for n in (3, 4):
        for d in range(0, 7):
            for core in cores_of_degree(n, d):
                top = rect_translation(core, n - 1)
                first = (core.parts[0] if core.parts else 0) + n - 1
                assert top.parts == (first,) + core.parts


def test_rect_translation_degree():
    for n in (3, 4, 5):
        for d in range(0, 6):
            for core in cores_of_degree(n, d):
                for r in range(1, n):
                    assert rect_translation(core, r).degree() == d + r * (n - r)


def test_w_of_rect_translation_word():
    # w_{R(n-1,lam)} = s_{x-1} s_{x-2} ... s_{x+1} w_lam, x = lam_1 - 1 mod n
    for n in (3, 4, 5):
        for d in range(0, 8):
            for core in cores_of_degree(n, d):
                x = ((core.parts[0] if core.parts else 0) - 1) % n
                word = [(x - k) % n for k in range(1, n)]
                lhs = w_core(rect_translation(core, n - 1))
                assert lhs == from_word(word, n) * w_core(core)


def test_extremal_cell_property():
    # Same-residue extremal cells: end-of-row and cell-above conditions
    # propagate from the south-eastern cell (weakly lower row, weakly
    # larger column in bottom-to-top indexing) to the north-western one.
    # In particular the last cell of the bottom row forces every extremal
    # cell of its residue to close its row, which is what makes the
    # cyclically decreasing factors of Grassmannian quotients avoid it.
    for n in (2, 3, 4, 5):
        for d in range(0, 9):
            for core in cores_of_degree(n, d):
                parts = core.parts
                extremal = []
                for i, p in enumerate(parts, start=1):
                    for j in range(1, p + 1):
                        above_j = i < len(parts) and parts[i] >= j
                        diag = i < len(parts) and parts[i] >= j + 1
                        if not diag:
                            extremal.append((i, j, j == p, above_j))
                for (i1, j1, end1, ab1) in extremal:
                    for (i2, j2, end2, ab2) in extremal:
                        if (j1 - i1) % n != (j2 - i2) % n:
                            continue
                        if (i1, j1) != (i2, j2) and i1 <= i2 and j1 >= j2:
                            if end1:
                                assert end2, (n, parts, (i1, j1), (i2, j2))
                            if ab1:
                                assert ab2, (n, parts, (i1, j1), (i2, j2))


def test_tau_realizes_cover():
    # applying the reported tau to w_mu climbs back to the cover
    for n in (3, 4):
        for d in range(1, 6):
            for core in cores_of_degree(n, d):
                for mu, _ribbons, (i, j) in strong_covers_down(core):
                    assert transposition(i, j, n) * w_core(mu) == w_core(core)


def test_rect_union_helper():
    assert rect(3, 4) == (3,)
    assert rect(2, 5) == (2, 2, 2)
    assert union((3, 1), (2, 2)) == (3, 2, 2, 1)
