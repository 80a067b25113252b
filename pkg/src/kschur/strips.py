"""Strong strips, horizontal strong strips, and ribbon strong strips.

A marked strong cover of rho is a strong cover (rho <_B gamma) together
with the content of the head of one ribbon copy in gamma/rho.  A strong
m-strip is a saturated chain with a strictly increasing content vector.

A horizontal strong m-strip (lam, nu) is a saturated chain from nu up
to the translation R(n-1, lam) = (lam_1 + n - 1, lam) whose bottom rows
grow strictly at every step, with m = n - 1 + deg(lam) - deg(nu); each
such pair carries a unique chain, and psi/phi convert it to and from
the cyclically decreasing reduced word of w_nu w_lam^{-1}.

Ribbon strong strips generalize to the translation R(r, lam): chains
whose per-step ribbon heads sit in the bottom row or directly above an
older cell, with a ribbon tail in the marked columns col_r(lam).
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .affine import (
    cyclic_anchor_key,
    is_word_cyclically_decreasing,
    transposition,
)
from .cores import (
    NCore,
    c_inverse,
    c_map,
    contains,
    core_of,
    rect,
    rect_translation,
    ribbon_head,
    ribbon_tail,
    skew_cells,
    strong_covers_down,
    strong_covers_up,
    union,
    w_core,
)


class StrongStrip(NamedTuple):
    """Saturated chain of cores with its increasing content vector."""

    chain: tuple
    contents: tuple


class HorizontalStrongStrip(NamedTuple):
    """Pair (lam, nu) with the chain nu -> R(n-1, lam) and its contents."""

    lam: NCore
    nu: NCore
    chain: tuple
    contents: tuple


class RibbonStrongStrip(NamedTuple):
    """Pair (lam, nu) with a horizontal ribbon strip chain to R(r, lam)."""

    lam: NCore
    nu: NCore
    r: int
    chain: tuple


def marked_strong_covers(rho: NCore):
    """All (gamma, c): rho <_B gamma, c the content of a ribbon head."""
    out = []
    for gamma, ribbons, _tau in strong_covers_up(rho):
        for comp in ribbons:
            i, j = ribbon_head(comp)
            out.append((gamma, j - i))
    return sorted(out, key=lambda gc: (gc[0].parts, gc[1]))


def saturated_chains(nu: NCore, gamma: NCore):
    """All saturated strong chains from nu up to gamma (no marking)."""
    if nu.n != gamma.n:
        raise ValueError("mismatched moduli")
    chains = []

    def walk(cur, chain):
        if cur == gamma:
            chains.append(tuple(chain))
            return
        if cur.degree() >= gamma.degree():
            return
        for nxt, _ribbons, _tau in strong_covers_up(cur):
            if contains(gamma.parts, nxt.parts):
                walk(nxt, chain + [nxt])

    walk(nu, [nu])
    return chains


def strong_strips(nu: NCore, gamma: NCore, m: int):
    """All strong m-strips from nu to gamma (degree mismatch: none)."""
    if nu.n != gamma.n:
        raise ValueError("mismatched moduli")
    if gamma.degree() != nu.degree() + m:
        return []
    strips = []

    def walk(cur, chain, contents):
        if len(contents) == m:
            if cur == gamma:
                strips.append(StrongStrip(tuple(chain), tuple(contents)))
            return
        for nxt, c in marked_strong_covers(cur):
            if contents and c <= contents[-1]:
                continue
            if contains(gamma.parts, nxt.parts):
                walk(nxt, chain + [nxt], contents + [c])

    walk(nu, [nu], [])
    return sorted(strips, key=lambda s: s.contents)


def _bottom_ribbon(outer: NCore, inner: NCore):
    """The lowest ribbon copy of the cover skew outer/inner."""
    from .cores import ribbon_components

    comps = ribbon_components(skew_cells(outer.parts, inner.parts))
    return min(comps, key=lambda comp: min(i for (i, _) in comp))


@lru_cache(maxsize=None)
def _hss_from(n: int, lam_parts, m: int):
    lam = NCore(n, lam_parts)
    if not 0 <= m <= n - 1:
        return ()
    top = rect_translation(lam, n - 1)
    strips = []

    def walk(cur, chain):
        # chain is descending from R(n-1, lam); bottom rows shrink.
        if len(chain) == m + 1:
            if contains(cur.parts, lam_parts):
                desc = list(reversed(chain))
                contents = []
                for lo, hi in zip(desc, desc[1:]):
                    i, j = ribbon_head(_bottom_ribbon(hi, lo))
                    contents.append(j - i)
                strips.append(
                    HorizontalStrongStrip(lam, cur, tuple(desc), tuple(contents))
                )
            return
        cur_bottom = cur.parts[0] if cur.parts else 0
        for mu, _ribbons, _tau in strong_covers_down(cur):
            mu_bottom = mu.parts[0] if mu.parts else 0
            if mu_bottom < cur_bottom and contains(mu.parts, lam_parts):
                walk(mu, chain + [mu])

    walk(top, [top])
    strips.sort(key=lambda s: s.nu.parts, reverse=True)
    return tuple(strips)


def horizontal_strong_strips_from(lam: NCore, m: int):
    """All horizontal strong m-strips (lam, nu); one chain per nu."""
    return list(_hss_from(lam.n, lam.parts, m))


def is_horizontal_strong_strip(lam: NCore, nu: NCore) -> bool:
    m = lam.n - 1 + lam.degree() - nu.degree()
    return any(s.nu == nu for s in horizontal_strong_strips_from(lam, m))


def _anchor(lam: NCore) -> int:
    lam1 = lam.parts[0] if lam.parts else 0
    return (lam1 - 1) % lam.n


def psi(strip: HorizontalStrongStrip):
    """The cyclically decreasing word of w_nu w_lam^{-1} from the chain.

    The tail residues a_m < ... < a_1 of the bottom-row ribbons are read
    off the chain; the word is the complement of {a_i} in the n-1
    residues other than x = lam_1 - 1 mod n, sorted decreasingly in the
    cyclic order anchored at x.
    """
    n = strip.lam.n
    x = _anchor(strip.lam)
    tails = set()
    for lo, hi in zip(strip.chain, strip.chain[1:]):
        bottoms = [j for (i, j) in skew_cells(hi.parts, lo.parts) if i == 1]
        tails.add((min(bottoms) - 1) % n)
    letters = set(range(n)) - {x} - tails
    return tuple(sorted(letters, key=cyclic_anchor_key(x, n), reverse=True))


def phi(word, lam: NCore) -> HorizontalStrongStrip:
    """The chain of the horizontal strong strip named by a reduced word.

    The word must be a cyclically decreasing word avoiding the residue
    x = lam_1 - 1 mod n; ribbons with the complementary tail residues
    are deleted from R(n-1, lam), rightmost tail first.
    """
    n = lam.n
    x = _anchor(lam)
    word = tuple(word)
    if x in word:
        raise ValueError(f"word may not contain the residue {x}")
    if not is_word_cyclically_decreasing(word, n):
        raise ValueError("word is not cyclically decreasing")
    key = cyclic_anchor_key(x, n)
    a_list = sorted(set(range(n)) - {x} - set(word), key=key, reverse=True)
    chain = [rect_translation(lam, n - 1)]
    prev = [x] + a_list
    for k, a in enumerate(a_list):
        size = (prev[k] - a) % n
        u = transposition(a, a + size, n) * w_core(chain[-1])
        if u.length() != chain[-1].degree() - 1 or not u.is_grassmannian():
            raise AssertionError("phi: ribbon deletion is not a strong cover")
        chain.append(core_of(u))
    chain.reverse()
    desc = chain
    contents = []
    for lo, hi in zip(desc, desc[1:]):
        i, j = ribbon_head(_bottom_ribbon(hi, lo))
        contents.append(j - i)
    nu = desc[0]
    if not contains(nu.parts, lam.parts):
        raise AssertionError("phi: resulting shape does not contain lam")
    return HorizontalStrongStrip(lam, nu, tuple(desc), tuple(contents))


# -- ribbon strong strips ------------------------------------------------


def col_r(lam: NCore, r: int):
    """The r marked columns used by ribbon strong strips.

    With eta = c_inverse(lam) union R_r and m the highest row of eta of
    length r, these are the columns of the last r cells in row m of
    c_map(eta).
    """
    n = lam.n
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < n, got r={r}")
    eta = union(c_inverse(lam), rect(r, n))
    m = max(i for i, p in enumerate(eta, start=1) if p == r)
    row_len = c_map(eta, n).parts[m - 1]
    return tuple(range(row_len - r + 1, row_len + 1))


def _step_heads_ok(hi: NCore, lo: NCore, base_parts) -> bool:
    """Each ribbon head of hi/lo in row 1 or directly above a base cell."""
    from .cores import ribbon_components

    for comp in ribbon_components(skew_cells(hi.parts, lo.parts)):
        i, j = ribbon_head(comp)
        if i == 1:
            continue
        if not (i - 1 <= len(base_parts) and base_parts[i - 2] >= j):
            return False
    return True


def _step_tail_ok(hi: NCore, lo: NCore, columns) -> bool:
    from .cores import ribbon_components

    for comp in ribbon_components(skew_cells(hi.parts, lo.parts)):
        if ribbon_tail(comp)[1] in columns:
            return True
    return False


def ribbon_strong_strip_chains(lam: NCore, r: int, b: int):
    """All horizontal ribbon strip chains of length b down from R(r, lam).

    A chain qualifies when every step has a ribbon tail in col_r(lam)
    and every ribbon head lies in the bottom row or directly above a
    cell of nu, the smallest shape of the chain.  Returns a dict
    mapping nu.parts to its list of ascending chains.
    """
    n = lam.n
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < n, got r={r}")
    if b < 0:
        raise ValueError("strip length must be nonnegative")
    top = rect_translation(lam, r)
    columns = col_r(lam, r)
    found = {}

    def walk(cur, chain):
        if len(chain) == b + 1:
            desc = tuple(reversed(chain))
            if all(
                _step_heads_ok(hi, lo, cur.parts)
                for lo, hi in zip(desc, desc[1:])
            ):
                found.setdefault(cur.parts, []).append(desc)
            return
        for mu, _ribbons, _tau in strong_covers_down(cur):
            # heads sit above nu subset mu, so the mu-test prunes safely
            if _step_tail_ok(cur, mu, columns) and _step_heads_ok(cur, mu, mu.parts):
                walk(mu, chain + [mu])

    walk(top, [top])
    return found


def ribbon_strong_strips(lam: NCore, r: int, b: int):
    """All ribbon strong strips (lam, nu) of length b with respect to r."""
    n = lam.n
    found = ribbon_strong_strip_chains(lam, r, b)
    strips = [
        RibbonStrongStrip(lam, NCore(n, parts), r, chains[0])
        for parts, chains in found.items()
    ]
    return sorted(strips, key=lambda s: s.nu.parts, reverse=True)


def marked_tail_strips(lam: NCore, r: int, b: int):
    """nu admitting a strong b-strip to R(r, lam) with tails in col_r.

    The strong-strip reading of the closing conjecture: saturated chains
    carrying a strictly increasing content vector, every step with a
    ribbon tail in the marked columns (no head condition).
    """
    n = lam.n
    top = rect_translation(lam, r)
    columns = col_r(lam, r)
    out = set()

    def walk(cur, floor_content, steps):
        if steps == b:
            out.add(cur.parts)
            return
        for mu, ribbons, _tau in strong_covers_down(cur):
            if not _step_tail_ok(cur, mu, columns):
                continue
            marks = {j - i for comp in ribbons for (i, j) in [ribbon_head(comp)]}
            for c in marks:
                if floor_content is None or c < floor_content:
                    walk(mu, c, steps + 1)

    walk(top, None, 0)
    return sorted((NCore(n, parts) for parts in out), key=lambda c: c.parts, reverse=True)
