"""Partitions and n-cores.

Partitions are tuples of weakly decreasing positive integers.  Rows are
indexed 1..len bottom-to-top (row 1 is the longest, at the bottom), the
cell (i, j) sits in row i column j, its content is j - i and its
n-residue is (j - i) mod n.  An n-core has no cell of hook length
exactly n.

The two bijections implemented here:
  * a_map: reduced words of affine Grassmannian elements -> n-cores,
    each letter adding every addable corner of its residue;
  * c_map / c_inverse: partitions with parts < n <-> n-cores, row i of
    the bounded partition counting the row-i cells of hook length < n.

Strong (Bruhat) covers on cores are containment plus degree difference
one; they are computed through the transposition action and decomposed
into the identical ribbon copies that make up the skew.
"""

from __future__ import annotations

from functools import lru_cache

from .affine import (
    AffinePermutation,
    from_word,
    transposition,
)


class NonReducedWordError(ValueError):
    """A letter had no addable corner of its residue during a_map."""


class NoActionError(ValueError):
    """act_s was asked to add corners of a residue with none addable."""


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def normalize(parts) -> tuple:
    """Drop trailing zeros; validate weak decrease."""
    parts = tuple(p for p in parts if p != 0)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts}")
    return parts


def conjugate(parts) -> tuple:
    parts = tuple(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def contains(lam, mu) -> bool:
    lam, mu = tuple(lam), tuple(mu)
    if len(mu) > len(lam):
        return False
    return all(mu[i] <= lam[i] for i in range(len(mu)))


def union(lam, mu) -> tuple:
    """Multiset union of parts, sorted decreasingly."""
    return tuple(sorted(list(lam) + list(mu), reverse=True))


def dominance_leq(mu, lam) -> bool:
    """mu <= lam in dominance (equal sizes; padded partial sums)."""
    mu, lam = tuple(mu), tuple(lam)
    if sum(mu) != sum(lam):
        return False
    pm = pl = 0
    for k in range(max(len(mu), len(lam))):
        pm += mu[k] if k < len(mu) else 0
        pl += lam[k] if k < len(lam) else 0
        if pm > pl:
            return False
    return True


def cells(parts):
    return [(i, j) for i, p in enumerate(parts, start=1) for j in range(1, p + 1)]


def hook(parts, i: int, j: int) -> int:
    arm = parts[i - 1] - j
    leg = sum(1 for p in parts[i:] if p >= j)
    return arm + leg + 1


def hooks_of_row(parts, i: int):
    return [hook(parts, i, j) for j in range(1, parts[i - 1] + 1)]


def is_ncore(parts, n: int) -> bool:
    """No cell has hook length exactly n (larger hooks are allowed)."""
    parts = tuple(parts)
    return all(hook(parts, i, j) != n for (i, j) in cells(parts))


def addable_corner_rows(parts):
    """Rows that can take one more box (1-based, bottom-to-top)."""
    rows = [1]
    for i in range(2, len(parts) + 1):
        if parts[i - 2] > parts[i - 1]:
            rows.append(i)
    if parts:
        rows.append(len(parts) + 1)
    return rows


def removable_corner_cells(parts):
    out = []
    for i, p in enumerate(parts, start=1):
        nxt = parts[i] if i < len(parts) else 0
        if p > nxt:
            out.append((i, p))
    return out


class NCore:
    """An n-core partition."""

    __slots__ = ("n", "parts", "_deg")

    def __init__(self, n: int, parts):
        parts = normalize(parts)
        if not is_ncore(parts, n):
            raise ValueError(f"{parts} has a hook of length {n}")
        self.n = n
        self.parts = parts
        self._deg = None

    def degree(self) -> int:
        """Number of cells of hook length < n; equals ell(w_core)."""
        if self._deg is None:
            self._deg = sum(
                1 for (i, j) in cells(self.parts) if hook(self.parts, i, j) < self.n
            )
        return self._deg

    def residue(self, i: int, j: int) -> int:
        return (j - i) % self.n

    def __eq__(self, other):
        return (
            isinstance(other, NCore) and self.n == other.n and self.parts == other.parts
        )

    def __hash__(self):
        return hash((self.n, self.parts))

    def __repr__(self):
        return f"NCore({self.n}, {list(self.parts)})"

    def __contains__(self, cell):
        i, j = cell
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]


def addable_corners(core: NCore, residue: int):
    """Addable corners of the given n-residue, as (row, col) cells."""
    n, parts = core.n, core.parts
    out = []
    for i in addable_corner_rows(parts):
        j = (parts[i - 1] + 1) if i <= len(parts) else 1
        if (j - i) % n == residue % n:
            out.append((i, j))
    return out


def act_s(core: NCore, residue: int) -> NCore:
    """Add every addable corner of the residue; degree goes up by one."""
    adds = addable_corners(core, residue)
    if not adds:
        raise NoActionError(f"no addable corner of residue {residue}")
    parts = list(core.parts) + [0]
    for (i, _) in adds:
        parts[i - 1] += 1
    return NCore(core.n, parts)


def a_map(word, n: int) -> NCore:
    """The core s_{i_1} ... s_{i_l}(empty), innermost letter first."""
    core = NCore(n, ())
    for i in reversed(list(word)):
        try:
            core = act_s(core, i)
        except NoActionError as exc:
            raise NonReducedWordError(
                f"letter {i} adds no corner; word is not a reduced "
                f"Grassmannian word"
            ) from exc
    return core


def core_to_word(core: NCore):
    """Canonical reduced word for w_core.

    Peels, at each step, every removable corner of the largest residue
    that has one; a_map(core_to_word(c)) == c and the length is deg(c).
    """
    word = []
    parts = core.parts
    n = core.n
    while parts:
        by_res = {}
        for (i, j) in removable_corner_cells(parts):
            by_res.setdefault((j - i) % n, []).append((i, j))
        res = max(by_res)
        removed = list(parts)
        for (i, _) in by_res[res]:
            removed[i - 1] -= 1
        word.append(res)
        parts = normalize(removed)
    return tuple(word)


@lru_cache(maxsize=None)
def _word_of_core(n: int, parts) -> tuple:
    return core_to_word(NCore(n, parts))


def core_word(core: NCore) -> tuple:
    return _word_of_core(core.n, core.parts)


@lru_cache(maxsize=None)
def _w_of_core(n: int, parts) -> AffinePermutation:
    return from_word(_word_of_core(n, parts), n)


def w_core(core: NCore) -> AffinePermutation:
    """The affine Grassmannian element of the core."""
    return _w_of_core(core.n, core.parts)


@lru_cache(maxsize=None)
def _core_of_window(n: int, window) -> NCore:
    w = AffinePermutation(n, window)
    word = []
    while not w.is_identity():
        i = min(w.left_descents())
        word.append(i)
        w = AffinePermutation.simple(n, i) * w
    return a_map(word, n)


def core_of(w: AffinePermutation) -> NCore:
    """The core of an affine Grassmannian element."""
    if not w.is_grassmannian():
        raise ValueError("not an affine Grassmannian element")
    return _core_of_window(w.n, w.window)


def c_inverse(core: NCore) -> tuple:
    """Row-wise count of cells of hook length < n: the bounded partition."""
    return normalize(
        tuple(
            sum(1 for h in hooks_of_row(core.parts, i) if h < core.n)
            for i in range(1, len(core.parts) + 1)
        )
    )


def c_map(bounded, n: int) -> NCore:
    """The unique n-core whose rows carry the given sub-n hook counts.

    Built top row down; each row takes the smallest length that is
    consistent with the rows above (right count, no hook equal to n).
    """
    bounded = normalize(bounded)
    if any(p >= n for p in bounded):
        raise ValueError(f"parts must be < {n}")
    rows_above: list[int] = []  # lengths, top row first
    for p in reversed(bounded):
        placed = None
        start = rows_above[-1] if rows_above else p
        for length in range(max(start, p), start + p + 2 * n + 2):
            good = True
            count = 0
            for j in range(1, length + 1):
                h = length - j + 1 + sum(1 for q in rows_above if q >= j)
                if h == n:
                    good = False
                    break
                if h < n:
                    count += 1
            if good and count == p:
                placed = length
                break
        if placed is None:
            raise AssertionError("c_map row scan exhausted; bound too small")
        rows_above.append(placed)
    return NCore(n, tuple(reversed(rows_above)))


def rect(r: int, n: int) -> tuple:
    """The rectangle R_r = (r^(n-r))."""
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < n, got r={r}, n={n}")
    return (r,) * (n - r)


def rect_translation(core: NCore, r: int) -> NCore:
    """R(r, core) = c_map(c_inverse(core) union R_r)."""
    n = core.n
    return c_map(union(c_inverse(core), rect(r, n)), n)


# -- skew shapes and ribbons -------------------------------------------


def skew_cells(outer, inner):
    outer, inner = tuple(outer), tuple(inner)
    out = []
    for i, p in enumerate(outer, start=1):
        q = inner[i - 1] if i <= len(inner) else 0
        out.extend((i, j) for j in range(q + 1, p + 1))
    return out


def ribbon_components(cells_list):
    """Rookwise connected components, each sorted by content.

    Components come back sorted by the content of their head, so the
    decomposition of a skew shape is deterministic.
    """
    todo = set(cells_list)
    comps = []
    for seed in sorted(cells_list):
        if seed not in todo:
            continue
        todo.remove(seed)
        stack = [seed]
        comp = {seed}
        while stack:
            i, j = stack.pop()
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in todo:
                    todo.remove(nb)
                    comp.add(nb)
                    stack.append(nb)
        comps.append(tuple(sorted(comp, key=lambda c: c[1] - c[0])))
    return sorted(comps, key=lambda comp: comp[-1][1] - comp[-1][0])


def is_ribbon(comp) -> bool:
    """Rookwise connected, no 2x2 block, contents consecutive."""
    cs = set(comp)
    if any((i + 1, j) in cs and (i, j + 1) in cs and (i + 1, j + 1) in cs for (i, j) in cs):
        return False
    contents = sorted(j - i for (i, j) in comp)
    return contents == list(range(contents[0], contents[0] + len(comp)))


def ribbon_head(comp):
    """Southeasternmost cell: the one of maximal content."""
    return max(comp, key=lambda c: c[1] - c[0])


def ribbon_tail(comp):
    return min(comp, key=lambda c: c[1] - c[0])


def ribbon_height(comp) -> int:
    return len({i for (i, _) in comp})


# -- strong covers ------------------------------------------------------


def _tau_bound(n: int, d: int) -> int:
    # ell(tau_{i,i+s}) = 2(s - floor(s/n)) - 1 <= 2d + 1
    return n * (d + 2) // (n - 1) + n


@lru_cache(maxsize=None)
def _covers_up(n: int, parts):
    core = NCore(n, parts)
    w = w_core(core)
    d = core.degree()
    out = []
    for i in range(n):
        for s in range(1, _tau_bound(n, d) + 1):
            if s % n == 0:
                continue
            u = transposition(i, i + s, n) * w
            if u.length() == d + 1 and u.is_grassmannian():
                gamma = core_of(u)
                ribbons = tuple(ribbon_components(skew_cells(gamma.parts, parts)))
                out.append((gamma, ribbons, (i, i + s)))
    return tuple(out)


def strong_covers_up(core: NCore):
    """All (gamma, ribbons, tau) with core <_B gamma a strong cover."""
    return _covers_up(core.n, core.parts)


@lru_cache(maxsize=None)
def _covers_down(n: int, parts):
    core = NCore(n, parts)
    w = w_core(core)
    d = core.degree()
    out = []
    for i in range(n):
        for s in range(1, _tau_bound(n, d) + 1):
            if s % n == 0:
                continue
            u = transposition(i, i + s, n) * w
            if u.length() == d - 1 and u.is_grassmannian():
                mu = core_of(u)
                ribbons = tuple(ribbon_components(skew_cells(parts, mu.parts)))
                out.append((mu, ribbons, (i, i + s)))
    return tuple(out)


def strong_covers_down(core: NCore):
    """All (mu, ribbons, tau) with mu <_B core a strong cover."""
    return _covers_down(core.n, core.parts)


@lru_cache(maxsize=None)
def cores_of_degree(n: int, d: int):
    """All n-cores of the given degree."""
    if d == 0:
        return (NCore(n, ()),)
    out = {}
    for core in cores_of_degree(n, d - 1):
        for i in range(n):
            if addable_corners(core, i):
                nxt = act_s(core, i)
                out[nxt.parts] = nxt
    return tuple(out[p] for p in sorted(out, reverse=True))
