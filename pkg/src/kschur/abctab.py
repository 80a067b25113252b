"""Affine Bruhat countertableaux (ABCs).

An ABC of shape lam (an n-core of degree |alpha|) and weight alpha is
canonically a chain of n-cores

    empty = lam^(0) subset lam^(1) subset ... subset lam^(r) = lam

where each (lam^(x-1), lam^(x)) is a horizontal strong
(n-1-alpha_x)-strip.  The nested shapes mu^(0) subset ... subset mu^(r)
of the countertableau picture are derived views: row i (counted from
the top) freezes at length lam^(i-1)_1 + n - 1 and carries the letter i
in the cells of R(n-1, lam^(i-1)) / lam^(i), plus ribbon copies above.

Theta sends an ABC to the affine factorization v^r ... v^1 of w_lam,
where v^i is the canonical cyclically decreasing word of
w_{lam^(i)} w_{lam^(i-1)}^{-1}.

The extension ext(A) appends a ribbon of length
lam^(i)_1 - lam^(i-1)_1 + 1 to row i, keeps only the letter-i cells,
and drops every ribbon tail; n-cocharge is the sum of the index
vectors of the standard sequences extracted from ext(A) plus off(A),
the count of non-tail cells in ribbon copies sitting outside their
home row.
"""

from __future__ import annotations

from functools import lru_cache

from .affine import AffinePermutation, cyclic_anchor_key, is_cyclically_decreasing
from .cores import NCore, contains, ribbon_components, skew_cells, w_core
from .strips import horizontal_strong_strips_from, phi


class NonPartitionWeightError(ValueError):
    """n-cocharge needs a weakly decreasing weight."""


class ABC:
    """An affine Bruhat countertableau, stored as its core chain."""

    __slots__ = ("n", "chain", "weight", "_words", "_strip_chains")

    def __init__(self, n: int, chain):
        chain = tuple(chain)
        if not chain or chain[0].parts != ():
            raise ValueError("chain must start at the empty core")
        self.n = n
        self.chain = chain
        self.weight = tuple(
            hi.degree() - lo.degree() for lo, hi in zip(chain, chain[1:])
        )
        if any(not 0 <= a < n for a in self.weight):
            raise ValueError("weight parts must be smaller than n")
        self._words = None
        self._strip_chains = None

    @property
    def shape(self) -> NCore:
        return self.chain[-1]

    @property
    def r(self) -> int:
        return len(self.weight)

    def __eq__(self, other):
        return (
            isinstance(other, ABC)
            and self.n == other.n
            and tuple(c.parts for c in self.chain)
            == tuple(c.parts for c in other.chain)
        )

    def __hash__(self):
        return hash((self.n, tuple(c.parts for c in self.chain)))

    def __repr__(self):
        return f"ABC({self.n}, {[list(c.parts) for c in self.chain]})"

    # -- factorization words and strip chains ---------------------------

    def words(self):
        """The cyclically decreasing words v^1, ..., v^r of Theta."""
        if self._words is None:
            out = []
            for lo, hi in zip(self.chain, self.chain[1:]):
                q = w_core(hi) * w_core(lo).inverse()
                word = is_cyclically_decreasing(q)
                if word is None:
                    raise AssertionError("strip quotient is not cyclically decreasing")
                x = ((lo.parts[0] if lo.parts else 0) - 1) % self.n
                word = tuple(
                    sorted(word, key=cyclic_anchor_key(x, self.n), reverse=True)
                )
                out.append(word)
            self._words = tuple(out)
        return self._words

    def strip_chains(self):
        """Per letter i, the unique strong chain lam^(i) -> R(n-1, lam^(i-1))."""
        if self._strip_chains is None:
            self._strip_chains = tuple(
                phi(word, lo).chain
                for word, lo in zip(self.words(), self.chain)
            )
        return self._strip_chains

    # -- countertableau views --------------------------------------------

    def mu_chain(self):
        """The nested shapes mu^(0) subset ... subset mu^(r)."""
        r, n = self.r, self.n
        out = [self.shape.parts]
        frozen = []
        for x in range(1, r + 1):
            rest = self.chain[r - x].parts
            row = (rest[0] if rest else 0) + n - 1
            mu = tuple(frozen) + (row,) + rest
            out.append(mu)
            frozen.append(row)
        return out

    def letter_cells(self):
        """dict letter -> list of (row, col) in the countertableau.

        Rows are counted from the top, so letter i sits in row i and its
        ribbon copies in rows above (smaller indices).
        """
        cells = {}
        for i, chain in enumerate(self.strip_chains(), start=1):
            mine = []
            for lo, hi in zip(chain, chain[1:]):
                for (si, sj) in skew_cells(hi.parts, lo.parts):
                    mine.append((i - si + 1, sj))
            cells[i] = sorted(mine)
        return cells

    def pretty(self) -> str:
        """Text rendering of the countertableau (blank = the shape)."""
        grid = {}
        for letter, cc in self.letter_cells().items():
            for (row, col) in cc:
                grid[(row, col)] = letter
        mu_r = self.mu_chain()[-1]
        lines = []
        for row in range(1, self.r + 1):
            part = self.r - row  # row 1 is the top, the smallest part
            width = mu_r[part] if part < len(mu_r) else 0
            line = []
            for col in range(1, width + 1):
                v = grid.get((row, col))
                line.append("." if v is None else str(v))
            lines.append(" ".join(line))
        return "\n".join(lines)

    # -- offsets, extension, cocharge ------------------------------------

    def off(self) -> int:
        """Sum of (size - 1) over ribbon copies outside their home row."""
        total = 0
        for chain in self.strip_chains():
            for lo, hi in zip(chain, chain[1:]):
                for comp in ribbon_components(skew_cells(hi.parts, lo.parts)):
                    if min(i for (i, _) in comp) > 1:
                        total += len(comp) - 1
        return total

    def extension(self):
        """dict letter -> sorted columns of the letter's cells in ext(A)."""
        n = self.n
        ext = {}
        for i, word in enumerate(self.words(), start=1):
            lo = self.chain[i - 1].parts
            hi = self.chain[i].parts
            lo1 = lo[0] if lo else 0
            hi1 = hi[0] if hi else 0
            letters = set(word)
            cols = [
                c
                for c in range(hi1 + 1, lo1 + n)
                if (c - 1) % n in letters
            ]
            cols.extend(range(lo1 + n + 1, hi1 + n + 1))
            ext[i] = sorted(cols)
        return ext

    def n_cocharge(self) -> int:
        """off(A) plus the index sums over standard-sequence extractions."""
        if any(
            self.weight[k] < self.weight[k + 1] for k in range(self.r - 1)
        ):
            raise NonPartitionWeightError(
                f"weight {self.weight} is not a partition"
            )
        return self.off() + sum(sum(I) for I in self.index_vectors())

    def index_vectors(self):
        """Index vectors of the successive standard sequences of ext(A)."""
        n = self.n
        remaining = {
            letter: {(c - 1) % n: c for c in cols}
            for letter, cols in self.extension().items()
            if cols
        }
        vectors = []
        while remaining.get(1):
            col = max(remaining[1].values())
            res = (col - 1) % n
            del remaining[1][res]
            seq_cols = [col]
            letter = 1
            while remaining.get(letter + 1):
                options = remaining[letter + 1]
                res = _counterclockwise_choice(res, set(options), n)
                col = options.pop(res)
                seq_cols.append(col)
                letter += 1
            index = [0]
            for prev, cur in zip(seq_cols, seq_cols[1:]):
                index.append(index[-1] if cur > prev else index[-1] + 1)
            vectors.append(index)
        if any(v for v in remaining.values()):
            raise AssertionError("extraction left non-empty rows without 1s")
        return vectors


#: incremented whenever the counter-clockwise choice had to skip the
#: current residue itself while other residues were available
distance_zero_skips = 0


def _counterclockwise_choice(res: int, options: set, n: int) -> int:
    """Closest residue counter-clockwise from res on the clockwise circle.

    The current residue itself only qualifies when it is the sole
    option; such occurrences are counted in `distance_zero_skips`.
    """
    global distance_zero_skips
    if options == {res}:
        return res
    if res in options:
        distance_zero_skips += 1
    best = min(
        (opt for opt in options if opt != res),
        key=lambda opt: (res - opt) % n,
    )
    return best


# -- enumeration ---------------------------------------------------------


def enumerate_abc(shape: NCore, weight):
    """All ABCs of the given shape and weight composition."""
    n = shape.n
    weight = tuple(weight)
    if any(not 0 <= a < n for a in weight):
        raise ValueError(f"weight parts must be in 0..{n - 1}")
    if sum(weight) != shape.degree():
        return []
    partial = [(NCore(n, ()),)]
    for a in weight:
        nxt = []
        for chain in partial:
            for strip in horizontal_strong_strips_from(chain[-1], n - 1 - a):
                if contains(shape.parts, strip.nu.parts):
                    nxt.append(chain + (strip.nu,))
        partial = nxt
    return sorted(
        (ABC(n, chain) for chain in partial if chain[-1] == shape),
        key=lambda a: tuple(c.parts for c in a.chain),
    )


@lru_cache(maxsize=None)
def abc_counts(n: int, weight) -> dict:
    """dict shape.parts -> |ABC(shape, weight)| for the full weight fiber."""
    counts = {(): 1}
    for a in weight:
        nxt: dict = {}
        for parts, mult in counts.items():
            for strip in horizontal_strong_strips_from(NCore(n, parts), n - 1 - a):
                key = strip.nu.parts
                nxt[key] = nxt.get(key, 0) + mult
        counts = nxt
    return counts


def count_abc(shape: NCore, weight) -> int:
    return abc_counts(shape.n, tuple(weight)).get(shape.parts, 0)


def theta(abc: ABC):
    """The affine factorization words (v^1, ..., v^r); see Theta."""
    return abc.words()


@lru_cache(maxsize=None)
def _count_factorizations(window, n: int, weight) -> int:
    """Affine factorizations of w into cyclically decreasing factors.

    Word-side enumerator, independent of the strip machinery: peel the
    leftmost factor v^r over all cyclically decreasing elements of
    length weight[-1] with ell(v^{-1} w) = ell(w) - weight[-1].
    """
    from .affine import cyclically_decreasing_of_length

    w = AffinePermutation(n, window)
    if not weight:
        return 1 if w.is_identity() else 0
    target = w.length() - weight[-1]
    if target < 0:
        return 0
    total = 0
    for _word, v in cyclically_decreasing_of_length(n, weight[-1]):
        u = v.inverse() * w
        if u.length() == target:
            total += _count_factorizations(u.window, n, weight[:-1])
    return total


def count_affine_factorizations(w: AffinePermutation, weight) -> int:
    return _count_factorizations(w.window, w.n, tuple(weight))
