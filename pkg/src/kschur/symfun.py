"""Symmetric functions of bounded degree over ZZ[t, t^-1], exactly.

Everything is matrix arithmetic per degree d against the monomial
basis, with partitions of d listed in lex-descending order (a linear
extension of dominance, so all the transition matrices below are
triangular with unit diagonal and invert exactly):

  * s_lam   = sum_mu K_{lam,mu} m_mu                  (Kostka numbers)
  * s_lam   = sum_mu K_{lam,mu}(t) Ptilde_mu          (cocharge KF)
  * H_mu(x;0,t) = sum_lam K_{lam,mu}(t) s_lam
  * dual k-Schur: S_{c(lam)}(x;t) = sum_mu Kn_{lam,mu}(t) Ptilde_mu,
    with Kn the weak Kostka-Foulkes polynomials from ABCs
  * k-Schur: the Hall-dual basis, via transposed inverses.

Ptilde is the deformation t^{-n(lam)} P_lam(x; 1/t) of Macdonald's
P-function; its monomial expansion genuinely uses negative powers of t,
which is why TPoly is a Laurent type.  Products are computed through
the homogeneous basis, where multiplication is concatenation.
"""

from __future__ import annotations

from functools import lru_cache

from .abctab import enumerate_abc, abc_counts
from .cores import NCore, c_inverse, c_map, dominance_leq, normalize
from .tableaux import kostka_foulkes, kostka_number
from .tpoly import TPoly

ZERO = TPoly.zero()
ONE = TPoly.one()


@lru_cache(maxsize=None)
def partitions_of(d: int):
    """All partitions of d, lex descending ((d) first)."""
    out = []

    def build(rest, maxpart, cur):
        if rest == 0:
            out.append(tuple(cur))
            return
        for p in range(min(rest, maxpart), 0, -1):
            build(rest - p, p, cur + [p])

    build(d, d, [])
    return tuple(out) if d else ((),)


@lru_cache(maxsize=None)
def bounded_partitions_of(d: int, n: int):
    """Partitions of d with all parts < n, lex descending."""
    return tuple(p for p in partitions_of(d) if not p or p[0] < n)


def n_stat(lam) -> int:
    """n(lam) = sum (i-1) lam_i."""
    return sum(i * p for i, p in enumerate(lam))


def _index(parts):
    return {p: i for i, p in enumerate(parts)}


def _matmul(A, B):
    rows, mid, cols = len(A), len(B), len(B[0]) if B else 0
    out = [[ZERO for _ in range(cols)] for _ in range(rows)]
    for i in range(rows):
        Ai = A[i]
        for k in range(mid):
            a = Ai[k]
            if a.is_zero():
                continue
            Bk = B[k]
            row = out[i]
            for j in range(cols):
                if not Bk[j].is_zero():
                    row[j] = row[j] + a * Bk[j]
    return out


def _upper_unit_inverse(M):
    """Inverse of an upper-triangular matrix with unit diagonal entries."""
    size = len(M)
    X = [[ZERO for _ in range(size)] for _ in range(size)]
    for j in range(size):
        X[j][j] = ONE.divide_unit(M[j][j])
        for i in range(j - 1, -1, -1):
            acc = ZERO
            for k in range(i + 1, j + 1):
                if not M[i][k].is_zero():
                    acc = acc + M[i][k] * X[k][j]
            X[i][j] = (-acc).divide_unit(M[i][i])
    return X


def _transpose(M):
    return [list(col) for col in zip(*M)] if M else []


# -- full-degree transition matrices (coefficients of m) -----------------


@lru_cache(maxsize=None)
def s_to_m(d: int):
    P = partitions_of(d)
    return [[TPoly.const(kostka_number(lam, mu)) for mu in P] for lam in P]


@lru_cache(maxsize=None)
def m_to_s(d: int):
    return _upper_unit_inverse(s_to_m(d))


@lru_cache(maxsize=None)
def kf_matrix(d: int):
    """K(t): rows lam, columns mu; upper triangular, diagonal t^{n(lam)}."""
    P = partitions_of(d)
    return [[kostka_foulkes(lam, mu) for mu in P] for lam in P]


@lru_cache(maxsize=None)
def ptilde_to_s(d: int):
    return _upper_unit_inverse(kf_matrix(d))


@lru_cache(maxsize=None)
def ptilde_to_m(d: int):
    return _matmul(ptilde_to_s(d), s_to_m(d))


@lru_cache(maxsize=None)
def h0t_to_m(d: int):
    """H_mu(x;0,t) = sum_lam K_{lam,mu}(t) s_lam, rows mu."""
    return _matmul(_transpose(kf_matrix(d)), s_to_m(d))


@lru_cache(maxsize=None)
def h_to_m(d: int):
    """h_mu = sum_lam K_{lam,mu} s_lam, rows mu."""
    return _matmul(_transpose(s_to_m(d)), s_to_m(d))


@lru_cache(maxsize=None)
def m_to_h(d: int):
    """m -> s -> h; with K the Kostka matrix this is K^{-1} (K^{-1})^T."""
    s_to_h = _transpose(m_to_s(d))
    return _matmul(m_to_s(d), s_to_h)


# -- weak Kostka-Foulkes and the n-restricted matrices --------------------


@lru_cache(maxsize=None)
def weak_kostka_foulkes(lam, mu, n: int) -> TPoly:
    """Kn_{lam,mu}(t) = sum over ABC(c(lam), mu) of t^{n-cocharge}."""
    lam, mu = normalize(lam), normalize(mu)
    if (lam and lam[0] >= n) or (mu and mu[0] >= n):
        raise ValueError(f"parts must be < {n}")
    if sum(lam) != sum(mu):
        return ZERO
    out = ZERO
    for abc in enumerate_abc(c_map(lam, n), mu):
        out = out + TPoly.t(abc.n_cocharge())
    return out


@lru_cache(maxsize=None)
def kn_matrix(n: int, d: int):
    """Kn(t) over bounded partitions of d; checked dominance-triangular."""
    P = bounded_partitions_of(d, n)
    M = []
    for lam in P:
        row = []
        for mu in P:
            entry = weak_kostka_foulkes(lam, mu, n)
            if not entry.is_zero() and not dominance_leq(mu, lam):
                raise AssertionError(
                    f"K^{n}_{lam},{mu}(t) nonzero off the dominance ideal"
                )
            row.append(entry)
        M.append(row)
    return M


@lru_cache(maxsize=None)
def kn1_matrix(n: int, d: int):
    """Kn(1), the ABC counts, by the fast chain DP."""
    P = bounded_partitions_of(d, n)
    M = []
    for lam in P:
        shape = c_map(lam, n).parts
        row = [TPoly.const(abc_counts(n, mu).get(shape, 0)) for mu in P]
        M.append(row)
    for i, lam in enumerate(P):
        for j, mu in enumerate(P):
            if not M[i][j].is_zero() and not dominance_leq(mu, lam):
                raise AssertionError(
                    f"|ABC| nonzero off the dominance ideal at {lam},{mu}"
                )
    return M


@lru_cache(maxsize=None)
def ptilde_to_m_bounded(n: int, d: int):
    """Rows/columns of ptilde_to_m restricted to bounded partitions."""
    P = partitions_of(d)
    idx = _index(P)
    Pn = bounded_partitions_of(d, n)
    full = ptilde_to_m(d)
    return [[full[idx[lam]][idx[mu]] for mu in Pn] for lam in Pn]


@lru_cache(maxsize=None)
def dualk_to_m(n: int, d: int, t_on: bool = True):
    """Dual k-Schur rows over bounded partitions (m-coefficients)."""
    if t_on:
        return _matmul(kn_matrix(n, d), ptilde_to_m_bounded(n, d))
    return kn1_matrix(n, d)


@lru_cache(maxsize=None)
def kschur_to_h0t(n: int, d: int):
    """k-Schur rows in the H(x;0,t) basis: transpose inverse of Kn(t)."""
    return _transpose(_upper_unit_inverse(kn_matrix(n, d)))


@lru_cache(maxsize=None)
def kschur_to_h(n: int, d: int):
    """k-Schur rows at t=1 in the homogeneous basis (bounded indices)."""
    return _transpose(_upper_unit_inverse(kn1_matrix(n, d)))


@lru_cache(maxsize=None)
def kschur_to_m(n: int, d: int, t_on: bool = True):
    if t_on:
        P = partitions_of(d)
        idx = _index(P)
        Pn = bounded_partitions_of(d, n)
        h0t = h0t_to_m(d)
        rows_h0t = [h0t[idx[mu]] for mu in Pn]
        return _matmul(kschur_to_h0t(n, d), rows_h0t)
    P = partitions_of(d)
    idx = _index(P)
    Pn = bounded_partitions_of(d, n)
    hm = h_to_m(d)
    rows_h = [hm[idx[mu]] for mu in Pn]
    return _matmul(kschur_to_h(n, d), rows_h)


# -- symmetric function values -------------------------------------------


class SymF:
    """A homogeneous symmetric function as a basis-tagged expansion."""

    __slots__ = ("basis", "degree", "terms", "n")

    def __init__(self, basis: str, degree: int, terms, n: int | None = None):
        self.basis = basis
        self.degree = degree
        self.n = n
        self.terms = {
            normalize(p): c
            for p, c in terms.items()
            if not (c.is_zero() if isinstance(c, TPoly) else c == 0)
        }
        for p, c in list(self.terms.items()):
            if not isinstance(c, TPoly):
                self.terms[p] = TPoly.const(c)
            if sum(p) != degree:
                raise ValueError(f"{p} does not have degree {degree}")

    def __eq__(self, other):
        return (
            isinstance(other, SymF)
            and self.degree == other.degree
            and self.in_m().terms == other.in_m().terms
        )

    def __repr__(self):
        inside = ", ".join(f"{list(p)}: {c}" for p, c in sorted(self.terms.items(), reverse=True))
        return f"SymF({self.basis}[{self.degree}], {{{inside}}})"

    def coefficient(self, p) -> TPoly:
        return self.terms.get(normalize(p), ZERO)

    def map_coeffs(self, f) -> "SymF":
        return SymF(self.basis, self.degree, {p: f(c) for p, c in self.terms.items()}, self.n)

    def at_t(self, value: int) -> "SymF":
        return self.map_coeffs(lambda c: TPoly.const(c(value)))

    def __add__(self, other: "SymF") -> "SymF":
        if self.basis != other.basis or self.degree != other.degree:
            a, b = self.in_m(), other.in_m()
            terms = dict(a.terms)
            for p, c in b.terms.items():
                terms[p] = terms.get(p, ZERO) + c
            return SymF("m", self.degree, terms)
        terms = dict(self.terms)
        for p, c in other.terms.items():
            terms[p] = terms.get(p, ZERO) + c
        return SymF(self.basis, self.degree, terms, self.n)

    def scale(self, c) -> "SymF":
        if isinstance(c, int):
            c = TPoly.const(c)
        return self.map_coeffs(lambda v: v * c)

    def in_m(self) -> "SymF":
        if self.basis == "m":
            return self
        d = self.degree
        if self.basis in ("s", "h", "ptilde", "H0t"):
            P = partitions_of(d)
            idx = _index(P)
            M = {
                "s": s_to_m,
                "h": h_to_m,
                "ptilde": ptilde_to_m,
                "H0t": h0t_to_m,
            }[self.basis](d)
            out: dict = {}
            for p, c in self.terms.items():
                row = M[idx[p]]
                for j, mu in enumerate(P):
                    if not row[j].is_zero():
                        out[mu] = out.get(mu, ZERO) + c * row[j]
            return SymF("m", d, out)
        if self.basis in ("dualk", "k", "kt1", "dualkt1"):
            n = self.n
            Pn = bounded_partitions_of(d, n)
            idxn = _index(Pn)
            t_on = self.basis in ("dualk", "k")
            if self.basis.startswith("dualk"):
                M = dualk_to_m(n, d, t_on)
                cols = Pn
            else:
                M = kschur_to_m(n, d, t_on)
                cols = partitions_of(d)
            out = {}
            for p, c in self.terms.items():
                row = M[idxn[p]]
                for j, mu in enumerate(cols):
                    if not row[j].is_zero():
                        out[mu] = out.get(mu, ZERO) + c * row[j]
            return SymF("m", d, out)
        raise ValueError(f"unknown basis {self.basis}")

    def in_h(self) -> "SymF":
        f = self.in_m()
        d = self.degree
        P = partitions_of(d)
        idx = _index(P)
        M = m_to_h(d)
        out: dict = {}
        for p, c in f.terms.items():
            row = M[idx[p]]
            for j, mu in enumerate(P):
                if not row[j].is_zero():
                    out[mu] = out.get(mu, ZERO) + c * row[j]
        return SymF("h", d, out)


def m_sym(p) -> SymF:
    p = normalize(p)
    return SymF("m", sum(p), {p: ONE})


def schur(p) -> SymF:
    p = normalize(p)
    return SymF("s", sum(p), {p: ONE})


def hom(p) -> SymF:
    p = normalize(p)
    return SymF("h", sum(p), {p: ONE})


def ptilde_in_m(p) -> SymF:
    """The deformed P-function as a monomial expansion."""
    p = normalize(p)
    return SymF("ptilde", sum(p), {p: ONE}).in_m()


def h0t_in_m(p) -> SymF:
    p = normalize(p)
    return SymF("H0t", sum(p), {p: ONE}).in_m()


def dual_kschur(core: NCore, t_on: bool = True) -> SymF:
    """The dual k-Schur function of the core, expanded in m."""
    lam = c_inverse(core)
    return SymF(
        "dualk" if t_on else "dualkt1", sum(lam), {lam: ONE}, n=core.n
    ).in_m()


def kschur(core: NCore, t_on: bool = True) -> SymF:
    """The k-Schur function of the core.

    With t on the expansion is in the H(x;0,t) basis; at t=1 it is in
    the homogeneous basis.  Convert with .in_m() as needed.
    """
    nu = c_inverse(core)
    d = sum(nu)
    n = core.n
    Pn = bounded_partitions_of(d, n)
    i = _index(Pn)[nu]
    if t_on:
        row = kschur_to_h0t(n, d)[i]
        return SymF("H0t", d, {mu: row[j] for j, mu in enumerate(Pn)})
    row = kschur_to_h(n, d)[i]
    return SymF("h", d, {mu: row[j] for j, mu in enumerate(Pn)})


def hall_pairing(f: SymF, g: SymF) -> TPoly:
    """<h_lam, m_mu> = delta: pair the h-expansion against the m-expansion."""
    if f.degree != g.degree:
        return ZERO
    fh = f.in_h()
    gm = g.in_m()
    out = ZERO
    for p, c in fh.terms.items():
        other = gm.terms.get(p)
        if other is not None:
            out = out + c * other
    return out


def multiply(f: SymF, g: SymF) -> SymF:
    """Product through the h basis (concatenation), back to m."""
    from .cores import union

    fh, gh = f.in_h(), g.in_h()
    terms: dict = {}
    for p, c in fh.terms.items():
        for q, e in gh.terms.items():
            key = union(p, q)
            terms[key] = terms.get(key, ZERO) + c * e
    return SymF("h", f.degree + g.degree, terms).in_m()
